#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tw {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An unlabeled tree stored with dense vertex ids 0..n-1.
///
/// Instances are immutable and always valid: the only way to obtain one is
/// through from_edges(), which rejects anything that is not a tree.
class Tree {
 public:
  /// Validates and builds a tree. Throws Error{IdOutOfRange} for ids outside
  /// [0, n) and Error{NotATree} for wrong edge count, self-loops, duplicate
  /// edges or disconnection.
  static Tree from_edges(int n, std::span<const Edge> edges);
  static Tree from_edges(int n, std::initializer_list<std::pair<int, int>> pairs);

  int order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(int v) const { return degree(v) == 1; }

 private:
  Tree() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> adj_;
};

struct TreeMetrics {
  int leaf_count = 0;
  std::vector<int> leaves;           // ascending ids
  std::vector<int> degree_sequence;  // non-increasing
  int diameter = 0;
  int max_degree = 0;
  bool is_caterpillar = false;
  bool is_starlike = false;
  std::optional<int> starlike_degree;
};

TreeMetrics metrics(const Tree& t);

int diameter(const Tree& t);
int max_degree(const Tree& t);
int leaf_count(const Tree& t);

/// Path length between u and v. Throws Error{IdOutOfRange}.
int distance(const Tree& t, int u, int v);

/// BFS distances from one source to every vertex.
std::vector<int> distances_from(const Tree& t, int source);

/// The 1- or 2-vertex center of the tree.
std::vector<int> centers(const Tree& t);

/// Non-leaf vertices in path order when t is a caterpillar with at least one
/// internal vertex; nullopt otherwise.
std::optional<std::vector<int>> caterpillar_backbone(const Tree& t);

/// Isomorphism invariant: a balanced parenthesis word built by rooting at
/// each center, sorting child words, and keeping the smaller result.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string word) : word_(std::move(word)) {}

  const std::string& str() const noexcept { return word_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string word_;
};

CanonicalCode canonical_code(const Tree& t);

/// Returns a copy of t with vertex v renamed to perm[v].
Tree relabel(const Tree& t, std::span<const int> perm);

}  // namespace tw

template <>
struct std::hash<tw::CanonicalCode> {
  std::size_t operator()(const tw::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
