#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Tree container.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tw/tree.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList edges_of(const tw::Tree& t);

/// Floyd-Warshall distance matrix.
std::vector<std::vector<int>> all_pairs(int n, const EdgeList& edges);
int diameter(const tw::Tree& t);
/// Sum of leaf-to-leaf distances from the distance matrix.
std::int64_t terminal_wiener(const tw::Tree& t);
/// Leaves are deleted and what remains must be a path (or empty).
bool is_caterpillar(const tw::Tree& t);
int max_degree(const tw::Tree& t);
int leaf_count(const tw::Tree& t);

/// Centers by repeated leaf stripping, then the smaller of the rooted
/// parenthesis words over the centers.
std::string tree_code(int n, const EdgeList& edges);
std::string tree_code(const tw::Tree& t);

/// Size of the automorphism group.
std::uint64_t automorphisms(int n, const EdgeList& edges);

EdgeList prufer_decode(const std::vector<int>& seq, int n);
/// Every labeled tree on n vertices via its Prufer sequence, grouped by
/// tree_code. Values are labeled-tree counts per class.
std::map<std::string, std::uint64_t> prufer_classes(int n);

/// Euler's pentagonal recurrence.
std::uint64_t partitions(int m);
/// Otter's count of unlabeled free trees from the rooted-tree recursion.
std::uint64_t otter_free_trees(int n);

std::uint64_t factorial(int n);
std::uint64_t power(std::uint64_t base, int exp);

/// The defining double sum, without prefix sums.
std::int64_t f_literal(const std::vector<int>& y);

/// Bundle spider built independently: branch = (arm, pendants).
EdgeList spider_edges(const std::vector<std::pair<int, int>>& branches, int& n_out);
/// Maximum TW over bundle spiders of order n and diameter d with arms <= 3,
/// by listing every branch multiset. -1 when none exists.
std::int64_t spider_bruteforce(int n, int d);

}  // namespace oracle
