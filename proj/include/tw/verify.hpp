#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tw/report.hpp"
#include "tw/tree.hpp"

namespace tw {

struct VerifyOptions {
  /// Upper end of the check's main parameter (n, or k for lem-3.2).
  std::optional<int> n_max;
  int jobs = 1;
  /// Corrupts the TW value of one tree chosen by the seed.
  std::optional<std::uint64_t> fault_seed;
  bool timing = false;
  std::optional<std::filesystem::path> cache_dir;
};

/// Every check id accepted by verify_theorem, in the order `all` runs them.
const std::vector<std::string>& registered_checks();

/// Throws Error{UnknownCheck}, Error{RangeTooLarge} when n_max exceeds the
/// check's cap, Error{BadArg} for an empty range or a fault seed on a check
/// that evaluates no tree index.
VerificationReport verify_theorem(const std::string& check, const VerifyOptions& options = {});

/// Runs every registered check. n_max is clamped to each check's cap and only
/// applied to the exhaustive tree checks; fault injection only reaches the
/// checks that support it.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

VerificationReport verify_fig1(const VerifyOptions& options = {});

/// Tree whose TW value the fault seed corrupts, with its order.
std::optional<Tree> fault_target(const std::string& check, std::uint64_t seed,
                                 std::optional<int> n_max = std::nullopt);

/// 0 all pass, 1 any fail, 3 no fail but some partial.
int exit_code(const std::vector<VerificationReport>& reports);

/// Partitions of m into positive parts.
std::uint64_t partition_count(int m);
/// Number of diameter-4 and diameter-5 trees of order n, by counting.
std::uint64_t diameter4_class_size(int n);
std::uint64_t diameter5_class_size(int n);

}  // namespace tw
