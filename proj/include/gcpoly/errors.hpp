#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcpoly {

/// Malformed input: unknown ids, files that do not parse, sets that are not
/// cycles, assignings that are not total.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contracting a loop.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured iteration cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps for the brute-force routines.
struct Budget {
  // colorings, tensions, and edge functions enumerated per search
  std::uint64_t max_iterations = 100'000'000;
  // edge count limit for the 2^|E| subset expansions
  std::size_t max_subset_edges = 20;
};

}  // namespace gcpoly
