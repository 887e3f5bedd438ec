// search.hpp -- exhaustive search for the largest closed set of
// non-permutational transformations of a given degree, with a subset-
// enumeration oracle and the banded-family maximality sweep.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"

namespace synsem {
namespace search {

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct SearchOptions {
  SearchBudget budget;
  bool parallel = true;         // explore root branches with OpenMP workers
  bool prune_size_bound = true; // cut branches that cannot tie the best size
  bool pair_prefilter = true;   // precomputed pairwise-conflict filter
  bool root_symmetry = true;    // roots restricted to conjugacy-class minima
};

struct SearchReport {
  int n = 0;
  bool exhaustive = false;  // the whole space was covered
  std::size_t max_size = 0;
  std::uint64_t conjectured = 0;  // exact integer floor(e * (n-1)!)
  std::vector<TransformationSemigroup> maxima;  // canonical forms, sorted
  std::vector<std::size_t> min_generator_sizes; // across maxima, sorted unique
  std::vector<std::string> generator_notes;     // surfaced generator failures
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  std::string scope_note;

  std::size_t maxima_count() const { return maxima.size(); }
  const TransformationSemigroup& example_maximum() const { return maxima.front(); }
};

/// Depth-first enumeration of closed non-permutational sets in canonical
/// set order, seeded with the banded family as the known feasible solution.
/// Degrees 2..4 run exhaustively by default; degree 5 is best-effort under a
/// default node budget and reports exhaustive=false when the budget cuts the
/// run short.  Single- and multi-threaded runs produce the same max_size and
/// maxima.
SearchReport max_non_permutational(int n, const SearchOptions& options = {});

/// Independent oracle for degree <= 3: enumerates all 2^(n^(n-1)) subsets of
/// the non-permutational maps and keeps the composition-closed ones.
SearchReport subset_oracle(int n);

struct BMaximalityReport {
  int n = 0;
  bool maximal = false;
  std::optional<Transformation> counterexample;  // extension that avoids all conflicts
  std::uint64_t candidates_checked = 0;
  double elapsed_seconds = 0.0;
};

/// Checks that every non-permutational map outside the banded family B_n
/// conflicts with it (degrees 2..5; dense kernel, OpenMP candidate sweep
/// when parallel is set).
BMaximalityReport verify_B_maximality(int n, bool parallel = true);

}  // namespace search
}  // namespace synsem
