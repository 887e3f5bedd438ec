// semigroup.hpp -- finite transformation semigroups: closure from generators,
// idempotent structure, generating sets, conflicts and canonical forms.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "synsem/transformation.hpp"

namespace synsem {

struct ClosureOptions {
  std::size_t max_elements = 1'000'000;
};

/// Thrown when a closure grows past ClosureOptions::max_elements; carries
/// the size reached before aborting.
struct ClosureBudgetExceeded : std::runtime_error {
  std::size_t partial_size;
  explicit ClosureBudgetExceeded(std::size_t partial)
      : std::runtime_error("closure element budget exceeded at " + std::to_string(partial) +
                           " elements"),
        partial_size(partial) {}
};

/// Thrown by minimal_generating_set when the indecomposable elements do not
/// generate the semigroup; carries the size of their closure.
struct NotIndecomposableGenerated : std::runtime_error {
  std::size_t indecomposable_closure_size;
  explicit NotIndecomposableGenerated(std::size_t closure_size)
      : std::runtime_error("semigroup is not indecomposable-generated (closure of "
                           "indecomposables has " +
                           std::to_string(closure_size) + " elements)"),
        indecomposable_closure_size(closure_size) {}
};

/// A composition-closed set of transformations of common degree, stored
/// sorted lexicographically.
class TransformationSemigroup {
 public:
  /// Validates uniform degree, dedupes, sorts and checks closure under
  /// composition; throws std::invalid_argument on violation.
  static TransformationSemigroup from_elements(std::vector<Transformation> elements);

  /// Trusted constructor for callers that guarantee closedness (closure(),
  /// relabel(), canonical_form()).  `sorted_unique` must be sorted.
  static TransformationSemigroup trusted(std::vector<Transformation> sorted_unique);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Transformation>& elements() const { return elements_; }
  bool contains(const Transformation& t) const;

  bool operator==(const TransformationSemigroup&) const = default;

 private:
  TransformationSemigroup(int degree, std::vector<Transformation> sorted_unique)
      : degree_(degree), elements_(std::move(sorted_unique)) {}

  int degree_ = 0;
  std::vector<Transformation> elements_;
};

/// Smallest composition-closed superset of the generators; independent of
/// generator order.  Throws ClosureBudgetExceeded past the element budget.
TransformationSemigroup closure(const std::vector<Transformation>& generators,
                                const ClosureOptions& options = {});

/// Closure that stops as soon as a produced element satisfies `stop`.
struct PartialClosure {
  std::vector<Transformation> elements;   // sorted; complete iff !hit
  std::optional<Transformation> hit;      // first element satisfying the predicate
  bool budget_exceeded = false;
  std::size_t partial_size = 0;
};
PartialClosure closure_until(const std::vector<Transformation>& generators,
                             const std::function<bool(const Transformation&)>& stop,
                             const ClosureOptions& options = {});

struct IdempotentReport {
  std::vector<Transformation> idempotents;       // sorted
  std::optional<Transformation> unique_zero;     // absorbing on both sides
  bool all_right_zero = false;                   // s*e == e for every s, idempotent e
  bool all_left_zero = false;                    // e*s == e for every s, idempotent e
};

IdempotentReport idempotent_report(const TransformationSemigroup& s);

/// Elements that are not a product of two elements other than themselves;
/// contained in every generating set.
std::vector<Transformation> indecomposables(const TransformationSemigroup& s);

/// The indecomposables when they generate s; otherwise throws
/// NotIndecomposableGenerated.
std::vector<Transformation> minimal_generating_set(const TransformationSemigroup& s,
                                                   const ClosureOptions& options = {});

/// True iff the semigroup generated by the two maps contains a permutational
/// element.  Both inputs must be non-permutational and of equal degree.
bool conflict(const Transformation& s, const Transformation& t,
              const ClosureOptions& options = {});

bool is_non_permutational(const TransformationSemigroup& s);

struct MaximalityCheck {
  bool maximal = false;
  std::optional<Transformation> counterexample;  // smallest extension that stays non-permutational
  std::uint64_t candidates_checked = 0;
};

/// Tests whether s is maximal among non-permutational semigroups of its
/// degree: every non-permutational map outside s must conflict with it.
/// The parallel version sweeps candidates with OpenMP; the serial version is
/// the reference.  Degree is limited by the enumeration guard.
MaximalityCheck is_maximal_non_permutational(const TransformationSemigroup& s,
                                             const ClosureOptions& options = {},
                                             int max_degree = 8);
MaximalityCheck is_maximal_non_permutational_serial(const TransformationSemigroup& s,
                                                    const ClosureOptions& options = {},
                                                    int max_degree = 8);

TransformationSemigroup relabel(const TransformationSemigroup& s, const Permutation& p);

/// Lexicographically least relabeling of s over all n! permutations; two
/// semigroups are conjugate iff their canonical forms are equal.
TransformationSemigroup canonical_form(const TransformationSemigroup& s, int max_degree = 7);

/// Text format: first line "n=<degree>", then one transformation per line,
/// sorted lexicographically.  The list overloads serve transformation sets
/// that are not closed (generator families).
std::string to_text(const TransformationSemigroup& s);
std::string to_text(int degree, const std::vector<Transformation>& elements);
TransformationSemigroup semigroup_from_text(std::string_view text);

/// Machine format: a JSON array of target arrays, in lexicographic order.
std::string to_json_array(const TransformationSemigroup& s);
std::string to_json_array(const std::vector<Transformation>& elements);

}  // namespace synsem
