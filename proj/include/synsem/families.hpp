// families.hpp -- the named transformation families behind the witness
// constructions (ascending maps with one or two top fixed points, the banded
// non-permutational families and their generator sets), shift-power
// decompositions, witness DFA builders and the bound verification report.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synsem/dfa.hpp"
#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"

namespace synsem {
namespace families {

enum class FamilyTag { A, G, Aprime, Gprime, Bk, B, C, AlphaC, H };

struct Family {
  FamilyTag tag;
  int n;
  int k = 0;  // band index, Bk only
};

std::string family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(std::string_view name);

/// Members of the family, by direct enumeration of the admissible target
/// sequences, in lexicographic order.  Degree constraints: n >= 2 for all
/// families, n >= 3 for G and H, n >= 4 for Gprime, 1 <= k <= n for Bk.
std::vector<Transformation> build(const Family& family);

/// |A_n| and friends without materializing the family.
std::uint64_t family_size_formula(const Family& family);

/// floor(e * m!) computed as the exact integer sum of falling factorials
/// m!/(m-l)!; requires m >= 1.
std::uint64_t floor_e_times_factorial(int m);

std::uint64_t factorial(int m);

/// Band index k of a member of the banded family (all states at or above k
/// map to k, lower states move strictly up); 0 when the map lies outside it.
int band_index(const Transformation& t);

/// The capped successor [2,3,...,n,n] used as the shift in both
/// decompositions.
Transformation shift_map(int degree);

/// Entrywise successor; defined on maps with all targets < n.
Transformation alpha(const Transformation& t);

enum class DecomposeFamily { A, B };

struct Decomposition {
  Transformation base;   // member of the generator family (G_n or H_n)
  Transformation shift;  // shift_map(n)
  int power = 0;         // base * shift^power reproduces the input

  Transformation recompose() const;
};

/// Factors t over the chosen family; the result is verified by
/// recomposition.  Family A requires t in A_n with n >= 3; family B requires
/// t in B_n.
Decomposition decompose(const Transformation& t, DecomposeFamily family);

enum class WitnessClass { Finite, Cofinite, ReverseDefinite, Definite };

std::string witness_class_name(WitnessClass c);
std::optional<WitnessClass> witness_class_from_name(std::string_view name);

/// Witness DFA whose syntactic semigroup meets the class's complexity bound.
/// Letters are named a1, a2, ... in lexicographic order of their
/// transformations.  Thresholds: n >= 3 (finite, cofinite, definite),
/// n >= 4 (reverse definite).
Dfa witness_dfa(WitnessClass witness_class, int n);

struct BoundsCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool skipped = false;
};

struct BoundsReport {
  int n = 0;
  std::vector<BoundsCheck> checks;
  bool all_pass() const;
};

/// Re-derives every size formula, generation claim, forced-letter property,
/// idempotent structure and witness property for the given degree.
BoundsReport verify_bounds(int n, const ClosureOptions& options = {});

}  // namespace families
}  // namespace synsem
