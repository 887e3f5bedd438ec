// transformation.hpp -- total self-maps of {1..n} and their basic algebra.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace synsem {

/// A total transformation of {1..n}.  targets()[i] is the image of state
/// i+1; values are 1-based everywhere, matching the [i1,i2,...,in] notation.
class Transformation {
 public:
  /// Throws std::invalid_argument if the vector is empty or an entry is
  /// outside {1..n}.
  explicit Transformation(std::vector<int> targets);

  static Transformation identity(int degree);

  int degree() const { return static_cast<int>(targets_.size()); }

  /// Image of a 1-based state.
  int apply(int state) const;

  const std::vector<int>& targets() const { return targets_; }

  bool operator==(const Transformation&) const = default;

  // Degree first, then lexicographic on the target sequence.
  std::strong_ordering operator<=>(const Transformation& other) const;

 private:
  std::vector<int> targets_;
};

/// A permutation of {1..n}; construction checks bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int state) const;
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int degree);

/// Applies s first, then t: the result maps i to t(s(i)).
/// Throws std::invalid_argument on degree mismatch.
Transformation compose(const Transformation& s, const Transformation& t);

/// k-fold composition of t with itself; power(t, 0) is the identity.
Transformation power(const Transformation& t, std::uint64_t k);

/// The map sending every state to j.
Transformation constant_map(int degree, int j);

bool is_constant(const Transformation& t);
bool is_idempotent(const Transformation& t);

/// True iff t acts as a permutation on some subset of size >= 2,
/// equivalently iff t has at least two periodic points.
bool is_permutational(const Transformation& t);

/// Sorted set of periodic points of t (the image of any high power).
std::vector<int> eventual_image(const Transformation& t);

/// Conjugate of t by p: the result r satisfies r(p(i)) = p(t(i)) for all i.
Transformation relabel(const Transformation& t, const Permutation& p);

/// Edge list of the forest obtained from a non-permutational map by
/// deleting its unique fixed point.  Edges are (child, parent) pairs,
/// sorted by child.
struct ForestEdgeList {
  int degree = 0;
  int root = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const ForestEdgeList&) const = default;
};

/// Throws std::invalid_argument if t is permutational.
ForestEdgeList to_forest(const Transformation& t);

/// Inverse of to_forest; validates that the edge list describes a forest.
Transformation from_forest(const ForestEdgeList& forest);

/// Number of non-permutational maps of degree n, by exhaustive enumeration
/// of all n^n maps.  `max_degree` guards the enumeration cost; degrees above
/// it are rejected.  The parallel version and the serial reference agree.
std::uint64_t count_non_permutational(int degree, int max_degree = 8);
std::uint64_t count_non_permutational_serial(int degree, int max_degree = 8);

/// Text form "[2,3,4,4]".
std::string to_string(const Transformation& t);
std::ostream& operator<<(std::ostream& os, const Transformation& t);

/// Parses the text form; whitespace around entries is accepted.
Transformation parse_transformation(std::string_view text);

/// Big-endian base-n encoding of the target sequence, so that numeric order
/// on codes equals lexicographic order on transformations.  Degree <= 8.
std::uint32_t encode(const Transformation& t);
Transformation decode(int degree, std::uint32_t code);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace synsem
