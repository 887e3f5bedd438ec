// dfa.hpp -- deterministic finite automata over explicit alphabets:
// minimality, syntactic semigroups, and classification into the
// finite/cofinite, reverse definite and definite classes.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"

namespace synsem {

/// A complete DFA with 1-based states.  delta()[q-1][a] is the successor of
/// state q under letter index a (0-based index into the alphabet).
class Dfa {
 public:
  Dfa(int state_count, std::vector<std::string> alphabet, std::vector<std::vector<int>> delta,
      int start, std::vector<int> finals);

  int state_count() const { return n_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::vector<int>>& delta() const { return delta_; }
  int start() const { return start_; }
  const std::vector<int>& finals() const { return finals_; }  // sorted

  bool is_final(int state) const;
  int step(int state, int letter_index) const;
  int letter_index(std::string_view symbol) const;  // -1 when unknown

  bool operator==(const Dfa&) const = default;

 private:
  int n_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<int>> delta_;
  int start_;
  std::vector<int> finals_;
};

/// The transformation performed by one letter.
Transformation letter_transformation(const Dfa& dfa, int letter_index);

/// The transformation performed by a non-empty word, given as letter indices
/// or as symbol names.  Rejects empty words and unknown symbols.
Transformation transformation_of_word(const Dfa& dfa, const std::vector<int>& letters);
Transformation transformation_of_word(const Dfa& dfa, const std::vector<std::string>& word);

struct MinimalityReport {
  bool minimal = false;
  std::optional<int> unreachable_state;            // smallest, if any
  std::optional<std::pair<int, int>> equivalent_pair;  // lexicographically first, if any
};

MinimalityReport minimality(const Dfa& dfa);
bool is_minimal(const Dfa& dfa);

/// Shortest word (letter indices, possibly empty) accepted from exactly one
/// of p and q; nullopt when the states are equivalent.
std::optional<std::vector<int>> distinguishing_word(const Dfa& dfa, int p, int q);

/// Closure of the letter transformations.  Requires a minimal DFA; its size
/// is the syntactic complexity of the accepted language.
TransformationSemigroup syntactic_semigroup(const Dfa& dfa, const ClosureOptions& options = {});

/// Same transitions, complemented final set.
Dfa complement(const Dfa& dfa);

enum class NumberingMode {
  Finite,           // one self-looping sink allowed, all other transitions strictly increase
  ReverseDefinite,  // up to two self-looping sinks (one non-final, one final)
};

struct NumberingResult {
  std::optional<std::vector<int>> numbering;  // numbering[q-1] = new 1-based label
  std::string reason;                         // set when no numbering exists
};

/// Relabeling of the states under which every letter transition strictly
/// increases the label except on the permitted sinks; computed by self-loop
/// detection plus a topological sort of the remaining states.
NumberingResult acyclic_numbering(const Dfa& dfa, NumberingMode mode);

struct ClassificationReport {
  bool is_finite = false;
  bool is_cofinite = false;
  bool is_reverse_definite = false;
  bool is_definite = false;
  std::optional<std::vector<int>> numbering_finite;
  std::optional<std::vector<int>> numbering_reverse_definite;
  std::string structural_note;  // failure reasons from the numbering passes
  IdempotentReport algebraic;   // of the syntactic semigroup
  std::size_t sigma = 0;        // syntactic complexity
};

/// Structural classification cross-checked against the idempotent-based
/// characterisations; any disagreement throws std::logic_error.  Requires a
/// minimal DFA.
ClassificationReport classify(const Dfa& dfa, const ClosureOptions& options = {});

/// JSON document with fields n, alphabet, delta, start, finals.
std::string to_json(const Dfa& dfa);
Dfa dfa_from_json(std::string_view text);

/// Graphviz export: doubled circles for finals, an incoming arrow for the
/// start state, edges labeled by symbol names (merged per state pair).
std::string to_dot(const Dfa& dfa);

}  // namespace synsem
