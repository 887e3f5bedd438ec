#include "synsem/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace synsem {

Dfa::Dfa(int state_count, std::vector<std::string> alphabet, std::vector<std::vector<int>> delta,
         int start, std::vector<int> finals)
    : n_(state_count),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      start_(start),
      finals_(std::move(finals)) {
  if (n_ < 1) throw std::invalid_argument("DFA needs at least one state");
  if (alphabet_.empty()) throw std::invalid_argument("DFA alphabet must be non-empty");
  std::set<std::string> seen(alphabet_.begin(), alphabet_.end());
  if (seen.size() != alphabet_.size()) throw std::invalid_argument("duplicate alphabet symbol");
  if (delta_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("delta must have one row per state");
  }
  for (const auto& row : delta_) {
    if (row.size() != alphabet_.size()) {
      throw std::invalid_argument("delta row length must equal the alphabet size");
    }
    for (int q : row) {
      if (q < 1 || q > n_) throw std::invalid_argument("delta target out of range");
    }
  }
  if (start_ < 1 || start_ > n_) throw std::invalid_argument("start state out of range");
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
  for (int q : finals_) {
    if (q < 1 || q > n_) throw std::invalid_argument("final state out of range");
  }
}

bool Dfa::is_final(int state) const {
  return std::binary_search(finals_.begin(), finals_.end(), state);
}

int Dfa::step(int state, int letter_index) const { return delta_[state - 1][letter_index]; }

int Dfa::letter_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == symbol) return static_cast<int>(i);
  }
  return -1;
}

Transformation letter_transformation(const Dfa& dfa, int letter_index) {
  if (letter_index < 0 || letter_index >= static_cast<int>(dfa.alphabet().size())) {
    throw std::invalid_argument("letter index out of range");
  }
  std::vector<int> tgt(static_cast<std::size_t>(dfa.state_count()));
  for (int q = 1; q <= dfa.state_count(); ++q) tgt[q - 1] = dfa.step(q, letter_index);
  return Transformation(std::move(tgt));
}

Transformation transformation_of_word(const Dfa& dfa, const std::vector<int>& letters) {
  if (letters.empty()) {
    throw std::invalid_argument("the word must be non-empty (word actions live over non-empty words)");
  }
  Transformation t = letter_transformation(dfa, letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) {
    t = compose(t, letter_transformation(dfa, letters[i]));
  }
  return t;
}

Transformation transformation_of_word(const Dfa& dfa, const std::vector<std::string>& word) {
  std::vector<int> letters;
  letters.reserve(word.size());
  for (const auto& sym : word) {
    int idx = dfa.letter_index(sym);
    if (idx < 0) throw std::invalid_argument("unknown symbol \"" + sym + "\"");
    letters.push_back(idx);
  }
  return transformation_of_word(dfa, letters);
}

namespace {

std::vector<bool> reachable_states(const Dfa& dfa) {
  std::vector<bool> seen(static_cast<std::size_t>(dfa.state_count()) + 1, false);
  std::deque<int> queue{dfa.start()};
  seen[static_cast<std::size_t>(dfa.start())] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
      int r = dfa.step(q, static_cast<int>(a));
      if (!seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = true;
        queue.push_back(r);
      }
    }
  }
  return seen;
}

// Moore partition refinement over all states; returns the block id per state.
std::vector<int> state_blocks(const Dfa& dfa) {
  const int n = dfa.state_count();
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) block[q - 1] = dfa.is_final(q) ? 1 : 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) {
      std::vector<int> sig{block[q - 1]};
      for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
        sig.push_back(block[dfa.step(q, static_cast<int>(a)) - 1]);
      }
      auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      next[q - 1] = it->second;
    }
    if (next == block) return block;
    block = std::move(next);
  }
}

}  // namespace

MinimalityReport minimality(const Dfa& dfa) {
  MinimalityReport report;
  std::vector<bool> reach = reachable_states(dfa);
  for (int q = 1; q <= dfa.state_count(); ++q) {
    if (!reach[static_cast<std::size_t>(q)]) {
      report.unreachable_state = q;
      break;
    }
  }
  std::vector<int> block = state_blocks(dfa);
  for (int p = 1; p <= dfa.state_count() && !report.equivalent_pair; ++p) {
    for (int q = p + 1; q <= dfa.state_count(); ++q) {
      if (block[p - 1] == block[q - 1]) {
        report.equivalent_pair = {p, q};
        break;
      }
    }
  }
  report.minimal = !report.unreachable_state && !report.equivalent_pair;
  return report;
}

bool is_minimal(const Dfa& dfa) { return minimality(dfa).minimal; }

std::optional<std::vector<int>> distinguishing_word(const Dfa& dfa, int p, int q) {
  if (p < 1 || p > dfa.state_count() || q < 1 || q > dfa.state_count()) {
    throw std::invalid_argument("state out of range");
  }
  if (p == q) return std::nullopt;
  if (dfa.is_final(p) != dfa.is_final(q)) return std::vector<int>{};

  auto norm = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> pred;
  std::deque<std::pair<int, int>> queue{norm(p, q)};
  std::set<std::pair<int, int>> seen{norm(p, q)};
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
      int x2 = dfa.step(x, static_cast<int>(a));
      int y2 = dfa.step(y, static_cast<int>(a));
      if (x2 == y2) continue;
      auto next = norm(x2, y2);
      if (dfa.is_final(x2) != dfa.is_final(y2)) {
        std::vector<int> word{static_cast<int>(a)};
        for (auto cur = std::pair{x, y}; cur != norm(p, q);) {
          auto [prev, letter] = pred.at(cur);
          word.push_back(letter);
          cur = prev;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      if (seen.insert(next).second) {
        pred[next] = {{x, y}, static_cast<int>(a)};
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

TransformationSemigroup syntactic_semigroup(const Dfa& dfa, const ClosureOptions& options) {
  MinimalityReport m = minimality(dfa);
  if (!m.minimal) {
    std::string why = m.unreachable_state
                          ? "state " + std::to_string(*m.unreachable_state) + " is unreachable"
                          : "states " + std::to_string(m.equivalent_pair->first) + " and " +
                                std::to_string(m.equivalent_pair->second) + " are equivalent";
    throw std::invalid_argument("syntactic_semigroup requires a minimal DFA (" + why + ")");
  }
  std::vector<Transformation> letters;
  letters.reserve(dfa.alphabet().size());
  for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
    letters.push_back(letter_transformation(dfa, static_cast<int>(a)));
  }
  return closure(letters, options);
}

Dfa complement(const Dfa& dfa) {
  std::vector<int> finals;
  for (int q = 1; q <= dfa.state_count(); ++q) {
    if (!dfa.is_final(q)) finals.push_back(q);
  }
  return Dfa(dfa.state_count(), dfa.alphabet(), dfa.delta(), dfa.start(), std::move(finals));
}

NumberingResult acyclic_numbering(const Dfa& dfa, NumberingMode mode) {
  const int n = dfa.state_count();
  const int letters = static_cast<int>(dfa.alphabet().size());
  NumberingResult result;

  std::vector<int> sinks;
  for (int q = 1; q <= n; ++q) {
    bool sink = true;
    for (int a = 0; a < letters; ++a) {
      if (dfa.step(q, a) != q) {
        sink = false;
        break;
      }
    }
    if (sink) sinks.push_back(q);
  }

  if (sinks.empty()) {
    result.reason = "no self-looping sink state";
    return result;
  }
  if (mode == NumberingMode::Finite && sinks.size() > 1) {
    result.reason = "multiple self-looping sinks";
    return result;
  }
  if (mode == NumberingMode::ReverseDefinite && sinks.size() > 2) {
    result.reason = "more than two self-looping sinks";
    return result;
  }
  if (mode == NumberingMode::ReverseDefinite && sinks.size() == 2 &&
      dfa.is_final(sinks[0]) == dfa.is_final(sinks[1])) {
    result.reason = "two sinks with identical finality";
    return result;
  }

  // Kahn topological sort of the non-sink states; self-loops and cycles among
  // them leave states with positive in-degree.
  std::vector<bool> is_sink(static_cast<std::size_t>(n) + 1, false);
  for (int q : sinks) is_sink[static_cast<std::size_t>(q)] = true;
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (int q = 1; q <= n; ++q) {
    if (is_sink[static_cast<std::size_t>(q)]) continue;
    std::set<int> succ;
    for (int a = 0; a < letters; ++a) {
      int r = dfa.step(q, a);
      if (!is_sink[static_cast<std::size_t>(r)]) succ.insert(r);
    }
    for (int r : succ) ++indeg[static_cast<std::size_t>(r)];
  }

  std::vector<int> numbering(static_cast<std::size_t>(n), 0);
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
  int next_label = 1;
  const int non_sink_count = n - static_cast<int>(sinks.size());
  for (int placed_count = 0; placed_count < non_sink_count; ++placed_count) {
    int pick = -1;
    for (int q = 1; q <= n; ++q) {
      if (!is_sink[static_cast<std::size_t>(q)] && !placed[static_cast<std::size_t>(q)] &&
          indeg[static_cast<std::size_t>(q)] == 0) {
        pick = q;
        break;
      }
    }
    if (pick < 0) {
      result.reason = "cycle among non-sink states";
      return result;
    }
    placed[static_cast<std::size_t>(pick)] = true;
    numbering[static_cast<std::size_t>(pick) - 1] = next_label++;
    std::set<int> succ;
    for (int a = 0; a < letters; ++a) {
      int r = dfa.step(pick, a);
      if (!is_sink[static_cast<std::size_t>(r)]) succ.insert(r);
    }
    for (int r : succ) --indeg[static_cast<std::size_t>(r)];
  }

  if (sinks.size() == 2) {
    int non_final = dfa.is_final(sinks[0]) ? sinks[1] : sinks[0];
    int final_sink = dfa.is_final(sinks[0]) ? sinks[0] : sinks[1];
    numbering[static_cast<std::size_t>(non_final) - 1] = n - 1;
    numbering[static_cast<std::size_t>(final_sink) - 1] = n;
  } else {
    numbering[static_cast<std::size_t>(sinks[0]) - 1] = n;
  }
  result.numbering = std::move(numbering);
  return result;
}

ClassificationReport classify(const Dfa& dfa, const ClosureOptions& options) {
  ClassificationReport report;
  TransformationSemigroup semigroup = syntactic_semigroup(dfa, options);  // enforces minimality
  report.sigma = semigroup.size();
  report.algebraic = idempotent_report(semigroup);

  NumberingResult fin = acyclic_numbering(dfa, NumberingMode::Finite);
  if (fin.numbering) {
    report.numbering_finite = fin.numbering;
    int sink = 0;
    for (int q = 1; q <= dfa.state_count(); ++q) {
      if ((*fin.numbering)[q - 1] == dfa.state_count()) sink = q;
    }
    report.is_finite = !dfa.is_final(sink);
    report.is_cofinite = dfa.is_final(sink);
  } else {
    report.structural_note = "finite: " + fin.reason;
  }

  NumberingResult rev = acyclic_numbering(dfa, NumberingMode::ReverseDefinite);
  if (rev.numbering) {
    report.numbering_reverse_definite = rev.numbering;
    report.is_reverse_definite = true;
  } else {
    if (!report.structural_note.empty()) report.structural_note += "; ";
    report.structural_note += "reverse definite: " + rev.reason;
  }

  report.is_definite = is_non_permutational(semigroup);

  const bool alg_nilpotent =
      report.algebraic.idempotents.size() == 1 && report.algebraic.unique_zero.has_value();
  if ((report.is_finite || report.is_cofinite) != alg_nilpotent) {
    throw std::logic_error(
        "classification cross-check failed: finite/cofinite numbering disagrees with the "
        "single-idempotent-zero test");
  }
  if (report.is_definite != report.algebraic.all_right_zero) {
    throw std::logic_error(
        "classification cross-check failed: non-permutational semigroup test disagrees with "
        "the all-idempotents-right-zero test");
  }
  if (report.is_reverse_definite != report.algebraic.all_left_zero) {
    throw std::logic_error(
        "classification cross-check failed: sink/DAG numbering disagrees with the "
        "all-idempotents-left-zero test");
  }
  return report;
}

std::string to_json(const Dfa& dfa) {
  nlohmann::ordered_json j;
  j["n"] = dfa.state_count();
  j["alphabet"] = dfa.alphabet();
  j["delta"] = dfa.delta();
  j["start"] = dfa.start();
  j["finals"] = dfa.finals();
  return j.dump(2) + "\n";
}

Dfa dfa_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DFA document: ") + e.what());
  }
  try {
    return Dfa(j.at("n").get<int>(), j.at("alphabet").get<std::vector<std::string>>(),
               j.at("delta").get<std::vector<std::vector<int>>>(), j.at("start").get<int>(),
               j.at("finals").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DFA document: ") + e.what());
  }
}

std::string to_dot(const Dfa& dfa) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=none, label=\"\"];\n";
  for (int q = 1; q <= dfa.state_count(); ++q) {
    out << "  s" << q << " [shape=" << (dfa.is_final(q) ? "doublecircle" : "circle")
        << ", label=\"" << q << "\"];\n";
  }
  out << "  __start -> s" << dfa.start() << ";\n";
  for (int q = 1; q <= dfa.state_count(); ++q) {
    std::map<int, std::string> merged;  // target -> joined labels, alphabet order
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
      int r = dfa.step(q, static_cast<int>(a));
      auto& label = merged[r];
      if (!label.empty()) label += ",";
      label += dfa.alphabet()[a];
    }
    for (const auto& [r, label] : merged) {
      out << "  s" << q << " -> s" << r << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace synsem
