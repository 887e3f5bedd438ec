#include "synsem/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "json.hpp"

namespace synsem {

namespace {

void check_uniform_degree(const std::vector<Transformation>& elements) {
  if (elements.empty()) throw std::invalid_argument("element set must be non-empty");
  for (const auto& t : elements) {
    if (t.degree() != elements.front().degree()) {
      throw std::invalid_argument("mixed degrees in element set");
    }
  }
}

// Non-permutational maps of the given degree, in lexicographic order.
std::vector<Transformation> enumerate_non_permutational(int degree, int max_degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (max_degree > 8) max_degree = 8;
  if (degree > max_degree) {
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " exceeds the enumeration guard (" +
                                std::to_string(max_degree) + ")");
  }
  std::vector<Transformation> out;
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(degree), static_cast<unsigned>(degree));
  for (std::uint64_t code = 0; code < total; ++code) {
    Transformation t = decode(degree, static_cast<std::uint32_t>(code));
    if (!is_permutational(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TransformationSemigroup TransformationSemigroup::from_elements(std::vector<Transformation> elements) {
  check_uniform_degree(elements);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& s : elements) {
    for (const auto& t : elements) {
      Transformation p = compose(s, t);
      if (!std::binary_search(elements.begin(), elements.end(), p)) {
        throw std::invalid_argument("element set is not closed under composition: " +
                                    to_string(s) + " * " + to_string(t) + " = " + to_string(p) +
                                    " is missing");
      }
    }
  }
  int degree = elements.front().degree();
  return TransformationSemigroup(degree, std::move(elements));
}

TransformationSemigroup TransformationSemigroup::trusted(std::vector<Transformation> sorted_unique) {
  check_uniform_degree(sorted_unique);
  int degree = sorted_unique.front().degree();
  return TransformationSemigroup(degree, std::move(sorted_unique));
}

bool TransformationSemigroup::contains(const Transformation& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

TransformationSemigroup closure(const std::vector<Transformation>& generators,
                                const ClosureOptions& options) {
  PartialClosure pc = closure_until(generators, [](const Transformation&) { return false; }, options);
  if (pc.budget_exceeded) throw ClosureBudgetExceeded(pc.partial_size);
  return TransformationSemigroup::trusted(std::move(pc.elements));
}

PartialClosure closure_until(const std::vector<Transformation>& generators,
                             const std::function<bool(const Transformation&)>& stop,
                             const ClosureOptions& options) {
  check_uniform_degree(generators);
  PartialClosure result;
  std::set<Transformation> elems;
  std::vector<Transformation> worklist;

  auto insert = [&](const Transformation& t) -> bool {
    // returns true when the caller should stop expanding
    auto [it, inserted] = elems.insert(t);
    if (!inserted) return false;
    if (stop(t)) {
      result.hit = t;
      return true;
    }
    if (elems.size() > options.max_elements) {
      result.budget_exceeded = true;
      return true;
    }
    worklist.push_back(t);
    return false;
  };

  for (const auto& g : generators) {
    if (insert(g)) {
      result.partial_size = elems.size();
      return result;
    }
  }

  // Worklist completion: multiply each frontier element by the generators on
  // both sides.  Right multiplication alone already suffices; the left-hand
  // products are kept as a correctness belt at these sizes.
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    Transformation x = worklist[i];
    for (const auto& g : generators) {
      if (insert(compose(x, g)) || insert(compose(g, x))) {
        result.partial_size = elems.size();
        return result;
      }
    }
  }

  result.elements.assign(elems.begin(), elems.end());
  result.partial_size = result.elements.size();
  return result;
}

IdempotentReport idempotent_report(const TransformationSemigroup& s) {
  IdempotentReport report;
  for (const auto& e : s.elements()) {
    if (is_idempotent(e)) report.idempotents.push_back(e);
  }
  report.all_right_zero = !report.idempotents.empty();
  report.all_left_zero = !report.idempotents.empty();
  for (const auto& e : report.idempotents) {
    bool right_zero = true;
    bool left_zero = true;
    for (const auto& x : s.elements()) {
      if (compose(x, e) != e) right_zero = false;
      if (compose(e, x) != e) left_zero = false;
      if (!right_zero && !left_zero) break;
    }
    if (!right_zero) report.all_right_zero = false;
    if (!left_zero) report.all_left_zero = false;
    if (right_zero && left_zero && !report.unique_zero) report.unique_zero = e;
  }
  return report;
}

std::vector<Transformation> indecomposables(const TransformationSemigroup& s) {
  // An element is decomposable when it is a product of two elements other
  // than itself.  Absorbing elements like [1,1,1,1] equal some products that
  // involve themselves, yet still belong to every generating set.
  const auto& elems = s.elements();
  std::vector<bool> decomposable(elems.size(), false);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      Transformation p = compose(a, b);
      if (p == a || p == b) continue;
      auto it = std::lower_bound(elems.begin(), elems.end(), p);
      decomposable[static_cast<std::size_t>(it - elems.begin())] = true;
    }
  }
  std::vector<Transformation> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!decomposable[i]) out.push_back(elems[i]);
  }
  return out;
}

std::vector<Transformation> minimal_generating_set(const TransformationSemigroup& s,
                                                   const ClosureOptions& options) {
  std::vector<Transformation> ind = indecomposables(s);
  if (ind.empty()) throw NotIndecomposableGenerated(0);
  TransformationSemigroup generated = closure(ind, options);
  if (generated.elements() != s.elements()) {
    throw NotIndecomposableGenerated(generated.size());
  }
  return ind;
}

bool conflict(const Transformation& s, const Transformation& t, const ClosureOptions& options) {
  if (s.degree() != t.degree()) throw std::invalid_argument("conflict: degree mismatch");
  if (is_permutational(s) || is_permutational(t)) {
    throw std::invalid_argument("conflict is defined for non-permutational transformations");
  }
  PartialClosure pc = closure_until({s, t}, [](const Transformation& x) { return is_permutational(x); },
                                    options);
  if (pc.budget_exceeded) throw ClosureBudgetExceeded(pc.partial_size);
  return pc.hit.has_value();
}

bool is_non_permutational(const TransformationSemigroup& s) {
  return std::none_of(s.elements().begin(), s.elements().end(),
                      [](const Transformation& t) { return is_permutational(t); });
}

namespace {

MaximalityCheck maximality_impl(const TransformationSemigroup& s, const ClosureOptions& options,
                                int max_degree, bool parallel) {
  if (!is_non_permutational(s)) {
    throw std::invalid_argument("maximality test requires a non-permutational semigroup");
  }
  std::vector<Transformation> candidates = enumerate_non_permutational(s.degree(), max_degree);
  std::erase_if(candidates, [&](const Transformation& t) { return s.contains(t); });

  MaximalityCheck check;
  check.candidates_checked = candidates.size();

  const std::int64_t m = static_cast<std::int64_t>(candidates.size());
  std::atomic<std::int64_t> best_counterexample{m};
  std::atomic<bool> budget_hit{false};

  auto probe = [&](std::int64_t i) {
    if (budget_hit.load(std::memory_order_relaxed)) return;
    std::vector<Transformation> gens = s.elements();
    gens.push_back(candidates[static_cast<std::size_t>(i)]);
    PartialClosure pc = closure_until(gens, [](const Transformation& x) { return is_permutational(x); },
                                      options);
    if (pc.budget_exceeded) {
      budget_hit.store(true, std::memory_order_relaxed);
      return;
    }
    if (!pc.hit) {
      // extension stays non-permutational: not maximal
      std::int64_t prev = best_counterexample.load(std::memory_order_relaxed);
      while (i < prev && !best_counterexample.compare_exchange_weak(prev, i)) {
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < m; ++i) probe(i);
  } else {
    for (std::int64_t i = 0; i < m; ++i) {
      probe(i);
      if (best_counterexample.load() < m) break;  // first counterexample is enough
    }
  }

  if (budget_hit.load()) throw ClosureBudgetExceeded(options.max_elements);
  std::int64_t idx = best_counterexample.load();
  if (idx < m) {
    check.maximal = false;
    check.counterexample = candidates[static_cast<std::size_t>(idx)];
  } else {
    check.maximal = true;
  }
  return check;
}

}  // namespace

MaximalityCheck is_maximal_non_permutational(const TransformationSemigroup& s,
                                             const ClosureOptions& options, int max_degree) {
  return maximality_impl(s, options, max_degree, /*parallel=*/true);
}

MaximalityCheck is_maximal_non_permutational_serial(const TransformationSemigroup& s,
                                                    const ClosureOptions& options, int max_degree) {
  return maximality_impl(s, options, max_degree, /*parallel=*/false);
}

TransformationSemigroup relabel(const TransformationSemigroup& s, const Permutation& p) {
  std::vector<Transformation> out;
  out.reserve(s.size());
  for (const auto& t : s.elements()) out.push_back(relabel(t, p));
  std::sort(out.begin(), out.end());
  return TransformationSemigroup::trusted(std::move(out));
}

TransformationSemigroup canonical_form(const TransformationSemigroup& s, int max_degree) {
  if (s.degree() > max_degree) {
    throw std::invalid_argument("canonical_form degree guard: " + std::to_string(s.degree()) +
                                " > " + std::to_string(max_degree));
  }
  std::optional<std::vector<Transformation>> best;
  for (const auto& p : all_permutations(s.degree())) {
    std::vector<Transformation> image;
    image.reserve(s.size());
    for (const auto& t : s.elements()) image.push_back(relabel(t, p));
    std::sort(image.begin(), image.end());
    if (!best || image < *best) best = std::move(image);
  }
  return TransformationSemigroup::trusted(std::move(*best));
}

std::string to_text(const TransformationSemigroup& s) { return to_text(s.degree(), s.elements()); }

std::string to_text(int degree, const std::vector<Transformation>& elements) {
  std::string out = "n=" + std::to_string(degree) + "\n";
  for (const auto& t : elements) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

TransformationSemigroup semigroup_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int degree = -1;
  std::vector<Transformation> elems;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    if (degree < 0) {
      if (body.rfind("n=", 0) != 0) {
        throw std::invalid_argument("semigroup file must start with an n=<degree> line");
      }
      degree = std::stoi(body.substr(2));
      if (degree < 1) throw std::invalid_argument("invalid degree in semigroup file");
      continue;
    }
    Transformation t = parse_transformation(body);
    if (t.degree() != degree) {
      throw std::invalid_argument("transformation degree disagrees with the n= header");
    }
    elems.push_back(std::move(t));
  }
  if (degree < 0) throw std::invalid_argument("empty semigroup file");
  return TransformationSemigroup::from_elements(std::move(elems));
}

std::string to_json_array(const TransformationSemigroup& s) { return to_json_array(s.elements()); }

std::string to_json_array(const std::vector<Transformation>& elements) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : elements) arr.push_back(t.targets());
  return arr.dump();
}

}  // namespace synsem
