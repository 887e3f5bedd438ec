#include "synsem/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "synsem/families.hpp"

namespace synsem {
namespace search {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Fixed-capacity bitset sized at runtime.
struct Bits {
  std::vector<std::uint64_t> w;
  Bits() = default;
  explicit Bits(std::size_t bits) : w((bits + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void and_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
  }
};

// Number of set bits of (a & ~b) at positions >= from.
std::size_t count_from(const Bits& a, const Bits& b, std::size_t from) {
  std::size_t total = 0;
  std::size_t k0 = from >> 6;
  for (std::size_t k = k0; k < a.w.size(); ++k) {
    std::uint64_t word = a.w[k] & ~b.w[k];
    if (k == k0) word &= ~std::uint64_t{0} << (from & 63);
    total += static_cast<std::size_t>(std::popcount(word));
  }
  return total;
}

// Composition structure of all n^n maps of a small degree, with codes in
// lexicographic order of the target sequences.
struct DenseSpace {
  int n = 0;
  std::uint32_t size = 0;
  std::vector<std::uint16_t> comp;         // comp[a * size + b] = code of (a then b)
  std::vector<std::uint8_t> permutational; // flag per code
  std::vector<std::uint16_t> nonperm;      // candidate codes, ascending

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return comp[static_cast<std::size_t>(a) * size + b];
  }
};

DenseSpace build_space(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("dense kernel supports degrees 2..5");
  DenseSpace d;
  d.n = n;
  d.size = static_cast<std::uint32_t>(ipow(n, static_cast<unsigned>(n)));

  std::vector<std::uint8_t> digits(static_cast<std::size_t>(d.size) * n);  // 0-based targets
  for (std::uint32_t code = 0; code < d.size; ++code) {
    std::uint32_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(code) * n + i] = static_cast<std::uint8_t>(c % n);
      c /= n;
    }
  }

  std::vector<std::uint32_t> pow(static_cast<std::size_t>(n));
  pow[static_cast<std::size_t>(n) - 1] = 1;
  for (int i = n - 2; i >= 0; --i) pow[i] = pow[i + 1] * static_cast<std::uint32_t>(n);

  d.comp.resize(static_cast<std::size_t>(d.size) * d.size);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(d.size); ++a) {
    const std::uint8_t* ta = &digits[static_cast<std::size_t>(a) * n];
    for (std::uint32_t b = 0; b < d.size; ++b) {
      const std::uint8_t* tb = &digits[static_cast<std::size_t>(b) * n];
      std::uint32_t code = 0;
      for (int i = 0; i < n; ++i) code += pow[i] * tb[ta[i]];
      d.comp[static_cast<std::size_t>(a) * d.size + b] = static_cast<std::uint16_t>(code);
    }
  }

  d.permutational.resize(d.size);
  for (std::uint32_t code = 0; code < d.size; ++code) {
    Transformation t = decode(n, code);
    d.permutational[code] = is_permutational(t) ? 1 : 0;
    if (!d.permutational[code]) d.nonperm.push_back(static_cast<std::uint16_t>(code));
  }
  return d;
}

// Completes the closure of `list`, whose prefix [0, frontier) is already
// closed, using the composition table.  Returns false as soon as a
// permutational element appears.  Tracks the smallest element added.
bool close_codes(const DenseSpace& d, std::vector<std::uint16_t>& list, Bits& member,
                 std::size_t frontier, std::uint16_t& min_added) {
  for (std::size_t i = frontier; i < list.size(); ++i) {
    const std::uint16_t x = list[i];
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::uint16_t y = list[j];
      const std::uint16_t prods[2] = {d.mul(x, y), d.mul(y, x)};
      for (std::uint16_t z : prods) {
        if (member.test(z)) continue;
        if (d.permutational[z]) return false;
        member.set(z);
        list.push_back(z);
        if (z < min_added) min_added = z;
      }
    }
  }
  return true;
}

// Relabeling action of every permutation on codes.
std::vector<std::vector<std::uint16_t>> perm_action_tables(const DenseSpace& d) {
  std::vector<std::vector<std::uint16_t>> tables;
  for (const auto& p : all_permutations(d.n)) {
    std::vector<std::uint16_t> act(d.size);
    for (std::uint32_t code = 0; code < d.size; ++code) {
      act[code] = static_cast<std::uint16_t>(encode(relabel(decode(d.n, code), p)));
    }
    tables.push_back(std::move(act));
  }
  return tables;
}

std::vector<std::uint16_t> canonical_codes(const std::vector<std::uint16_t>& sorted_codes,
                                           const std::vector<std::vector<std::uint16_t>>& actions) {
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> image(sorted_codes.size());
  for (const auto& act : actions) {
    for (std::size_t i = 0; i < sorted_codes.size(); ++i) image[i] = act[sorted_codes[i]];
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  }
  return best;
}

TransformationSemigroup semigroup_from_codes(int n, const std::vector<std::uint16_t>& codes) {
  std::vector<Transformation> elems;
  elems.reserve(codes.size());
  for (std::uint16_t c : codes) elems.push_back(decode(n, c));
  return TransformationSemigroup::trusted(std::move(elems));
}

struct SearchState {
  const DenseSpace& d;
  const SearchOptions& opts;
  std::vector<std::uint16_t> candidates;       // = d.nonperm
  std::vector<int> cand_index;                 // code -> candidate index, -1 otherwise
  std::vector<Bits> compat;                    // pairwise-conflict pre-filter
  std::vector<char> is_rep;                    // conjugacy-class minima among candidates
  std::size_t record_threshold = 0;            // known feasible size
  Clock::time_point t0;
  std::atomic<std::size_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::vector<std::vector<std::uint16_t>> solutions;  // element codes, sorted

  explicit SearchState(const DenseSpace& space, const SearchOptions& options)
      : d(space), opts(options) {}

  void record(const std::vector<std::uint16_t>& list) {
    if (list.size() < record_threshold) return;
    std::vector<std::uint16_t> sorted = list;
    std::sort(sorted.begin(), sorted.end());
#pragma omp critical(synsem_search_record)
    {
      solutions.push_back(std::move(sorted));
      if (solutions.size() > 4096) {
        // keep the pool bounded: ties with the best are never dropped
        std::size_t floor = best.load(std::memory_order_relaxed);
        std::erase_if(solutions,
                      [floor](const std::vector<std::uint16_t>& s) { return s.size() < floor; });
      }
    }
    std::size_t prev = best.load(std::memory_order_relaxed);
    while (list.size() > prev && !best.compare_exchange_weak(prev, list.size())) {
    }
  }

  bool budget_ok() {
    std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > opts.budget.max_nodes) {
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((seen & 0xFF) == 0 && seconds_since(t0) > opts.budget.max_seconds) {
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  // Extends S by candidates with indices >= anchor.
  void dfs(const std::vector<std::uint16_t>& s_list, const Bits& s_member, const Bits& s_cand,
           const Bits& live, std::size_t anchor) {
    const std::size_t m = candidates.size();
    for (std::size_t j = anchor; j < m; ++j) {
      if (stop.load(std::memory_order_relaxed)) return;
      if (s_cand.test(j)) continue;
      if (opts.pair_prefilter && !live.test(j)) continue;
      if (opts.prune_size_bound &&
          s_list.size() + count_from(live, s_cand, j) < best.load(std::memory_order_relaxed)) {
        break;  // the tail count only shrinks as j grows
      }
      if (!budget_ok()) return;

      std::vector<std::uint16_t> t_list = s_list;
      Bits t_member = s_member;
      const std::uint16_t code = candidates[j];
      t_list.push_back(code);
      t_member.set(code);
      std::uint16_t min_added = code;
      if (!close_codes(d, t_list, t_member, s_list.size(), min_added)) continue;
      if (min_added < code) continue;  // the canonical chain adds its minimum first

      Bits t_cand = s_cand;
      Bits t_live = live;
      for (std::size_t i = s_list.size(); i < t_list.size(); ++i) {
        int idx = cand_index[t_list[i]];
        t_cand.set(static_cast<std::size_t>(idx));
        if (opts.pair_prefilter) t_live.and_with(compat[static_cast<std::size_t>(idx)]);
      }
      record(t_list);
      dfs(t_list, t_member, t_cand, t_live, j + 1);
    }
  }
};

SearchReport finalize_report(int n, const DenseSpace& d,
                             std::vector<std::vector<std::uint16_t>> solutions,
                             std::size_t fallback_best, std::uint64_t nodes, double elapsed,
                             bool exhaustive) {
  SearchReport report;
  report.n = n;
  report.exhaustive = exhaustive;
  report.conjectured = families::floor_e_times_factorial(n - 1);
  report.nodes_explored = nodes;
  report.elapsed_seconds = elapsed;
  report.scope_note =
      "search space: composition-closed sets of non-permutational maps inside the full "
      "transformation monoid; the definite witness DFA realizes the bound as a syntactic "
      "semigroup";

  std::size_t max_size = fallback_best;
  for (const auto& sol : solutions) max_size = std::max(max_size, sol.size());
  report.max_size = max_size;

  auto actions = perm_action_tables(d);
  std::set<std::vector<std::uint16_t>> canon;
  for (const auto& sol : solutions) {
    if (sol.size() == max_size) canon.insert(canonical_codes(sol, actions));
  }
  for (const auto& codes : canon) report.maxima.push_back(semigroup_from_codes(n, codes));

  std::set<std::size_t> sizes;
  for (std::size_t i = 0; i < report.maxima.size(); ++i) {
    try {
      sizes.insert(minimal_generating_set(report.maxima[i]).size());
    } catch (const NotIndecomposableGenerated& e) {
      report.generator_notes.push_back("maximum " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  report.min_generator_sizes.assign(sizes.begin(), sizes.end());
  return report;
}

}  // namespace

SearchReport max_non_permutational(int n, const SearchOptions& options) {
  if (n < 2 || n > 5) {
    throw std::invalid_argument("search supports degrees 2..4 (5 in best-effort mode)");
  }
  SearchOptions opts = options;
  if (n >= 5 && opts.budget.max_nodes == std::numeric_limits<std::uint64_t>::max()) {
    opts.budget.max_nodes = 1'000'000;  // degree 5 is best-effort by default
  }

  const DenseSpace d = build_space(n);
  SearchState state(d, opts);
  state.t0 = Clock::now();
  state.candidates = d.nonperm;
  const std::size_t m = state.candidates.size();

  state.cand_index.assign(d.size, -1);
  for (std::size_t i = 0; i < m; ++i) state.cand_index[state.candidates[i]] = static_cast<int>(i);

  // Pairwise-conflict pre-filter: compat[i] marks candidates whose pair
  // closure with candidate i stays non-permutational.
  state.compat.assign(m, Bits(m));
  if (opts.pair_prefilter) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
      for (std::size_t j = static_cast<std::size_t>(i); j < m; ++j) {
        std::vector<std::uint16_t> list{state.candidates[static_cast<std::size_t>(i)]};
        Bits member(d.size);
        member.set(list[0]);
        if (j != static_cast<std::size_t>(i)) {
          list.push_back(state.candidates[j]);
          member.set(list[1]);
        }
        std::uint16_t min_added = list[0];
        if (close_codes(d, list, member, 0, min_added)) {
          state.compat[static_cast<std::size_t>(i)].set(j);
        }
      }
    }
    // mirror the upper triangle
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (state.compat[i].test(j)) state.compat[j].set(i);
      }
    }
  }

  state.is_rep.assign(m, 1);
  if (opts.root_symmetry) {
    auto actions = perm_action_tables(d);
    for (std::size_t i = 0; i < m; ++i) {
      std::uint16_t code = state.candidates[i];
      for (const auto& act : actions) {
        if (act[code] < code) {
          state.is_rep[i] = 0;
          break;
        }
      }
    }
  }

  // The banded family is a known feasible solution: seed the bound and the
  // solution pool with it so budget-limited runs still report a maximum.
  std::vector<std::uint16_t> seed_codes;
  for (const auto& t : families::build({families::FamilyTag::B, n})) {
    seed_codes.push_back(static_cast<std::uint16_t>(encode(t)));
  }
  std::sort(seed_codes.begin(), seed_codes.end());
  state.record_threshold = seed_codes.size();
  state.best.store(seed_codes.size());
  state.solutions.push_back(seed_codes);

  const Bits empty_cand(m);
  Bits all_live(m);
  for (std::size_t i = 0; i < m; ++i) all_live.set(i);

  auto explore_root = [&](std::size_t j0) {
    if (state.stop.load(std::memory_order_relaxed)) return;
    if (opts.root_symmetry && !state.is_rep[j0]) return;
    if (!state.budget_ok()) return;
    std::vector<std::uint16_t> list{state.candidates[j0]};
    Bits member(d.size);
    member.set(list[0]);
    std::uint16_t min_added = list[0];
    if (!close_codes(d, list, member, 0, min_added)) return;
    if (min_added < list[0]) return;
    Bits cand = empty_cand;
    Bits live = all_live;
    for (std::uint16_t code : list) {
      int idx = state.cand_index[code];
      cand.set(static_cast<std::size_t>(idx));
      if (opts.pair_prefilter) live.and_with(state.compat[static_cast<std::size_t>(idx)]);
    }
    state.record(list);
    state.dfs(list, member, cand, live, j0 + 1);
  };

  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t j0 = 0; j0 < static_cast<std::int64_t>(m); ++j0) {
      explore_root(static_cast<std::size_t>(j0));
    }
  } else {
    for (std::size_t j0 = 0; j0 < m; ++j0) explore_root(j0);
  }

  const bool covered = !state.stop.load();
  SearchReport report = finalize_report(n, d, std::move(state.solutions), state.record_threshold,
                                        state.nodes.load(), seconds_since(state.t0), covered);
  return report;
}

SearchReport subset_oracle(int n) {
  if (n < 2 || n > 3) {
    throw std::invalid_argument("the subset oracle supports degrees 2 and 3 only");
  }
  const DenseSpace d = build_space(n);
  const auto t0 = Clock::now();
  const std::size_t m = d.nonperm.size();
  std::vector<std::vector<std::uint16_t>> solutions;
  std::size_t best = 0;
  std::uint64_t masks = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    ++masks;
    std::vector<std::uint16_t> subset;
    Bits member(d.size);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        subset.push_back(d.nonperm[i]);
        member.set(d.nonperm[i]);
      }
    }
    bool closed = true;
    for (std::size_t i = 0; i < subset.size() && closed; ++i) {
      for (std::size_t j = 0; j < subset.size() && closed; ++j) {
        closed = member.test(d.mul(subset[i], subset[j]));
      }
    }
    if (!closed) continue;
    if (subset.size() >= best) {
      best = subset.size();
      solutions.push_back(subset);
    }
  }
  return finalize_report(n, d, std::move(solutions), best, masks,
                         seconds_since(t0), /*exhaustive=*/true);
}

BMaximalityReport verify_B_maximality(int n, bool parallel) {
  if (n < 2 || n > 5) throw std::invalid_argument("verify_B_maximality supports degrees 2..5");
  const DenseSpace d = build_space(n);
  const auto t0 = Clock::now();

  std::vector<std::uint16_t> b_codes;
  for (const auto& t : families::build({families::FamilyTag::B, n})) {
    b_codes.push_back(static_cast<std::uint16_t>(encode(t)));
  }
  std::sort(b_codes.begin(), b_codes.end());
  Bits b_member(d.size);
  for (std::uint16_t c : b_codes) b_member.set(c);

  std::vector<std::uint16_t> outside;
  for (std::uint16_t c : d.nonperm) {
    if (!b_member.test(c)) outside.push_back(c);
  }

  std::atomic<std::uint32_t> first_counterexample{d.size};
  auto probe = [&](std::size_t i) {
    std::vector<std::uint16_t> list = b_codes;
    Bits member = b_member;
    list.push_back(outside[i]);
    member.set(outside[i]);
    std::uint16_t min_added = outside[i];
    if (close_codes(d, list, member, b_codes.size(), min_added)) {
      // no conflict appeared: the family is extendable
      std::uint32_t prev = first_counterexample.load(std::memory_order_relaxed);
      while (outside[i] < prev && !first_counterexample.compare_exchange_weak(prev, outside[i])) {
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(outside.size()); ++i) {
      probe(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < outside.size(); ++i) probe(i);
  }

  BMaximalityReport report;
  report.n = n;
  report.candidates_checked = outside.size();
  report.elapsed_seconds = seconds_since(t0);
  if (first_counterexample.load() < d.size) {
    report.maximal = false;
    report.counterexample = decode(n, first_counterexample.load());
  } else {
    report.maximal = true;
  }
  return report;
}

}  // namespace search
}  // namespace synsem
