// Acceptance suite: every headline result is recomputed and checked at exact
// equality, with wall-clock limits enforced per criterion.  Prints one
// PASS/FAIL line per criterion and exits non-zero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synsem/dfa.hpp"
#include "synsem/families.hpp"
#include "synsem/search.hpp"
#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"
#include "test_helpers.hpp"

using namespace synsem;
using families::FamilyTag;
using families::WitnessClass;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      failures.push_back(what + " (got " + std::to_string(actual) + ", want " +
                         std::to_string(expected) + ")");
    }
  }
};

int g_failed_criteria = 0;

void run_criterion(int number, const std::string& name, double seconds_limit,
                   const std::function<void(Checker&)>& body) {
  Checker checker;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.failures.push_back(std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (elapsed > seconds_limit) {
    checker.failures.push_back("exceeded the " + std::to_string(seconds_limit) + " s limit");
  }
  if (checker.failures.empty()) {
    std::printf("PASS  criterion %d: %s (%.2f s)\n", number, name.c_str(), elapsed);
  } else {
    ++g_failed_criteria;
    std::printf("FAIL  criterion %d: %s (%.2f s)\n", number, name.c_str(), elapsed);
    for (const auto& f : checker.failures) std::printf("      - %s\n", f.c_str());
  }
  std::fflush(stdout);
}

std::string joined(const std::vector<Transformation>& set) {
  std::string out;
  for (const auto& t : set) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

}  // namespace

int main() {
  run_criterion(1, "finite/cofinite bound and witness", 5.0, [](Checker& c) {
    const std::uint64_t a_sizes[] = {0, 0, 0, 2, 6, 24, 120};
    const std::uint64_t g_sizes[] = {0, 0, 0, 1, 4, 18, 96};
    for (int n = 3; n <= 6; ++n) {
      auto g = families::build({FamilyTag::G, n});
      auto a = families::build({FamilyTag::A, n});
      c.expect_eq(a.size(), a_sizes[n], "|A_" + std::to_string(n) + "|");
      c.expect_eq(g.size(), g_sizes[n], "|G_" + std::to_string(n) + "|");
      c.expect(closure(g).elements() == a,
               "closure(G_" + std::to_string(n) + ") == A_" + std::to_string(n));
      Dfa w = families::witness_dfa(WitnessClass::Finite, n);
      c.expect(is_minimal(w), "finite witness minimal, n=" + std::to_string(n));
      ClassificationReport report = classify(w);
      c.expect(report.is_finite, "finite witness classifies finite, n=" + std::to_string(n));
      c.expect_eq(report.sigma, families::factorial(n - 1),
                  "sigma of finite witness, n=" + std::to_string(n));
    }
  });

  run_criterion(2, "reverse definite bound and witness", 5.0, [](Checker& c) {
    const std::uint64_t ap_sizes[] = {0, 0, 0, 0, 6, 24, 120};
    const std::uint64_t gp_sizes[] = {0, 0, 0, 0, 2, 12, 72};
    for (int n = 4; n <= 6; ++n) {
      auto gp = families::build({FamilyTag::Gprime, n});
      auto ap = families::build({FamilyTag::Aprime, n});
      c.expect_eq(ap.size(), ap_sizes[n], "|A'_" + std::to_string(n) + "|");
      c.expect_eq(gp.size(), gp_sizes[n], "|G'_" + std::to_string(n) + "|");
      c.expect(closure(gp).elements() == ap,
               "closure(G'_" + std::to_string(n) + ") == A'_" + std::to_string(n));
      Dfa w = families::witness_dfa(WitnessClass::ReverseDefinite, n);
      c.expect(is_minimal(w), "reverse-definite witness minimal, n=" + std::to_string(n));
      ClassificationReport report = classify(w);
      c.expect(report.is_reverse_definite && !report.is_finite && !report.is_cofinite,
               "reverse-definite witness classification, n=" + std::to_string(n));
    }
  });

  run_criterion(3, "definite family sizes and generation", 10.0, [](Checker& c) {
    const std::uint64_t b_sizes[] = {0, 0, 2, 5, 16, 65, 326};
    const std::uint64_t h_sizes[] = {0, 0, 0, 3, 11, 49, 261};
    for (int n = 2; n <= 6; ++n) {
      c.expect_eq(families::build({FamilyTag::B, n}).size(), b_sizes[n],
                  "|B_" + std::to_string(n) + "|");
      c.expect_eq(families::floor_e_times_factorial(n - 1), b_sizes[n],
                  "exact floor of e*(n-1)!, n=" + std::to_string(n));
      for (int k = 1; k <= n; ++k) {
        c.expect_eq(families::build({FamilyTag::Bk, n, k}).size(),
                    families::factorial(n - 1) / families::factorial(n - k),
                    "|B_{" + std::to_string(n) + "," + std::to_string(k) + "}|");
      }
    }
    for (int n = 3; n <= 6; ++n) {
      auto h = families::build({FamilyTag::H, n});
      c.expect_eq(h.size(), h_sizes[n], "|H_" + std::to_string(n) + "|");
      c.expect(closure(h).elements() == families::build({FamilyTag::B, n}),
               "closure(H_" + std::to_string(n) + ") == B_" + std::to_string(n));
    }
  });

  run_criterion(4, "worked degree-4 examples, exact string diff", 5.0, [](Checker& c) {
    c.expect(joined(families::build({FamilyTag::A, 4})) ==
                 "[2,3,4,4]\n[2,4,4,4]\n[3,3,4,4]\n[3,4,4,4]\n[4,3,4,4]\n[4,4,4,4]\n",
             "full ascending family, degree 4");
    c.expect(joined(families::build({FamilyTag::G, 4})) ==
                 "[2,3,4,4]\n[2,4,4,4]\n[3,3,4,4]\n[4,3,4,4]\n",
             "its generator set");
    c.expect(joined(families::build({FamilyTag::Aprime, 4})) ==
                 "[2,3,3,4]\n[2,4,3,4]\n[3,3,3,4]\n[3,4,3,4]\n[4,3,3,4]\n[4,4,3,4]\n",
             "two-top-fixed-point family, degree 4");
    c.expect(joined(families::build({FamilyTag::Gprime, 4})) == "[2,3,3,4]\n[2,4,3,4]\n",
             "its generator set");
    c.expect(joined(families::build({FamilyTag::B, 4})) ==
                 "[1,1,1,1]\n[2,2,2,2]\n[2,3,3,3]\n[2,3,4,4]\n[2,4,3,3]\n[2,4,4,4]\n"
                 "[3,2,2,2]\n[3,3,3,3]\n[3,3,4,4]\n[3,4,3,3]\n[3,4,4,4]\n[4,2,2,2]\n"
                 "[4,3,3,3]\n[4,3,4,4]\n[4,4,3,3]\n[4,4,4,4]\n",
             "banded family, degree 4");
    c.expect(joined(families::build({FamilyTag::H, 4})) ==
                 "[1,1,1,1]\n[2,3,3,3]\n[2,3,4,4]\n[2,4,3,3]\n[2,4,4,4]\n[3,2,2,2]\n"
                 "[3,3,4,4]\n[3,4,3,3]\n[4,2,2,2]\n[4,3,4,4]\n[4,4,3,3]\n",
             "its generator set");
    // the generator sets are exactly the indecomposable elements
    c.expect(indecomposables(TransformationSemigroup::from_elements(
                 families::build({FamilyTag::A, 4}))) == families::build({FamilyTag::G, 4}),
             "ascending-family generators are the indecomposables");
    c.expect(indecomposables(TransformationSemigroup::from_elements(
                 families::build({FamilyTag::B, 4}))) == families::build({FamilyTag::H, 4}),
             "banded-family generators are the indecomposables");
    c.expect(minimal_generating_set(TransformationSemigroup::from_elements(
                 families::build({FamilyTag::Aprime, 4}))) ==
                 families::build({FamilyTag::Gprime, 4}),
             "two-sink-family generators are minimal");
  });

  run_criterion(5, "conjecture verification by exhaustive search", 600.0, [](Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    search::SearchReport two = search::max_non_permutational(2);
    double t2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect_eq(two.max_size, std::size_t{2}, "maximum at degree 2");
    c.expect(two.exhaustive, "degree 2 exhaustive");
    c.expect(t2 < 1.0, "degree 2 under one second");

    t0 = std::chrono::steady_clock::now();
    search::SearchReport three = search::max_non_permutational(3);
    search::SearchReport oracle = search::subset_oracle(3);
    double t3 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect_eq(three.max_size, std::size_t{5}, "maximum at degree 3");
    c.expect(three.exhaustive, "degree 3 exhaustive");
    c.expect_eq(oracle.max_size, std::size_t{5}, "degree 3 subset oracle (512 subsets)");
    c.expect(t3 < 1.0, "degree 3 under one second");
    std::set<std::vector<Transformation>> search_sets, oracle_sets;
    for (const auto& s : three.maxima) search_sets.insert(s.elements());
    for (const auto& s : oracle.maxima) oracle_sets.insert(s.elements());
    c.expect(search_sets == oracle_sets, "degree 3 maxima match the oracle");

    search::SearchReport four = search::max_non_permutational(4);
    c.expect_eq(four.max_size, std::size_t{16}, "maximum at degree 4");
    c.expect_eq(four.conjectured, std::uint64_t{16}, "conjectured value at degree 4");
    c.expect(four.exhaustive, "degree 4 exhaustive");
    c.expect(four.min_generator_sizes == std::vector<std::size_t>{11},
             "every degree-4 maximum needs 11 generators");
    c.expect(four.generator_notes.empty(), "no generator failures at degree 4");

    search::SearchOptions best_effort;
    best_effort.budget.max_nodes = 200'000;
    search::SearchReport five = search::max_non_permutational(5, best_effort);
    c.expect(!five.exhaustive, "degree 5 is flagged incomplete");
    c.expect(five.max_size >= 65, "degree 5 reports the known feasible maximum");
  });

  run_criterion(6, "maximality of the banded family", 60.0, [](Checker& c) {
    const std::uint64_t candidates[] = {0, 0, 0, 4, 48, 560};
    for (int n = 3; n <= 5; ++n) {
      search::BMaximalityReport report = search::verify_B_maximality(n);
      c.expect(report.maximal, "maximality at degree " + std::to_string(n));
      c.expect_eq(report.candidates_checked, candidates[n],
                  "candidate count at degree " + std::to_string(n));
    }
  });

  run_criterion(7, "labeled-forest count and bijection", 30.0, [](Checker& c) {
    const std::uint64_t expected[] = {0, 1, 2, 9, 64, 625, 7776};
    for (int n = 1; n <= 6; ++n) {
      c.expect_eq(count_non_permutational(n), expected[n],
                  "non-permutational count at degree " + std::to_string(n));
    }
    c.expect_eq(count_non_permutational_serial(5), std::uint64_t{625},
                "serial reference agrees");
    int round_trips = 0;
    for (const auto& t : testing::all_transformations(4)) {
      if (is_permutational(t)) continue;
      ++round_trips;
      c.expect(from_forest(to_forest(t)) == t, "forest round trip for " + to_string(t));
    }
    c.expect_eq(round_trips, 64, "all 64 degree-4 maps round-tripped");
  });

  run_criterion(8, "structural vs algebraic classification (corpus seed 0x5EED)", 60.0,
                [](Checker& c) {
    for (int n = 2; n <= 5; ++n) {
      IdempotentReport a = idempotent_report(
          TransformationSemigroup::from_elements(families::build({FamilyTag::A, n})));
      c.expect(a.idempotents.size() == 1 && a.unique_zero.has_value(),
               "ascending family has a single idempotent zero, n=" + std::to_string(n));
      IdempotentReport b = idempotent_report(
          TransformationSemigroup::from_elements(families::build({FamilyTag::B, n})));
      c.expect(b.all_right_zero, "banded-family idempotents are right zeros, n=" + std::to_string(n));
      IdempotentReport ap = idempotent_report(
          TransformationSemigroup::from_elements(families::build({FamilyTag::Aprime, n})));
      c.expect(ap.all_left_zero, "two-sink-family idempotents are left zeros, n=" + std::to_string(n));
    }

    std::mt19937 rng(0x5EED);
    int classified = 0;
    int attempts = 0;
    while (classified < 1000 && attempts < 200000) {
      ++attempts;
      int n = 1 + static_cast<int>(rng() % 4);
      int letters = 1 + static_cast<int>(rng() % 3);
      Dfa d = testing::random_dfa(rng, n, letters);
      if (!is_minimal(d)) continue;
      ++classified;
      try {
        ClassificationReport report = classify(d);
        if (report.is_finite || report.is_cofinite) {
          c.expect(report.is_definite && report.is_reverse_definite,
                   "finite/cofinite DFAs are definite and reverse definite");
        }
      } catch (const std::logic_error& e) {
        c.expect(false, std::string("cross-check disagreement: ") + e.what());
        break;
      }
    }
    c.expect_eq(classified, 1000, "classified 1000 seeded random minimal DFAs");
  });

  run_criterion(9, "property suites", 60.0, [](Checker& c) {
    // closure operator laws on random generator sets
    std::mt19937 rng(0xFACADE);
    for (int n = 2; n <= 4; ++n) {
      for (int round = 0; round < 20; ++round) {
        std::vector<Transformation> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) gens.push_back(testing::random_transformation(rng, n));
        TransformationSemigroup closed = closure(gens);
        for (const auto& g : gens) c.expect(closed.contains(g), "closure is extensive");
        c.expect(closure(closed.elements()) == closed, "closure is idempotent");
        std::vector<Transformation> more = gens;
        more.push_back(testing::random_transformation(rng, n));
        TransformationSemigroup bigger = closure(more);
        bool contains_all = true;
        for (const auto& t : closed.elements()) contains_all &= bigger.contains(t);
        c.expect(contains_all, "closure is monotone");
      }
    }

    // decomposition round trips across the full families
    for (int n = 3; n <= 5; ++n) {
      for (const auto& t : families::build({FamilyTag::A, n})) {
        c.expect(families::decompose(t, families::DecomposeFamily::A).recompose() == t,
                 "ascending decomposition round trip " + to_string(t));
      }
    }
    for (int n = 2; n <= 5; ++n) {
      for (const auto& t : families::build({FamilyTag::B, n})) {
        c.expect(families::decompose(t, families::DecomposeFamily::B).recompose() == t,
                 "banded decomposition round trip " + to_string(t));
      }
    }

    // band products land where predicted, exhaustively
    for (int n = 4; n <= 5; ++n) {
      std::vector<std::vector<Transformation>> bands(static_cast<std::size_t>(n) + 1);
      for (int k = 1; k <= n; ++k) bands[k] = families::build({FamilyTag::Bk, n, k});
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (const auto& ti : bands[i]) {
            for (const auto& tj : bands[j]) {
              c.expect(families::band_index(compose(ti, tj)) == tj.apply(i),
                       "band product rule (low then high)");
              c.expect(families::band_index(compose(tj, ti)) == i,
                       "band product rule (high then low)");
            }
          }
        }
      }
    }

    // complementation never changes the syntactic semigroup
    for (int n = 3; n <= 5; ++n) {
      Dfa fin = families::witness_dfa(WitnessClass::Finite, n);
      c.expect(syntactic_semigroup(fin) == syntactic_semigroup(complement(fin)),
               "complement invariance, finite witness n=" + std::to_string(n));
      Dfa def = families::witness_dfa(WitnessClass::Definite, n);
      c.expect(syntactic_semigroup(def) == syntactic_semigroup(complement(def)),
               "complement invariance, definite witness n=" + std::to_string(n));
      if (n >= 4) {
        Dfa rev = families::witness_dfa(WitnessClass::ReverseDefinite, n);
        c.expect(syntactic_semigroup(rev) == syntactic_semigroup(complement(rev)),
                 "complement invariance, reverse-definite witness n=" + std::to_string(n));
      }
    }
  });

  if (g_failed_criteria == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failed_criteria);
  }
  return g_failed_criteria;
}
