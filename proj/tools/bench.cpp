// Benchmark of the OpenMP kernels against their serial references: the
// non-permutational enumeration count, the banded-family maximality sweep
// and the maximum-semigroup search.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "synsem/families.hpp"
#include "synsem/search.hpp"
#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"

namespace {

double time_of(const std::function<void()>& work) {
  auto t0 = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

  {
    const int n = 7;
    std::uint64_t serial_count = 0;
    std::uint64_t parallel_count = 0;
    double ts = time_of([&] { serial_count = synsem::count_non_permutational_serial(n); });
    double tp = time_of([&] { parallel_count = synsem::count_non_permutational(n); });
    report("count_non_permutational(7)", ts, tp, serial_count == parallel_count);
  }

  {
    const int n = 5;
    synsem::search::BMaximalityReport serial_report, parallel_report;
    double ts = time_of([&] { serial_report = synsem::search::verify_B_maximality(n, false); });
    double tp = time_of([&] { parallel_report = synsem::search::verify_B_maximality(n, true); });
    report("verify_B_maximality(5)", ts, tp, serial_report.maximal == parallel_report.maximal);
  }

  {
    auto b4 = synsem::TransformationSemigroup::from_elements(
        synsem::families::build({synsem::families::FamilyTag::B, 4}));
    synsem::MaximalityCheck serial_check, parallel_check;
    double ts = time_of([&] { serial_check = synsem::is_maximal_non_permutational_serial(b4); });
    double tp = time_of([&] { parallel_check = synsem::is_maximal_non_permutational(b4); });
    report("is_maximal_non_permutational(B_4)", ts, tp,
           serial_check.maximal == parallel_check.maximal);
  }

  {
    synsem::search::SearchOptions serial_opts;
    serial_opts.parallel = false;
    synsem::search::SearchReport serial_report, parallel_report;
    double ts = time_of([&] { serial_report = synsem::search::max_non_permutational(4, serial_opts); });
    double tp = time_of([&] { parallel_report = synsem::search::max_non_permutational(4); });
    report("max_non_permutational(4)", ts, tp,
           serial_report.max_size == parallel_report.max_size &&
               serial_report.maxima.size() == parallel_report.maxima.size());
  }

  return 0;
}
