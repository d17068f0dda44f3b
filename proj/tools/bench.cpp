// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "bkit/bergman.hpp"
#include "bkit/coxeter.hpp"
#include "bkit/oriented.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bkit;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms,
         bool equal) {
  std::cout << std::left << std::setw(28) << name << std::right
            << std::setw(10) << std::fixed << std::setprecision(2) << serial_ms
            << " ms" << std::setw(10) << parallel_ms << " ms   x"
            << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (equal ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
  std::cout << std::left << std::setw(28) << "kernel" << std::right
            << std::setw(13) << "serial" << std::setw(13) << "parallel"
            << "\n";

  for (const std::string& type : {std::string("A3"), std::string("B3"),
                                  std::string("D4")}) {
    RootSystem rs = build_root_system(type);
    // Fresh instances per run so neither path benefits from the other's
    // memoized ranks.
    auto fresh = [&rs]() { return coxeter_oriented_matroid(rs); };

    {
      OrientedMatroid a = fresh(), b = fresh();
      auto t0 = Clock::now();
      auto serial = a.covectors_serial();
      double ts = ms_since(t0);
      t0 = Clock::now();
      auto parallel = b.covectors();
      double tp = ms_since(t0);
      row("covectors " + type, ts, tp, serial == parallel);
    }
    {
      OrientedMatroid a = fresh(), b = fresh();
      auto t0 = Clock::now();
      CoarseComplex serial = bergman_coarse_serial(a.underlying());
      double ts = ms_since(t0);
      t0 = Clock::now();
      CoarseComplex parallel = bergman_coarse(b.underlying());
      double tp = ms_since(t0);
      bool equal = serial.size() == parallel.size();
      for (int i = 0; equal && i < serial.size(); ++i)
        equal = serial.cells[static_cast<size_t>(i)].flags ==
                parallel.cells[static_cast<size_t>(i)].flags;
      row("coarse cells " + type, ts, tp, equal);
    }
    {
      OrientedMatroid a = fresh(), b = fresh();
      std::vector<SignVector> topes = a.generic_extension(0).bounded_topes();
      auto t0 = Clock::now();
      CoverReport serial = covers_serial(a, topes);
      double ts = ms_since(t0);
      t0 = Clock::now();
      CoverReport parallel = covers(b, topes);
      double tp = ms_since(t0);
      row("cover check " + type, ts, tp,
          serial.covered == parallel.covered);
    }
  }
  return 0;
}
