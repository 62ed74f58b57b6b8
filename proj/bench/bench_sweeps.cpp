// compares the serial reference sweeps against the OpenMP kernels and checks
// that both produce identical reports while they are at it.
//   usage: bench_sweeps [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "jord/catalog.hpp"
#include "jord/identities.hpp"
#include "jord/morphisms.hpp"
#include "jord/rng.hpp"

using namespace jord;

namespace {

template <typename F>
double time_secs(int repeats, F body) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) body();
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return total / repeats;
}

bool same(const IdentityReport& a, const IdentityReport& b) {
  return a.pass == b.pass && a.total_defects == b.total_defects &&
         a.witnesses.size() == b.witnesses.size();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-42s %10.4f s %10.4f s %8.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  if (repeats < 1) repeats = 1;
  std::printf("threads available: %d, repeats per measurement: %d\n\n", omp_get_max_threads(),
              repeats);
  std::printf("%-42s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

  SuperAlgebra k10 = make_k10_table();
  {
    IdentityReport rs, rp;
    double ts = time_secs(repeats, [&] { rs = check_super_jordan(k10, Exec::serial); });
    double tp = time_secs(repeats, [&] { rp = check_super_jordan(k10, Exec::parallel); });
    row("graded Jordan sweep, dim 10", ts, tp, same(rs, rp));
  }
  {
    SuperAlgebra env = grassmann_envelope(k10, 4);  // dim 80
    IdentityReport rs, rp;
    double ts = time_secs(repeats, [&] { rs = check_supercommutativity(env, Exec::serial); });
    double tp = time_secs(repeats, [&] { rp = check_supercommutativity(env, Exec::parallel); });
    row("commutativity sweep, dim 80 extension", ts, tp, same(rs, rp));
  }
  {
    IdentityReport rs, rp;
    double ts = time_secs(repeats,
                          [&] { rs = check_envelope_jordan(k10, 4, 400, 9, Exec::serial); });
    double tp = time_secs(repeats,
                          [&] { rp = check_envelope_jordan(k10, 4, 400, 9, Exec::parallel); });
    row("400 sampled power identities, dim 80", ts, tp, same(rs, rp));
  }
  {
    SuperAlgebra tensor = make_k10_tensor();
    Morphism iso = k10_tensor_iso(k10, tensor);
    IdentityReport rs, rp;
    double ts = time_secs(repeats, [&] { rs = is_homomorphism(iso, Exec::serial); });
    double tp = time_secs(repeats, [&] { rp = is_homomorphism(iso, Exec::parallel); });
    row("morphism product sweep, 100 pairs", ts, tp, same(rs, rp));
  }
  return 0;
}
