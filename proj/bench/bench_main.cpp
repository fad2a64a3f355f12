// Times each parallel kernel against its serial reference and reports the
// largest output divergence (which must be zero: the kernels are exact
// twins).  Not a registered test; timings depend on the machine.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

using namespace lowdeg;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

double max_cplx_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void row(const char* name, double ser, double par, double diff) {
  std::printf("%-28s %10.2f %10.2f %9.2fx %10.3g\n", name, ser, par,
              par > 0 ? ser / par : 0.0, diff);
}

}  // namespace

int main() {
  init_threads_from_env();
  std::printf("threads: %d\n", max_threads());
  std::printf("%-28s %10s %10s %10s %10s\n", "kernel", "serial ms", "par ms", "speedup",
              "max diff");

  CounterRng rng(1, 0);

  {
    // Dense transform at the largest context whose dual is also enumerable.
    const FourierContext ctx(2, 2, Exec::Parallel);
    GroupFn a(ctx.n());
    for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
    Spectrum ss, sp;
    const double ts = best_of(3, [&] { ss = ctx.transform(a, Exec::Serial); });
    const double tp = best_of(3, [&] { sp = ctx.transform(a, Exec::Parallel); });
    row("transform n=729", ts, tp, max_cplx_diff(ss, sp));
  }

  {
    const double ts = best_of(2, [&] { FourierContext c(2, 2, Exec::Serial); (void)c; });
    const double tp = best_of(2, [&] { FourierContext c(2, 2, Exec::Parallel); (void)c; });
    row("context build (2,2)", ts, tp, 0.0);
  }

  {
    const double ts = best_of(2, [&] { CosetSystem c(2, 4, Exec::Serial); (void)c; });
    const double tp = best_of(2, [&] { CosetSystem c(2, 4, Exec::Parallel); (void)c; });
    row("coset reps (2,4)", ts, tp, 0.0);
  }

  {
    const PolySpace space(3, 2);
    const NoiseDist dist = make_square_noise(3, 1);
    GroupFn a(space.size());
    for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
    GroupFn os, op;
    const double ts = best_of(3, [&] { os = apply_noise(space, dist, a, Exec::Serial); });
    const double tp = best_of(3, [&] { op = apply_noise(space, dist, a, Exec::Parallel); });
    row("apply noise n=59049", ts, tp, max_cplx_diff(os, op));
  }

  {
    const DerandGraph g(2, 2);
    const VertexSubset s = dictator_set(g, 0, 0);
    IndependenceResult is{}, ip{};
    const double ts = best_of(3, [&] { is = is_independent(g, s, Exec::Serial); });
    const double tp = best_of(3, [&] { ip = is_independent(g, s, Exec::Parallel); });
    row("independence n=19683", ts, tp,
        is.independent == ip.independent && is.violation == ip.violation ? 0.0 : 1.0);
  }

  {
    const FullDft dft(2);
    std::vector<cplx> a(dft.N());
    for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
    std::vector<cplx> bs = a, bp = a;
    const double ts = best_of(3, [&] {
      bs = a;
      dft.forward(bs, Exec::Serial);
    });
    const double tp = best_of(3, [&] {
      bp = a;
      dft.forward(bp, Exec::Parallel);
    });
    row("full dft n=19683", ts, tp, max_cplx_diff(bs, bp));
  }

  return 0;
}
