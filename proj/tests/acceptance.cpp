// Acceptance battery: twelve independently timed checks, one line each, exit
// status zero only when every one passes.  Seeds are fixed so reruns are
// byte-identical.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/io.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"
#include "lowdeg/ugreduce.hpp"

using namespace lowdeg;

namespace {

constexpr double kTol = 1e-9;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

// 1. Orthogonal complement duality of every enumerable space pair.
Outcome c_duality() {
  int pairs = 0;
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d < 2 * r; ++d) {
      const DualityReport rep = verify_dual(r, d);
      if (!rep.ok())
        return {false, fmt("failed at r=%d d=%d (dims %d+%d)", r, d, rep.dim_primal, rep.dim_dual)};
      ++pairs;
    }
  return {true, fmt("%d space pairs, dimensions complementary, all basis pairs orthogonal", pairs)};
}

// 2. Exhaustive minimum nonzero fraction meets the 3^{-d/2} bound.
Outcome c_schwartz_zippel() {
  for (int d = 0; d <= 4; ++d) {
    const SchwartzZippelReport rep = schwartz_zippel_min(2, d);
    if (!rep.bound_holds)
      return {false, fmt("bound fails at r=2 d=%d: min %s", d, rep.min_fraction.str().c_str())};
  }
  const SchwartzZippelReport tight = schwartz_zippel_min(1, 2);
  if (!(tight.bound_tight && tight.min_fraction == Rational(1, 3)))
    return {false, fmt("tightness fails at r=1 d=2: min %s", tight.min_fraction.str().c_str())};
  return {true, "min fractions hold for r=2 d<=4; r=1 d=2 attains 1/3 exactly"};
}

// 3. Transform round trip, Parseval, and character orthonormality.
Outcome c_fourier_core() {
  const FourierContext ctx(2, 2);
  const double ortho = ctx.orthonormality_max_dev();
  if (ortho > kTol) return {false, fmt("orthonormality dev %.3g", ortho)};
  CounterRng rng(0xacc3, 0);
  double worst_rt = 0, worst_par = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GroupFn a(ctx.n());
    for (auto& z : a) z = cplx(rng.next_double() * 2 - 1, rng.next_double() * 2 - 1);
    const Spectrum s = ctx.transform(a);
    const GroupFn back = ctx.inverse(s);
    for (std::uint64_t g = 0; g < ctx.n(); ++g)
      worst_rt = std::max(worst_rt, std::abs(back[g] - a[g]));
    worst_par = std::max(worst_par, ctx.parseval_gap(a, s));
  }
  if (worst_rt >= kTol || worst_par >= kTol)
    return {false, fmt("round trip %.3g, parseval %.3g", worst_rt, worst_par)};
  return {true, fmt("100 functions: round trip %.2g, parseval %.2g, orthonormality %.2g", worst_rt,
                    worst_par, ortho)};
}

// 4. Exhaustive three-point uniformity of random degree-1 polynomials.
Outcome c_kwise() {
  int independent = 0, collinear = 0;
  for (std::uint64_t i = 0; i < 9; ++i)
    for (std::uint64_t j = i + 1; j < 9; ++j)
      for (std::uint64_t l = j + 1; l < 9; ++l) {
        const std::vector<std::vector<trit>> pts = {point_of_index(i, 2), point_of_index(j, 2),
                                                    point_of_index(l, 2)};
        const KwiseReport rep = kwise_check(2, 1, pts);
        if (affinely_independent(pts)) {
          ++independent;
          if (!(rep.uniform && rep.patterns == 27))
            return {false, fmt("triple (%llu,%llu,%llu) not uniform", (unsigned long long)i,
                               (unsigned long long)j, (unsigned long long)l)};
        } else {
          ++collinear;
          if (rep.uniform)
            return {false, fmt("collinear triple (%llu,%llu,%llu) reported uniform",
                               (unsigned long long)i, (unsigned long long)j,
                               (unsigned long long)l)};
        }
      }
  if (independent != 72 || collinear != 12)
    return {false, fmt("triple census %d+%d", independent, collinear)};
  return {true, "72 independent triples uniform (27 patterns x 1/27), 12 collinear ones not"};
}

// 5. Square-noise eigenvalue magnitudes and the full eigenrelation.
Outcome c_square_eig() {
  const SquareNoiseEigReport rep = verify_square_noise_eigenvalues(2, 1, kTol);
  if (!(rep.ok() && rep.relation_checked && rep.asserted_reps == 19 &&
        rep.max_magnitude_gap == 0.0))
    return {false, fmt("asserted %llu, magnitude gap %.3g, relation dev %.3g",
                       (unsigned long long)rep.asserted_reps, rep.max_magnitude_gap,
                       rep.max_relation_dev)};
  return {true, fmt("19 low-support magnitudes exact over 54 atoms; eigenrelation dev %.2g "
                    "across all 729 characters",
                    rep.max_relation_dev)};
}

// 6. Subspace-noise eigenvalue formula and lower bound.
Outcome c_subspace_eig() {
  const SubspaceNoiseEigReport rep = verify_subspace_noise_eigenvalues(2, 1, kTol);
  if (!rep.ok())
    return {false, fmt("formula gap %.3g, bound margin %.3g", rep.max_formula_gap,
                       rep.min_bound_margin)};
  return {true, fmt("rho = (3/2)p_acc - 1/2 exact, |rho| >= 1 - 2|alpha|/3 (margin %.2g)",
                    rep.min_bound_margin)};
}

// 7. Subgroup and ambient moments agree exactly; Monte Carlo confirms both.
Outcome c_moments() {
  CounterRng rng(0xacc7, 0);
  double worst = 0;
  SparseSpectrum first;
  for (int trial = 0; trial < 50; ++trial) {
    const SparseSpectrum spec = random_sparse_spectrum(4, 6, 2, 6, rng);
    if (trial == 0) first = spec;
    const MomentReport rep = moment_check(spec, 2);
    worst = std::max(worst, rep.gap);
    if (rep.gap >= kTol) return {false, fmt("trial %d gap %.3g", trial, rep.gap)};
  }
  const MomentReport exact = moment_check(first, 2);
  const McEstimate mc_sub = moment_mc_subgroup(first, 2, 100000, 2026);
  const McEstimate mc_amb = moment_mc_ambient(first, 2, 100000, 2026);
  const double zs = mc_sub.z_against(exact.subgroup_moment.real());
  const double za = mc_amb.z_against(exact.ambient_moment.real());
  if (zs > 3 || za > 3) return {false, fmt("monte carlo z %.2f / %.2f", zs, za)};
  return {true, fmt("50 spectra, worst gap %.2g over 1296-term sums; 1e5-sample z %.2f / %.2f",
                    worst, zs, za)};
}

// 8. Smoothing changes inner products by at most 2dt/3^d.
Outcome c_interpolation() {
  const FourierContext ctx(2, 2);
  CounterRng rng(0xacc8, 0);
  double worst_slack = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GroupFn a(ctx.n()), b(ctx.n());
    for (auto& z : a) z = rng.next_double();
    for (auto& z : b) z = rng.next_double();
    for (int t : {1, 2, 4}) {
      const InterpolationReport rep = noise_interpolation_check(ctx, 1, a, b, t, kTol);
      if (!rep.holds)
        return {false, fmt("trial %d t=%d: diff %.3g > bound %.3g", trial, t, rep.diff,
                           rep.bound)};
      worst_slack = std::max(worst_slack, rep.diff / rep.bound);
    }
  }
  return {true, fmt("50 pairs, t in {1,2,4}: |<A,TB> - <S^tA,TS^tB>| <= 2t/3 (worst ratio %.3g)",
                    worst_slack)};
}

// 9. Derandomized graph product: certificate, dictators, identity, tails, MIS.
Outcome c_graph() {
  const DerandGraph g(2, 1);
  const TrianglePartitionReport tri = triangle_partition_check(g);
  if (!(tri.ok() && tri.certified_bound == 243))
    return {false, fmt("triangle partition: %llu tiles", (unsigned long long)tri.triangles)};

  for (std::uint64_t x = 0; x < 9; ++x)
    for (trit a = 0; a < 3; ++a) {
      const VertexSubset s = dictator_set(g, x, a);
      if (!(s.count() == 243 && is_independent(g, s).independent &&
            is_maximal_independent(g, s)))
        return {false, fmt("dictator set (x=%llu, a=%d) broken", (unsigned long long)x, a)};
    }

  const FourierContext ctx(2, 2);
  const IndependenceIdentityReport ident =
      independence_identity(ctx, g, dictator_set(g, 0, 0), kTol);
  if (!(ident.holds && std::abs(ident.lhs + 1.0 / 9) < kTol &&
        std::abs(ident.rhs + 1.0 / 9) < kTol && std::abs(ident.mean_x + 0.5) < kTol))
    return {false, fmt("identity lhs %.6f rhs %.6f EX %.6f", ident.lhs, ident.rhs, ident.mean_x)};

  VertexSubset shrunk = dictator_set(g, 0, 0);
  for (int m = 1; m <= 10; ++m) {
    std::uint64_t v = 0;
    while (!shrunk.member[v]) ++v;
    shrunk.member[v] = 0;
    const ConcentrationReport con = fourier_concentration(ctx, g, shrunk, kTol);
    if (!con.tail_ok)
      return {false, fmt("tail bound fails with %d removed: %.3g > %.3g", m, con.tail, con.bound)};
  }

  const VertexSubset mis = exhaustive_mis(DerandGraph(1, 1));
  if (mis.count() != 9)
    return {false, fmt("exhaustive maximum independent set %llu", (unsigned long long)mis.count())};
  return {true, "243-triangle certificate; 27 dictator sets maximal at 243; identity -1/9 with "
                "EX = -1/2; tails hold for 1..10 removals; exact MIS 9 at one variable"};
}

// 10. Planted labelings color every enumerated cloud edge properly.
Outcome c_completeness() {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Labeling planted;
    const UGInstance inst = gen_planted(2, 4, 2, seed, &planted);
    const ColoringInstance c(inst, 1);
    std::vector<int> all(inst.num_v);
    for (int v = 0; v < inst.num_v; ++v) all[v] = v;
    ColoringReport rep;
    try {
      rep = completeness_color(c, planted, all);
    } catch (const std::exception& e) {
      return {false, fmt("seed %llu: %s", (unsigned long long)seed, e.what())};
    }
    if (!rep.ok())
      return {false, fmt("seed %llu: proper=%d identity=%d", (unsigned long long)seed,
                         (int)rep.proper, (int)rep.identity_ok)};
  }
  // Negative control: a corrupted constraint must be rejected, not colored.
  Labeling planted;
  UGInstance bad = gen_planted(2, 4, 2, 7, &planted);
  bad = gen_noisy(std::move(bad), planted, 1, 99);
  const ColoringInstance cbad(bad, 1);
  std::vector<int> all(bad.num_v);
  for (int v = 0; v < bad.num_v; ++v) all[v] = v;
  bool rejected = false;
  try {
    completeness_color(cbad, planted, all);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  if (!rejected) return {false, "corrupted instance was colored without complaint"};
  return {true, "10 planted instances proper on all 379080 pairs each; corrupted control "
                "rejected"};
}

// 11. Influence decoding recovers planted labels and satisfies the instance.
Outcome c_decoder() {
  const FourierContext ctx(2, 2);
  for (std::uint64_t seed : {7ull, 11ull, 23ull}) {
    Labeling planted;
    const UGInstance inst = gen_planted(2, 4, 2, seed, &planted);
    const ColoringInstance c(inst, 1);
    const ColoringSubset s = dictator_coloring_set(c, planted);
    if (!coloring_is_independent(c, s).independent)
      return {false, fmt("seed %llu: dictator set not independent", (unsigned long long)seed)};
    const DecodeReport rep = soundness_decode(c, ctx, s, 0.3, 0.1, 1, 100, seed);
    if (!rep.lists_bounded)
      return {false, fmt("seed %llu: list size over k/delta", (unsigned long long)seed)};
    for (const DecodeVertexInfo& vi : rep.verts) {
      bool found = false;
      for (const auto& lab : vi.list)
        if (lab == *planted.v[vi.v]) found = true;
      if (!found)
        return {false, fmt("seed %llu v=%d: planted label missing from candidate list",
                           (unsigned long long)seed, vi.v)};
    }
    if (!rep.claim_ok)
      return {false, fmt("seed %llu: %llu/%llu shared-neighbor triples consistent",
                         (unsigned long long)seed, (unsigned long long)rep.claim_consistent,
                         (unsigned long long)rep.claim_triples)};
    if (rep.mean_satisfied < 0.99)
      return {false, fmt("seed %llu: mean satisfied %.4f", (unsigned long long)seed,
                         rep.mean_satisfied)};
  }
  return {true, "3 planted instances: lists contain the planted labels, |L(v)| <= k/delta, "
                "all shared-neighbor triples consistent, decoded labelings satisfy 100%"};
}

// 12. Restricting the domain to higher degree shrinks the clamp-defect gap.
Outcome c_xi_gap() {
  CounterRng rng(0xacc12, 0);
  double sum1 = 0, sum2 = 0;
  for (int trial = 0; trial < 100; ++trial) {
    CounterRng sub = rng.fork(trial);
    const SparseSpectrum p = random_low_degree_real_spectrum(2, 1, sub);
    sum1 += xi_gap_probe(2, 1, p).gap;
    sum2 += xi_gap_probe(2, 2, p).gap;
  }
  const double avg1 = sum1 / 100, avg2 = sum2 / 100;
  if (!(avg2 <= avg1 + 1e-12))
    return {false, fmt("average gap rose: d=1 %.6g vs d=2 %.6g", avg1, avg2)};
  return {true, fmt("100 spectra over all 19683 functions: avg gap %.4g at d=1 vs %.4g at d=2",
                    avg1, avg2)};
}

}  // namespace

int main() {
  init_threads_from_env();

  struct Entry {
    int id;
    const char* what;
    Outcome (*fn)();
    double limit_s;  // 0 = no limit pinned
  };
  const std::vector<Entry> entries = {
      {1, "space duality", &c_duality, 10},
      {2, "minimum nonzero fraction", &c_schwartz_zippel, 10},
      {3, "transform round trip and orthonormality", &c_fourier_core, 0},
      {4, "three-point uniformity", &c_kwise, 0},
      {5, "square-noise eigenvalues", &c_square_eig, 60},
      {6, "subspace-noise eigenvalues", &c_subspace_eig, 0},
      {7, "moment agreement across the lift", &c_moments, 0},
      {8, "noise interpolation bound", &c_interpolation, 0},
      {9, "derandomized graph product", &c_graph, 300},
      {10, "reduction completeness", &c_completeness, 0},
      {11, "soundness decoding", &c_decoder, 0},
      {12, "clamp-defect gap shrinks with degree", &c_xi_gap, 0},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o = {false, fmt("unexpected exception: %s", ex.what())};
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::string detail = o.detail;
    if (ok && e.limit_s > 0 && sec >= e.limit_s) {
      ok = false;
      detail += fmt("; over the %.0f s budget", e.limit_s);
    }
    std::printf("criterion %2d [%s]: %s: %s (%.2f s)\n", e.id, ok ? "pass" : "FAIL", e.what,
                detail.c_str(), sec);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("acceptance: %d/12 passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
