#include "lowdeg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lowdeg/cayley.hpp"
#include "lowdeg/fn_table.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

namespace lowdeg {

namespace {

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

// Accumulates report lines; the pass/fail verdict line is appended last so
// the text always ends the same way regardless of suite.
struct Report {
  std::string name;
  bool ok = true;
  std::string body;

  explicit Report(std::string n) : name(std::move(n)) {}

  void line(const std::string& s) {
    body += "  ";
    body += s;
    body += '\n';
  }
  void check(bool cond, const std::string& s) {
    ok = ok && cond;
    line(fmt("[%s] %s", cond ? "ok" : "FAIL", s.c_str()));
  }
  SuiteResult finish() const {
    SuiteResult res;
    res.name = name;
    res.ok = ok;
    res.text = "suite " + name + "\n" + body + fmt("  result: %s\n", ok ? "pass" : "fail");
    return res;
  }
};

GroupFn random_complex_fn(std::size_t n, CounterRng& rng) {
  GroupFn a(n);
  for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
  return a;
}

GroupFn random_unit_box_fn(std::size_t n, CounterRng& rng) {
  GroupFn a(n);
  for (auto& v : a) v = cplx(rng.next_double(), 0.0);
  return a;
}

}  // namespace

SuiteResult suite_duality(const SuiteParams& p) {
  Report rep("duality");
  rep.line(fmt("annihilator pairing of degree spaces, r=%d, d=0..%d", p.r, 2 * p.r - 1));
  for (int d = 0; d < 2 * p.r; ++d) {
    const DualityReport v = verify_dual(p.r, d);
    rep.check(v.ok(), fmt("d=%d dim=%d dual_dim=%d pairs=%llu complement=%d orthogonal=%d", d,
                          v.dim_primal, v.dim_dual, (unsigned long long)v.pairs_checked,
                          (int)v.dims_complement, (int)v.all_pairs_orthogonal));
  }
  return rep.finish();
}

SuiteResult suite_schwartz_zippel(const SuiteParams& p) {
  Report rep("schwartz-zippel");
  rep.line(fmt("minimum nonzero fraction over P_{%d,d}, exhaustive", p.r));
  int ran = 0;
  for (int d = 0; d <= 2 * p.r; ++d) {
    try {
      const SchwartzZippelReport v = schwartz_zippel_min(p.r, d);
      ++ran;
      rep.check(v.bound_holds,
                fmt("d=%d min_fraction=%lld/%lld%s argmin=%llu", d, (long long)v.min_fraction.num,
                    (long long)v.min_fraction.den, v.bound_tight ? " (tight)" : "",
                    (unsigned long long)v.argmin_index));
    } catch (const BudgetError&) {
      rep.line(fmt("d=%d skipped: space too large to enumerate", d));
    }
  }
  rep.check(ran > 0, fmt("degrees enumerated: %d", ran));
  return rep.finish();
}

SuiteResult suite_kwise(const SuiteParams& p) {
  Report rep("kwise");
  const int n_points = (int)pow3(p.r);
  // Affine independence caps usable tuples at r+1 points.
  int k_guar = 1;
  for (int i = 0; i < (p.d + 1) / 2; ++i) k_guar *= 3;
  const int kk = std::min(k_guar, p.r + 1);
  rep.line(fmt("restriction uniformity on P_{%d,%d}: k=%d, tuples of %d affinely independent "
               "points",
               p.r, p.d, k_guar, kk));

  // Enumerate all kk-subsets when that is cheap, otherwise sample.
  std::uint64_t combos = 1;
  for (int i = 0; i < kk; ++i) combos = combos * (std::uint64_t)(n_points - i) / (i + 1);
  const bool enumerate = combos <= 512 && PolySpace(p.r, p.d).enumerable();

  std::uint64_t checked = 0, dependent = 0, bad = 0;
  auto run_tuple = [&](const std::vector<std::vector<trit>>& pts) {
    if (!affinely_independent(pts)) {
      ++dependent;
      return;
    }
    const KwiseReport kr = kwise_check(p.r, p.d, pts);
    ++checked;
    if (!kr.uniform) ++bad;
  };

  if (enumerate) {
    std::vector<int> idx(kk);
    for (int i = 0; i < kk; ++i) idx[i] = i;
    while (true) {
      std::vector<std::vector<trit>> pts;
      for (int i : idx) pts.push_back(point_of_index(i, p.r));
      run_tuple(pts);
      int pos = kk - 1;
      while (pos >= 0 && idx[pos] == n_points - kk + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < kk; ++i) idx[i] = idx[i - 1] + 1;
    }
    rep.line(fmt("enumerated %llu tuples (%llu affinely dependent, skipped)",
                 (unsigned long long)combos, (unsigned long long)dependent));
  } else {
    const std::uint64_t want = p.samples ? p.samples : 48;
    CounterRng rng(p.seed, 0x6b776973);
    while (checked < want) {
      std::vector<std::vector<trit>> pts;
      std::vector<char> used(n_points, 0);
      for (int i = 0; i < kk; ++i) {
        std::uint64_t pi;
        do pi = rng.next_below(n_points);
        while (used[pi]);
        used[pi] = 1;
        pts.push_back(point_of_index(pi, p.r));
      }
      run_tuple(pts);
    }
    rep.line(fmt("sampled %llu affinely independent tuples", (unsigned long long)checked));
  }
  rep.check(checked > 0 && bad == 0,
            fmt("uniform restrictions: %llu/%llu", (unsigned long long)(checked - bad),
                (unsigned long long)checked));
  return rep.finish();
}

SuiteResult suite_fourier_core(const SuiteParams& p) {
  Report rep("fourier");
  const FourierContext ctx(p.r, p.d, p.exec);
  const std::uint64_t samples = p.samples ? p.samples : 100;
  rep.line(fmt("transform on P_{%d,%d}: n=%llu, %llu random functions", p.r, p.d,
               (unsigned long long)ctx.n(), (unsigned long long)samples));

  const double ortho = ctx.orthonormality_max_dev(p.exec);
  rep.check(ortho <= p.tol, fmt("character orthonormality max dev = %.3g", ortho));

  double max_rt = 0, max_pv = 0;
  CounterRng rng(p.seed, 0x666f7572);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const GroupFn a = random_complex_fn(ctx.n(), rng);
    const Spectrum s = ctx.transform(a, p.exec);
    const GroupFn back = ctx.inverse(s, p.exec);
    double rt = 0;
    for (std::size_t j = 0; j < a.size(); ++j) rt = std::max(rt, std::abs(back[j] - a[j]));
    max_rt = std::max(max_rt, rt);
    max_pv = std::max(max_pv, ctx.parseval_gap(a, s));
  }
  rep.check(max_rt <= p.tol, fmt("round trip max dev = %.3g", max_rt));
  rep.check(max_pv <= p.tol, fmt("energy identity max gap = %.3g", max_pv));
  return rep.finish();
}

SuiteResult suite_eig_square(const SuiteParams& p) {
  Report rep("eig-square");
  rep.line(fmt("squared-polynomial noise on P_{%d,%d}", p.r, p.d));
  const SquareNoiseEigReport v = verify_square_noise_eigenvalues(p.r, p.d, p.tol, p.exec);
  rep.check(v.magnitudes_ok,
            fmt("|eig| = (1/2)^w for asserted %llu frequencies, max gap = %.3g",
                (unsigned long long)v.asserted_reps, v.max_magnitude_gap));
  if (v.relation_checked)
    rep.check(v.relation_ok, fmt("eigenvector relation max dev = %.3g", v.max_relation_dev));
  else
    rep.line("eigenvector relation skipped: dense characters above the context budget");
  rep.line(fmt("largest |eig| excess beyond asserted range = %.3g", v.max_excess_beyond));
  const SquareNoiseFormulaReport f = verify_square_noise_product_formula(p.r, p.d, p.tol);
  rep.check(f.formula_ok, fmt("per-point product formula on %llu frequencies of weight <= %d, "
                              "max gap = %.3g",
                              (unsigned long long)f.checked, f.k, f.max_formula_gap));
  rep.check(f.decay_ok, fmt("decay |eig| <= 3^{-w/2}, max excess = %.3g", f.max_decay_excess));
  return rep.finish();
}

SuiteResult suite_eig_subspace(const SuiteParams& p) {
  Report rep("eig-subspace");
  rep.line(fmt("codimension-%d subspace noise on P_{%d,%d}", p.d, p.r, p.d));
  const SubspaceNoiseEigReport v = verify_subspace_noise_eigenvalues(p.r, p.d, p.tol);
  rep.check(v.formula_ok, fmt("eig = (3 p_acc - 1)/2 exactly, max gap = %.3g", v.max_formula_gap));
  rep.check(v.lower_bound_ok,
            fmt("|eig| >= 1 - 2w/3^d, min margin = %.3g", v.min_bound_margin));
  rep.check(v.max_imag <= p.tol, fmt("imaginary part max = %.3g", v.max_imag));
  return rep.finish();
}

SuiteResult suite_graph(const SuiteParams& p) {
  Report rep("graph");
  const DerandGraph g(p.r, p.d);
  const std::uint64_t n = g.num_vertices();
  rep.line(fmt("product graph on P_{%d,%d}: %llu vertices, edge denominator %llu", p.r, 2 * p.d,
               (unsigned long long)n, (unsigned long long)g.denom()));

  const TrianglePartitionReport tri = triangle_partition_check(g);
  rep.check(tri.ok(), fmt("triangle partition: %llu triangles, independence number <= %llu",
                          (unsigned long long)tri.triangles,
                          (unsigned long long)tri.certified_bound));

  const int n_points = (int)pow3(p.r);
  std::uint64_t dict_ok = 0;
  for (int x = 0; x < n_points; ++x)
    for (trit a = 0; a < 3; ++a) {
      const VertexSubset s = dictator_set(g, x, a);
      if (s.count() == n / 3 && is_independent(g, s, p.exec).independent &&
          is_maximal_independent(g, s, p.exec))
        ++dict_ok;
    }
  rep.check(dict_ok == (std::uint64_t)(3 * n_points),
            fmt("point-evaluation sets independent, maximal, size n/3: %llu/%d",
                (unsigned long long)dict_ok, 3 * n_points));

  const VertexSubset greedy = greedy_independent_set(g, p.seed);
  rep.check(is_independent(g, greedy, p.exec).independent,
            fmt("greedy set (seed %llu) independent, density %.6g",
                (unsigned long long)p.seed, greedy.delta()));

  const int dim = PolySpace(p.r, 2 * p.d).dim();
  if (dim <= kMaxContextDim) {
    const FourierContext ctx(p.r, 2 * p.d, p.exec);
    const VertexSubset dict = dictator_set(g, 0, 0);
    const IndependenceIdentityReport id1 = independence_identity(ctx, g, dict, p.tol, p.exec);
    rep.check(id1.holds, fmt("spectral identity on point set: lhs=%.6g rhs=%.6g EX=%.6g",
                             id1.lhs, id1.rhs, id1.mean_x));
    const IndependenceIdentityReport id2 = independence_identity(ctx, g, greedy, p.tol, p.exec);
    rep.check(id2.holds, fmt("spectral identity on greedy set: gap=%.3g EX=%.6g", id2.gap,
                             id2.mean_x));

    // Knock m vertices out of a maximum set; the level-1 spectral tail must
    // stay below twice the density deficit.
    VertexSubset s = dict;
    bool tails = true;
    double worst = 0;
    for (int m = 1; m <= 10; ++m) {
      for (std::uint64_t v = 0; v < n; ++v)
        if (s.member[v]) {
          s.member[v] = 0;
          break;
        }
      const ConcentrationReport c = fourier_concentration(ctx, g, s, p.tol, p.exec);
      tails = tails && c.tail_ok;
      if (c.bound > 0) worst = std::max(worst, c.tail / c.bound);
    }
    rep.check(tails, fmt("tail bound for 1..10 removed vertices, worst tail/bound = %.3g", worst));

    if (dim <= 7) {
      const VertexSubset mis = exhaustive_mis(g);
      rep.check(mis.count() == tri.certified_bound,
                fmt("exact maximum independent set = %llu", (unsigned long long)mis.count()));
    }
  } else {
    rep.line("spectral checks skipped: transform context above dimension budget");
  }
  return rep.finish();
}

SuiteResult suite_moments(const SuiteParams& p) {
  Report rep("moments");
  const int nterms = 6;
  const std::uint64_t n_spectra = p.samples ? p.samples : 25;
  rep.line(fmt("moment agreement on P_{%d,%d}: k=%d, support<=%d, %llu random %d-term spectra",
               p.r, 2 * p.d, p.k, p.t, (unsigned long long)n_spectra, nterms));

  CounterRng rng(p.seed, 0x6d6f6d65);
  double max_gap = 0;
  bool all_eq = true;
  SparseSpectrum first{};
  for (std::uint64_t i = 0; i < n_spectra; ++i) {
    const SparseSpectrum spec = random_sparse_spectrum(p.r, 2 * p.d, p.t, nterms, rng);
    if (i == 0) first = spec;
    const MomentReport m = moment_check(spec, p.k);
    max_gap = std::max(max_gap, m.gap);
    all_eq = all_eq && m.equal(p.tol);
  }
  rep.check(all_eq, fmt("subgroup and ambient 2k-th moments equal, max gap = %.3g", max_gap));

  const MomentReport m0 = moment_check(first, p.k);
  rep.line(fmt("first spectrum: moment = %.9g over %llu tuples", m0.subgroup_moment.real(),
               (unsigned long long)m0.tuples));
  const std::uint64_t mc = 20000;
  const McEstimate sub = moment_mc_subgroup(first, p.k, mc, p.seed, p.exec);
  const McEstimate amb = moment_mc_ambient(first, p.k, mc, p.seed, p.exec);
  const double zs = sub.z_against(m0.subgroup_moment.real());
  const double za = amb.z_against(m0.ambient_moment.real());
  rep.check(zs <= 5.0, fmt("monte carlo over the subgroup: mean=%.6g z=%.2f", sub.mean, zs));
  rep.check(za <= 5.0, fmt("monte carlo over all functions: mean=%.6g z=%.2f", amb.mean, za));

  const HyperReport h = hypercontractivity_ratio(first);
  rep.check(h.ratio >= 1.0 - p.tol,
            fmt("norm ratio ||A||_4/||A||_2 = %.6g (per level %.6g)", h.ratio, h.c_per_level));
  return rep.finish();
}

SuiteResult suite_interpolation(const SuiteParams& p) {
  Report rep("interpolation");
  const FourierContext ctx(p.r, 2 * p.d, p.exec);
  const std::uint64_t pairs = p.samples ? p.samples : 20;
  rep.line(fmt("smoothing drift of pair energies on P_{%d,%d}: %llu random [0,1] pairs", p.r,
               2 * p.d, (unsigned long long)pairs));
  CounterRng rng(p.seed, 0x696e7470);
  const int ts[] = {1, 2, 4};
  for (int t : ts) {
    double max_diff = 0, worst_ratio = 0;
    bool holds = true;
    CounterRng local = rng.fork(t);
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const GroupFn a = random_unit_box_fn(ctx.n(), local);
      const GroupFn b = random_unit_box_fn(ctx.n(), local);
      const InterpolationReport v = noise_interpolation_check(ctx, p.d, a, b, t, p.tol, p.exec);
      holds = holds && v.holds;
      max_diff = std::max(max_diff, v.diff);
      if (v.bound > 0) worst_ratio = std::max(worst_ratio, v.diff / v.bound);
    }
    rep.check(holds, fmt("t=%d |drift| <= 2dt/3^d, max drift = %.3g (%.3g of bound)", t,
                         max_diff, worst_ratio));
  }
  return rep.finish();
}

SuiteResult suite_pipeline(const SuiteParams& p) {
  Report rep("pipeline");
  const std::uint64_t runs = p.samples ? p.samples : 5;
  const std::uint64_t n = PolySpace(p.r, 2 * p.d).size();
  rep.line(fmt("smooth/truncate/lift/round pipeline at r=%d d=%d k=%d eps=%.3g, %llu runs", p.r,
               p.d, p.k, p.eps, (unsigned long long)runs));
  CounterRng rng(p.seed, 0x70697065);
  bool all = true;
  double w_e = 0, w_inf = 0, w_ip = 0;
  int t_used = 0;
  for (std::uint64_t i = 0; i < runs; ++i) {
    const GroupFn a = random_unit_box_fn(n, rng);
    const GroupFn b = random_unit_box_fn(n, rng);
    const PipelineReport v = rounding_pipeline(p.r, p.d, a, b, p.eps, p.k, p.exec);
    t_used = v.t;
    all = all && v.c1 && v.c2 && v.c3;
    w_e = std::max(w_e, v.diff_e);
    w_inf = std::max(w_inf, v.max_inf_increase);
    w_ip = std::max(w_ip, v.diff_ip);
  }
  rep.line(fmt("smoothing exponent t = %d", t_used));
  rep.check(all, fmt("expectation drift %.3g, influence increase %.3g, pair-energy drift %.3g, "
                     "all <= eps",
                     w_e, w_inf, w_ip));
  return rep.finish();
}

SuiteResult suite_xi(const SuiteParams& p) {
  Report rep("xi");
  const std::uint64_t trials = p.samples ? p.samples : 20;
  rep.line(fmt("interval-distance averages for weight<=%d spectra, r=%d, %llu trials", p.k, p.r,
               (unsigned long long)trials));
  CounterRng rng(p.seed, 0x78696761);
  double avg1 = 0, avg2 = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const SparseSpectrum spec = random_low_degree_real_spectrum(p.r, p.k, rng);
    const XiGapReport g1 = xi_gap_probe(p.r, 1, spec, p.exec);
    const XiGapReport g2 = xi_gap_probe(p.r, 2, spec, p.exec);
    avg1 += g1.gap;
    avg2 += g2.gap;
  }
  avg1 /= trials;
  avg2 /= trials;
  rep.line(fmt("mean |ambient - subgroup| gap: d=1 %.6g, d=2 %.6g", avg1, avg2));
  rep.check(avg2 <= avg1 + p.tol, "richer degree-2 subgroup tracks the ambient average better");
  return rep.finish();
}

std::vector<SuiteResult> suite_all(const SuiteParams& p) {
  std::vector<SuiteResult> out;
  out.push_back(suite_duality(p));
  out.push_back(suite_schwartz_zippel(p));
  out.push_back(suite_kwise(p));
  out.push_back(suite_fourier_core(p));
  out.push_back(suite_eig_square(p));
  out.push_back(suite_eig_subspace(p));
  out.push_back(suite_graph(p));
  {
    // Moment agreement needs 2kt <= 3^{d-1}; run it at its own scale.
    SuiteParams q = p;
    q.r = 4;
    q.d = 3;
    q.k = 2;
    q.t = 2;
    out.push_back(suite_moments(q));
  }
  out.push_back(suite_interpolation(p));
  out.push_back(suite_pipeline(p));
  {
    SuiteParams q = p;
    q.k = 1;
    out.push_back(suite_xi(q));
  }
  return out;
}

std::string render_results(const std::vector<SuiteResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += r.text;
    if (r.ok) ++passed;
  }
  out += fmt("suites passed: %zu/%zu\n", passed, results.size());
  return out;
}

}  // namespace lowdeg
