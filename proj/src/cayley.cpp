#include "lowdeg/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace lowdeg {

namespace {

double ipow(double x, int t) {
  double out = 1.0;
  for (int i = 0; i < t; ++i) out *= x;
  return out;
}

NoiseDist collect_atoms(int r, int domain_d, std::uint64_t denom,
                        const std::map<std::uint64_t, std::pair<FnTable, std::uint64_t>>& acc) {
  NoiseDist out;
  out.r = r;
  out.domain_d = domain_d;
  out.denom = denom;
  out.atoms.reserve(acc.size());
  for (const auto& [idx, tc] : acc) out.atoms.push_back(NoiseAtom{idx, tc.first, tc.second});
  return out;
}

}  // namespace

bool NoiseDist::is_symmetric(const PolySpace& space) const {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& a : atoms) counts[a.idx] = a.count;
  for (const auto& a : atoms) {
    auto it = counts.find(space.negate_index(a.idx));
    if (it == counts.end() || it->second != a.count) return false;
  }
  return true;
}

bool NoiseDist::has_zero_atom() const {
  for (const auto& a : atoms)
    if (a.idx == 0) return true;
  return false;
}

NoiseDist make_base_noise() {
  const PolySpace space(0, 0);
  std::map<std::uint64_t, std::pair<FnTable, std::uint64_t>> acc;
  for (trit c = 1; c <= 2; ++c) acc[c] = {space.table_at(c), 1};
  return collect_atoms(0, 0, 2, acc);
}

NoiseDist make_square_noise(int r, int d) {
  if (d < 0 || 2 * d > 2 * r) throw std::invalid_argument("make_square_noise: d out of range");
  const PolySpace pspace(r, d);
  pspace.require_enumerable("make_square_noise");
  const PolySpace target(r, 2 * d);
  std::map<std::uint64_t, std::pair<FnTable, std::uint64_t>> acc;
  const std::uint64_t npoints = pow3(r);
  for (std::uint64_t pi = 0; pi < pspace.size(); ++pi) {
    const FnTable pt = pspace.table_at(pi);
    for (trit a = 1; a <= 2; ++a) {
      FnTable eta(r);
      for (std::uint64_t x = 0; x < npoints; ++x)
        eta[x] = gf3_mul(a, gf3_add(gf3_mul(pt[x], pt[x]), 1));
      std::uint64_t idx = 0;
      if (!target.contains_table(eta, &idx))
        throw std::logic_error("make_square_noise: atom escapes carrier space");
      if (idx == 0) throw std::logic_error("make_square_noise: zero atom (impossible over F_3)");
      auto it = acc.find(idx);
      if (it == acc.end())
        acc[idx] = {eta, 1};
      else
        ++it->second.second;
    }
  }
  return collect_atoms(r, 2 * d, 2 * pspace.size(), acc);
}

NoiseDist make_subspace_noise(int r, int d) {
  if (d < 0 || d > r) throw std::invalid_argument("make_subspace_noise: need 0 <= d <= r");
  const PolySpace target(r, 2 * d);
  const std::uint64_t npoints = pow3(r);
  std::map<std::uint64_t, std::pair<FnTable, std::uint64_t>> acc;
  std::uint64_t draws = 0;

  // All homogeneous parts (h_1, ..., h_d), ordered, linearly independent.
  std::vector<std::uint64_t> chosen;
  std::vector<char> in_span(npoints, 0);
  in_span[0] = 1;
  std::vector<std::uint64_t> span_list{0};

  // Values <h, x> for every h, x pair, h indexed like a point.
  std::vector<std::vector<trit>> hdot(npoints, std::vector<trit>(npoints));
  for (std::uint64_t h = 0; h < npoints; ++h) {
    const auto hv = point_of_index(h, r);
    for (std::uint64_t x = 0; x < npoints; ++x) {
      const auto xv = point_of_index(x, r);
      unsigned s = 0;
      for (int i = 0; i < r; ++i) s += hv[i] * xv[i];
      hdot[h][x] = static_cast<trit>(s % 3);
    }
  }

  auto emit = [&]() {
    // Constants for each form, then the global scale a.
    std::vector<trit> c(d, 0);
    for (;;) {
      FnTable q(r);
      for (std::uint64_t x = 0; x < npoints; ++x) {
        trit prod = 1;
        for (int i = 0; i < d; ++i) {
          const trit lv = gf3_add(c[i], hdot[chosen[i]][x]);
          // (l-1)(l-2) = l^2 + 2 pointwise
          prod = gf3_mul(prod, gf3_add(gf3_mul(lv, lv), 2));
        }
        q[x] = prod;
      }
      for (trit a = 1; a <= 2; ++a) {
        const FnTable eta = q.scaled(a);
        std::uint64_t idx = 0;
        if (!target.contains_table(eta, &idx))
          throw std::logic_error("make_subspace_noise: atom escapes carrier space");
        auto it = acc.find(idx);
        if (it == acc.end())
          acc[idx] = {eta, 1};
        else
          ++it->second.second;
        ++draws;
      }
      int i = 0;
      while (i < d && c[i] == 2) c[i++] = 0;
      if (i == d) break;
      ++c[i];
    }
  };

  auto dfs = [&](auto&& self, int level) -> void {
    if (level == d) {
      emit();
      return;
    }
    for (std::uint64_t h = 1; h < npoints; ++h) {
      if (in_span[h]) continue;
      chosen.push_back(h);
      // Extend the span by h and 2h.
      const std::size_t old_size = span_list.size();
      std::vector<std::uint64_t> added;
      for (std::size_t j = 0; j < old_size; ++j) {
        for (trit m = 1; m <= 2; ++m) {
          // span + m*h
          const auto hv = point_of_index(h, r);
          auto sv = point_of_index(span_list[j], r);
          for (int i = 0; i < r; ++i) sv[i] = gf3_add(sv[i], gf3_mul(m, hv[i]));
          const std::uint64_t ni = point_index(sv);
          if (!in_span[ni]) {
            in_span[ni] = 1;
            span_list.push_back(ni);
            added.push_back(ni);
          }
        }
      }
      self(self, level + 1);
      for (auto ni : added) in_span[ni] = 0;
      span_list.resize(old_size);
      chosen.pop_back();
    }
  };
  if (d == 0)
    emit();
  else
    dfs(dfs, 0);

  return collect_atoms(r, 2 * d, draws, acc);
}

FullNoise make_nowhere_zero_noise(int r) {
  if (r < 0 || r > 2) throw BudgetError("make_nowhere_zero_noise: need r <= 2");
  const int n = static_cast<int>(pow3(r));
  FullNoise out;
  out.r = r;
  out.atom_indices.reserve(1ull << n);
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    std::uint64_t idx = 0, base = 1;
    for (int x = 0; x < n; ++x) {
      idx += (1 + ((bits >> x) & 1)) * base;
      base *= 3;
    }
    out.atom_indices.push_back(idx);
  }
  std::sort(out.atom_indices.begin(), out.atom_indices.end());
  return out;
}

cplx EigCounts::value() const {
  const double dn = static_cast<double>(denom);
  return (static_cast<double>(n[0]) * omega_pow(0) + static_cast<double>(n[1]) * omega_pow(1) +
          static_cast<double>(n[2]) * omega_pow(2)) /
         dn;
}

double EigCounts::real_value() const {
  return (static_cast<double>(n[0]) - 0.5 * (static_cast<double>(n[1]) + static_cast<double>(n[2]))) /
         static_cast<double>(denom);
}

EigCounts eigenvalue_counts(const NoiseDist& dist, const FnTable& alpha) {
  EigCounts out;
  out.denom = dist.denom;
  for (const auto& atom : dist.atoms) out.n[inner_product(alpha, atom.table)] += atom.count;
  return out;
}

cplx noise_eigenvalue(const NoiseDist& dist, const FnTable& alpha) {
  return eigenvalue_counts(dist, alpha).value();
}

double nowhere_zero_eigenvalue(int support) { return ipow(-0.5, support); }

GroupFn apply_noise(const PolySpace& space, const NoiseDist& dist, const GroupFn& a, Exec exec) {
  if (a.size() != space.size()) throw std::invalid_argument("apply_noise: wrong length");
  GroupFn out(a.size());
  const double inv = 1.0 / static_cast<double>(dist.denom);
  parallel_for(exec, static_cast<std::int64_t>(a.size()), [&](std::int64_t f) {
    cplx acc = 0.0;
    for (const auto& atom : dist.atoms)
      acc += static_cast<double>(atom.count) *
             a[space.add_indices(static_cast<std::uint64_t>(f), atom.idx)];
    out[f] = acc * inv;
  });
  return out;
}

GroupFn apply_noise_power(const PolySpace& space, const NoiseDist& dist, GroupFn a, int t,
                          Exec exec) {
  for (int i = 0; i < t; ++i) a = apply_noise(space, dist, a, exec);
  return a;
}

std::vector<cplx> apply_full_noise(const FullDft& dft, const FullNoise& noise,
                                   const std::vector<cplx>& a, Exec exec) {
  if (a.size() != dft.N()) throw std::invalid_argument("apply_full_noise: wrong length");
  std::vector<cplx> out(a.size());
  const double inv = 1.0 / static_cast<double>(noise.atom_indices.size());
  parallel_for(exec, static_cast<std::int64_t>(a.size()), [&](std::int64_t f) {
    cplx acc = 0.0;
    for (auto idx : noise.atom_indices) acc += a[dft.add_indices(static_cast<std::uint64_t>(f), idx)];
    out[f] = acc * inv;
  });
  return out;
}

std::vector<double> real_eigenvalues(const FourierContext& ctx, const NoiseDist& dist) {
  std::vector<double> out(ctx.n());
  for (std::uint64_t i = 0; i < ctx.n(); ++i) {
    const EigCounts ec = eigenvalue_counts(dist, ctx.lambda().rep(i).beta);
    out[i] = ec.real_value();
  }
  return out;
}

Spectrum spectral_noise_power(const Spectrum& s, const std::vector<double>& eig, int t) {
  if (s.size() != eig.size()) throw std::invalid_argument("spectral_noise_power: length mismatch");
  Spectrum out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * ipow(eig[i], t);
  return out;
}

SquareNoiseEigReport verify_square_noise_eigenvalues(int r, int d, double tol, Exec exec) {
  SquareNoiseEigReport rep;
  rep.r = r;
  rep.d = d;
  rep.tol = tol;
  const CosetSystem cosets(r, 2 * d, exec);
  const NoiseDist dist = make_square_noise(r, d);
  const std::uint64_t threshold = pow3(d);  // assert when |alpha|^2 <= 3^d

  rep.magnitudes_ok = true;
  for (const auto& cr : cosets.reps()) {
    const cplx lam = noise_eigenvalue(dist, cr.beta);
    const double gap =
        std::abs(std::abs(lam) - std::abs(nowhere_zero_eigenvalue(cr.support)));
    if (static_cast<std::uint64_t>(cr.support) * static_cast<std::uint64_t>(cr.support) <=
        threshold) {
      ++rep.asserted_reps;
      rep.max_magnitude_gap = std::max(rep.max_magnitude_gap, gap);
      if (gap > tol) rep.magnitudes_ok = false;
    } else {
      rep.max_excess_beyond = std::max(rep.max_excess_beyond, gap);
    }
  }

  // Eigenrelation M chi = lambda chi for every character, via exact apply;
  // needs the dense character table, so only below the context budget.
  rep.relation_ok = true;
  if (PolySpace(r, 2 * d).dim() <= kMaxContextDim) {
    rep.relation_checked = true;
    const FourierContext ctx(r, 2 * d, exec);
    std::vector<double> dev(ctx.n());
    parallel_for(exec, static_cast<std::int64_t>(ctx.n()), [&](std::int64_t i) {
      const GroupFn chi = ctx.character_fn(static_cast<std::uint64_t>(i));
      const cplx lam = noise_eigenvalue(dist, ctx.lambda().rep(i).beta);
      const GroupFn mchi = apply_noise(ctx.domain(), dist, chi, Exec::Serial);
      double worst = 0.0;
      for (std::uint64_t g = 0; g < ctx.n(); ++g)
        worst = std::max(worst, std::abs(mchi[g] - lam * chi[g]));
      dev[i] = worst;
    });
    rep.max_relation_dev = *std::max_element(dev.begin(), dev.end());
    rep.relation_ok = rep.max_relation_dev <= tol;
  }
  return rep;
}

double square_noise_product_eigenvalue(int n_ones, int n_twos) {
  // (w^2-1)/3 and (w-1)/3 for w = exp(2 pi i / 3); conjugates of each other.
  const cplx f1 = (omega_pow(2) - 1.0) / 3.0;
  const cplx f2 = (omega_pow(1) - 1.0) / 3.0;
  cplx z = 1.0;
  for (int i = 0; i < n_ones; ++i) z *= f1;
  for (int i = 0; i < n_twos; ++i) z *= f2;
  return z.real();
}

SquareNoiseFormulaReport verify_square_noise_product_formula(int r, int d, double tol) {
  SquareNoiseFormulaReport rep;
  rep.r = r;
  rep.d = d;
  rep.k = static_cast<int>(pow3((d + 1) / 2));
  rep.tol = tol;
  const CosetSystem lambda(r, 2 * d, Exec::Serial);
  const NoiseDist dist = make_square_noise(r, d);
  rep.formula_ok = true;
  rep.decay_ok = true;
  for (std::uint64_t i = 0; i < lambda.num_cosets(); ++i) {
    const auto& cr = lambda.rep(i);
    if (cr.support > rep.k) continue;
    ++rep.checked;
    int n1 = 0, n2 = 0;
    for (std::uint64_t x = 0; x < cr.beta.size(); ++x) {
      if (cr.beta[x] == 1) ++n1;
      if (cr.beta[x] == 2) ++n2;
    }
    const cplx lam = noise_eigenvalue(dist, cr.beta);
    const double gap = std::abs(lam - cplx(square_noise_product_eigenvalue(n1, n2), 0.0));
    rep.max_formula_gap = std::max(rep.max_formula_gap, gap);
    if (gap > tol) rep.formula_ok = false;
    const double excess = std::abs(lam) - std::pow(3.0, -0.5 * cr.support);
    rep.max_decay_excess = std::max(rep.max_decay_excess, excess);
    if (excess > tol) rep.decay_ok = false;
  }
  return rep;
}

SubspaceNoiseEigReport verify_subspace_noise_eigenvalues(int r, int d, double tol, Exec exec) {
  SubspaceNoiseEigReport rep;
  rep.r = r;
  rep.d = d;
  rep.tol = tol;
  const CosetSystem cosets(r, 2 * d, exec);
  const NoiseDist dist = make_subspace_noise(r, d);
  rep.formula_ok = true;
  rep.lower_bound_ok = true;
  rep.min_bound_margin = 2.0;
  const double p3d = static_cast<double>(pow3(d));
  for (std::uint64_t i = 0; i < cosets.num_cosets(); ++i) {
    const auto& cr = cosets.rep(i);
    const EigCounts ec = eigenvalue_counts(dist, cr.beta);
    const cplx rho = ec.value();
    rep.max_imag = std::max(rep.max_imag, std::abs(rho.imag()));
    // Acceptance probability: fraction of draws with <alpha, eta> = 0.
    const double p_acc = static_cast<double>(ec.n[0]) / static_cast<double>(ec.denom);
    const double formula = 1.5 * p_acc - 0.5;
    rep.max_formula_gap = std::max(rep.max_formula_gap, std::abs(rho.real() - formula));
    if (std::abs(rho.real() - formula) > tol || std::abs(rho.imag()) > tol)
      rep.formula_ok = false;
    const double bound = 1.0 - 2.0 * static_cast<double>(cr.support) / p3d;
    const double margin = std::abs(rho) - bound;
    rep.min_bound_margin = std::min(rep.min_bound_margin, margin);
    if (margin < -tol) rep.lower_bound_ok = false;
  }
  return rep;
}

int SparseSpectrum::max_support() const {
  int t = 0;
  for (const auto& term : terms) t = std::max(t, term.beta.support());
  return t;
}

double SparseSpectrum::mass() const {
  double m = 0;
  for (const auto& term : terms) m += std::norm(term.coeff);
  return m;
}

cplx sparse_eval(const SparseSpectrum& s, const FnTable& f) {
  cplx acc = 0.0;
  for (const auto& term : s.terms) acc += term.coeff * omega_pow(inner_product(term.beta, f));
  return acc;
}

SparseSpectrum truncate_spectrum(const FourierContext& ctx, const Spectrum& s, int max_sup) {
  SparseSpectrum out;
  out.r = ctx.r();
  out.domain_d = ctx.d();
  for (std::uint64_t i = 0; i < ctx.n(); ++i) {
    const auto& cr = ctx.lambda().rep(i);
    if (cr.support <= max_sup) out.terms.push_back(SparseTerm{cr.beta, s[i]});
  }
  return out;
}

MomentReport moment_check(const SparseSpectrum& spec, int k) {
  MomentReport rep;
  rep.r = spec.r;
  rep.domain_d = spec.domain_d;
  rep.k = k;
  rep.t = spec.max_support();
  if (k < 1) throw std::invalid_argument("moment_check: k must be >= 1");
  if (spec.domain_d % 2 != 0)
    throw std::invalid_argument("moment_check: domain degree must be even (2d)");
  const int d = spec.domain_d / 2;
  if (d < 1 || 2ull * k * std::max(rep.t, 1) > pow3(d - 1))
    throw std::invalid_argument(
        "moment_check: requires 2kt <= 3^{d-1} (k=" + std::to_string(k) +
        ", t=" + std::to_string(rep.t) + ", d=" + std::to_string(d) + ")");
  const int dual_deg = 2 * spec.r - spec.domain_d - 1;
  const std::size_t s = spec.terms.size();
  if (s == 0) return rep;
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * k; ++i) total *= s;
  rep.tuples = total;

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    FnTable sum(spec.r);
    cplx prod = 1.0;
    for (int i = 0; i < k; ++i) {
      const auto& term = spec.terms[c % s];
      c /= s;
      sum.add_in_place(term.beta);
      prod *= term.coeff;
    }
    for (int i = 0; i < k; ++i) {
      const auto& term = spec.terms[c % s];
      c /= s;
      sum.sub_in_place(term.beta);
      prod *= std::conj(term.coeff);
    }
    if (sum.is_zero()) {
      rep.ambient_moment += prod;
      rep.subgroup_moment += prod;
    } else if (table_to_poly(sum).degree() <= dual_deg) {
      rep.subgroup_moment += prod;
    }
  }
  rep.gap = std::abs(rep.subgroup_moment - rep.ambient_moment);
  return rep;
}

double McEstimate::z_against(double exact) const {
  if (stderr_ <= 0) return mean == exact ? 0 : 1e18;
  return std::abs(mean - exact) / stderr_;
}

namespace {

McEstimate summarize(const std::vector<double>& vals) {
  McEstimate est;
  est.samples = vals.size();
  double acc = 0;
  for (double v : vals) acc += v;
  est.mean = acc / static_cast<double>(vals.size());
  double var = 0;
  for (double v : vals) var += (v - est.mean) * (v - est.mean);
  if (vals.size() > 1)
    est.stderr_ = std::sqrt(var / (static_cast<double>(vals.size()) *
                                   static_cast<double>(vals.size() - 1)));
  return est;
}

}  // namespace

McEstimate moment_mc_subgroup(const SparseSpectrum& spec, int k, std::uint64_t samples,
                              std::uint64_t seed, Exec exec) {
  const PolySpace space(spec.r, spec.domain_d);
  std::vector<double> vals(samples);
  parallel_for(exec, static_cast<std::int64_t>(samples), [&](std::int64_t i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    FnTable f(spec.r);
    for (int j = 0; j < space.dim(); ++j) {
      const trit c = static_cast<trit>(rng.next_trit());
      if (c != 0) f.add_in_place(space.basis_tables()[j].scaled(c));
    }
    vals[i] = ipow(std::norm(sparse_eval(spec, f)), k);
  });
  return summarize(vals);
}

McEstimate moment_mc_ambient(const SparseSpectrum& spec, int k, std::uint64_t samples,
                             std::uint64_t seed, Exec exec) {
  const std::uint64_t npoints = pow3(spec.r);
  std::vector<double> vals(samples);
  parallel_for(exec, static_cast<std::int64_t>(samples), [&](std::int64_t i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i) + (1ull << 40));
    FnTable f(spec.r);
    for (std::uint64_t x = 0; x < npoints; ++x) f[x] = static_cast<trit>(rng.next_trit());
    vals[i] = ipow(std::norm(sparse_eval(spec, f)), k);
  });
  return summarize(vals);
}

HyperReport hypercontractivity_ratio(const SparseSpectrum& spec) {
  HyperReport rep;
  rep.t_max = spec.max_support();
  const int d = spec.domain_d / 2;
  if (spec.domain_d % 2 != 0 || d < 1 || 4ull * std::max(rep.t_max, 1) > pow3(d - 1))
    throw std::invalid_argument("hypercontractivity_ratio: requires 4t <= 3^{d-1}");
  const MomentReport m4 = moment_check(spec, 2);
  rep.equality_gap = m4.gap;
  rep.norm2 = std::sqrt(spec.mass());
  rep.norm4 = std::pow(std::abs(m4.subgroup_moment), 0.25);
  rep.ratio = rep.norm2 > 0 ? rep.norm4 / rep.norm2 : 0.0;
  rep.c_per_level = rep.t_max > 0 ? std::pow(rep.ratio, 1.0 / rep.t_max) : rep.ratio;
  return rep;
}

InterpolationReport noise_interpolation_check(const FourierContext& ctx, int d, const GroupFn& a,
                                              const GroupFn& b, int t, double tol, Exec exec) {
  if (ctx.d() != 2 * d)
    throw std::invalid_argument("noise_interpolation_check: context must sit on P_{r,2d}");
  InterpolationReport rep;
  rep.r = ctx.r();
  rep.d = d;
  rep.t = t;
  const NoiseDist square = make_square_noise(ctx.r(), d);
  const NoiseDist subspace = make_subspace_noise(ctx.r(), d);
  auto ip = [&](const GroupFn& x, const GroupFn& y) {
    cplx acc = 0.0;
    for (std::uint64_t g = 0; g < ctx.n(); ++g) acc += x[g] * std::conj(y[g]);
    return (acc / static_cast<double>(ctx.n())).real();
  };
  rep.ip_plain = ip(a, apply_noise(ctx.domain(), square, b, exec));
  const GroupFn as = apply_noise_power(ctx.domain(), subspace, a, t, exec);
  const GroupFn bs = apply_noise_power(ctx.domain(), subspace, b, t, exec);
  rep.ip_smoothed = ip(as, apply_noise(ctx.domain(), square, bs, exec));
  rep.diff = std::abs(rep.ip_plain - rep.ip_smoothed);
  rep.bound = 2.0 * d * t / static_cast<double>(pow3(d));
  rep.holds = rep.diff <= rep.bound + tol;
  return rep;
}

double xi_fn(double x) {
  const double m = std::max({-x, x - 1.0, 0.0});
  return m * m;
}

namespace {

// Dense table of the lift on F_r via the inverse radix-3 transform.
std::vector<cplx> lift_table(const FullDft& dft, const SparseSpectrum& spec, Exec exec) {
  std::vector<cplx> freq(dft.N(), 0.0);
  for (const auto& term : spec.terms) {
    std::uint64_t idx = 0, base = 1;
    for (int x = 0; x < dft.points(); ++x) {
      idx += term.beta[x] * base;
      base *= 3;
    }
    freq[idx] += term.coeff;
  }
  dft.inverse(freq, exec);
  return freq;
}

}  // namespace

PipelineReport rounding_pipeline(int r, int d, const GroupFn& a, const GroupFn& b, double eps,
                                  int k, Exec exec) {
  PipelineReport rep;
  rep.r = r;
  rep.d = d;
  rep.k = k;
  rep.eps = eps;
  if (eps <= 0 || eps >= 10) throw std::invalid_argument("rounding_pipeline: eps out of range");
  if (k < 1) throw std::invalid_argument("rounding_pipeline: k must be >= 1");
  rep.t = static_cast<int>(
      std::ceil(static_cast<double>(pow3(d)) * std::log(10.0 / eps) / (2.0 * k)));

  const FourierContext ctx(r, 2 * d, exec);
  const FullDft dft(r);
  const NoiseDist square = make_square_noise(r, d);
  const NoiseDist subspace = make_subspace_noise(r, d);
  const std::vector<double> rho = real_eigenvalues(ctx, subspace);

  const Spectrum sa = ctx.transform(a, exec);
  const Spectrum sb = ctx.transform(b, exec);

  struct Half {
    SparseSpectrum trunc;
    std::vector<double> rounded;        // clamp(Re lift) on F_r
    std::vector<cplx> rounded_freq;     // its full spectrum
    double e_plain = 0, e_round = 0;
    double xi_subgroup = 0, xi_ambient = 0;
  };

  auto run_half = [&](const GroupFn& fn, const Spectrum& s) {
    Half h;
    const Spectrum smoothed = spectral_noise_power(s, rho, rep.t);
    h.trunc = truncate_spectrum(ctx, smoothed, k);

    // Subgroup-side xi of the truncated smoothing.
    {
      double acc = 0;
      for (std::uint64_t g = 0; g < ctx.n(); ++g)
        acc += xi_fn(sparse_eval(h.trunc, ctx.elem_table(g)).real());
      h.xi_subgroup = acc / static_cast<double>(ctx.n());
    }

    const std::vector<cplx> lifted = lift_table(dft, h.trunc, exec);
    h.rounded.resize(dft.N());
    double acc_xi = 0;
    for (std::uint64_t f = 0; f < dft.N(); ++f) {
      const double v = lifted[f].real();
      acc_xi += xi_fn(v);
      h.rounded[f] = std::min(1.0, std::max(0.0, v));
    }
    h.xi_ambient = acc_xi / static_cast<double>(dft.N());

    double acc_e = 0;
    for (std::uint64_t g = 0; g < ctx.n(); ++g) acc_e += fn[g].real();
    h.e_plain = acc_e / static_cast<double>(ctx.n());
    double acc_r = 0;
    for (std::uint64_t f = 0; f < dft.N(); ++f) acc_r += h.rounded[f];
    h.e_round = acc_r / static_cast<double>(dft.N());

    h.rounded_freq.assign(h.rounded.begin(), h.rounded.end());
    dft.forward(h.rounded_freq, exec);
    return h;
  };

  Half ha = run_half(a, sa);
  Half hb = run_half(b, sb);
  rep.e_plain_a = ha.e_plain;
  rep.e_round_a = ha.e_round;
  rep.e_plain_b = hb.e_plain;
  rep.e_round_b = hb.e_round;
  rep.xi_subgroup_a = ha.xi_subgroup;
  rep.xi_ambient_a = ha.xi_ambient;
  rep.xi_subgroup_b = hb.xi_subgroup;
  rep.xi_ambient_b = hb.xi_ambient;
  rep.diff_e = std::max(std::abs(ha.e_plain - ha.e_round), std::abs(hb.e_plain - hb.e_round));
  rep.c1 = rep.diff_e <= eps;

  rep.max_inf_increase = 0;
  const std::uint64_t npoints = pow3(r);
  for (int kp = 1; kp <= k; ++kp) {
    for (std::uint64_t x = 0; x < npoints; ++x) {
      const double before_a = ctx.influence(sa, x, kp);
      const double after_a = dft.influence(ha.rounded_freq, static_cast<int>(x), kp);
      const double before_b = ctx.influence(sb, x, kp);
      const double after_b = dft.influence(hb.rounded_freq, static_cast<int>(x), kp);
      rep.max_inf_increase =
          std::max({rep.max_inf_increase, after_a - before_a, after_b - before_b});
    }
  }
  rep.c2 = rep.max_inf_increase <= eps;

  {
    cplx acc = 0.0;
    const GroupFn tb = apply_noise(ctx.domain(), square, b, exec);
    for (std::uint64_t g = 0; g < ctx.n(); ++g) acc += a[g] * std::conj(tb[g]);
    rep.ip_plain = (acc / static_cast<double>(ctx.n())).real();
  }
  {
    // Spectral pairing with the nowhere-zero noise on F_r.
    cplx acc = 0.0;
    for (std::uint64_t beta = 0; beta < dft.N(); ++beta)
      acc += ha.rounded_freq[beta] * std::conj(hb.rounded_freq[beta]) *
             nowhere_zero_eigenvalue(dft.weight(beta));
    rep.ip_round = acc.real();
  }
  rep.diff_ip = std::abs(rep.ip_plain - rep.ip_round);
  rep.c3 = rep.diff_ip <= eps;
  return rep;
}

XiGapReport xi_gap_probe(int r, int d, const SparseSpectrum& p, Exec exec) {
  XiGapReport rep;
  rep.r = r;
  rep.d = d;
  rep.k = p.max_support();
  const FullDft dft(r);
  const std::vector<cplx> table = lift_table(dft, p, exec);
  double acc = 0;
  for (std::uint64_t f = 0; f < dft.N(); ++f) acc += xi_fn(table[f].real());
  rep.ambient_mean = acc / static_cast<double>(dft.N());

  const PolySpace space(r, d);
  space.require_enumerable("xi_gap_probe");
  double accs = 0;
  for (std::uint64_t g = 0; g < space.size(); ++g)
    accs += xi_fn(sparse_eval(p, space.table_at(g)).real());
  rep.subgroup_mean = accs / static_cast<double>(space.size());
  rep.gap = std::abs(rep.ambient_mean - rep.subgroup_mean);
  return rep;
}

SparseSpectrum random_sparse_spectrum(int r, int domain_d, int max_support, int nterms,
                                      CounterRng& rng) {
  SparseSpectrum out;
  out.r = r;
  out.domain_d = domain_d;
  const std::uint64_t npoints = pow3(r);
  std::vector<FnTable> seen;
  while (static_cast<int>(out.terms.size()) < nterms) {
    FnTable beta(r);
    const int sup = 1 + static_cast<int>(rng.next_below(max_support));
    for (int s = 0; s < sup; ++s) {
      // Collisions just lower the support; that keeps the bound valid.
      beta[rng.next_below(npoints)] = static_cast<trit>(1 + rng.next_below(2));
    }
    bool dup = false;
    for (const auto& b : seen) dup = dup || b == beta;
    if (dup) continue;
    seen.push_back(beta);
    out.terms.push_back(SparseTerm{beta, cplx(rng.next_gaussian(), rng.next_gaussian())});
  }
  return out;
}

SparseSpectrum random_low_degree_real_spectrum(int r, int k, CounterRng& rng) {
  const FullDft dft(r);
  SparseSpectrum out;
  out.r = r;
  out.domain_d = 2 * r;
  std::map<std::uint64_t, cplx> coeffs;
  for (std::uint64_t beta = 0; beta < dft.N(); ++beta) {
    if (dft.weight(beta) > k) continue;
    const std::uint64_t neg = dft.negate_index(beta);
    if (beta == neg) {
      coeffs[beta] = cplx(rng.next_gaussian(), 0.0);
    } else if (beta < neg) {
      const cplx z(rng.next_gaussian(), rng.next_gaussian());
      coeffs[beta] = z;
      coeffs[neg] = std::conj(z);
    }
  }
  double mass = 0;
  for (const auto& [idx, c] : coeffs) mass += std::norm(c);
  const double scale = mass > 0 ? 1.0 / std::sqrt(mass) : 1.0;
  for (const auto& [idx, c] : coeffs) {
    FnTable beta(r);
    std::uint64_t v = idx;
    for (int x = 0; x < dft.points(); ++x) {
      beta[x] = static_cast<trit>(v % 3);
      v /= 3;
    }
    out.terms.push_back(SparseTerm{std::move(beta), c * scale});
  }
  return out;
}

}  // namespace lowdeg
