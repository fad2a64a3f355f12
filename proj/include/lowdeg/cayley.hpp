#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lowdeg/fourier.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

namespace lowdeg {

struct NoiseAtom {
  std::uint64_t idx = 0;  // coefficient index in the carrier space
  FnTable table;
  std::uint64_t count = 0;
};

// Finitely supported distribution on P_{r, domain_d} with exact integer
// weights; the averaging operator (M A)(f) = E_eta A(f + eta) it induces has
// every character as an eigenvector.
struct NoiseDist {
  int r = 0;
  int domain_d = 0;
  std::uint64_t denom = 1;
  std::vector<NoiseAtom> atoms;

  // eta and -eta carry equal weight; guarantees real eigenvalues.
  bool is_symmetric(const PolySpace& space) const;
  bool has_zero_atom() const;
};

// Uniform on {1, 2} inside P_{0,0} ~ F_3: the basic 1/2-noise on a single
// trit.  Its nontrivial eigenvalues are both -1/2.
NoiseDist make_base_noise();

// eta = a * (p^2 + 1) with p uniform in P_{r,d} and a uniform in {1, 2};
// lives in P_{r,2d}.  Never zero, since squares in F_3 avoid -1.
NoiseDist make_square_noise(int r, int d);

// eta = a * prod_i (l_i - 1)(l_i - 2) over d degree-1 forms with linearly
// independent homogeneous parts (constants free) and a uniform in {1, 2}.
// Pointwise (l-1)(l-2) = 2*[l = 0], so eta is a scaled indicator of a random
// codimension-d affine subspace; lives in P_{r,2d}.
NoiseDist make_subspace_noise(int r, int d);

// Uniform on the nowhere-zero functions in F_r (indexed by value table).
// Eigenvalue at frequency alpha: (-1/2)^{|alpha|}.
struct FullNoise {
  int r = 0;
  std::vector<std::uint64_t> atom_indices;
};
FullNoise make_nowhere_zero_noise(int r);

struct EigCounts {
  std::uint64_t n[3] = {0, 0, 0};
  std::uint64_t denom = 1;
  cplx value() const;
  double real_value() const;
};

// E_eta omega^{<alpha, eta>}, accumulated exactly as trit counts.
EigCounts eigenvalue_counts(const NoiseDist& dist, const FnTable& alpha);
cplx noise_eigenvalue(const NoiseDist& dist, const FnTable& alpha);

double nowhere_zero_eigenvalue(int support);

GroupFn apply_noise(const PolySpace& space, const NoiseDist& dist, const GroupFn& a,
                    Exec exec = Exec::Parallel);
GroupFn apply_noise_power(const PolySpace& space, const NoiseDist& dist, GroupFn a, int t,
                          Exec exec = Exec::Parallel);
std::vector<cplx> apply_full_noise(const FullDft& dft, const FullNoise& noise,
                                   const std::vector<cplx>& a, Exec exec = Exec::Parallel);

// Real eigenvalue of dist at every coset representative of ctx.
std::vector<double> real_eigenvalues(const FourierContext& ctx, const NoiseDist& dist);
Spectrum spectral_noise_power(const Spectrum& s, const std::vector<double>& eig, int t);

struct SquareNoiseEigReport {
  int r = 0, d = 0;
  double tol = 0;
  std::uint64_t asserted_reps = 0;   // reps with |alpha|^2 <= 3^d
  double max_magnitude_gap = 0;      // | |lambda| - (1/2)^{|alpha|} | over those
  bool magnitudes_ok = false;
  bool relation_checked = false;     // dense characters fit the context budget
  double max_relation_dev = 0;       // max over all reps of ||M chi - lambda chi||_inf
  bool relation_ok = false;
  double max_excess_beyond = 0;      // observed gap outside the asserted range
  bool ok() const { return magnitudes_ok && relation_ok; }
};

// Checks the eigenvalue-magnitude collision with the nowhere-zero noise on
// low-support frequencies, and (when the dense character table fits the
// context budget) the eigenrelation on every character.
SquareNoiseEigReport verify_square_noise_eigenvalues(int r, int d, double tol,
                                                     Exec exec = Exec::Parallel);

// When the evaluations of p on supp(alpha) are jointly uniform, the
// square-noise eigenvalue factors per coordinate:
//   lambda(alpha) = Re[ ((w^2-1)/3)^{n1} ((w-1)/3)^{n2} ]
// where n1, n2 count coordinates with alpha(x) = 1, 2.  In particular
// |lambda(alpha)| <= 3^{-|alpha|/2}, and the magnitude collides with the
// nowhere-zero noise only for |alpha| <= 1.
double square_noise_product_eigenvalue(int n_ones, int n_twos);

struct SquareNoiseFormulaReport {
  int r = 0, d = 0;
  int k = 0;                    // independence range 3^{floor((d+1)/2)}
  double tol = 0;
  std::uint64_t checked = 0;    // reps with |alpha| <= k
  double max_formula_gap = 0;   // measured lambda vs product formula
  bool formula_ok = false;
  double max_decay_excess = 0;  // max of |lambda| - 3^{-|alpha|/2} over those
  bool decay_ok = false;
  bool ok() const { return formula_ok && decay_ok; }
};

SquareNoiseFormulaReport verify_square_noise_product_formula(int r, int d, double tol);

struct SubspaceNoiseEigReport {
  int r = 0, d = 0;
  double tol = 0;
  double max_formula_gap = 0;  // rho vs (3/2) p_acc - 1/2, exact counts
  bool formula_ok = false;
  double min_bound_margin = 0;  // min over reps of |rho| - (1 - 2|alpha|/3^d)
  bool lower_bound_ok = false;
  double max_imag = 0;
  bool ok() const { return formula_ok && lower_bound_ok; }
};

SubspaceNoiseEigReport verify_subspace_noise_eigenvalues(int r, int d, double tol,
                                                         Exec exec = Exec::Parallel);

struct SparseTerm {
  FnTable beta;
  cplx coeff;
};

// Fourier coefficients attached to explicit frequency tables; reinterpreting
// the same terms over F_r instead of P_{r, domain_d} is the lift.
struct SparseSpectrum {
  int r = 0;
  int domain_d = 0;
  std::vector<SparseTerm> terms;
  int max_support() const;
  double mass() const;  // sum |c|^2
};

cplx sparse_eval(const SparseSpectrum& s, const FnTable& f);

// Dense spectrum restricted to representatives of support <= max_sup.
SparseSpectrum truncate_spectrum(const FourierContext& ctx, const Spectrum& s, int max_sup);

struct MomentReport {
  int r = 0, domain_d = 0, k = 0, t = 0;
  std::uint64_t tuples = 0;
  cplx subgroup_moment;  // tuple sum constrained to P_{r,domain_d}^perp
  cplx ambient_moment;   // tuple sum constrained to zero (the lifted moment)
  double gap = 0;
  bool equal(double tol) const { return gap <= tol; }
};

// ||B||_{2k}^{2k} on both sides of the lift, via constrained tuple sums.
// Requires 2kt <= 3^{d-1} with domain_d = 2d.
MomentReport moment_check(const SparseSpectrum& spec, int k);

struct McEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  double z_against(double exact) const;
};

McEstimate moment_mc_subgroup(const SparseSpectrum& spec, int k, std::uint64_t samples,
                              std::uint64_t seed, Exec exec = Exec::Parallel);
McEstimate moment_mc_ambient(const SparseSpectrum& spec, int k, std::uint64_t samples,
                             std::uint64_t seed, Exec exec = Exec::Parallel);

struct HyperReport {
  int t_max = 0;
  double norm2 = 0, norm4 = 0;
  double ratio = 0;        // ||A||_4 / ||A||_2
  double c_per_level = 0;  // ratio^{1/t_max}
  double equality_gap = 0;
};

// ||A||_4 / ||A||_2 computed spectrally; requires 4t <= 3^{d-1}.
HyperReport hypercontractivity_ratio(const SparseSpectrum& spec);

struct InterpolationReport {
  int r = 0, d = 0, t = 0;
  double ip_plain = 0;     // <A, M B> with the square noise
  double ip_smoothed = 0;  // same after smoothing both sides t times
  double diff = 0;
  double bound = 0;  // 2dt / 3^d
  bool holds = false;
};

InterpolationReport noise_interpolation_check(const FourierContext& ctx, int d, const GroupFn& a,
                                              const GroupFn& b, int t, double tol,
                                              Exec exec = Exec::Parallel);

// xi(x) = max(-x, x-1, 0)^2: squared distance from [0, 1].
double xi_fn(double x);

struct PipelineReport {
  int r = 0, d = 0, k = 0;
  double eps = 0;
  int t = 0;
  double e_plain_a = 0, e_round_a = 0, e_plain_b = 0, e_round_b = 0;
  double diff_e = 0;  // max of the two expectation shifts
  bool c1 = false;
  double max_inf_increase = 0;
  bool c2 = false;
  double ip_plain = 0, ip_round = 0, diff_ip = 0;
  bool c3 = false;
  double xi_subgroup_a = 0, xi_ambient_a = 0;
  double xi_subgroup_b = 0, xi_ambient_b = 0;
};

// Smooth, truncate, lift, clamp; then measure all three closeness claims.
PipelineReport rounding_pipeline(int r, int d, const GroupFn& a, const GroupFn& b, double eps,
                                  int k, Exec exec = Exec::Parallel);

struct XiGapReport {
  int r = 0, d = 0, k = 0;
  double ambient_mean = 0;   // E over F_r of xi(P)
  double subgroup_mean = 0;  // E over P_{r,d} of xi(P)
  double gap = 0;
};

XiGapReport xi_gap_probe(int r, int d, const SparseSpectrum& p, Exec exec = Exec::Parallel);

// Real-valued unit-norm spectrum supported on frequencies of weight <= k.
SparseSpectrum random_low_degree_real_spectrum(int r, int k, CounterRng& rng);

// nterms distinct random frequencies of support <= max_support with unit
// Gaussian coefficients, as a function on P_{r, domain_d}.
SparseSpectrum random_sparse_spectrum(int r, int domain_d, int max_support, int nterms,
                                      CounterRng& rng);

}  // namespace lowdeg
