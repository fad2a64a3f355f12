#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lowdeg/fn_table.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

namespace lowdeg {

using cplx = std::complex<double>;

inline constexpr double kHalfSqrt3 = 0.8660254037844386467637232;

// omega^c for the principal cube root of unity omega = exp(2*pi*i/3).
inline cplx omega_pow(int c) {
  switch (((c % 3) + 3) % 3) {
    case 0: return {1.0, 0.0};
    case 1: return {-0.5, kHalfSqrt3};
    default: return {-0.5, -kHalfSqrt3};
  }
}

// Complex function on the elements of P_{r,d}, indexed like PolySpace.
using GroupFn = std::vector<cplx>;
// Fourier coefficients, indexed by coset id of Lambda_{r,d}.
using Spectrum = std::vector<cplx>;

struct CosetRep {
  FnTable beta;
  int support = 0;
};

// The character group of P_{r,d}: cosets of P_{r,d}^perp inside the space of
// all functions F_3^r -> F_3.  Each coset is represented by its
// minimum-support member (value-table lexicographic order breaks ties).
// Coset ids are the syndrome <beta, m_i> over the graded basis of P_{r,d},
// read little-endian in base 3.
class CosetSystem {
 public:
  CosetSystem(int r, int d, Exec exec = Exec::Parallel);

  int r() const { return r_; }
  int d() const { return d_; }
  std::uint64_t num_cosets() const { return reps_.size(); }
  const std::vector<CosetRep>& reps() const { return reps_; }
  const CosetRep& rep(std::uint64_t id) const { return reps_[id]; }
  const PolySpace& primal() const { return primal_; }
  const PolySpace& dual() const { return dual_; }

  std::uint64_t coset_id_of(const FnTable& beta) const;
  // Some member of the coset with the given id (not necessarily the rep).
  FnTable pilot_of(std::uint64_t id) const;
  // Two tables induce the same character iff their difference lies in the
  // dual space.
  bool same_coset(const FnTable& a, const FnTable& b) const;

 private:
  int r_, d_;
  PolySpace primal_, dual_;
  std::vector<CosetRep> reps_;
  std::vector<int> pivot_points_;
  std::vector<trit> pivot_inv_;  // dim x dim, row-major
};

// Largest domain dimension for which the dense character table (3^dim)^2 is
// materialized.
inline constexpr int kMaxContextDim = 7;

// Dense Fourier-analysis workspace for functions on P_{r,d}: element value
// tables, coset representatives, and the full character table.
class FourierContext {
 public:
  FourierContext(int r, int d, Exec exec = Exec::Parallel);

  int r() const { return r_; }
  int d() const { return d_; }
  const PolySpace& domain() const { return domain_; }
  const CosetSystem& lambda() const { return lambda_; }
  std::uint64_t n() const { return n_; }
  const FnTable& elem_table(std::uint64_t g) const { return elem_tables_[g]; }

  // <beta_rep(i), table(g)> in F_3; chi_i(g) = omega^that.
  trit chi_trit(std::uint64_t coset, std::uint64_t elem) const {
    return char_trits_[coset * n_ + elem];
  }
  cplx chi(std::uint64_t coset, std::uint64_t elem) const {
    return omega_pow(chi_trit(coset, elem));
  }
  GroupFn character_fn(std::uint64_t coset) const;

  // hat A(beta) = E_g A(g) conj(chi_beta(g)).
  Spectrum transform(const GroupFn& a, Exec exec = Exec::Parallel) const;
  // A(g) = sum_beta hat A(beta) chi_beta(g).
  GroupFn inverse(const Spectrum& s, Exec exec = Exec::Parallel) const;

  double norm2_sq(const GroupFn& a) const;          // E |A|^2
  double spectrum_mass(const Spectrum& s) const;    // sum |hat A|^2
  double parseval_gap(const GroupFn& a, const Spectrum& s) const;

  // Largest k for which low-degree influences are defined: 2k < 3^{floor((d+1)/2)}.
  int max_influence_k() const;
  // Inf_a^{<=k}: mass of coefficients whose representative is nonzero at a.
  double influence(const Spectrum& s, std::uint64_t point_idx, int k) const;

  // max over all coset pairs of |E_g chi_i conj(chi_j) - [i == j]|.
  double orthonormality_max_dev(Exec exec = Exec::Parallel) const;

 private:
  int r_, d_;
  PolySpace domain_;
  CosetSystem lambda_;
  std::uint64_t n_;
  std::vector<FnTable> elem_tables_;
  std::vector<trit> char_trits_;
};

struct DictatorFit {
  std::uint64_t point_idx = 0;  // x with B(f) = [f(x) in S]
  unsigned value_mask = 0;      // bit v set iff v in S
  double distance = 0.0;        // ||A - B||_2
};

// Exhaustive scan over all 3^r * 2^3 boolean dictators.
DictatorFit nearest_dictator(const FourierContext& ctx, const GroupFn& a);

struct DualDistance {
  int distance = 0;
  bool exact = true;  // false when estimated by sampling (upper bound)
};

// Hamming distance from beta to P_{r,d}^perp; exact when the dual space is
// enumerable, otherwise a sampled upper bound.
DualDistance distance_to_dual(int r, int d, const FnTable& beta,
                              std::uint64_t samples = 100000, std::uint64_t seed = 0);

// Radix-3 transform over the full function space F_r = all maps F_3^r -> F_3,
// viewed as the group Z_3^{3^r}.  Functions and frequencies are both indexed
// by value tables read little-endian in base 3.
class FullDft {
 public:
  explicit FullDft(int r);

  int r() const { return r_; }
  int points() const { return n_points_; }
  std::uint64_t N() const { return N_; }
  int weight(std::uint64_t beta) const { return weights_[beta]; }
  trit digit(std::uint64_t idx, int pos) const;
  std::uint64_t add_indices(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate_index(std::uint64_t a) const;

  void forward(std::vector<cplx>& a, Exec exec = Exec::Parallel) const;
  void inverse(std::vector<cplx>& a, Exec exec = Exec::Parallel) const;

  double influence(const std::vector<cplx>& spectrum, int point_pos, int k) const;

 private:
  int r_, n_points_;
  std::uint64_t N_;
  std::vector<std::uint8_t> weights_;
};

}  // namespace lowdeg
