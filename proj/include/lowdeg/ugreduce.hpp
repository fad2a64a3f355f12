#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/poly.hpp"
#include "lowdeg/rational.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

namespace lowdeg {

// Square matrix over F_3, row-major, acting on column vectors: (Mx)_i = sum_j M[i][j] x_j.
struct Mat {
  int n = 0;
  std::vector<trit> a;

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}
  static Mat identity(int n);

  trit at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  trit& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

  std::vector<trit> apply(const std::vector<trit>& x) const;
  Mat mul(const Mat& o) const;  // this * o
  std::optional<Mat> inverse() const;
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

Mat random_invertible(int n, CounterRng& rng);
// Invertible M with M x = y; x, y must both be nonzero.
Mat matrix_mapping(const std::vector<trit>& x, const std::vector<trit>& y, CounterRng& rng);

// (f o M)(x) = f(M x): substitute each variable by its image linear form and
// reduce via x^3 = x.  Invertible substitution preserves the degree bound.
Poly compose_linear(const Poly& f, const Mat& m);
// Same map on value tables.
FnTable compose_linear_table(const FnTable& f, const Mat& m);

struct UGEdge {
  int u = 0, v = 0;
  Mat pi;  // constraint pi(label(v)) = label(u)
};

// Bipartite unique-games instance with invertible linear constraints over F_3^r.
struct UGInstance {
  int r = 0;
  int num_u = 0, num_v = 0;
  std::vector<UGEdge> edges;

  bool right_regular() const;
  std::vector<std::vector<int>> edges_of_u() const;  // edge indices per u
  std::vector<std::vector<int>> edges_of_v() const;
};

struct Labeling {
  std::vector<std::optional<std::vector<trit>>> u, v;
};

// Exact satisfied fraction; unlabeled endpoints count as unsatisfied.
Rational satisfied_fraction(const UGInstance& inst, const Labeling& l);

// Complete bipartite instance with a hidden fully-satisfying labeling built
// from nonzero labels.
UGInstance gen_planted(int num_u, int num_v, int r, std::uint64_t seed, Labeling* planted);
// Re-randomizes `corrupt` edge constraints so the given labeling violates them.
UGInstance gen_noisy(UGInstance inst, const Labeling& planted, int corrupt, std::uint64_t seed);
// Complete bipartite with uniform invertible constraints.
UGInstance gen_random(int num_u, int num_v, int r, std::uint64_t seed);
Labeling random_labeling(const UGInstance& inst, std::uint64_t seed);

// Coloring graph on V x P_{r,2d}: (v,f) ~ (w,g) iff some common UG neighbor u
// has g o pi_{u,w}^{-1} - f o pi_{u,v}^{-1} in the square-noise support.
class ColoringInstance {
 public:
  ColoringInstance(const UGInstance& inst, int d);

  int r() const { return r_; }
  int d() const { return d_; }
  const UGInstance& instance() const { return inst_; }
  const PolySpace& space() const { return space_; }
  const NoiseDist& noise() const { return noise_; }
  std::uint64_t functions_per_cloud() const { return space_.size(); }
  const FnTable& fn_table(std::uint64_t f) const { return fn_tables_[f]; }

  // Index of f o pi_e^{-1} (and of f o pi_e).
  std::uint64_t pullback(int edge_idx, std::uint64_t f) const { return perm_[edge_idx][f]; }
  std::uint64_t pushforward(int edge_idx, std::uint64_t f) const {
    return perm_inv_[edge_idx][f];
  }

  bool has_edge(int v, std::uint64_t f, int w, std::uint64_t g) const;
  // Shared-neighbor witnesses: pairs of edge indices (e1 at v, e2 at w) with a common u.
  std::vector<std::pair<int, int>> shared_witnesses(int v, int w) const;

  trit color_by_label(std::uint64_t f, const std::vector<trit>& label) const;

 private:
  UGInstance inst_;
  int r_, d_;
  PolySpace space_;
  NoiseDist noise_;
  std::vector<std::uint64_t> diff_count_;
  std::vector<FnTable> fn_tables_;
  std::vector<std::vector<std::uint64_t>> perm_, perm_inv_;
  std::vector<std::vector<int>> edges_at_v_;
};

struct ColoringReport {
  std::uint64_t colored = 0;
  std::uint64_t pairs_checked = 0;
  bool proper = true;
  bool identity_ok = true;  // f(l(v)) = (f o pi^{-1})(l(u)) on every checked edge
  bool ok() const { return proper && identity_ok; }
};

// Colors (v,f) by f(l(v)) on the clouds of S and exhaustively verifies
// properness there; throws when l leaves an S-internal edge unsatisfied.
ColoringReport completeness_color(const ColoringInstance& c, const Labeling& l,
                                  const std::vector<int>& s_clouds,
                                  std::vector<trit>* colors_out = nullptr);

// Subset of the coloring-graph vertex set, indexed v * functions_per_cloud + f.
struct ColoringSubset {
  int num_v = 0;
  std::uint64_t n_funcs = 0;
  std::vector<char> member;

  bool contains(int v, std::uint64_t f) const { return member[v * n_funcs + f] != 0; }
  std::uint64_t count() const;
};

// {(v, f) : f(l(v)) = 0}: the independent set a satisfying labeling induces.
ColoringSubset dictator_coloring_set(const ColoringInstance& c, const Labeling& l);

IndependenceResult coloring_is_independent(const ColoringInstance& c, const ColoringSubset& s);

struct DecodeVertexInfo {
  int v = 0;
  double density = 0;
  bool in_j = false;
  std::vector<std::vector<trit>> list;  // candidate labels from influences
};

struct DecodeReport {
  double mu = 0, delta = 0;
  int k = 0;
  std::vector<DecodeVertexInfo> verts;
  std::uint64_t j_size = 0;
  bool lists_bounded = true;       // |L(v)| <= k/delta for v in J
  std::uint64_t claim_triples = 0;  // (v,w,u) with v,w in J sharing u
  std::uint64_t claim_consistent = 0;
  bool claim_ok = true;            // some a in L(v), b in L(w) with pi_{u,v}(a) = pi_{u,w}(b)
  std::uint64_t trials = 0;
  double mean_satisfied = 0;
  double min_satisfied = 0;
  Labeling last_labeling;
};

// Influence decoder: J = {v : E I_v >= mu/2}, L(v) = {x : Inf_x^{<=k} > delta},
// then repeatedly samples the labeling (v from L(v); u via a random neighbor
// w in J and b in L(w), setting l(u) = pi_{u,w}(b)) and scores it.
DecodeReport soundness_decode(const ColoringInstance& c, const FourierContext& ctx,
                              const ColoringSubset& indep, double mu, double delta, int k,
                              std::uint64_t trials, std::uint64_t seed,
                              Exec exec = Exec::Parallel);

}  // namespace lowdeg
