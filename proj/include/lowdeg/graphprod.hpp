#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/rational.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

namespace lowdeg {

// Weighted graph on the vertex set P_{r,2d} with
//   W(f,f') = Pr_{p in P_{r,d}, a in {1,2}}[f' = f + a(p^2+1)].
// Weights depend only on f' - f, held as exact counts over 2|P_{r,d}| draws.
class DerandGraph {
 public:
  DerandGraph(int r, int d);

  int r() const { return r_; }
  int d() const { return d_; }
  const PolySpace& space() const { return space_; }
  const NoiseDist& noise() const { return noise_; }
  std::uint64_t num_vertices() const { return space_.size(); }
  std::uint64_t denom() const { return noise_.denom; }

  std::uint64_t weight_count(std::uint64_t f, std::uint64_t fp) const {
    return diff_count_[space_.sub_indices(fp, f)];
  }
  Rational edge_weight(std::uint64_t f, std::uint64_t fp) const {
    return Rational(static_cast<std::int64_t>(weight_count(f, fp)),
                    static_cast<std::int64_t>(noise_.denom));
  }
  bool has_edge(std::uint64_t f, std::uint64_t fp) const { return weight_count(f, fp) > 0; }

 private:
  int r_, d_;
  PolySpace space_;
  NoiseDist noise_;
  std::vector<std::uint64_t> diff_count_;
};

struct VertexSubset {
  int r = 0, d = 0;
  std::vector<char> member;

  std::uint64_t count() const;
  double delta() const { return static_cast<double>(count()) / member.size(); }
  GroupFn indicator() const;
};

// {f : f(x) = a}; evaluation at a point is a surjective linear functional, so
// the fractional size is exactly 1/3.
VertexSubset dictator_set(const DerandGraph& g, std::uint64_t point_idx, trit a);

struct IndependenceResult {
  bool independent = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;  // first in vertex order
};

IndependenceResult is_independent(const DerandGraph& g, const VertexSubset& s,
                                  Exec exec = Exec::Parallel);
// Independent and every outside vertex has an edge into s.
bool is_maximal_independent(const DerandGraph& g, const VertexSubset& s,
                            Exec exec = Exec::Parallel);

struct TrianglePartitionReport {
  std::uint64_t triangles = 0;
  bool all_edges_present = false;
  bool partitions = false;
  std::uint64_t certified_bound = 0;  // num_vertices / 3
  bool ok() const { return all_edges_present && partitions; }
};

// {f, f+1, f+2} tiles the vertex set with triangles, certifying that
// independent sets cover at most a third of the graph.
TrianglePartitionReport triangle_partition_check(const DerandGraph& g);

struct IndependenceIdentityReport {
  double delta = 0;
  double lhs = 0;       // sum over nonzero cosets of |hat A|^2 lambda(alpha)
  double rhs = 0;       // -delta^2
  double gap = 0;
  double mean_x = 0;    // lhs / (delta - delta^2), expected -delta/(1-delta)
  double mean_x_expected = 0;
  bool holds = false;
};

// Spectral identity satisfied by every independent set's indicator.
IndependenceIdentityReport independence_identity(const FourierContext& ctx, const DerandGraph& g,
                                                 const VertexSubset& s, double tol,
                                                 Exec exec = Exec::Parallel);

struct ConcentrationReport {
  double delta = 0;
  double eps = 0;            // 1/3 - delta
  double tail = 0;           // mass above support 1
  double bound = 0;          // 2 eps
  bool tail_ok = false;
  DictatorFit fit;           // nearest boolean dictator
  double shape_denom = 0;    // delta - delta^2 - eps
  double implied_k = 0;      // distance * shape_denom / eps when eps > 0
};

// Tail bound plus dictator proximity for an independent set below density 1/3.
ConcentrationReport fourier_concentration(const FourierContext& ctx, const DerandGraph& g,
                                          const VertexSubset& s, double tol,
                                          Exec exec = Exec::Parallel);

VertexSubset greedy_independent_set(const DerandGraph& g, const std::vector<std::uint64_t>& order);
VertexSubset greedy_independent_set(const DerandGraph& g, std::uint64_t seed);

// Exact maximum independent set by branch and bound over the triangle tiles;
// requires dim P_{r,2d} <= 7.
VertexSubset exhaustive_mis(const DerandGraph& g);

}  // namespace lowdeg
