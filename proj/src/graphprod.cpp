#include "lowdeg/graphprod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lowdeg {

DerandGraph::DerandGraph(int r, int d)
    : r_(r), d_(d), space_(r, 2 * d), noise_(make_square_noise(r, d)) {
  space_.require_enumerable("DerandGraph");
  diff_count_.assign(space_.size(), 0);
  std::uint64_t total = 0;
  for (const auto& atom : noise_.atoms) {
    diff_count_[atom.idx] += atom.count;
    total += atom.count;
  }
  if (total != noise_.denom) throw std::logic_error("DerandGraph: counts do not sum to denom");
  if (diff_count_[0] != 0) throw std::logic_error("DerandGraph: self loop");
}

std::uint64_t VertexSubset::count() const {
  std::uint64_t c = 0;
  for (char m : member) c += m != 0;
  return c;
}

GroupFn VertexSubset::indicator() const {
  GroupFn a(member.size());
  for (std::size_t i = 0; i < member.size(); ++i) a[i] = member[i] ? 1.0 : 0.0;
  return a;
}

VertexSubset dictator_set(const DerandGraph& g, std::uint64_t point_idx, trit a) {
  VertexSubset s;
  s.r = g.r();
  s.d = g.d();
  s.member.assign(g.num_vertices(), 0);
  const auto& space = g.space();
  // f(x) is linear in the coefficients: sum_j c_j m_j(x).
  std::vector<trit> basis_at_x(space.dim());
  for (int j = 0; j < space.dim(); ++j) basis_at_x[j] = space.basis_tables()[j][point_idx];
  for (std::uint64_t f = 0; f < g.num_vertices(); ++f) {
    std::uint64_t v = f;
    trit val = 0;
    for (int j = 0; j < space.dim(); ++j) {
      val = gf3_add(val, gf3_mul(static_cast<trit>(v % 3), basis_at_x[j]));
      v /= 3;
    }
    s.member[f] = val == a;
  }
  return s;
}

IndependenceResult is_independent(const DerandGraph& g, const VertexSubset& s, Exec exec) {
  std::vector<std::uint64_t> verts;
  for (std::uint64_t f = 0; f < s.member.size(); ++f)
    if (s.member[f]) verts.push_back(f);
  const std::uint64_t kNone = ~0ull;
  std::vector<std::uint64_t> first_bad(verts.size(), kNone);
  parallel_for(exec, static_cast<std::int64_t>(verts.size()), [&](std::int64_t i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.has_edge(verts[i], verts[j])) {
        first_bad[i] = verts[j];
        return;
      }
    }
  });
  IndependenceResult out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (first_bad[i] != kNone) {
      out.independent = false;
      out.violation = {verts[i], first_bad[i]};
      break;
    }
  }
  return out;
}

bool is_maximal_independent(const DerandGraph& g, const VertexSubset& s, Exec exec) {
  if (!is_independent(g, s, exec).independent) return false;
  std::vector<std::uint64_t> verts;
  for (std::uint64_t f = 0; f < s.member.size(); ++f)
    if (s.member[f]) verts.push_back(f);
  std::vector<char> blocked(s.member.size(), 0);
  parallel_for(exec, static_cast<std::int64_t>(s.member.size()), [&](std::int64_t f) {
    if (s.member[f]) {
      blocked[f] = 1;
      return;
    }
    for (std::uint64_t v : verts) {
      if (g.has_edge(static_cast<std::uint64_t>(f), v)) {
        blocked[f] = 1;
        return;
      }
    }
  });
  return std::all_of(blocked.begin(), blocked.end(), [](char b) { return b != 0; });
}

TrianglePartitionReport triangle_partition_check(const DerandGraph& g) {
  TrianglePartitionReport rep;
  const auto& space = g.space();
  std::vector<char> seen(g.num_vertices(), 0);
  rep.all_edges_present = true;
  for (std::uint64_t f = 0; f < g.num_vertices(); ++f) {
    if (seen[f]) continue;
    // Constant polynomials have coefficient index equal to their value.
    const std::uint64_t f1 = space.add_indices(f, 1);
    const std::uint64_t f2 = space.add_indices(f, 2);
    if (seen[f1] || seen[f2]) {
      rep.partitions = false;
      return rep;
    }
    seen[f] = seen[f1] = seen[f2] = 1;
    ++rep.triangles;
    if (!g.has_edge(f, f1) || !g.has_edge(f, f2) || !g.has_edge(f1, f2))
      rep.all_edges_present = false;
  }
  rep.partitions = true;
  rep.certified_bound = g.num_vertices() / 3;
  return rep;
}

IndependenceIdentityReport independence_identity(const FourierContext& ctx, const DerandGraph& g,
                                                 const VertexSubset& s, double tol, Exec exec) {
  if (!is_independent(g, s, exec).independent)
    throw std::invalid_argument("independence_identity: set is not independent");
  IndependenceIdentityReport rep;
  rep.delta = s.delta();
  const Spectrum spec = ctx.transform(s.indicator(), exec);
  const std::vector<double> eig = real_eigenvalues(ctx, g.noise());
  double lhs = 0;
  for (std::uint64_t i = 1; i < ctx.n(); ++i) lhs += std::norm(spec[i]) * eig[i];
  rep.lhs = lhs;
  rep.rhs = -rep.delta * rep.delta;
  rep.gap = std::abs(rep.lhs - rep.rhs);
  const double var = rep.delta - rep.delta * rep.delta;
  rep.mean_x = var > 0 ? lhs / var : 0.0;
  rep.mean_x_expected = rep.delta < 1.0 ? -rep.delta / (1.0 - rep.delta) : 0.0;
  rep.holds = rep.gap <= tol;
  return rep;
}

ConcentrationReport fourier_concentration(const FourierContext& ctx, const DerandGraph& g,
                                          const VertexSubset& s, double tol, Exec exec) {
  if (!is_independent(g, s, exec).independent)
    throw std::invalid_argument("fourier_concentration: set is not independent");
  ConcentrationReport rep;
  rep.delta = s.delta();
  rep.eps = 1.0 / 3.0 - rep.delta;
  if (rep.eps < -tol)
    throw std::invalid_argument("fourier_concentration: density above 1/3");
  const GroupFn a = s.indicator();
  const Spectrum spec = ctx.transform(a, exec);
  double tail = 0;
  for (std::uint64_t i = 0; i < ctx.n(); ++i)
    if (ctx.lambda().rep(i).support > 1) tail += std::norm(spec[i]);
  rep.tail = tail;
  rep.bound = 2.0 * rep.eps;
  rep.tail_ok = rep.tail <= rep.bound + tol;
  rep.fit = nearest_dictator(ctx, a);
  rep.shape_denom = rep.delta - rep.delta * rep.delta - rep.eps;
  rep.implied_k = rep.eps > 0 ? rep.fit.distance * rep.shape_denom / rep.eps : 0.0;
  return rep;
}

VertexSubset greedy_independent_set(const DerandGraph& g,
                                    const std::vector<std::uint64_t>& order) {
  VertexSubset s;
  s.r = g.r();
  s.d = g.d();
  s.member.assign(g.num_vertices(), 0);
  std::vector<std::uint64_t> chosen;
  for (std::uint64_t f : order) {
    bool clash = false;
    for (std::uint64_t v : chosen) {
      if (g.has_edge(f, v)) {
        clash = true;
        break;
      }
    }
    if (!clash) {
      chosen.push_back(f);
      s.member[f] = 1;
    }
  }
  return s;
}

VertexSubset greedy_independent_set(const DerandGraph& g, std::uint64_t seed) {
  std::vector<std::uint64_t> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng(seed, 0x67726565);
  for (std::uint64_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);
  return greedy_independent_set(g, order);
}

namespace {

struct MisState {
  const DerandGraph* g;
  std::vector<std::uint64_t> triangles;  // canonical base vertex per tile
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> best;

  void search(std::size_t ti) {
    if (chosen.size() + (triangles.size() - ti) <= best.size()) return;  // bound
    if (ti == triangles.size()) {
      best = chosen;
      return;
    }
    const auto& space = g->space();
    for (trit c = 0; c < 3; ++c) {
      const std::uint64_t v = space.add_indices(triangles[ti], c);
      bool clash = false;
      for (std::uint64_t u : chosen) {
        if (g->has_edge(v, u)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen.push_back(v);
      search(ti + 1);
      chosen.pop_back();
      if (best.size() == triangles.size()) return;  // met the certificate
    }
    search(ti + 1);  // skip this tile
  }
};

}  // namespace

VertexSubset exhaustive_mis(const DerandGraph& g) {
  if (g.space().dim() > 7)
    throw BudgetError("exhaustive_mis: domain dimension above branch-and-bound budget");
  MisState st;
  st.g = &g;
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::uint64_t f = 0; f < g.num_vertices(); ++f) {
    if (seen[f]) continue;
    seen[f] = seen[g.space().add_indices(f, 1)] = seen[g.space().add_indices(f, 2)] = 1;
    st.triangles.push_back(f);
  }
  // Seed the incumbent with the best greedy and dictator solutions.
  auto consider = [&](const VertexSubset& s) {
    std::vector<std::uint64_t> verts;
    for (std::uint64_t f = 0; f < s.member.size(); ++f)
      if (s.member[f]) verts.push_back(f);
    if (verts.size() > st.best.size()) st.best = std::move(verts);
  };
  consider(greedy_independent_set(g, 0));
  for (trit a = 0; a < 3; ++a) consider(dictator_set(g, 0, a));
  if (st.best.size() < st.triangles.size()) st.search(0);

  VertexSubset s;
  s.r = g.r();
  s.d = g.d();
  s.member.assign(g.num_vertices(), 0);
  for (std::uint64_t v : st.best) s.member[v] = 1;
  return s;
}

}  // namespace lowdeg
