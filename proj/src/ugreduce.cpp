#include "lowdeg/ugreduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lowdeg {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<trit> Mat::apply(const std::vector<trit>& x) const {
  std::vector<trit> y(n, 0);
  for (int i = 0; i < n; ++i) {
    trit s = 0;
    for (int j = 0; j < n; ++j) s = gf3_add(s, gf3_mul(at(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

Mat Mat::mul(const Mat& o) const {
  Mat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      trit s = 0;
      for (int k = 0; k < n; ++k) s = gf3_add(s, gf3_mul(at(i, k), o.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

std::optional<Mat> Mat::inverse() const {
  Mat work = *this;
  Mat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (work.at(row, col) != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const trit scale = gf3_inv(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = gf3_mul(work.at(col, j), scale);
      inv.at(col, j) = gf3_mul(inv.at(col, j), scale);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const trit factor = work.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) = gf3_sub(work.at(row, j), gf3_mul(factor, work.at(col, j)));
        inv.at(row, j) = gf3_sub(inv.at(row, j), gf3_mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

namespace {

int f3_rank(std::vector<std::vector<trit>> rows) {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int row = rank; row < static_cast<int>(rows.size()); ++row)
      if (rows[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const trit scale = gf3_inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = gf3_mul(x, scale);
    for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
      if (row == rank || rows[row][col] == 0) continue;
      const trit factor = rows[row][col];
      for (int j = 0; j < ncols; ++j)
        rows[row][j] = gf3_sub(rows[row][j], gf3_mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<trit> random_vector(int n, CounterRng& rng) {
  std::vector<trit> v(n);
  for (auto& x : v) x = static_cast<trit>(rng.next_trit());
  return v;
}

// Columns form a basis whose first member is `first`.
Mat basis_with_first(const std::vector<trit>& first, CounterRng& rng) {
  const int n = static_cast<int>(first.size());
  std::vector<std::vector<trit>> cols{first};
  while (static_cast<int>(cols.size()) < n) {
    auto v = random_vector(n, rng);
    cols.push_back(v);
    if (f3_rank(cols) < static_cast<int>(cols.size())) cols.pop_back();
  }
  Mat m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace

Mat random_invertible(int n, CounterRng& rng) {
  for (;;) {
    Mat m(n);
    for (auto& x : m.a) x = static_cast<trit>(rng.next_trit());
    if (m.inverse()) return m;
  }
}

Mat matrix_mapping(const std::vector<trit>& x, const std::vector<trit>& y, CounterRng& rng) {
  auto nonzero = [](const std::vector<trit>& v) {
    return std::any_of(v.begin(), v.end(), [](trit t) { return t != 0; });
  };
  if (!nonzero(x) || !nonzero(y))
    throw std::invalid_argument("matrix_mapping: labels must be nonzero");
  const Mat bx = basis_with_first(x, rng);
  const Mat by = basis_with_first(y, rng);
  return by.mul(*bx.inverse());
}

Poly compose_linear(const Poly& f, const Mat& m) {
  const int r = f.r();
  if (m.n != r) throw std::invalid_argument("compose_linear: dimension mismatch");
  if (!m.inverse()) throw std::invalid_argument("compose_linear: singular matrix");
  std::vector<Poly> forms;
  forms.reserve(r);
  for (int i = 0; i < r; ++i) {
    Poly li(r, 2 * r);
    for (int j = 0; j < r; ++j) {
      if (m.at(i, j) != 0) {
        Monomial mo(r, 0);
        mo[j] = 1;
        li.set_coeff(mo, m.at(i, j));
      }
    }
    forms.push_back(li);
  }
  Poly acc(r, 2 * r);
  for (const auto& [mono, c] : f.terms()) {
    Poly term = constant_poly(r, c, 2 * r);
    for (int i = 0; i < r; ++i)
      for (int e = 0; e < mono[i]; ++e) term = term * forms[i];
    acc = acc + term;
  }
  Poly out(r, f.degree_bound());
  for (const auto& [mono, c] : acc.terms()) out.set_coeff(mono, c);
  return out;
}

FnTable compose_linear_table(const FnTable& f, const Mat& m) {
  const int r = f.r();
  FnTable out(r);
  for (std::uint64_t xi = 0; xi < f.size(); ++xi)
    out[xi] = f[point_index(m.apply(point_of_index(xi, r)))];
  return out;
}

bool UGInstance::right_regular() const {
  std::vector<int> deg(num_v, 0);
  for (const auto& e : edges) ++deg[e.v];
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
}

std::vector<std::vector<int>> UGInstance::edges_of_u() const {
  std::vector<std::vector<int>> out(num_u);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) out[edges[i].u].push_back(i);
  return out;
}

std::vector<std::vector<int>> UGInstance::edges_of_v() const {
  std::vector<std::vector<int>> out(num_v);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) out[edges[i].v].push_back(i);
  return out;
}

Rational satisfied_fraction(const UGInstance& inst, const Labeling& l) {
  if (inst.edges.empty()) return Rational(1, 1);
  std::int64_t sat = 0;
  for (const auto& e : inst.edges) {
    if (!l.u[e.u] || !l.v[e.v]) continue;
    if (e.pi.apply(*l.v[e.v]) == *l.u[e.u]) ++sat;
  }
  return Rational(sat, static_cast<std::int64_t>(inst.edges.size()));
}

namespace {

std::vector<trit> random_nonzero_vector(int r, CounterRng& rng) {
  const std::uint64_t idx = 1 + rng.next_below(pow3(r) - 1);
  return point_of_index(idx, r);
}

}  // namespace

UGInstance gen_planted(int num_u, int num_v, int r, std::uint64_t seed, Labeling* planted) {
  CounterRng rng(seed, 0x706c616e);
  UGInstance inst;
  inst.r = r;
  inst.num_u = num_u;
  inst.num_v = num_v;
  Labeling l;
  l.u.resize(num_u);
  l.v.resize(num_v);
  for (auto& x : l.u) x = random_nonzero_vector(r, rng);
  for (auto& x : l.v) x = random_nonzero_vector(r, rng);
  for (int u = 0; u < num_u; ++u)
    for (int v = 0; v < num_v; ++v)
      inst.edges.push_back(UGEdge{u, v, matrix_mapping(*l.v[v], *l.u[u], rng)});
  if (planted) *planted = l;
  return inst;
}

UGInstance gen_noisy(UGInstance inst, const Labeling& planted, int corrupt, std::uint64_t seed) {
  CounterRng rng(seed, 0x6e6f6973);
  std::vector<std::size_t> order(inst.edges.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);
  for (int c = 0; c < corrupt && c < static_cast<int>(order.size()); ++c) {
    auto& e = inst.edges[order[c]];
    for (;;) {
      const Mat m = random_invertible(inst.r, rng);
      if (!(m.apply(*planted.v[e.v]) == *planted.u[e.u])) {
        e.pi = m;
        break;
      }
    }
  }
  return inst;
}

UGInstance gen_random(int num_u, int num_v, int r, std::uint64_t seed) {
  CounterRng rng(seed, 0x72616e64);
  UGInstance inst;
  inst.r = r;
  inst.num_u = num_u;
  inst.num_v = num_v;
  for (int u = 0; u < num_u; ++u)
    for (int v = 0; v < num_v; ++v)
      inst.edges.push_back(UGEdge{u, v, random_invertible(r, rng)});
  return inst;
}

Labeling random_labeling(const UGInstance& inst, std::uint64_t seed) {
  CounterRng rng(seed, 0x6c61626c);
  Labeling l;
  l.u.resize(inst.num_u);
  l.v.resize(inst.num_v);
  for (auto& x : l.u) x = point_of_index(rng.next_below(pow3(inst.r)), inst.r);
  for (auto& x : l.v) x = point_of_index(rng.next_below(pow3(inst.r)), inst.r);
  return l;
}

ColoringInstance::ColoringInstance(const UGInstance& inst, int d)
    : inst_(inst), r_(inst.r), d_(d), space_(inst.r, 2 * d), noise_(make_square_noise(inst.r, d)) {
  space_.require_enumerable("ColoringInstance");
  diff_count_.assign(space_.size(), 0);
  for (const auto& atom : noise_.atoms) diff_count_[atom.idx] += atom.count;

  fn_tables_.reserve(space_.size());
  for (std::uint64_t f = 0; f < space_.size(); ++f) fn_tables_.push_back(space_.table_at(f));

  const std::uint64_t npoints = pow3(r_);
  perm_.resize(inst_.edges.size());
  perm_inv_.resize(inst_.edges.size());
  for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
    const auto invm = inst_.edges[e].pi.inverse();
    if (!invm) throw std::invalid_argument("ColoringInstance: singular constraint matrix");
    // (f o pi^{-1})(x) = f(pi^{-1} x); point map for the table pullback.
    std::vector<std::uint64_t> pm(npoints);
    for (std::uint64_t xi = 0; xi < npoints; ++xi)
      pm[xi] = point_index(invm->apply(point_of_index(xi, r_)));
    perm_[e].resize(space_.size());
    perm_inv_[e].resize(space_.size());
    for (std::uint64_t f = 0; f < space_.size(); ++f) {
      FnTable t(r_);
      for (std::uint64_t xi = 0; xi < npoints; ++xi) t[xi] = fn_tables_[f][pm[xi]];
      std::uint64_t idx = 0;
      if (!space_.contains_table(t, &idx))
        throw std::logic_error("ColoringInstance: composition left the space");
      perm_[e][f] = idx;
    }
    for (std::uint64_t f = 0; f < space_.size(); ++f) perm_inv_[e][perm_[e][f]] = f;
  }
  edges_at_v_ = inst_.edges_of_v();
}

bool ColoringInstance::has_edge(int v, std::uint64_t f, int w, std::uint64_t g) const {
  for (int e1 : edges_at_v_[v]) {
    for (int e2 : edges_at_v_[w]) {
      if (inst_.edges[e1].u != inst_.edges[e2].u) continue;
      const std::uint64_t h1 = perm_[e1][f];
      const std::uint64_t h2 = perm_[e2][g];
      if (diff_count_[space_.sub_indices(h2, h1)] > 0) return true;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> ColoringInstance::shared_witnesses(int v, int w) const {
  std::vector<std::pair<int, int>> out;
  for (int e1 : edges_at_v_[v])
    for (int e2 : edges_at_v_[w])
      if (inst_.edges[e1].u == inst_.edges[e2].u) out.emplace_back(e1, e2);
  return out;
}

trit ColoringInstance::color_by_label(std::uint64_t f, const std::vector<trit>& label) const {
  return fn_tables_[f][point_index(label)];
}

ColoringReport completeness_color(const ColoringInstance& c, const Labeling& l,
                                  const std::vector<int>& s_clouds,
                                  std::vector<trit>* colors_out) {
  const auto& inst = c.instance();
  std::vector<char> in_s(inst.num_v, 0);
  for (int v : s_clouds) in_s[v] = 1;

  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& edge = inst.edges[e];
    if (!in_s[edge.v]) continue;
    if (!l.v[edge.v] || !l.u[edge.u])
      throw std::invalid_argument("completeness_color: unlabeled endpoint inside S");
    if (!(edge.pi.apply(*l.v[edge.v]) == *l.u[edge.u]))
      throw std::invalid_argument("completeness_color: labeling violates an edge inside S");
  }

  ColoringReport rep;
  const std::uint64_t n = c.functions_per_cloud();
  if (colors_out) colors_out->assign(static_cast<std::size_t>(inst.num_v) * n, 0);
  for (int v : s_clouds) {
    const std::uint64_t lp = point_index(*l.v[v]);
    for (std::uint64_t f = 0; f < n; ++f) {
      if (colors_out) (*colors_out)[v * n + f] = c.fn_table(f)[lp];
      ++rep.colored;
    }
  }

  // Coloring respects the constraint transport: f(l(v)) = (f o pi^{-1})(l(u)).
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& edge = inst.edges[e];
    if (!in_s[edge.v]) continue;
    const std::uint64_t lv = point_index(*l.v[edge.v]);
    const std::uint64_t lu = point_index(*l.u[edge.u]);
    for (std::uint64_t f = 0; f < n; ++f)
      if (c.fn_table(f)[lv] != c.fn_table(c.pullback(static_cast<int>(e), f))[lu])
        rep.identity_ok = false;
  }

  // Properness on every witnessed pair of clouds inside S.
  for (int v = 0; v < inst.num_v; ++v) {
    if (!in_s[v]) continue;
    for (int w = v; w < inst.num_v; ++w) {
      if (!in_s[w]) continue;
      for (const auto& [e1, e2] : c.shared_witnesses(v, w)) {
        const std::uint64_t lv = point_index(*l.v[v]);
        const std::uint64_t lw = point_index(*l.v[w]);
        for (std::uint64_t f = 0; f < n; ++f) {
          const std::uint64_t h1 = c.pullback(e1, f);
          for (const auto& atom : c.noise().atoms) {
            const std::uint64_t g =
                c.pushforward(e2, c.space().add_indices(h1, atom.idx));
            ++rep.pairs_checked;
            if (c.fn_table(f)[lv] == c.fn_table(g)[lw]) rep.proper = false;
          }
        }
      }
    }
  }
  return rep;
}

std::uint64_t ColoringSubset::count() const {
  std::uint64_t c = 0;
  for (char m : member) c += m != 0;
  return c;
}

ColoringSubset dictator_coloring_set(const ColoringInstance& c, const Labeling& l) {
  ColoringSubset s;
  s.num_v = c.instance().num_v;
  s.n_funcs = c.functions_per_cloud();
  s.member.assign(s.num_v * s.n_funcs, 0);
  for (int v = 0; v < s.num_v; ++v) {
    if (!l.v[v]) continue;
    const std::uint64_t lp = point_index(*l.v[v]);
    for (std::uint64_t f = 0; f < s.n_funcs; ++f)
      if (c.fn_table(f)[lp] == 0) s.member[v * s.n_funcs + f] = 1;
  }
  return s;
}

IndependenceResult coloring_is_independent(const ColoringInstance& c, const ColoringSubset& s) {
  std::vector<std::uint64_t> verts;
  for (std::uint64_t i = 0; i < s.member.size(); ++i)
    if (s.member[i]) verts.push_back(i);
  const std::uint64_t kNone = ~0ull;
  std::vector<std::uint64_t> first_bad(verts.size(), kNone);
  const std::uint64_t n = s.n_funcs;
  parallel_for(Exec::Parallel, static_cast<std::int64_t>(verts.size()), [&](std::int64_t i) {
    const int v = static_cast<int>(verts[i] / n);
    const std::uint64_t f = verts[i] % n;
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (c.has_edge(v, f, static_cast<int>(verts[j] / n), verts[j] % n)) {
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

DecodeReport soundness_decode(const ColoringInstance& c, const FourierContext& ctx,
                              const ColoringSubset& indep, double mu, double delta, int k,
                              std::uint64_t trials, std::uint64_t seed, Exec exec) {
  if (ctx.r() != c.r() || ctx.d() != 2 * c.d())
    throw std::invalid_argument("soundness_decode: context does not match the coloring space");
  const auto bad = coloring_is_independent(c, indep);
  if (!bad.independent)
    throw std::invalid_argument("soundness_decode: set is not independent");

  DecodeReport rep;
  rep.mu = mu;
  rep.delta = delta;
  rep.k = k;
  const auto& inst = c.instance();
  const std::uint64_t n = c.functions_per_cloud();
  const std::uint64_t npoints = pow3(c.r());

  rep.verts.resize(inst.num_v);
  parallel_for(exec, inst.num_v, [&](std::int64_t v) {
    DecodeVertexInfo info;
    info.v = static_cast<int>(v);
    GroupFn iv(n);
    std::uint64_t cnt = 0;
    for (std::uint64_t f = 0; f < n; ++f) {
      const bool m = indep.member[v * n + f] != 0;
      iv[f] = m ? 1.0 : 0.0;
      cnt += m;
    }
    info.density = static_cast<double>(cnt) / static_cast<double>(n);
    info.in_j = info.density >= mu / 2.0;
    if (info.in_j) {
      const Spectrum spec = ctx.transform(iv, Exec::Serial);
      for (std::uint64_t x = 0; x < npoints; ++x)
        if (ctx.influence(spec, x, k) > delta)
          info.list.push_back(point_of_index(x, c.r()));
    }
    rep.verts[v] = std::move(info);
  });

  const double list_cap = delta > 0 ? k / delta : 0;
  for (const auto& info : rep.verts) {
    if (!info.in_j) continue;
    ++rep.j_size;
    if (delta > 0 && static_cast<double>(info.list.size()) > list_cap) rep.lists_bounded = false;
  }

  // Shared-neighbor consistency: distinct edges (u,v), (u,w) with v,w in J
  // admit candidates mapping to the same label of u.
  for (std::size_t e1 = 0; e1 < inst.edges.size(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < inst.edges.size(); ++e2) {
      if (inst.edges[e1].u != inst.edges[e2].u) continue;
      const auto& iv = rep.verts[inst.edges[e1].v];
      const auto& iw = rep.verts[inst.edges[e2].v];
      if (!iv.in_j || !iw.in_j) continue;
      ++rep.claim_triples;
      bool found = false;
      for (const auto& a : iv.list) {
        const auto target = inst.edges[e1].pi.apply(a);
        for (const auto& b : iw.list) {
          if (inst.edges[e2].pi.apply(b) == target) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found)
        ++rep.claim_consistent;
      else
        rep.claim_ok = false;
    }
  }

  // Randomized labeling trials.
  rep.trials = trials;
  const auto by_u = inst.edges_of_u();
  std::vector<double> fracs(trials, 0.0);
  std::vector<char> usable(inst.num_v, 0);
  for (int v = 0; v < inst.num_v; ++v)
    usable[v] = rep.verts[v].in_j && !rep.verts[v].list.empty();
  auto run_trial = [&](std::uint64_t t) {
    CounterRng rng(seed, t);
    Labeling l;
    l.u.resize(inst.num_u);
    l.v.resize(inst.num_v);
    for (int v = 0; v < inst.num_v; ++v) {
      if (!usable[v]) continue;
      const auto& list = rep.verts[v].list;
      l.v[v] = list[rng.next_below(list.size())];
    }
    for (int u = 0; u < inst.num_u; ++u) {
      std::vector<int> cand;
      for (int e : by_u[u])
        if (usable[inst.edges[e].v]) cand.push_back(e);
      if (cand.empty()) continue;
      const int e = cand[rng.next_below(cand.size())];
      const auto& list = rep.verts[inst.edges[e].v].list;
      l.u[u] = inst.edges[e].pi.apply(list[rng.next_below(list.size())]);
    }
    return l;
  };
  parallel_for(exec, static_cast<std::int64_t>(trials), [&](std::int64_t t) {
    const Labeling l = run_trial(static_cast<std::uint64_t>(t));
    const Rational fr = satisfied_fraction(inst, l);
    fracs[t] = static_cast<double>(fr.num) / static_cast<double>(fr.den);
  });
  if (trials > 0) {
    double acc = 0, mn = 1.0;
    for (double f : fracs) {
      acc += f;
      mn = std::min(mn, f);
    }
    rep.mean_satisfied = acc / static_cast<double>(trials);
    rep.min_satisfied = mn;
    rep.last_labeling = run_trial(trials - 1);
  }
  return rep;
}

}  // namespace lowdeg
