#include "lowdeg/space.hpp"

#include <algorithm>
#include <string>

namespace lowdeg {

std::vector<Monomial> monomial_basis(int r, int d) {
  if (r < 0) throw std::invalid_argument("monomial_basis: negative r");
  if (d < -1 || d > 2 * r) throw std::invalid_argument("monomial_basis: d out of range");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(r, 0);
  // Odometer over all exponent tuples, filtered by total degree.
  for (;;) {
    if (monomial_degree(m) <= d) out.push_back(m);
    int i = 0;
    while (i < r && m[i] == 2) m[i++] = 0;
    if (i == r) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end(), MonomialCmp{});
  return out;
}

PolySpace::PolySpace(int r, int d) : r_(r), d_(d), basis_(monomial_basis(r, d)) {
  basis_tables_.reserve(basis_.size());
  for (const auto& m : basis_) {
    Poly p(r, d < 0 ? 0 : d);
    p.set_coeff(m, 1);
    basis_tables_.push_back(poly_to_table(p));
  }
}

void PolySpace::require_enumerable(const char* what) const {
  if (!enumerable())
    throw BudgetError(std::string(what) + ": space dimension " + std::to_string(dim()) +
                      " exceeds the enumeration budget of " + std::to_string(kMaxEnumDim) +
                      " (3^" + std::to_string(dim()) + " elements)");
}

Poly PolySpace::poly_at(std::uint64_t idx) const {
  if (idx >= size()) throw std::invalid_argument("poly_at: index out of range");
  Poly p(r_, d_ < 0 ? 0 : d_);
  for (int i = 0; i < dim(); ++i) {
    const trit c = static_cast<trit>(idx % 3);
    idx /= 3;
    if (c != 0) p.set_coeff(basis_[i], c);
  }
  return p;
}

FnTable PolySpace::table_at(std::uint64_t idx) const {
  if (idx >= size()) throw std::invalid_argument("table_at: index out of range");
  FnTable t(r_);
  for (int i = 0; i < dim() && idx != 0; ++i) {
    const trit c = static_cast<trit>(idx % 3);
    idx /= 3;
    if (c != 0) t.add_in_place(basis_tables_[i].scaled(c));
  }
  return t;
}

std::uint64_t PolySpace::index_of(const Poly& p) const {
  if (p.r() != r_) throw std::invalid_argument("index_of: arity mismatch");
  std::uint64_t idx = 0;
  auto remaining = p.terms();
  for (int i = dim() - 1; i >= 0; --i) {
    idx *= 3;
    auto it = remaining.find(basis_[i]);
    if (it != remaining.end()) {
      idx += it->second;
      remaining.erase(it);
    }
  }
  if (!remaining.empty()) throw std::invalid_argument("index_of: polynomial not in space");
  return idx;
}

bool PolySpace::contains_table(const FnTable& t, std::uint64_t* idx_out) const {
  const Poly p = table_to_poly(t);
  if (p.degree() > d_) return false;
  if (idx_out != nullptr) *idx_out = index_of(p);
  return true;
}

std::uint64_t PolySpace::add_indices(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0, base = 1;
  for (int i = 0; i < dim(); ++i) {
    out += ((a % 3 + b % 3) % 3) * base;
    a /= 3;
    b /= 3;
    base *= 3;
  }
  return out;
}

std::uint64_t PolySpace::sub_indices(std::uint64_t a, std::uint64_t b) const {
  return add_indices(a, negate_index(b));
}

std::uint64_t PolySpace::negate_index(std::uint64_t a) const {
  std::uint64_t out = 0, base = 1;
  for (int i = 0; i < dim(); ++i) {
    out += ((3 - a % 3) % 3) * base;
    a /= 3;
    base *= 3;
  }
  return out;
}

PolySpace dual_space(int r, int d) {
  if (d < 0 || d > 2 * r) throw std::invalid_argument("dual_space: d out of range");
  return PolySpace(r, 2 * r - d - 1);
}

DualityReport verify_dual(int r, int d) {
  DualityReport rep;
  rep.r = r;
  rep.d = d;
  const PolySpace primal(r, d);
  const PolySpace dual = dual_space(r, d);
  rep.dim_primal = primal.dim();
  rep.dim_dual = dual.dim();
  rep.dims_complement =
      static_cast<std::uint64_t>(primal.dim()) + static_cast<std::uint64_t>(dual.dim()) == pow3(r);
  rep.all_pairs_orthogonal = true;
  for (const auto& a : primal.basis_tables()) {
    for (const auto& b : dual.basis_tables()) {
      ++rep.pairs_checked;
      if (inner_product(a, b) != 0) rep.all_pairs_orthogonal = false;
    }
  }
  return rep;
}

SchwartzZippelReport schwartz_zippel_min(int r, int d) {
  SchwartzZippelReport rep;
  rep.r = r;
  rep.d = d;
  PolySpace space(r, d);
  space.require_enumerable("schwartz_zippel_min");
  const std::uint64_t points = pow3(r);
  std::uint64_t best = points + 1;
  for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
    const std::uint64_t cnt = static_cast<std::uint64_t>(space.table_at(idx).support());
    if (cnt < best) {
      best = cnt;
      rep.argmin_index = idx;
    }
  }
  if (space.size() <= 1) {
    rep.min_fraction = Rational(1, 1);
    rep.bound_holds = true;
    rep.bound_tight = false;
    return rep;
  }
  rep.min_fraction = Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(points));
  // cnt/3^r >= 3^{-d/2}  <=>  cnt^2 * 3^d >= 3^{2r}, exactly in integers.
  const std::uint64_t lhs = best * best * pow3(d);
  const std::uint64_t rhs = pow3(2 * r);
  rep.bound_holds = lhs >= rhs;
  rep.bound_tight = lhs == rhs;
  return rep;
}

Poly random_poly(const PolySpace& space, CounterRng& rng) {
  Poly p(space.r(), space.d() < 0 ? 0 : space.d());
  for (int i = 0; i < space.dim(); ++i) {
    const trit c = static_cast<trit>(rng.next_trit());
    if (c != 0) p.set_coeff(space.basis()[i], c);
  }
  return p;
}

KwiseReport kwise_check(int r, int d, const std::vector<std::vector<trit>>& points) {
  KwiseReport rep;
  rep.r = r;
  rep.d = d;
  rep.k = static_cast<int>(pow3((d + 1) / 2));
  PolySpace space(r, d);
  space.require_enumerable("kwise_check");
  std::vector<std::uint64_t> pt_idx;
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != r) throw std::invalid_argument("kwise_check: bad point");
    pt_idx.push_back(point_index(x));
  }
  rep.patterns = pow3(static_cast<int>(points.size()));
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    const FnTable t = space.table_at(idx);
    std::uint64_t pattern = 0, base = 1;
    for (auto pi : pt_idx) {
      pattern += t[pi] * base;
      base *= 3;
    }
    ++rep.counts[pattern];
  }
  rep.uniform = rep.counts.size() == rep.patterns;
  const std::uint64_t expected = space.size() / rep.patterns;
  for (const auto& [pat, cnt] : rep.counts)
    if (cnt != expected) rep.uniform = false;
  return rep;
}

bool affinely_independent(const std::vector<std::vector<trit>>& points) {
  if (points.empty()) return true;
  const int r = static_cast<int>(points[0].size());
  const int n = static_cast<int>(points.size()) - 1;
  if (n > r) return false;
  // Row-reduce the difference vectors x_i - x_0.
  std::vector<std::vector<trit>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<trit> row(r);
    for (int j = 0; j < r; ++j) row[j] = gf3_sub(points[i][j], points[0][j]);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < r && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const trit inv = gf3_inv(rows[rank][col]);
    for (int j = 0; j < r; ++j) rows[rank][j] = gf3_mul(rows[rank][j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const trit f = rows[i][col];
      for (int j = 0; j < r; ++j) rows[i][j] = gf3_sub(rows[i][j], gf3_mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace lowdeg
