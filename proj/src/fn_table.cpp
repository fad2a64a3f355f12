#include "lowdeg/fn_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lowdeg {

std::uint64_t pow3(int n) {
  if (n < 0 || n > 39) throw std::invalid_argument("pow3: exponent out of range");
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

std::uint64_t point_index(const std::vector<trit>& x) {
  std::uint64_t idx = 0, base = 1;
  for (auto v : x) {
    idx += v * base;
    base *= 3;
  }
  return idx;
}

std::vector<trit> point_of_index(std::uint64_t idx, int r) {
  std::vector<trit> x(r);
  for (int i = 0; i < r; ++i) {
    x[i] = static_cast<trit>(idx % 3);
    idx /= 3;
  }
  return x;
}

FnTable::FnTable(int r, std::vector<trit> values) : r_(r), values_(std::move(values)) {
  if (values_.size() != pow3(r)) throw std::invalid_argument("FnTable: wrong table length");
  for (auto v : values_)
    if (v > 2) throw std::invalid_argument("FnTable: value out of F_3");
}

int FnTable::support() const {
  int s = 0;
  for (auto v : values_) s += (v != 0);
  return s;
}

FnTable FnTable::operator+(const FnTable& o) const {
  FnTable out = *this;
  out.add_in_place(o);
  return out;
}

FnTable FnTable::operator-(const FnTable& o) const {
  FnTable out = *this;
  out.sub_in_place(o);
  return out;
}

FnTable FnTable::negated() const { return scaled(2); }

FnTable FnTable::scaled(trit c) const {
  FnTable out(r_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = gf3_mul(values_[i], c);
  return out;
}

void FnTable::add_in_place(const FnTable& o) {
  if (r_ != o.r_) throw std::invalid_argument("FnTable: arity mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = gf3_add(values_[i], o.values_[i]);
}

void FnTable::sub_in_place(const FnTable& o) {
  if (r_ != o.r_) throw std::invalid_argument("FnTable: arity mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = gf3_sub(values_[i], o.values_[i]);
}

trit inner_product(const FnTable& a, const FnTable& b) {
  if (a.r() != b.r()) throw std::invalid_argument("inner_product: arity mismatch");
  unsigned acc = 0;
  for (std::uint64_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return static_cast<trit>(acc % 3);
}

namespace {

// In-place radix-3 pass over one variable.  Forward maps coefficient blocks
// (c0, c1, c2) to values (c0, c0+c1+c2, c0+2c1+c2); inverse applies the
// inverse Vandermonde (v0, 2v1+v2, 2v0+2v1+2v2).
void variable_pass(std::vector<trit>& a, int r, bool forward) {
  const std::uint64_t n = a.size();
  for (int v = 0; v < r; ++v) {
    const std::uint64_t stride = pow3(v);
    const std::uint64_t block = stride * 3;
    for (std::uint64_t base = 0; base < n; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        const std::uint64_t i0 = base + off, i1 = i0 + stride, i2 = i1 + stride;
        const unsigned a0 = a[i0], a1 = a[i1], a2 = a[i2];
        if (forward) {
          a[i1] = static_cast<trit>((a0 + a1 + a2) % 3);
          a[i2] = static_cast<trit>((a0 + 2 * a1 + a2) % 3);
        } else {
          a[i1] = static_cast<trit>((2 * a1 + a2) % 3);
          a[i2] = static_cast<trit>((2 * a0 + 2 * a1 + 2 * a2) % 3);
        }
      }
    }
  }
}

}  // namespace

FnTable poly_to_table(const Poly& p) {
  const int r = p.r();
  std::vector<trit> a(pow3(r), 0);
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t idx = 0, base = 1;
    for (int i = 0; i < r; ++i) {
      idx += m[i] * base;
      base *= 3;
    }
    a[idx] = c;
  }
  variable_pass(a, r, /*forward=*/true);
  return FnTable(r, std::move(a));
}

FnTable poly_to_table_direct(const Poly& p) {
  const int r = p.r();
  FnTable out(r);
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = p.eval(point_of_index(i, r));
  return out;
}

Poly table_to_poly(const FnTable& t) {
  const int r = t.r();
  std::vector<trit> a = t.values();
  variable_pass(a, r, /*forward=*/false);
  int deg = 0;
  std::vector<std::pair<Monomial, trit>> found;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Monomial m(r);
    std::uint64_t idx = i;
    for (int v = 0; v < r; ++v) {
      m[v] = static_cast<std::uint8_t>(idx % 3);
      idx /= 3;
    }
    deg = std::max(deg, monomial_degree(m));
    found.emplace_back(std::move(m), a[i]);
  }
  Poly p(r, found.empty() ? 0 : deg);
  for (auto& [m, c] : found) p.set_coeff(m, c);
  return p;
}

Poly point_indicator(const std::vector<trit>& x) {
  const int r = static_cast<int>(x.size());
  Poly acc = constant_poly(r, 1, 0);
  for (int i = 0; i < r; ++i) {
    // 1 - (X_i - x_i)^2
    Poly lin(r, 1);
    Monomial xi(r);
    xi[i] = 1;
    lin.set_coeff(xi, 1);
    lin.add_term(Monomial(r, 0), gf3_neg(x[i]));
    Poly factor = constant_poly(r, 1, 0) - square_reduce(lin);
    acc = acc * factor;
  }
  return acc;
}

}  // namespace lowdeg
