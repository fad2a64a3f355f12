#include "lowdeg/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lowdeg {

Poly::Poly(int r, int d) : r_(r), d_(d) {
  if (r < 0) throw std::invalid_argument("Poly: negative variable count");
  if (d < -1 || d > 2 * r) throw std::invalid_argument("Poly: degree bound out of range");
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, monomial_degree(m));
  return deg;
}

trit Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? trit{0} : it->second;
}

void Poly::set_coeff(const Monomial& m, trit c) {
  if (static_cast<int>(m.size()) != r_) throw std::invalid_argument("Poly: monomial arity mismatch");
  for (auto e : m)
    if (e > 2) throw std::invalid_argument("Poly: individual degree exceeds 2");
  if (monomial_degree(m) > d_)
    throw std::invalid_argument("Poly: monomial degree " + std::to_string(monomial_degree(m)) +
                                " exceeds bound " + std::to_string(d_));
  if (c % 3 == 0)
    terms_.erase(m);
  else
    terms_[m] = static_cast<trit>(c % 3);
}

void Poly::add_term(const Monomial& m, trit c) { set_coeff(m, gf3_add(coeff(m), c)); }

trit Poly::eval(const std::vector<trit>& point) const {
  if (static_cast<int>(point.size()) != r_) throw std::invalid_argument("Poly: point arity mismatch");
  trit acc = 0;
  for (const auto& [m, c] : terms_) {
    trit term = c;
    for (int i = 0; i < r_; ++i) term = gf3_mul(term, gf3_pow(point[i], m[i]));
    acc = gf3_add(acc, term);
  }
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  if (r_ != o.r_) throw std::invalid_argument("Poly: arity mismatch in +");
  Poly out(r_, std::max(d_, o.d_));
  out.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) {
    const trit s = gf3_add(out.coeff(m), c);
    if (s == 0)
      out.terms_.erase(m);
    else
      out.terms_[m] = s;
  }
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(2); }

Poly Poly::scaled(trit c) const {
  Poly out(r_, d_);
  if (c % 3 == 0) return out;
  out.terms_ = terms_;
  if (c % 3 != 1)
    for (auto& [m, v] : out.terms_) v = gf3_mul(v, static_cast<trit>(c % 3));
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (r_ != o.r_) throw std::invalid_argument("Poly: arity mismatch in *");
  Poly out(r_, std::min(d_ + o.d_, 2 * r_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(r_);
      for (int i = 0; i < r_; ++i) {
        int e = ma[i] + mb[i];
        if (e >= 3) e -= 2;  // x^3 = x, applied once since e <= 4
        m[i] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, gf3_mul(ca, cb));
    }
  }
  return out;
}

Poly square_reduce(const Poly& p) { return p * p; }

Poly constant_poly(int r, trit c, int d) {
  Poly out(r, d);
  if (c % 3 != 0) out.set_coeff(Monomial(r, 0), static_cast<trit>(c % 3));
  return out;
}

}  // namespace lowdeg
