#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lowdeg/gf3.hpp"

namespace lowdeg {

// Exponent vector of a monomial in r variables; entries lie in {0, 1, 2}
// because x^3 = x on F_3 makes higher individual powers redundant.
using Monomial = std::vector<std::uint8_t>;

inline int monomial_degree(const Monomial& m) {
  int s = 0;
  for (auto e : m) s += e;
  return s;
}

// Graded order: lower total degree first, ties broken so that higher powers
// of earlier variables come first (1, x1, x2, x1^2, x1*x2, x2^2, ...).
struct MonomialCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

// Sparse polynomial over F_3 with individual degrees at most 2 and total
// degree at most the declared bound d.  The coefficient map is canonical:
// no explicit zero coefficients are ever stored.
class Poly {
 public:
  Poly() : r_(0), d_(0) {}
  Poly(int r, int d);

  int r() const { return r_; }
  int degree_bound() const { return d_; }
  // Actual total degree; -1 for the zero polynomial.
  int degree() const;

  const std::map<Monomial, trit, MonomialCmp>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  trit coeff(const Monomial& m) const;
  // Validates exponents <= 2 and total degree <= d; a zero value erases.
  void set_coeff(const Monomial& m, trit c);
  void add_term(const Monomial& m, trit c);

  trit eval(const std::vector<trit>& point) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(trit c) const;
  // Product with canonical reduction x^3 -> x applied to every exponent.
  Poly operator*(const Poly& o) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }

 private:
  int r_;
  int d_;
  std::map<Monomial, trit, MonomialCmp> terms_;
};

// p^2 as an element of P_{r, min(2d, 2r)}.
Poly square_reduce(const Poly& p);

Poly constant_poly(int r, trit c, int d = 0);

}  // namespace lowdeg
