#pragma once

#include <cstdint>
#include <vector>

#include "lowdeg/gf3.hpp"
#include "lowdeg/poly.hpp"

namespace lowdeg {

std::uint64_t pow3(int n);

// Points of F_3^r are indexed little-endian in base 3: the first coordinate
// is the least significant digit.
std::uint64_t point_index(const std::vector<trit>& x);
std::vector<trit> point_of_index(std::uint64_t idx, int r);

// Dense value table of a function F_3^r -> F_3, indexed by point_index.
class FnTable {
 public:
  FnTable() : r_(0), values_(1, 0) {}
  explicit FnTable(int r) : r_(r), values_(pow3(r), 0) {}
  FnTable(int r, std::vector<trit> values);

  int r() const { return r_; }
  std::uint64_t size() const { return values_.size(); }
  trit operator[](std::uint64_t i) const { return values_[i]; }
  trit& operator[](std::uint64_t i) { return values_[i]; }
  const std::vector<trit>& values() const { return values_; }

  trit at_point(const std::vector<trit>& x) const { return values_[point_index(x)]; }

  int support() const;
  bool is_zero() const { return support() == 0; }

  FnTable operator+(const FnTable& o) const;
  FnTable operator-(const FnTable& o) const;
  FnTable negated() const;
  FnTable scaled(trit c) const;

  void add_in_place(const FnTable& o);
  void sub_in_place(const FnTable& o);

  friend bool operator==(const FnTable& a, const FnTable& b) {
    return a.r_ == b.r_ && a.values_ == b.values_;
  }
  friend bool operator<(const FnTable& a, const FnTable& b) { return a.values_ < b.values_; }

 private:
  int r_;
  std::vector<trit> values_;
};

// sum_x f(x) g(x) in F_3, the pairing behind duality and characters.
trit inner_product(const FnTable& a, const FnTable& b);

// Evaluation at every point via one pass of the 3x3 Vandermonde per
// variable (work 3r * 3^r instead of |terms| * 3^r).
FnTable poly_to_table(const Poly& p);

// Same map computed monomial-by-monomial; independent oracle for tests.
FnTable poly_to_table_direct(const Poly& p);

// Unique interpolating polynomial with individual degrees <= 2; the degree
// bound of the result is its actual total degree (so at most 2r).
Poly table_to_poly(const FnTable& t);

// Indicator of a single point: e_x = prod_i (1 - (X_i - x_i)^2).
Poly point_indicator(const std::vector<trit>& x);

}  // namespace lowdeg
