#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lowdeg/fn_table.hpp"
#include "lowdeg/poly.hpp"
#include "lowdeg/rational.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

// Raised when an exact-enumeration request exceeds the dimension budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest space dimension we enumerate exhaustively (3^12 ~ 5.3e5 elements).
inline constexpr int kMaxEnumDim = 12;

// Monomials spanning P_{r,d} in graded order; d = -1 yields the zero space.
std::vector<Monomial> monomial_basis(int r, int d);

// The space P_{r,d} of polynomials over F_3 with individual degrees <= 2 and
// total degree <= d.  Elements are indexed by their coefficient vector over
// the graded basis, read little-endian in base 3.
class PolySpace {
 public:
  PolySpace(int r, int d);

  int r() const { return r_; }
  int d() const { return d_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const { return pow3(dim()); }
  bool enumerable() const { return dim() <= kMaxEnumDim; }
  void require_enumerable(const char* what) const;

  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<FnTable>& basis_tables() const { return basis_tables_; }

  Poly poly_at(std::uint64_t idx) const;
  FnTable table_at(std::uint64_t idx) const;
  std::uint64_t index_of(const Poly& p) const;
  // Membership plus index lookup for an arbitrary value table.
  bool contains_table(const FnTable& t, std::uint64_t* idx_out = nullptr) const;

  // Group operations on coefficient indices (digitwise mod 3).
  std::uint64_t add_indices(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_indices(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate_index(std::uint64_t a) const;

 private:
  int r_, d_;
  std::vector<Monomial> basis_;
  std::vector<FnTable> basis_tables_;
};

// P_{r,d}^perp = P_{r, 2r-d-1} under the summation pairing.
PolySpace dual_space(int r, int d);

struct DualityReport {
  int r = 0, d = 0;
  int dim_primal = 0, dim_dual = 0;
  bool dims_complement = false;   // dim + dim_dual == 3^r
  bool all_pairs_orthogonal = false;
  std::uint64_t pairs_checked = 0;
  bool ok() const { return dims_complement && all_pairs_orthogonal; }
};

// Exhaustive cross-inner-product check over basis pairs (bilinearity covers
// the rest), plus the dimension count.
DualityReport verify_dual(int r, int d);

struct SchwartzZippelReport {
  int r = 0, d = 0;
  Rational min_fraction{0, 1};   // min over nonzero p of Pr_x[p(x) != 0]
  std::uint64_t argmin_index = 0;
  bool bound_holds = false;      // min_fraction >= 3^{-d/2}, compared exactly
  bool bound_tight = false;      // equality, i.e. min^2 * 3^d == 1
};

SchwartzZippelReport schwartz_zippel_min(int r, int d);

Poly random_poly(const PolySpace& space, CounterRng& rng);

struct KwiseReport {
  int r = 0, d = 0;
  int k = 0;                     // guaranteed independence: 3^{floor((d+1)/2)}
  std::uint64_t patterns = 0;    // 3^{#points}
  bool uniform = false;          // every pattern hit exactly size/patterns times
  std::map<std::uint64_t, std::uint64_t> counts;
};

// Exact restriction-pattern census of uniform p in P_{r,d} on the given
// points (at most k of them for the uniformity claim to be guaranteed).
KwiseReport kwise_check(int r, int d, const std::vector<std::vector<trit>>& points);

bool affinely_independent(const std::vector<std::vector<trit>>& points);

}  // namespace lowdeg
