#include "lowdeg/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lowdeg {

namespace {

// Row-reduce the (dim x 3^r) evaluation matrix of the primal basis to find a
// set of pivot points, then invert the square submatrix on those points.
// This yields, for every syndrome, a coset member supported on the pivots.
void build_pivots(const PolySpace& primal, std::vector<int>* pivot_points,
                  std::vector<trit>* pivot_inv) {
  const int m = primal.dim();
  const int cols = static_cast<int>(pow3(primal.r()));
  std::vector<std::vector<trit>> rows(m, std::vector<trit>(cols));
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < cols; ++x) rows[i][x] = primal.basis_tables()[i][x];

  pivot_points->clear();
  int rank = 0;
  for (int col = 0; col < cols && rank < m; ++col) {
    int pr = -1;
    for (int i = rank; i < m; ++i)
      if (rows[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    const trit inv = gf3_inv(rows[rank][col]);
    if (inv != 1)
      for (int j = 0; j < cols; ++j) rows[rank][j] = gf3_mul(rows[rank][j], inv);
    for (int i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const trit f = rows[i][col];
      for (int j = 0; j < cols; ++j) rows[i][j] = gf3_sub(rows[i][j], gf3_mul(f, rows[rank][j]));
    }
    pivot_points->push_back(col);
    ++rank;
  }
  if (rank != m) throw std::logic_error("CosetSystem: basis evaluation matrix is rank deficient");

  // Invert the original submatrix S_P[i][j] = basis_i(pivot_j).
  std::vector<std::vector<trit>> a(m, std::vector<trit>(2 * m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = primal.basis_tables()[i][(*pivot_points)[j]];
    a[i][m + i] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int pr = -1;
    for (int i = col; i < m; ++i)
      if (a[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) throw std::logic_error("CosetSystem: pivot submatrix singular");
    std::swap(a[col], a[pr]);
    const trit inv = gf3_inv(a[col][col]);
    if (inv != 1)
      for (int j = 0; j < 2 * m; ++j) a[col][j] = gf3_mul(a[col][j], inv);
    for (int i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const trit f = a[i][col];
      for (int j = 0; j < 2 * m; ++j) a[i][j] = gf3_sub(a[i][j], gf3_mul(f, a[col][j]));
    }
  }
  pivot_inv->assign(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) (*pivot_inv)[i * m + j] = a[i][m + j];
}

bool rep_less(const FnTable& a, int sa, const FnTable& b, int sb) {
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

CosetSystem::CosetSystem(int r, int d, Exec exec)
    : r_(r), d_(d), primal_(r, d), dual_(r, 2 * r - d - 1) {
  if (d < 0 || d > 2 * r) throw std::invalid_argument("CosetSystem: d out of range");
  primal_.require_enumerable("CosetSystem (coset count)");
  dual_.require_enumerable("CosetSystem (dual scan)");
  build_pivots(primal_, &pivot_points_, &pivot_inv_);

  std::vector<FnTable> dual_tables(dual_.size());
  parallel_for(exec, static_cast<std::int64_t>(dual_.size()),
               [&](std::int64_t j) { dual_tables[j] = dual_.table_at(j); });

  reps_.resize(primal_.size());
  parallel_for(exec, static_cast<std::int64_t>(primal_.size()), [&](std::int64_t id) {
    const FnTable pilot = pilot_of(static_cast<std::uint64_t>(id));
    FnTable best = pilot;
    int best_sup = best.support();
    FnTable cand(r_);
    for (const auto& g : dual_tables) {
      cand = pilot;
      cand.add_in_place(g);
      const int sup = cand.support();
      if (rep_less(cand, sup, best, best_sup)) {
        best = cand;
        best_sup = sup;
      }
    }
    reps_[id] = CosetRep{std::move(best), best_sup};
  });
}

std::uint64_t CosetSystem::coset_id_of(const FnTable& beta) const {
  std::uint64_t id = 0, base = 1;
  for (const auto& bt : primal_.basis_tables()) {
    id += inner_product(bt, beta) * base;
    base *= 3;
  }
  return id;
}

FnTable CosetSystem::pilot_of(std::uint64_t id) const {
  const int m = primal_.dim();
  std::vector<trit> s(m);
  for (int i = 0; i < m; ++i) {
    s[i] = static_cast<trit>(id % 3);
    id /= 3;
  }
  FnTable out(r_);
  for (int j = 0; j < m; ++j) {
    unsigned c = 0;
    for (int i = 0; i < m; ++i) c += pivot_inv_[j * m + i] * s[i];
    out[pivot_points_[j]] = static_cast<trit>(c % 3);
  }
  return out;
}

bool CosetSystem::same_coset(const FnTable& a, const FnTable& b) const {
  return dual_.contains_table(a - b);
}

FourierContext::FourierContext(int r, int d, Exec exec)
    : r_(r), d_(d), domain_(r, d), lambda_(r, d, exec), n_(0) {
  if (domain_.dim() > kMaxContextDim)
    throw BudgetError("FourierContext: domain dimension " + std::to_string(domain_.dim()) +
                      " exceeds the dense character-table budget of " +
                      std::to_string(kMaxContextDim));
  n_ = domain_.size();
  elem_tables_.resize(n_);
  parallel_for(exec, static_cast<std::int64_t>(n_),
               [&](std::int64_t g) { elem_tables_[g] = domain_.table_at(g); });
  char_trits_.assign(n_ * n_, 0);
  parallel_for(exec, static_cast<std::int64_t>(n_), [&](std::int64_t i) {
    const FnTable& beta = lambda_.rep(i).beta;
    trit* row = char_trits_.data() + static_cast<std::uint64_t>(i) * n_;
    for (std::uint64_t g = 0; g < n_; ++g) row[g] = inner_product(beta, elem_tables_[g]);
  });
}

GroupFn FourierContext::character_fn(std::uint64_t coset) const {
  GroupFn out(n_);
  for (std::uint64_t g = 0; g < n_; ++g) out[g] = chi(coset, g);
  return out;
}

Spectrum FourierContext::transform(const GroupFn& a, Exec exec) const {
  if (a.size() != n_) throw std::invalid_argument("transform: wrong length");
  Spectrum out(n_);
  const double inv_n = 1.0 / static_cast<double>(n_);
  parallel_for(exec, static_cast<std::int64_t>(n_), [&](std::int64_t i) {
    const trit* row = char_trits_.data() + static_cast<std::uint64_t>(i) * n_;
    cplx acc[3] = {};
    for (std::uint64_t g = 0; g < n_; ++g) acc[row[g]] += a[g];
    // conj(omega^c) = omega^{3-c}
    out[i] = (acc[0] + acc[1] * omega_pow(2) + acc[2] * omega_pow(1)) * inv_n;
  });
  return out;
}

GroupFn FourierContext::inverse(const Spectrum& s, Exec exec) const {
  if (s.size() != n_) throw std::invalid_argument("inverse: wrong length");
  GroupFn out(n_);
  parallel_for(exec, static_cast<std::int64_t>(n_), [&](std::int64_t g) {
    cplx acc[3] = {};
    for (std::uint64_t i = 0; i < n_; ++i) acc[char_trits_[i * n_ + g]] += s[i];
    out[g] = acc[0] + acc[1] * omega_pow(1) + acc[2] * omega_pow(2);
  });
  return out;
}

double FourierContext::norm2_sq(const GroupFn& a) const {
  double acc = 0.0;
  for (const auto& v : a) acc += std::norm(v);
  return acc / static_cast<double>(n_);
}

double FourierContext::spectrum_mass(const Spectrum& s) const {
  double acc = 0.0;
  for (const auto& v : s) acc += std::norm(v);
  return acc;
}

double FourierContext::parseval_gap(const GroupFn& a, const Spectrum& s) const {
  return std::abs(norm2_sq(a) - spectrum_mass(s));
}

int FourierContext::max_influence_k() const {
  return static_cast<int>((pow3((d_ + 1) / 2) - 1) / 2);
}

double FourierContext::influence(const Spectrum& s, std::uint64_t point_idx, int k) const {
  if (2 * static_cast<std::uint64_t>(k) >= pow3((d_ + 1) / 2))
    throw std::invalid_argument(
        "influence: k = " + std::to_string(k) +
        " is outside the well-defined range (need 2k < 3^floor((d+1)/2))");
  double acc = 0.0;
  for (std::uint64_t i = 0; i < n_; ++i) {
    const CosetRep& rep = lambda_.rep(i);
    if (rep.support <= k && rep.beta[point_idx] != 0) acc += std::norm(s[i]);
  }
  return acc;
}

double FourierContext::orthonormality_max_dev(Exec exec) const {
  std::vector<double> row_max(n_, 0.0);
  parallel_for(exec, static_cast<std::int64_t>(n_), [&](std::int64_t i) {
    const trit* ri = char_trits_.data() + static_cast<std::uint64_t>(i) * n_;
    double worst = 0.0;
    for (std::uint64_t j = 0; j < n_; ++j) {
      const trit* rj = char_trits_.data() + j * n_;
      std::uint64_t cnt[3] = {0, 0, 0};
      for (std::uint64_t g = 0; g < n_; ++g) ++cnt[(ri[g] + 3 - rj[g]) % 3];
      cplx val = (static_cast<double>(cnt[0]) * omega_pow(0) +
                  static_cast<double>(cnt[1]) * omega_pow(1) +
                  static_cast<double>(cnt[2]) * omega_pow(2)) /
                 static_cast<double>(n_);
      if (static_cast<std::uint64_t>(i) == j) val -= 1.0;
      worst = std::max(worst, std::abs(val));
    }
    row_max[i] = worst;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

DictatorFit nearest_dictator(const FourierContext& ctx, const GroupFn& a) {
  DictatorFit best;
  double best_sq = -1.0;
  const std::uint64_t points = pow3(ctx.r());
  for (std::uint64_t x = 0; x < points; ++x) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      double acc = 0.0;
      for (std::uint64_t g = 0; g < ctx.n(); ++g) {
        const double b = ((mask >> ctx.elem_table(g)[x]) & 1u) != 0 ? 1.0 : 0.0;
        const double diff = a[g].real() - b;
        acc += diff * diff;
      }
      acc /= static_cast<double>(ctx.n());
      if (best_sq < 0.0 || acc < best_sq) {
        best_sq = acc;
        best = DictatorFit{x, mask, std::sqrt(acc)};
      }
    }
  }
  return best;
}

DualDistance distance_to_dual(int r, int d, const FnTable& beta, std::uint64_t samples,
                              std::uint64_t seed) {
  const PolySpace dual = dual_space(r, d);
  DualDistance out;
  auto hamming = [&](const FnTable& g) {
    int dist = 0;
    for (std::uint64_t x = 0; x < beta.size(); ++x) dist += (beta[x] != g[x]);
    return dist;
  };
  if (dual.enumerable()) {
    out.exact = true;
    out.distance = static_cast<int>(beta.size());
    for (std::uint64_t j = 0; j < dual.size(); ++j)
      out.distance = std::min(out.distance, hamming(dual.table_at(j)));
    return out;
  }
  out.exact = false;
  out.distance = hamming(FnTable(r));
  CounterRng rng(seed, 77);
  for (std::uint64_t s = 0; s < samples; ++s) {
    FnTable g(r);
    for (int i = 0; i < dual.dim(); ++i) {
      const trit c = static_cast<trit>(rng.next_trit());
      if (c != 0) g.add_in_place(dual.basis_tables()[i].scaled(c));
    }
    out.distance = std::min(out.distance, hamming(g));
  }
  return out;
}

FullDft::FullDft(int r) : r_(r), n_points_(static_cast<int>(pow3(r))) {
  if (r < 0 || r > 2)
    throw BudgetError("FullDft: the full function space is only enumerable for r <= 2");
  N_ = pow3(n_points_);
  weights_.resize(N_);
  weights_[0] = 0;
  for (std::uint64_t i = 1; i < N_; ++i)
    weights_[i] = static_cast<std::uint8_t>(weights_[i / 3] + (i % 3 != 0));
}

trit FullDft::digit(std::uint64_t idx, int pos) const {
  for (int i = 0; i < pos; ++i) idx /= 3;
  return static_cast<trit>(idx % 3);
}

std::uint64_t FullDft::add_indices(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0, base = 1;
  for (int i = 0; i < n_points_; ++i) {
    out += ((a % 3 + b % 3) % 3) * base;
    a /= 3;
    b /= 3;
    base *= 3;
  }
  return out;
}

std::uint64_t FullDft::negate_index(std::uint64_t a) const {
  std::uint64_t out = 0, base = 1;
  for (int i = 0; i < n_points_; ++i) {
    out += ((3 - a % 3) % 3) * base;
    a /= 3;
    base *= 3;
  }
  return out;
}

namespace {

void dft_passes(std::vector<cplx>& a, int n_digits, bool forward, Exec exec) {
  const std::uint64_t N = a.size();
  const cplx w1 = omega_pow(forward ? 2 : 1);
  const cplx w2 = omega_pow(forward ? 1 : 2);
  std::uint64_t stride = 1;
  for (int pos = 0; pos < n_digits; ++pos, stride *= 3) {
    const std::uint64_t butterflies = N / 3;
    const std::uint64_t s = stride;
    parallel_for(exec, static_cast<std::int64_t>(butterflies), [&](std::int64_t t) {
      const std::uint64_t off = static_cast<std::uint64_t>(t) % s;
      const std::uint64_t base = (static_cast<std::uint64_t>(t) / s) * 3 * s;
      const std::uint64_t i0 = base + off, i1 = i0 + s, i2 = i1 + s;
      const cplx a0 = a[i0], a1 = a[i1], a2 = a[i2];
      a[i0] = a0 + a1 + a2;
      a[i1] = a0 + a1 * w1 + a2 * w2;
      a[i2] = a0 + a1 * w2 + a2 * w1;
    });
  }
}

}  // namespace

void FullDft::forward(std::vector<cplx>& a, Exec exec) const {
  if (a.size() != N_) throw std::invalid_argument("FullDft: wrong length");
  dft_passes(a, n_points_, /*forward=*/true, exec);
  const double inv_n = 1.0 / static_cast<double>(N_);
  parallel_for(exec, static_cast<std::int64_t>(N_), [&](std::int64_t i) { a[i] *= inv_n; });
}

void FullDft::inverse(std::vector<cplx>& a, Exec exec) const {
  if (a.size() != N_) throw std::invalid_argument("FullDft: wrong length");
  dft_passes(a, n_points_, /*forward=*/false, exec);
}

double FullDft::influence(const std::vector<cplx>& spectrum, int point_pos, int k) const {
  if (2 * static_cast<std::uint64_t>(k) >= pow3(r_))
    throw std::invalid_argument("FullDft::influence: need 2k < 3^r");
  const std::uint64_t p = pow3(point_pos);
  double acc = 0.0;
  for (std::uint64_t b = 0; b < N_; ++b)
    if (weights_[b] <= k && (b / p) % 3 != 0) acc += std::norm(spectrum[b]);
  return acc;
}

}  // namespace lowdeg
