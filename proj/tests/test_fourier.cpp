#include <cmath>

#include "doctest.h"
#include "lowdeg/fourier.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/space.hpp"

using namespace lowdeg;

namespace {

GroupFn random_fn(std::uint64_t n, CounterRng& rng) {
  GroupFn a(n);
  for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
  return a;
}

// Indicator of f(x0) = c as a function on the context's domain.
GroupFn point_indicator_fn(const FourierContext& ctx, std::uint64_t x0, trit c) {
  GroupFn a(ctx.n());
  for (std::uint64_t g = 0; g < ctx.n(); ++g) a[g] = ctx.elem_table(g)[x0] == c ? 1.0 : 0.0;
  return a;
}

}  // namespace

TEST_CASE("coset census for the quadratic space") {
  const CosetSystem cs(2, 2, Exec::Serial);
  CHECK(cs.num_cosets() == 729);
  std::uint64_t s0 = 0, s1 = 0, s3 = 0;
  for (const auto& rep : cs.reps()) {
    if (rep.support == 0) ++s0;
    if (rep.support <= 1) ++s1;
    if (rep.support <= 3) ++s3;
  }
  CHECK(s0 == 1);
  CHECK(s1 == 19);   // 1 + 9 points x 2 values
  CHECK(s3 == 603);
}

TEST_CASE("coset ids, pilots, and membership") {
  const CosetSystem cs(2, 2, Exec::Serial);
  const PolySpace dual = cs.dual();
  CHECK(dual.d() == 1);
  for (std::uint64_t id : {0ull, 3ull, 100ull, 728ull}) {
    CHECK(cs.coset_id_of(cs.rep(id).beta) == id);
    CHECK(cs.coset_id_of(cs.pilot_of(id)) == id);
    // Shifting by any dual element stays in the same coset.
    const FnTable shifted = cs.rep(id).beta + dual.table_at(7);
    CHECK(cs.same_coset(cs.rep(id).beta, shifted));
    CHECK(cs.coset_id_of(shifted) == id);
  }
}

TEST_CASE("representatives minimize support with table-order tie break") {
  const CosetSystem cs(2, 2, Exec::Serial);
  const PolySpace dual = cs.dual();
  for (std::uint64_t id = 0; id < cs.num_cosets(); id += 37) {
    const FnTable& rep = cs.rep(id).beta;
    for (std::uint64_t j = 0; j < dual.size(); ++j) {
      const FnTable member = rep + dual.table_at(j);
      const int sup = member.support();
      CHECK(sup >= cs.rep(id).support);
      if (sup == cs.rep(id).support) CHECK_FALSE(member < rep);
    }
  }
}

TEST_CASE("characters are orthonormal and transform round trips") {
  const FourierContext ctx(2, 1, Exec::Serial);
  CHECK(ctx.n() == 27);
  CHECK(ctx.orthonormality_max_dev(Exec::Serial) <= 1e-12);

  CounterRng rng(5, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const GroupFn a = random_fn(ctx.n(), rng);
    const Spectrum s = ctx.transform(a, Exec::Serial);
    const GroupFn back = ctx.inverse(s, Exec::Serial);
    for (std::uint64_t g = 0; g < ctx.n(); ++g) CHECK(std::abs(back[g] - a[g]) <= 1e-12);
    CHECK(ctx.parseval_gap(a, s) <= 1e-12);
  }
}

TEST_CASE("transform of a character is a delta") {
  const FourierContext ctx(2, 1, Exec::Serial);
  const Spectrum s = ctx.transform(ctx.character_fn(5), Exec::Serial);
  for (std::uint64_t i = 0; i < ctx.n(); ++i)
    CHECK(std::abs(s[i] - (i == 5 ? 1.0 : 0.0)) <= 1e-12);
}

TEST_CASE("constant function concentrates at the trivial coset") {
  const FourierContext ctx(2, 2, Exec::Serial);
  GroupFn a(ctx.n(), cplx(0.25, 0));
  const Spectrum s = ctx.transform(a, Exec::Serial);
  CHECK(std::abs(s[0] - 0.25) <= 1e-12);
  CHECK(ctx.lambda().rep(0).support == 0);
  CHECK(ctx.spectrum_mass(s) == doctest::Approx(0.0625).epsilon(1e-9));
}

TEST_CASE("point indicator influences") {
  const FourierContext ctx(2, 2, Exec::Serial);
  CHECK(ctx.max_influence_k() == 1);
  const GroupFn a = point_indicator_fn(ctx, 4, 0);
  const Spectrum s = ctx.transform(a, Exec::Serial);
  // A = (1/3) sum_c w^{c f(x0)}: two weight-one frequencies of mass 1/9 each.
  CHECK(ctx.influence(s, 4, 1) == doctest::Approx(2.0 / 9).epsilon(1e-9));
  CHECK(ctx.influence(s, 2, 1) <= 1e-12);
}

TEST_CASE("nearest boolean dictator identifies an exact one") {
  const FourierContext ctx(2, 2, Exec::Serial);
  const GroupFn a = point_indicator_fn(ctx, 4, 1);
  const DictatorFit fit = nearest_dictator(ctx, a);
  CHECK(fit.point_idx == 4);
  CHECK(fit.value_mask == 2u);  // accepted value set {1}
  CHECK(fit.distance <= 1e-12);
}

TEST_CASE("distance to the annihilator") {
  const FnTable zero(2);
  CHECK(distance_to_dual(2, 1, zero).distance == 0);
  CHECK(distance_to_dual(2, 1, zero).exact);
  FnTable pt(2);
  pt[1] = 1;
  const DualDistance dd = distance_to_dual(2, 1, pt);
  CHECK(dd.exact);
  CHECK(dd.distance == 1);  // a quadratic matches the point indicator off one point
  // Members of the annihilator itself are at distance zero.
  const PolySpace dual = dual_space(2, 1);
  CHECK(distance_to_dual(2, 1, dual.table_at(13)).distance == 0);
}

TEST_CASE("ambient transform round trip and frequency weights") {
  const FullDft dft(2);
  CHECK(dft.N() == 19683);
  CHECK(dft.points() == 9);
  std::uint64_t w0 = 0, w1 = 0;
  for (std::uint64_t b = 0; b < dft.N(); ++b) {
    if (dft.weight(b) == 0) ++w0;
    if (dft.weight(b) == 1) ++w1;
  }
  CHECK(w0 == 1);
  CHECK(w1 == 18);

  CounterRng rng(7, 2);
  std::vector<cplx> a(dft.N());
  for (auto& v : a) v = cplx(rng.next_gaussian(), rng.next_gaussian());
  std::vector<cplx> b = a;
  dft.forward(b, Exec::Serial);
  dft.inverse(b, Exec::Serial);
  double worst = 0;
  for (std::uint64_t i = 0; i < dft.N(); ++i) worst = std::max(worst, std::abs(b[i] - a[i]));
  CHECK(worst <= 1e-9);
}

TEST_CASE("ambient transform of a character is a unit delta") {
  const FullDft dft(2);
  std::vector<cplx> a(dft.N());
  for (std::uint64_t g = 0; g < dft.N(); ++g) a[g] = omega_pow(dft.digit(g, 1));
  dft.forward(a, Exec::Serial);
  for (std::uint64_t b = 0; b < dft.N(); ++b)
    CHECK(std::abs(a[b] - (b == 3 ? 1.0 : 0.0)) <= 1e-9);
}

TEST_CASE("dense context rejects oversized domains") {
  CHECK_THROWS_AS(FourierContext(2, 4, Exec::Serial), BudgetError);  // dim 9 > 7
}
