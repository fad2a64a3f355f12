#include <cmath>
#include <numeric>

#include "doctest.h"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/rng.hpp"

using namespace lowdeg;

TEST_CASE("edge weights: symmetry, no loops, unit row mass") {
  const DerandGraph g(2, 1);
  CHECK(g.num_vertices() == 729);
  CHECK(g.denom() == 54);
  for (std::uint64_t f : {0ull, 17ull, 500ull}) {
    CHECK(g.weight_count(f, f) == 0);
    std::uint64_t row = 0;
    for (std::uint64_t fp = 0; fp < g.num_vertices(); ++fp) {
      CHECK(g.weight_count(f, fp) == g.weight_count(fp, f));
      row += g.weight_count(f, fp);
    }
    CHECK(row == g.denom());
  }
}

TEST_CASE("edge weights are translation invariant") {
  const DerandGraph g(2, 1);
  const std::uint64_t h = 123;
  for (std::uint64_t f : {3ull, 88ull})
    for (std::uint64_t fp : {10ull, 400ull})
      CHECK(g.weight_count(f, fp) ==
            g.weight_count(g.space().add_indices(f, h), g.space().add_indices(fp, h)));
}

TEST_CASE("triangle tiling certifies the independence bound") {
  const DerandGraph g(2, 1);
  const TrianglePartitionReport rep = triangle_partition_check(g);
  CHECK(rep.ok());
  CHECK(rep.triangles == 243);
  CHECK(rep.certified_bound == 243);
}

TEST_CASE("every point-evaluation set is a maximum independent set") {
  const DerandGraph g(2, 1);
  for (std::uint64_t x = 0; x < 9; ++x)
    for (trit a = 0; a < 3; ++a) {
      const VertexSubset s = dictator_set(g, x, a);
      CHECK(s.count() == 243);
      CHECK(is_independent(g, s, Exec::Serial).independent);
      CHECK(is_maximal_independent(g, s, Exec::Serial));
    }
}

TEST_CASE("independence scan reports the first violation") {
  const DerandGraph g(2, 1);
  VertexSubset s = dictator_set(g, 0, 0);
  // The set is maximal, so any outside vertex joins with at least one edge.
  std::uint64_t outsider = 0;
  while (s.member[outsider]) ++outsider;
  s.member[outsider] = 1;
  const IndependenceResult res = is_independent(g, s, Exec::Serial);
  CHECK_FALSE(res.independent);
  REQUIRE(res.violation.has_value());
  CHECK(g.has_edge(res.violation->first, res.violation->second));
  CHECK(s.member[res.violation->first]);
  CHECK(s.member[res.violation->second]);
}

TEST_CASE("spectral identity for independent sets") {
  const DerandGraph g(2, 1);
  const FourierContext ctx(2, 2, Exec::Serial);

  const VertexSubset dict = dictator_set(g, 0, 0);
  const IndependenceIdentityReport a = independence_identity(ctx, g, dict, 1e-9, Exec::Serial);
  CHECK(a.holds);
  CHECK(a.lhs == doctest::Approx(-1.0 / 9).epsilon(1e-9));
  CHECK(a.rhs == doctest::Approx(-1.0 / 9).epsilon(1e-9));
  CHECK(a.mean_x == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(a.mean_x_expected == doctest::Approx(-0.5).epsilon(1e-9));

  const VertexSubset greedy = greedy_independent_set(g, 42);
  CHECK(greedy.count() == 100);
  const IndependenceIdentityReport b = independence_identity(ctx, g, greedy, 1e-9, Exec::Serial);
  CHECK(b.holds);
  CHECK(b.gap <= 1e-12);
  CHECK(b.mean_x == doctest::Approx(-greedy.delta() / (1 - greedy.delta())).epsilon(1e-9));
}

TEST_CASE("maximum sets sit on the boolean dictator they came from") {
  const DerandGraph g(2, 1);
  const FourierContext ctx(2, 2, Exec::Serial);
  const VertexSubset s = dictator_set(g, 0, 0);
  const ConcentrationReport c = fourier_concentration(ctx, g, s, 1e-9, Exec::Serial);
  CHECK(c.tail <= 1e-12);
  CHECK(c.fit.point_idx == 0);
  CHECK(c.fit.value_mask == 1u);
  CHECK(c.fit.distance <= 1e-9);
}

TEST_CASE("level-one tail stays below twice the density deficit") {
  const DerandGraph g(2, 1);
  const FourierContext ctx(2, 2, Exec::Serial);
  VertexSubset s = dictator_set(g, 0, 0);
  for (int m = 1; m <= 10; ++m) {
    std::uint64_t v = 0;
    while (!s.member[v]) ++v;
    s.member[v] = 0;
    REQUIRE(is_independent(g, s, Exec::Serial).independent);
    const ConcentrationReport c = fourier_concentration(ctx, g, s, 1e-9, Exec::Serial);
    CHECK(c.eps == doctest::Approx(m / 729.0).epsilon(1e-9));
    CHECK(c.tail_ok);
    CHECK(c.tail <= c.bound + 1e-9);
  }
}

TEST_CASE("greedy search is deterministic and respects explicit orders") {
  const DerandGraph g(2, 1);
  const VertexSubset a = greedy_independent_set(g, 7);
  const VertexSubset b = greedy_independent_set(g, 7);
  CHECK(a.member == b.member);

  // Seeding the order with a known maximum set recovers all of it.
  const VertexSubset dict = dictator_set(g, 2, 1);
  std::vector<std::uint64_t> order;
  for (std::uint64_t v = 0; v < g.num_vertices(); ++v)
    if (dict.member[v]) order.push_back(v);
  for (std::uint64_t v = 0; v < g.num_vertices(); ++v)
    if (!dict.member[v]) order.push_back(v);
  CHECK(greedy_independent_set(g, order).count() == 243);
}

TEST_CASE("exact search attains the triangle bound") {
  const DerandGraph g1(1, 1);
  CHECK(exhaustive_mis(g1).count() == 9);
  CHECK(is_independent(g1, exhaustive_mis(g1), Exec::Serial).independent);

  const DerandGraph g2(2, 1);
  const VertexSubset mis = exhaustive_mis(g2);
  CHECK(mis.count() == 243);
  CHECK(is_independent(g2, mis, Exec::Serial).independent);
}

TEST_CASE("exact search refuses oversized graphs") {
  CHECK_THROWS_AS(exhaustive_mis(DerandGraph(2, 2)), BudgetError);  // dim 9 tiles
}

TEST_CASE("subset bookkeeping") {
  const DerandGraph g(2, 1);
  const VertexSubset s = dictator_set(g, 1, 2);
  CHECK(s.delta() == doctest::Approx(1.0 / 3).epsilon(1e-12));
  const GroupFn ind = s.indicator();
  const double sum = std::accumulate(ind.begin(), ind.end(), cplx(0)).real();
  CHECK(sum == doctest::Approx((double)s.count()).epsilon(1e-12));
}
