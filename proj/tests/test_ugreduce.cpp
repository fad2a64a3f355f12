#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lowdeg/fourier.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/ugreduce.hpp"

using namespace lowdeg;

TEST_CASE("matrix algebra over the three-element field") {
  const Mat id = Mat::identity(3);
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = random_invertible(3, rng);
    const auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(m.mul(*inv) == id);
    CHECK(inv->mul(m) == id);
  }
  // Same stream, same matrices.
  CounterRng a(11, 0), b(11, 0);
  CHECK(random_invertible(3, a) == random_invertible(3, b));

  Mat sing(2);  // rank one
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("mapping matrix sends the requested vector") {
  CounterRng rng(12, 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<trit> x(3), y(3);
    do
      for (auto& t : x) t = rng.next_trit();
    while (std::all_of(x.begin(), x.end(), [](trit t) { return t == 0; }));
    do
      for (auto& t : y) t = rng.next_trit();
    while (std::all_of(y.begin(), y.end(), [](trit t) { return t == 0; }));
    const Mat m = matrix_mapping(x, y, rng);
    CHECK(m.apply(x) == y);
    CHECK(m.inverse().has_value());
  }
  CounterRng r2(13, 0);
  CHECK_THROWS_AS(matrix_mapping({0, 0}, {1, 0}, r2), std::invalid_argument);
  CHECK_THROWS_AS(matrix_mapping({1, 0}, {0, 0}, r2), std::invalid_argument);
}

TEST_CASE("linear substitution matches pointwise evaluation") {
  CounterRng rng(14, 0);
  const PolySpace space(2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly f = random_poly(space, rng);
    const Mat m = random_invertible(2, rng);
    const Poly g = compose_linear(f, m);
    for (std::uint64_t p = 0; p < 9; ++p) {
      const std::vector<trit> x = point_of_index(p, 2);
      CHECK(g.eval(x) == f.eval(m.apply(x)));
    }
    CHECK(compose_linear_table(poly_to_table(f), m) == poly_to_table(g));
  }
}

TEST_CASE("substitution respects matrix products") {
  CounterRng rng(15, 0);
  const PolySpace space(2, 3);
  for (int trial = 0; trial < 15; ++trial) {
    const Poly f = random_poly(space, rng);
    const Mat m = random_invertible(2, rng);
    const Mat n = random_invertible(2, rng);
    CHECK(compose_linear(f, m.mul(n)) == compose_linear(compose_linear(f, m), n));
  }
}

TEST_CASE("invertible substitution preserves total degree") {
  CounterRng rng(16, 0);
  const PolySpace space(3, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly f = random_poly(space, rng);
    const Mat m = random_invertible(3, rng);
    CHECK(compose_linear(f, m).degree() == f.degree());
  }
}

TEST_CASE("planted instances are fully satisfiable and right regular") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  CHECK(inst.edges.size() == 8);
  CHECK(inst.right_regular());
  CHECK(satisfied_fraction(inst, planted) == Rational(1, 1));
  for (const auto& lab : planted.u) {
    REQUIRE(lab.has_value());
    CHECK(std::any_of(lab->begin(), lab->end(), [](trit t) { return t != 0; }));
  }
  for (const auto& lab : planted.v) {
    REQUIRE(lab.has_value());
    CHECK(std::any_of(lab->begin(), lab->end(), [](trit t) { return t != 0; }));
  }
}

TEST_CASE("corrupting constraints lowers the satisfied fraction exactly") {
  Labeling planted;
  UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  inst = gen_noisy(std::move(inst), planted, 3, 99);
  CHECK(satisfied_fraction(inst, planted) == Rational(5, 8));
}

TEST_CASE("generators are deterministic in the seed") {
  const UGInstance a = gen_random(3, 3, 2, 21);
  const UGInstance b = gen_random(3, 3, 2, 21);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].u == b.edges[i].u);
    CHECK(a.edges[i].v == b.edges[i].v);
    CHECK(a.edges[i].pi == b.edges[i].pi);
  }
  const Labeling la = random_labeling(a, 5);
  const Labeling lb = random_labeling(b, 5);
  CHECK(la.u == lb.u);
  CHECK(la.v == lb.v);
}

TEST_CASE("unlabeled endpoints count against the satisfied fraction") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  Labeling partial = planted;
  partial.u[0].reset();  // half the edges touch u=0
  CHECK(satisfied_fraction(inst, partial) == Rational(1, 2));
}

TEST_CASE("cloud permutations invert each other") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  CHECK(c.functions_per_cloud() == 729);
  for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
    for (std::uint64_t f = 0; f < c.functions_per_cloud(); f += 31) {
      CHECK(c.pushforward(e, c.pullback(e, f)) == f);
      CHECK(c.pullback(e, c.pushforward(e, f)) == f);
    }
}

TEST_CASE("random constraints are satisfied with probability one ninth") {
  double sum = 0;
  const int trials = 400;
  for (int i = 0; i < trials; ++i) {
    const UGInstance inst = gen_random(1, 1, 2, 1000 + i);
    const Labeling l = random_labeling(inst, 2000 + i);
    sum += satisfied_fraction(inst, l).to_double();
  }
  const double p = 1.0 / 9;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(sum / trials - p) <= 3 * sigma);
}

TEST_CASE("one shared neighbor with identity constraints reproduces the product graph") {
  UGInstance inst;
  inst.r = 2;
  inst.num_u = 1;
  inst.num_v = 2;
  inst.edges.push_back(UGEdge{0, 0, Mat::identity(2)});
  inst.edges.push_back(UGEdge{0, 1, Mat::identity(2)});
  const ColoringInstance c(inst, 1);
  const DerandGraph g(2, 1);
  REQUIRE(c.functions_per_cloud() == g.num_vertices());
  for (std::uint64_t f = 0; f < g.num_vertices(); ++f)
    for (std::uint64_t h = 0; h < g.num_vertices(); ++h) {
      CHECK(c.has_edge(0, f, 1, h) == g.has_edge(f, h));
      if (h > f) CHECK(c.has_edge(0, f, 0, h) == g.has_edge(f, h));
    }
}

TEST_CASE("no unique-games edges means no coloring edges") {
  UGInstance inst;
  inst.r = 2;
  inst.num_u = 1;
  inst.num_v = 2;
  const ColoringInstance c(inst, 1);
  for (std::uint64_t f = 0; f < 729; f += 13)
    for (std::uint64_t h = 0; h < 729; h += 17) {
      CHECK_FALSE(c.has_edge(0, f, 1, h));
      CHECK_FALSE(c.has_edge(0, f, 0, h));
    }
}

TEST_CASE("coloring-graph adjacency is symmetric") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 3, 2, 4, &planted);
  const ColoringInstance c(inst, 1);
  CounterRng rng(17, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = static_cast<int>(rng.next_below(3));
    const int w = static_cast<int>(rng.next_below(3));
    const std::uint64_t f = rng.next_below(729);
    const std::uint64_t g = rng.next_below(729);
    CHECK(c.has_edge(v, f, w, g) == c.has_edge(w, g, v, f));
  }
}

TEST_CASE("a satisfying labeling induces an independent third of each cloud") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  const ColoringSubset s = dictator_coloring_set(c, planted);
  CHECK(s.count() == 972);
  CHECK(coloring_is_independent(c, s).independent);

  ColoringSubset empty;
  empty.num_v = inst.num_v;
  empty.n_funcs = c.functions_per_cloud();
  empty.member.assign(empty.num_v * empty.n_funcs, 0);
  CHECK(empty.count() == 0);
  CHECK(coloring_is_independent(c, empty).independent);
}

TEST_CASE("evaluation coloring is proper on every cloud") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  std::vector<int> all(inst.num_v);
  for (int v = 0; v < inst.num_v; ++v) all[v] = v;
  const ColoringReport rep = completeness_color(c, planted, all);
  CHECK(rep.ok());
  CHECK(rep.colored == 2916);
  CHECK(rep.pairs_checked == 379080);

  const ColoringReport none = completeness_color(c, planted, {});
  CHECK(none.ok());
  CHECK(none.colored == 0);
  CHECK(none.pairs_checked == 0);
}

TEST_CASE("coloring an unsatisfied instance is rejected") {
  Labeling planted;
  UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  inst = gen_noisy(std::move(inst), planted, 1, 99);
  const ColoringInstance c(inst, 1);
  std::vector<int> all(inst.num_v);
  for (int v = 0; v < inst.num_v; ++v) all[v] = v;
  CHECK_THROWS_AS(completeness_color(c, planted, all), std::invalid_argument);
}

TEST_CASE("influence decoding recovers the planted labels") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  const FourierContext ctx(2, 2, Exec::Serial);
  const ColoringSubset s = dictator_coloring_set(c, planted);
  const DecodeReport rep = soundness_decode(c, ctx, s, 0.3, 0.1, 1, 100, 3, Exec::Serial);

  CHECK(rep.j_size == 4);
  CHECK(rep.lists_bounded);
  REQUIRE(rep.verts.size() == 4);
  for (const DecodeVertexInfo& vi : rep.verts) {
    CHECK(vi.density == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(vi.in_j);
    REQUIRE(vi.list.size() == 1);
    CHECK(vi.list[0] == *planted.v[vi.v]);
  }
  CHECK(rep.claim_triples == 12);
  CHECK(rep.claim_consistent == 12);
  CHECK(rep.claim_ok);
  CHECK(rep.trials == 100);
  CHECK(rep.mean_satisfied == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.min_satisfied == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(satisfied_fraction(inst, rep.last_labeling) == Rational(1, 1));
}

TEST_CASE("decoding an empty set yields an empty labeling") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  const FourierContext ctx(2, 2, Exec::Serial);
  ColoringSubset empty;
  empty.num_v = inst.num_v;
  empty.n_funcs = c.functions_per_cloud();
  empty.member.assign(empty.num_v * empty.n_funcs, 0);
  const DecodeReport rep = soundness_decode(c, ctx, empty, 0.3, 0.1, 1, 10, 0, Exec::Serial);
  CHECK(rep.j_size == 0);
  CHECK(rep.claim_triples == 0);
  CHECK(rep.mean_satisfied == 0.0);
  for (const auto& lab : rep.last_labeling.u) CHECK_FALSE(lab.has_value());
  for (const auto& lab : rep.last_labeling.v) CHECK_FALSE(lab.has_value());
}
