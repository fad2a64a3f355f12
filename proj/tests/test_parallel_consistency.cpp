// Every parallel kernel must reproduce the serial reference bit for bit:
// reductions are staged into per-item slots before any summation, so thread
// count and scheduling never touch the arithmetic order.
#include "doctest.h"
#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/ugreduce.hpp"

using namespace lowdeg;

namespace {

GroupFn random_fn(std::uint64_t n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  GroupFn a(n);
  for (auto& z : a) z = cplx(rng.next_double() * 2 - 1, rng.next_double() * 2 - 1);
  return a;
}

}  // namespace

TEST_CASE("coset systems agree across execution modes") {
  const CosetSystem s(2, 2, Exec::Serial);
  const CosetSystem p(2, 2, Exec::Parallel);
  REQUIRE(s.num_cosets() == p.num_cosets());
  for (std::uint64_t i = 0; i < s.num_cosets(); ++i) {
    CHECK(s.rep(i).beta == p.rep(i).beta);
    CHECK(s.rep(i).support == p.rep(i).support);
  }
}

TEST_CASE("transforms agree across execution modes") {
  const FourierContext ctx(2, 2, Exec::Serial);
  const GroupFn a = random_fn(ctx.n(), 41);
  const Spectrum ss = ctx.transform(a, Exec::Serial);
  const Spectrum sp = ctx.transform(a, Exec::Parallel);
  CHECK(ss == sp);
  CHECK(ctx.inverse(ss, Exec::Serial) == ctx.inverse(ss, Exec::Parallel));
  CHECK(ctx.orthonormality_max_dev(Exec::Serial) == ctx.orthonormality_max_dev(Exec::Parallel));
}

TEST_CASE("contexts built serially and in parallel are identical") {
  const FourierContext a(2, 1, Exec::Serial);
  const FourierContext b(2, 1, Exec::Parallel);
  REQUIRE(a.n() == b.n());
  for (std::uint64_t c = 0; c < a.lambda().num_cosets(); ++c)
    for (std::uint64_t g = 0; g < a.n(); ++g) CHECK(a.chi_trit(c, g) == b.chi_trit(c, g));
}

TEST_CASE("noise application agrees across execution modes") {
  const PolySpace space(2, 2);
  const NoiseDist dist = make_square_noise(2, 1);
  const GroupFn a = random_fn(space.size(), 42);
  CHECK(apply_noise(space, dist, a, Exec::Serial) == apply_noise(space, dist, a, Exec::Parallel));
}

TEST_CASE("full transform agrees across execution modes") {
  const FullDft dft(2);
  std::vector<cplx> a = random_fn(dft.N(), 43);
  std::vector<cplx> b = a;
  dft.forward(a, Exec::Serial);
  dft.forward(b, Exec::Parallel);
  CHECK(a == b);
}

TEST_CASE("independence scan agrees across execution modes") {
  const DerandGraph g(2, 1);
  VertexSubset s = dictator_set(g, 0, 0);
  std::uint64_t outsider = 0;
  while (s.member[outsider]) ++outsider;
  s.member[outsider] = 1;
  const IndependenceResult rs = is_independent(g, s, Exec::Serial);
  const IndependenceResult rp = is_independent(g, s, Exec::Parallel);
  CHECK(rs.independent == rp.independent);
  CHECK(rs.violation == rp.violation);
}

TEST_CASE("monte carlo moments agree across execution modes") {
  CounterRng rng(44, 0);
  const SparseSpectrum spec = random_sparse_spectrum(4, 6, 2, 6, rng);
  const McEstimate a = moment_mc_subgroup(spec, 2, 5000, 17, Exec::Serial);
  const McEstimate b = moment_mc_subgroup(spec, 2, 5000, 17, Exec::Parallel);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  const McEstimate c = moment_mc_ambient(spec, 2, 5000, 17, Exec::Serial);
  const McEstimate d = moment_mc_ambient(spec, 2, 5000, 17, Exec::Parallel);
  CHECK(c.mean == d.mean);
  CHECK(c.stderr_ == d.stderr_);
}

TEST_CASE("decoder agrees across execution modes") {
  Labeling planted;
  const UGInstance inst = gen_planted(2, 4, 2, 7, &planted);
  const ColoringInstance c(inst, 1);
  const FourierContext ctx(2, 2, Exec::Serial);
  const ColoringSubset s = dictator_coloring_set(c, planted);
  const DecodeReport a = soundness_decode(c, ctx, s, 0.3, 0.1, 1, 50, 3, Exec::Serial);
  const DecodeReport b = soundness_decode(c, ctx, s, 0.3, 0.1, 1, 50, 3, Exec::Parallel);
  CHECK(a.mean_satisfied == b.mean_satisfied);
  CHECK(a.min_satisfied == b.min_satisfied);
  CHECK(a.j_size == b.j_size);
  REQUIRE(a.verts.size() == b.verts.size());
  for (std::size_t i = 0; i < a.verts.size(); ++i) {
    CHECK(a.verts[i].density == b.verts[i].density);
    CHECK(a.verts[i].list == b.verts[i].list);
  }
}
