// Command line front end.  Every run prints a config line first so reports
// are self-describing, and all randomness flows through the seed flag, so
// identical invocations produce identical bytes.

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lowdeg/cayley.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/io.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/space.hpp"
#include "lowdeg/suites.hpp"
#include "lowdeg/ugreduce.hpp"

using namespace lowdeg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

struct Opts {
  int r = 2, d = 1, k = 1, t = 2;
  double eps = 0.5, mu = 0.3, delta = 0.1, tol = 1e-9;
  std::uint64_t seed = 0, samples = 0, trials = 100;
  int num_u = 2, num_v = 4, corrupt = 0;
  bool force = false, serial = false, random_inst = false;
  std::string out, labels_out, noise_out, in, labels, op = "T";

  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
};

std::uint64_t space_elems(int r, int d) {
  const int dim = PolySpace(r, d).dim();
  return dim > 38 ? ~0ull : pow3(dim);
}

// Soft pre-estimation gate; the library's hard enumeration caps still apply
// behind it.
void gate(const std::string& what, std::uint64_t elems, bool force) {
  constexpr std::uint64_t soft = 59049;  // 3^10
  if (elems > soft && !force)
    throw UsageError(fmt("%s: estimated %llu elements exceeds the default budget; pass --force",
                         what.c_str(), (unsigned long long)elems));
}

void emit(const std::string& text, const std::string& out_path) {
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) io::write_file(out_path, text);
}

io::json config_json(const std::string& cmd, const Opts& o) {
  io::json j;
  j["cmd"] = cmd;
  j["r"] = o.r;
  j["d"] = o.d;
  j["seed"] = o.seed;
  j["tol"] = o.tol;
  j["exec"] = o.serial ? "serial" : "parallel";
  return j;
}

// ---------------------------------------------------------------- verify --

int run_verify(const Opts& o, const std::string& suite, bool dims_explicit) {
  SuiteParams p;
  p.r = o.r;
  p.d = o.d;
  p.k = o.k;
  p.t = o.t;
  p.eps = o.eps;
  p.tol = o.tol;
  p.seed = o.seed;
  p.samples = o.samples;
  p.exec = o.exec();
  if (suite == "moments" && !dims_explicit) {
    p.r = 4;
    p.d = 3;
    p.k = 2;
    p.t = 2;
  }

  if (p.r < 1 || p.r > 8) throw UsageError("--r must be in [1, 8]");
  if (p.tol <= 0) throw UsageError("--tol must be positive");
  const bool on_half_degree = suite == "all" || suite == "graph" || suite == "interp" ||
                              suite == "pipeline" || suite == "eig-T" || suite == "eig-S" ||
                              suite == "moments";
  if (p.d < 0 || p.d > 2 * p.r || (on_half_degree && p.d > p.r))
    throw UsageError(fmt("--d %d out of range for suite %s at r=%d", p.d, suite.c_str(), p.r));
  if (suite == "moments") {
    if (p.k < 1 || p.t < 1) throw UsageError("moments needs k >= 1 and t >= 1");
    std::uint64_t cap = 1;
    for (int i = 1; i < p.d; ++i) cap *= 3;
    if (2ull * p.k * p.t > cap)
      throw UsageError(fmt("moments needs 2kt <= 3^(d-1): 2*%d*%d > %llu", p.k, p.t,
                           (unsigned long long)cap));
  }
  if ((suite == "pipeline" || suite == "xi" || suite == "all") && p.r > 2)
    throw UsageError("ambient-space enumeration in this suite requires r <= 2");
  if (suite == "pipeline" && (p.eps <= 0 || p.eps > 1))
    throw UsageError("--eps must be in (0, 1]");

  // Moment agreement works on sparse tuple sums, so it skips the dense gate.
  if (on_half_degree && suite != "moments")
    gate("suite " + suite, space_elems(p.r, 2 * p.d), o.force);
  if (suite == "parseval" || suite == "all") gate("suite " + suite, space_elems(p.r, p.d), o.force);

  std::vector<SuiteResult> res;
  if (suite == "all")
    res = suite_all(p);
  else if (suite == "dual")
    res.push_back(suite_duality(p));
  else if (suite == "sz")
    res.push_back(suite_schwartz_zippel(p));
  else if (suite == "kwise")
    res.push_back(suite_kwise(p));
  else if (suite == "parseval")
    res.push_back(suite_fourier_core(p));
  else if (suite == "eig-T")
    res.push_back(suite_eig_square(p));
  else if (suite == "eig-S")
    res.push_back(suite_eig_subspace(p));
  else if (suite == "graph")
    res.push_back(suite_graph(p));
  else if (suite == "moments")
    res.push_back(suite_moments(p));
  else if (suite == "interp")
    res.push_back(suite_interpolation(p));
  else if (suite == "pipeline")
    res.push_back(suite_pipeline(p));
  else if (suite == "xi")
    res.push_back(suite_xi(p));

  std::string text =
      fmt("config: cmd=verify suite=%s r=%d d=%d k=%d t=%d eps=%g seed=%llu samples=%llu "
          "tol=%g exec=%s\n",
          suite.c_str(), p.r, p.d, p.k, p.t, p.eps, (unsigned long long)p.seed,
          (unsigned long long)p.samples, p.tol, p.exec == Exec::Serial ? "serial" : "parallel");
  text += render_results(res);
  emit(text, o.out);
  return std::all_of(res.begin(), res.end(), [](const SuiteResult& r) { return r.ok; }) ? 0 : 1;
}

// ----------------------------------------------------------------- graph --

void validate_graph_params(const Opts& o) {
  if (o.r < 1 || o.r > 8) throw UsageError("--r must be in [1, 8]");
  if (o.d < 0 || o.d > o.r) throw UsageError("--d must be in [0, r]");
}

int run_graph(const Opts& o, const std::string& action) {
  validate_graph_params(o);
  gate("graph " + action, space_elems(o.r, 2 * o.d), o.force);
  const std::string cfg = fmt("config: cmd=graph action=%s r=%d d=%d seed=%llu tol=%g exec=%s\n",
                              action.c_str(), o.r, o.d, (unsigned long long)o.seed, o.tol,
                              o.serial ? "serial" : "parallel");
  const DerandGraph g(o.r, o.d);

  if (action == "build") {
    if (o.out.empty()) throw UsageError("graph build needs --out for the edge list");
    std::string csv = "# " + cfg + io::graph_edges_csv(g);
    io::write_file(o.out, csv);
    std::uint64_t lines = std::count(csv.begin(), csv.end(), '\n');
    std::fputs(cfg.c_str(), stdout);
    std::printf("vertices=%llu edge_pairs=%llu denominator=%llu wrote %s\n",
                (unsigned long long)g.num_vertices(), (unsigned long long)(lines - 2),
                (unsigned long long)g.denom(), o.out.c_str());
    if (!o.noise_out.empty()) {
      io::json nj = io::noise_support_json(g.noise());
      nj["config"] = config_json("graph build", o);
      io::write_file(o.noise_out, nj.dump(2) + "\n");
      std::printf("noise support -> %s\n", o.noise_out.c_str());
    }
    return 0;
  }

  if (action == "check") {
    SuiteParams p;
    p.r = o.r;
    p.d = o.d;
    p.tol = o.tol;
    p.seed = o.seed;
    p.exec = o.exec();
    const SuiteResult res = suite_graph(p);
    emit(cfg + res.text, o.out);
    return res.ok ? 0 : 1;
  }

  if (action == "mis") {
    const int dim = PolySpace(o.r, 2 * o.d).dim();
    if (dim > 7)
      throw UsageError(fmt("exact search needs dim <= 7, got %d; no --force override", dim));
    const TrianglePartitionReport tri = triangle_partition_check(g);
    const VertexSubset mis = exhaustive_mis(g);
    const bool ok = tri.ok() && mis.count() == tri.certified_bound;
    std::string text = cfg;
    text += fmt("  triangles=%llu certified_bound=%llu mis=%llu\n",
                (unsigned long long)tri.triangles, (unsigned long long)tri.certified_bound,
                (unsigned long long)mis.count());
    text += fmt("  result: %s\n", ok ? "pass" : "fail");
    emit(text, o.out);
    return ok ? 0 : 1;
  }

  // identity: the spectral constraint every independent set satisfies.
  const int dim = PolySpace(o.r, 2 * o.d).dim();
  if (dim > kMaxContextDim)
    throw UsageError(fmt("identity needs a transform context (dim <= %d), got %d",
                         kMaxContextDim, dim));
  const FourierContext ctx(o.r, 2 * o.d, o.exec());
  const VertexSubset dict = dictator_set(g, 0, 0);
  const VertexSubset greedy = greedy_independent_set(g, o.seed);
  const IndependenceIdentityReport a = independence_identity(ctx, g, dict, o.tol, o.exec());
  const IndependenceIdentityReport b = independence_identity(ctx, g, greedy, o.tol, o.exec());
  std::string text = cfg;
  text += fmt("  point set:  delta=%.9g lhs=%.9g rhs=%.9g EX=%.9g holds=%d\n", a.delta, a.lhs,
              a.rhs, a.mean_x, (int)a.holds);
  text += fmt("  greedy set: delta=%.9g lhs=%.9g rhs=%.9g EX=%.9g holds=%d\n", b.delta, b.lhs,
              b.rhs, b.mean_x, (int)b.holds);
  text += fmt("  result: %s\n", a.holds && b.holds ? "pass" : "fail");
  emit(text, o.out);
  return a.holds && b.holds ? 0 : 1;
}

// ---------------------------------------------------------------- reduce --

UGInstance load_instance(const std::string& path) {
  if (path.empty()) throw UsageError("--in <instance.json> is required");
  return io::ug_from_json(io::json::parse(io::read_file(path)));
}

Labeling load_labeling(const std::string& path, const UGInstance& inst) {
  if (path.empty()) throw UsageError("--labels <labeling.json> is required");
  return io::labeling_from_json(io::json::parse(io::read_file(path)), inst.num_u, inst.num_v);
}

std::string label_str(const std::vector<trit>& x) {
  std::string s;
  for (trit c : x) s += char('0' + c);
  return s;
}

int run_reduce(const Opts& o, const std::string& action) {
  if (action == "gen") {
    if (o.num_u < 1 || o.num_v < 1 || o.r < 1) throw UsageError("need --num-u, --num-v, --r >= 1");
    if (o.corrupt < 0 || o.corrupt > o.num_u * o.num_v)
      throw UsageError("--corrupt out of range");
    if (o.random_inst && o.corrupt > 0)
      throw UsageError("--corrupt applies to planted instances only");
    if (o.out.empty()) throw UsageError("reduce gen needs --out");
    const std::string cfg =
        fmt("config: cmd=reduce action=gen num_u=%d num_v=%d r=%d corrupt=%d random=%d "
            "seed=%llu\n",
            o.num_u, o.num_v, o.r, o.corrupt, (int)o.random_inst, (unsigned long long)o.seed);
    Labeling planted;
    UGInstance inst = o.random_inst ? gen_random(o.num_u, o.num_v, o.r, o.seed)
                                    : gen_planted(o.num_u, o.num_v, o.r, o.seed, &planted);
    if (o.corrupt > 0) inst = gen_noisy(std::move(inst), planted, o.corrupt, o.seed);
    io::json j = io::ug_to_json(inst);
    j["config"] = config_json("reduce gen", o);
    io::write_file(o.out, j.dump(2) + "\n");
    std::fputs(cfg.c_str(), stdout);
    std::printf("instance: %d x %d, %zu edges -> %s\n", inst.num_u, inst.num_v,
                inst.edges.size(), o.out.c_str());
    if (!o.labels_out.empty()) {
      const Labeling l = o.random_inst ? random_labeling(inst, o.seed) : planted;
      io::write_file(o.labels_out, io::labeling_to_json(l).dump(2) + "\n");
      const Rational sat = satisfied_fraction(inst, l);
      std::printf("labeling satisfies %lld/%lld -> %s\n", (long long)sat.num,
                  (long long)sat.den, o.labels_out.c_str());
    }
    return 0;
  }

  if (action == "stats") {
    const UGInstance inst = load_instance(o.in);
    std::printf("config: cmd=reduce action=stats in=%s\n", o.in.c_str());
    std::printf("  r=%d U=%d V=%d edges=%zu right_regular=%d complete=%d\n", inst.r, inst.num_u,
                inst.num_v, inst.edges.size(), (int)inst.right_regular(),
                (int)(inst.edges.size() == (std::size_t)inst.num_u * inst.num_v));
    if (!o.labels.empty()) {
      const Labeling l = load_labeling(o.labels, inst);
      const Rational sat = satisfied_fraction(inst, l);
      std::printf("  labeling satisfies %lld/%lld = %.6g\n", (long long)sat.num,
                  (long long)sat.den, (double)sat.num / (double)sat.den);
    }
    return 0;
  }

  // The remaining actions build the coloring graph.
  const UGInstance inst = load_instance(o.in);
  if (o.d < 0 || o.d > inst.r) throw UsageError("--d must be in [0, r]");
  gate("reduce " + action, (std::uint64_t)inst.num_v * space_elems(inst.r, 2 * o.d), o.force);
  const ColoringInstance c(inst, o.d);
  const std::string cfg = fmt("config: cmd=reduce action=%s in=%s d=%d seed=%llu tol=%g\n",
                              action.c_str(), o.in.c_str(), o.d, (unsigned long long)o.seed,
                              o.tol);

  if (action == "build") {
    std::fputs(cfg.c_str(), stdout);
    std::printf("  clouds=%d functions_per_cloud=%llu vertices=%llu noise_atoms=%zu "
                "denominator=%llu\n",
                inst.num_v, (unsigned long long)c.functions_per_cloud(),
                (unsigned long long)(inst.num_v * c.functions_per_cloud()),
                c.noise().atoms.size(), (unsigned long long)c.noise().denom);
    if (!o.out.empty()) {
      io::json j;
      j["config"] = config_json("reduce build", o);
      j["r"] = inst.r;
      j["d"] = o.d;
      j["clouds"] = inst.num_v;
      j["functions_per_cloud"] = c.functions_per_cloud();
      j["noise"] = io::noise_support_json(c.noise());
      io::write_file(o.out, j.dump(2) + "\n");
      std::printf("  summary -> %s\n", o.out.c_str());
    }
    return 0;
  }

  if (action == "complete") {
    const Labeling l = load_labeling(o.labels, inst);
    std::vector<int> clouds(inst.num_v);
    for (int v = 0; v < inst.num_v; ++v) clouds[v] = v;
    std::vector<trit> colors;
    ColoringReport rep;
    try {
      rep = completeness_color(c, l, clouds, &colors);
    } catch (const std::invalid_argument& e) {
      std::fputs(cfg.c_str(), stdout);
      std::printf("  completeness failed: %s\n  result: fail\n", e.what());
      return 1;
    }
    std::string text = cfg;
    text += fmt("  colored=%llu pairs_checked=%llu proper=%d identity=%d\n",
                (unsigned long long)rep.colored, (unsigned long long)rep.pairs_checked,
                (int)rep.proper, (int)rep.identity_ok);
    text += fmt("  result: %s\n", rep.ok() ? "pass" : "fail");
    std::fputs(text.c_str(), stdout);
    if (!o.out.empty()) {
      io::write_file(o.out, "# " + cfg + io::coloring_csv(c, colors, clouds));
      std::printf("  coloring -> %s\n", o.out.c_str());
    }
    return rep.ok() ? 0 : 1;
  }

  // decode
  const int dim = PolySpace(inst.r, 2 * o.d).dim();
  if (dim > kMaxContextDim)
    throw UsageError(fmt("decode needs a transform context (dim <= %d), got %d", kMaxContextDim,
                         dim));
  if (o.mu <= 0 || o.mu > 1 || o.delta <= 0 || o.delta > 1 || o.k < 1)
    throw UsageError("decode needs --mu, --delta in (0, 1] and --k >= 1");
  const Labeling l = load_labeling(o.labels, inst);
  const FourierContext ctx(inst.r, 2 * o.d, o.exec());
  const ColoringSubset set = dictator_coloring_set(c, l);
  const IndependenceResult ind = coloring_is_independent(c, set);
  const DecodeReport rep =
      soundness_decode(c, ctx, set, o.mu, o.delta, o.k, o.trials, o.seed, o.exec());
  std::string text = cfg;
  text += fmt("  set size=%llu independent=%d\n", (unsigned long long)set.count(),
              (int)ind.independent);
  for (const auto& vi : rep.verts) {
    std::string ls;
    for (const auto& lab : vi.list) ls += (ls.empty() ? "" : " ") + label_str(lab);
    text += fmt("  v=%d density=%.6g in_j=%d list=[%s]\n", vi.v, vi.density, (int)vi.in_j,
                ls.c_str());
  }
  text += fmt("  J=%llu lists_bounded=%d claim=%llu/%llu trials=%llu mean_sat=%.6g "
              "min_sat=%.6g\n",
              (unsigned long long)rep.j_size, (int)rep.lists_bounded,
              (unsigned long long)rep.claim_consistent, (unsigned long long)rep.claim_triples,
              (unsigned long long)rep.trials, rep.mean_satisfied, rep.min_satisfied);
  const bool ok = ind.independent && rep.lists_bounded && rep.claim_ok;
  text += fmt("  result: %s\n", ok ? "pass" : "fail");
  emit(text, o.out);
  if (!o.labels_out.empty())
    io::write_file(o.labels_out, io::labeling_to_json(rep.last_labeling).dump(2) + "\n");
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- spectrum --

int run_spectrum(const Opts& o, const std::string& action) {
  validate_graph_params(o);
  if (action == "verify-T" || action == "verify-S") {
    SuiteParams p;
    p.r = o.r;
    p.d = o.d;
    p.tol = o.tol;
    p.exec = o.exec();
    gate("spectrum " + action, space_elems(o.r, 2 * o.d), o.force);
    const SuiteResult res = action == "verify-T" ? suite_eig_square(p) : suite_eig_subspace(p);
    const std::string cfg = fmt("config: cmd=spectrum action=%s r=%d d=%d tol=%g\n",
                                action.c_str(), o.r, o.d, o.tol);
    emit(cfg + res.text, o.out);
    return res.ok ? 0 : 1;
  }

  if (o.op != "T" && o.op != "S") throw UsageError("--op must be T or S");
  gate("spectrum eig", space_elems(o.r, 2 * o.d), o.force);
  const NoiseDist dist =
      o.op == "T" ? make_square_noise(o.r, o.d) : make_subspace_noise(o.r, o.d);
  const CosetSystem cs(o.r, 2 * o.d, o.exec());
  const std::string cfg = fmt("# config: cmd=spectrum action=eig op=%s r=%d d=%d\n",
                              o.op.c_str(), o.r, o.d);
  std::string csv = cfg + "coset_id,support,n0,n1,n2,denominator,re,im\n";
  for (std::uint64_t id = 0; id < cs.num_cosets(); ++id) {
    const CosetRep& rep = cs.rep(id);
    const EigCounts e = eigenvalue_counts(dist, rep.beta);
    const cplx v = e.value();
    csv += fmt("%llu,%d,%llu,%llu,%llu,%llu,%.17g,%.17g\n", (unsigned long long)id, rep.support,
               (unsigned long long)e.n[0], (unsigned long long)e.n[1],
               (unsigned long long)e.n[2], (unsigned long long)e.denom, v.real(), v.imag());
  }
  if (o.out.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    io::write_file(o.out, csv);
    std::fputs(cfg.c_str(), stdout);
    std::printf("cosets=%llu denominator=%llu -> %s\n", (unsigned long long)cs.num_cosets(),
                (unsigned long long)dist.denom, o.out.c_str());
  }
  return 0;
}

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--seed", o.seed, "rng seed");
  sub->add_option("--tol", o.tol, "comparison tolerance (default 1e-9)");
  sub->add_option("--out", o.out, "write the report/artifact here");
  sub->add_flag("--force", o.force, "run past the cost pre-estimate");
  sub->add_flag("--serial", o.serial, "use the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
  init_threads_from_env();
  CLI::App app{"exact verification toolkit for low-degree polynomial spaces over F_3"};
  app.name("lowdeg");
  app.require_subcommand(1);

  Opts o;
  int rc = 0;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  verify->add_option("suite", suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"all", "dual", "parseval", "sz", "kwise", "graph", "eig-T", "eig-S",
                             "moments", "interp", "pipeline", "xi"}));
  auto* vr = verify->add_option("--r", o.r, "number of variables");
  auto* vd = verify->add_option("--d", o.d, "degree parameter");
  auto* vk = verify->add_option("--k", o.k, "truncation / moment order");
  auto* vt = verify->add_option("--t", o.t, "support bound / smoothing steps");
  verify->add_option("--eps", o.eps, "pipeline accuracy target");
  verify->add_option("--samples", o.samples, "monte carlo / ensemble size (0 = default)");
  add_common(verify, o);
  verify->callback([&] {
    rc = run_verify(o, suite,
                    vr->count() > 0 || vd->count() > 0 || vk->count() > 0 || vt->count() > 0);
  });

  auto* graph = app.add_subcommand("graph", "product graph on P_{r,2d}");
  std::string gaction;
  graph->add_option("action", gaction, "build | check | mis | identity")
      ->required()
      ->check(CLI::IsMember({"build", "check", "mis", "identity"}));
  graph->add_option("--r", o.r, "number of variables");
  graph->add_option("--d", o.d, "noise degree (vertices are P_{r,2d})");
  graph->add_option("--noise-out", o.noise_out, "write the noise support json here");
  add_common(graph, o);
  graph->callback([&] { rc = run_graph(o, gaction); });

  auto* reduce = app.add_subcommand("reduce", "unique-games to coloring reduction");
  std::string raction;
  reduce->add_option("action", raction, "gen | build | complete | decode | stats")
      ->required()
      ->check(CLI::IsMember({"gen", "build", "complete", "decode", "stats"}));
  reduce->add_option("--num-u", o.num_u, "left side size (gen)");
  reduce->add_option("--num-v", o.num_v, "right side size (gen)");
  reduce->add_option("--r", o.r, "label dimension (gen)");
  reduce->add_option("--d", o.d, "noise degree of the coloring graph");
  reduce->add_option("--corrupt", o.corrupt, "re-randomize this many constraints (gen)");
  reduce->add_flag("--random", o.random_inst, "uniform instance instead of planted (gen)");
  reduce->add_option("--in", o.in, "instance json");
  reduce->add_option("--labels", o.labels, "labeling json");
  reduce->add_option("--labels-out", o.labels_out, "write a labeling json here");
  reduce->add_option("--mu", o.mu, "decoder density threshold");
  reduce->add_option("--delta", o.delta, "decoder influence threshold");
  reduce->add_option("--k", o.k, "decoder frequency-weight cap");
  reduce->add_option("--trials", o.trials, "decoder sampling trials");
  add_common(reduce, o);
  reduce->callback([&] { rc = run_reduce(o, raction); });

  auto* spectrum = app.add_subcommand("spectrum", "noise operator eigenvalues");
  std::string saction;
  spectrum->add_option("action", saction, "eig | verify-T | verify-S")
      ->required()
      ->check(CLI::IsMember({"eig", "verify-T", "verify-S"}));
  spectrum->add_option("--r", o.r, "number of variables");
  spectrum->add_option("--d", o.d, "noise degree");
  spectrum->add_option("--op", o.op, "operator: T (squared polynomial) or S (subspace)");
  add_common(spectrum, o);
  spectrum->callback([&] { rc = run_spectrum(o, saction); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "budget error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
