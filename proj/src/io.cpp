#include "lowdeg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lowdeg::io {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    json t;
    t["exps"] = mono;
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  json j;
  j["r"] = p.r();
  j["d"] = p.degree_bound();
  j["terms"] = std::move(terms);
  return j;
}

Poly poly_from_json(const json& j) {
  Poly p(j.at("r").get<int>(), j.at("d").get<int>());
  for (const auto& t : j.at("terms")) {
    const Monomial mono = t.at("exps").get<Monomial>();
    p.set_coeff(mono, t.at("coeff").get<trit>());
  }
  return p;
}

json table_to_json(const FnTable& t) {
  json j;
  j["r"] = t.r();
  j["values"] = t.values();
  return j;
}

FnTable table_from_json(const json& j) {
  FnTable t(j.at("r").get<int>());
  const auto vals = j.at("values").get<std::vector<trit>>();
  if (vals.size() != t.size()) throw std::invalid_argument("table_from_json: length mismatch");
  for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = vals[i];
  return t;
}

json groupfn_to_json(const GroupFn& a) {
  json values = json::array();
  for (const cplx& v : a) values.push_back(json::array({v.real(), v.imag()}));
  json j;
  j["n"] = a.size();
  j["values"] = std::move(values);
  return j;
}

GroupFn groupfn_from_json(const json& j) {
  GroupFn a;
  for (const auto& v : j.at("values")) a.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  if (j.contains("n") && j.at("n").get<std::size_t>() != a.size())
    throw std::invalid_argument("groupfn_from_json: length mismatch");
  return a;
}

std::string spectrum_csv(const CosetSystem& lambda, const Spectrum& s) {
  std::ostringstream out;
  out << "coset_id,support,re,im\n";
  for (std::uint64_t i = 0; i < s.size(); ++i)
    out << i << ',' << lambda.rep(i).support << ',' << fmt_double(s[i].real()) << ','
        << fmt_double(s[i].imag()) << '\n';
  return out.str();
}

std::string graph_edges_csv(const DerandGraph& g) {
  std::ostringstream out;
  out << "f_index,fp_index,numerator,denominator\n";
  for (std::uint64_t f = 0; f < g.num_vertices(); ++f) {
    for (const auto& atom : g.noise().atoms) {
      const std::uint64_t fp = g.space().add_indices(f, atom.idx);
      if (fp <= f) continue;
      out << f << ',' << fp << ',' << g.weight_count(f, fp) << ',' << g.denom() << '\n';
    }
  }
  return out.str();
}

json noise_support_json(const NoiseDist& d) {
  json atoms = json::array();
  for (const auto& atom : d.atoms) {
    json a;
    a["index"] = atom.idx;
    a["count"] = atom.count;
    a["table"] = atom.table.values();
    atoms.push_back(std::move(a));
  }
  json j;
  j["r"] = d.r;
  j["domain_d"] = d.domain_d;
  j["denominator"] = d.denom;
  j["atoms"] = std::move(atoms);
  return j;
}

json ug_to_json(const UGInstance& inst) {
  json u_ids = json::array(), v_ids = json::array();
  for (int u = 0; u < inst.num_u; ++u) u_ids.push_back(u);
  for (int v = 0; v < inst.num_v; ++v) v_ids.push_back(v);
  json edges = json::array();
  for (const auto& e : inst.edges) {
    json rows = json::array();
    for (int i = 0; i < e.pi.n; ++i) {
      json row = json::array();
      for (int j = 0; j < e.pi.n; ++j) row.push_back(e.pi.at(i, j));
      rows.push_back(std::move(row));
    }
    json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["matrix"] = std::move(rows);
    edges.push_back(std::move(je));
  }
  json j;
  j["r"] = inst.r;
  j["U"] = std::move(u_ids);
  j["V"] = std::move(v_ids);
  j["edges"] = std::move(edges);
  return j;
}

UGInstance ug_from_json(const json& j) {
  UGInstance inst;
  inst.r = j.at("r").get<int>();
  inst.num_u = static_cast<int>(j.at("U").size());
  inst.num_v = static_cast<int>(j.at("V").size());
  for (const auto& je : j.at("edges")) {
    UGEdge e;
    e.u = je.at("u").get<int>();
    e.v = je.at("v").get<int>();
    e.pi = Mat(inst.r);
    const auto& rows = je.at("matrix");
    if (static_cast<int>(rows.size()) != inst.r)
      throw std::invalid_argument("ug_from_json: bad matrix shape");
    for (int i = 0; i < inst.r; ++i)
      for (int jj = 0; jj < inst.r; ++jj) e.pi.at(i, jj) = rows.at(i).at(jj).get<trit>();
    if (!e.pi.inverse()) throw std::invalid_argument("ug_from_json: singular constraint");
    if (e.u < 0 || e.u >= inst.num_u || e.v < 0 || e.v >= inst.num_v)
      throw std::invalid_argument("ug_from_json: edge endpoint out of range");
    inst.edges.push_back(std::move(e));
  }
  return inst;
}

json labeling_to_json(const Labeling& l) {
  json assignments = json::object();
  for (std::size_t u = 0; u < l.u.size(); ++u)
    if (l.u[u]) assignments["u" + std::to_string(u)] = *l.u[u];
  for (std::size_t v = 0; v < l.v.size(); ++v)
    if (l.v[v]) assignments["v" + std::to_string(v)] = *l.v[v];
  json j;
  j["assignments"] = std::move(assignments);
  return j;
}

Labeling labeling_from_json(const json& j, int num_u, int num_v) {
  Labeling l;
  l.u.resize(num_u);
  l.v.resize(num_v);
  for (const auto& [key, val] : j.at("assignments").items()) {
    if (key.empty() || (key[0] != 'u' && key[0] != 'v'))
      throw std::invalid_argument("labeling_from_json: bad vertex id " + key);
    const int idx = std::stoi(key.substr(1));
    auto coords = val.get<std::vector<trit>>();
    if (key[0] == 'u') {
      if (idx < 0 || idx >= num_u) throw std::invalid_argument("labeling_from_json: bad u id");
      l.u[idx] = std::move(coords);
    } else {
      if (idx < 0 || idx >= num_v) throw std::invalid_argument("labeling_from_json: bad v id");
      l.v[idx] = std::move(coords);
    }
  }
  return l;
}

std::string coloring_csv(const ColoringInstance& c, const std::vector<trit>& colors,
                         const std::vector<int>& clouds) {
  std::ostringstream out;
  out << "v_id,f_index,color\n";
  const std::uint64_t n = c.functions_per_cloud();
  for (int v : clouds)
    for (std::uint64_t f = 0; f < n; ++f)
      out << v << ',' << f << ',' << static_cast<int>(colors[v * n + f]) << '\n';
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lowdeg::io
