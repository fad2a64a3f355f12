#pragma once

#include <string>

#include "json.hpp"
#include "lowdeg/fourier.hpp"
#include "lowdeg/graphprod.hpp"
#include "lowdeg/poly.hpp"
#include "lowdeg/ugreduce.hpp"

namespace lowdeg::io {

using json = nlohmann::ordered_json;

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json table_to_json(const FnTable& t);
FnTable table_from_json(const json& j);

json groupfn_to_json(const GroupFn& a);
GroupFn groupfn_from_json(const json& j);

// Rows: coset_id,support,re,im.
std::string spectrum_csv(const CosetSystem& lambda, const Spectrum& s);

// Rows: f_index,fp_index,numerator,denominator over pairs f < fp with
// positive weight.
std::string graph_edges_csv(const DerandGraph& g);
json noise_support_json(const NoiseDist& d);

json ug_to_json(const UGInstance& inst);
UGInstance ug_from_json(const json& j);

json labeling_to_json(const Labeling& l);
Labeling labeling_from_json(const json& j, int num_u, int num_v);

// Rows: v_id,f_index,color for the colored clouds.
std::string coloring_csv(const ColoringInstance& c, const std::vector<trit>& colors,
                         const std::vector<int>& clouds);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace lowdeg::io
