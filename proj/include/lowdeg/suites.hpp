#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lowdeg/parallel.hpp"

namespace lowdeg {

// One verification suite's deterministic text report.  Reports carry no
// timestamps or machine identifiers so reruns are byte-identical.
struct SuiteResult {
  std::string name;
  bool ok = false;
  std::string text;
};

struct SuiteParams {
  int r = 2;
  int d = 1;
  int k = 1;
  int t = 2;
  double eps = 0.5;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // 0 means suite default
  Exec exec = Exec::Parallel;
};

SuiteResult suite_duality(const SuiteParams& p);
SuiteResult suite_schwartz_zippel(const SuiteParams& p);
SuiteResult suite_kwise(const SuiteParams& p);
SuiteResult suite_fourier_core(const SuiteParams& p);
SuiteResult suite_eig_square(const SuiteParams& p);
SuiteResult suite_eig_subspace(const SuiteParams& p);
SuiteResult suite_graph(const SuiteParams& p);
SuiteResult suite_moments(const SuiteParams& p);
SuiteResult suite_interpolation(const SuiteParams& p);
SuiteResult suite_pipeline(const SuiteParams& p);
SuiteResult suite_xi(const SuiteParams& p);

// Every suite above at the same parameters.
std::vector<SuiteResult> suite_all(const SuiteParams& p);

std::string render_results(const std::vector<SuiteResult>& results);

}  // namespace lowdeg
