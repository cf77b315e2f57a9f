// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace bihar {

struct ResidualReport {
  std::string equation;
  std::string spec;
  std::string ambient;
  std::string k;  // exact text, empty when the equation has no index
  std::vector<double> norms;
  std::vector<double> normal_norms;   // filled when the equation splits
  std::vector<double> tangent_norms;
  double max = 0;
  double mean = 0;
  double tol = 0;
  bool pass = false;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["equation"] = equation;
    j["spec"] = spec;
    j["ambient"] = ambient;
    j["k"] = k.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(k);
    j["points"] = norms.size();
    j["max"] = max;
    j["mean"] = mean;
    j["tol"] = tol;
    j["pass"] = pass;
    return j;
  }
};

/// Aggregates per-point norms; pass iff max ≤ tol. NaN never passes.
inline ResidualReport make_report(std::string equation, std::string spec, std::string ambient, std::string k,
                                  std::vector<double> norms, double tol) {
  ResidualReport r;
  r.equation = std::move(equation);
  r.spec = std::move(spec);
  r.ambient = std::move(ambient);
  r.k = std::move(k);
  r.norms = std::move(norms);
  r.tol = tol;
  bool finite = true;
  for (double x : r.norms) {
    if (!(x == x)) finite = false;
    r.max = std::max(r.max, x);
    r.mean += x;
  }
  if (!r.norms.empty()) r.mean /= static_cast<double>(r.norms.size());
  r.pass = finite && !r.norms.empty() && r.max <= tol;
  return r;
}

}  // namespace bihar
