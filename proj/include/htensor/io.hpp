#pragma once

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "htensor/certificate.hpp"
#include "htensor/complex_tensor.hpp"
#include "htensor/curvature.hpp"
#include "htensor/heig.hpp"
#include "htensor/inclusion.hpp"

namespace htensor::io {

using json = nlohmann::json;

inline json complex_to_json(Cplx z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

inline json vector_to_json(const ComplexVector& x) {
  json arr = json::array();
  for (const Cplx& c : x) arr.push_back(complex_to_json(c));
  return arr;
}

/// Tensor file schema: {"m": int, "n": int,
/// "entries": [[[i_1..i_m, j_1..j_m], re, im], ...]} with 1-based indices.
inline json tensor_to_json(const ComplexTensor& A) {
  json entries = json::array();
  for (const auto& [key, value] : A.entries()) {
    json idx = json::array();
    for (int i : key) idx.push_back(i + 1);
    entries.push_back(json::array({idx, value.real(), value.imag()}));
  }
  return json{{"m", A.order_half()}, {"n", A.dim()}, {"entries", entries}};
}

inline ComplexTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("entries"))
    throw Error(errc::parse_error, "tensor JSON needs m, n and entries");
  std::vector<std::pair<IndexTuple, Cplx>> list;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_array())
      throw Error(errc::parse_error,
                  "each entry must be [[indices...], re, im]");
    IndexTuple idx;
    for (const auto& i : e[0]) idx.push_back(i.get<int>());
    list.emplace_back(std::move(idx),
                      Cplx(e[1].get<double>(), e[2].get<double>()));
  }
  return build(j.at("m").get<int>(), j.at("n").get<int>(), list);
}

inline json region_to_json(const Region& R) {
  if (R.is_disk()) {
    const Disk& d = R.disk();
    return json{{"kind", "disk"},
                {"center", complex_to_json(d.center)},
                {"radius", d.radius}};
  }
  if (R.is_oval()) {
    const ShiftedOval& o = R.oval();
    return json{{"kind", "oval"},
                {"a", complex_to_json(o.a)},
                {"b", complex_to_json(o.b)},
                {"shift", o.shift},
                {"bound", o.bound}};
  }
  json parts = json::array();
  for (const Region& p : R.parts()) parts.push_back(region_to_json(p));
  return json{{"kind", "union"}, {"parts", parts}};
}

inline json certificate_to_json(const Certificate& cert) {
  json j{{"verdict", to_string(cert.verdict)},
         {"rule", to_string(cert.rule)},
         {"slack", cert.slack}};
  json witness = json::object();
  if (cert.witness_vector)
    witness["vector"] = vector_to_json(*cert.witness_vector);
  if (cert.failing_pair)
    witness["failing_pair"] =
        json::array({cert.failing_pair->first, cert.failing_pair->second});
  if (cert.block) {
    witness["block"] = json{{"s", cert.block->split},
                            {"K1", cert.block->k1},
                            {"K2", cert.block->k2},
                            {"K", cert.block->k},
                            {"N", cert.block->n_tuples},
                            {"C", cert.block->constant_c}};
  }
  if (cert.lambda_min) j["lambda_min"] = *cert.lambda_min;
  if (!witness.empty()) j["witness"] = witness;
  return j;
}

inline json eigenpair_to_json(const EigenPair& p) {
  return json{{"lambda", p.lambda.real()},
              {"vector", vector_to_json(p.vector)},
              {"residual", p.residual}};
}

inline Cplx complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2)
    return Cplx(j[0].get<double>(), j[1].get<double>());
  if (j.is_object())
    return Cplx(j.value("re", 0.0), j.value("im", 0.0));
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  throw Error(errc::parse_error, "complex value must be [re, im]");
}

/// Curvature file schema: {"n": int, "g": [[ [re,im], ... ]],
/// "R": nested 4-deep arrays of [re, im]} with R[i][k][j][l] layout.
inline CurvatureData curvature_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("g") ||
      !j.contains("R"))
    throw Error(errc::parse_error, "curvature JSON needs n, g and R");
  CurvatureData data;
  data.n = j.at("n").get<int>();
  const int n = data.n;
  if (n < 1) throw Error(errc::parse_error, "n must be positive");
  data.g = Eigen::MatrixXcd::Zero(n, n);
  const auto& gj = j.at("g");
  if (static_cast<int>(gj.size()) != n)
    throw Error(errc::parse_error, "g must be an n x n matrix");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) data.g(i, k) = complex_from_json(gj[i][k]);
  data.R.assign(static_cast<std::size_t>(n) * n * n * n, Cplx{0.0, 0.0});
  const auto& rj = j.at("R");
  if (static_cast<int>(rj.size()) != n)
    throw Error(errc::parse_error, "R must be a 4-deep n-sized array");
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
          data.R[idx++] = complex_from_json(rj[i][k][p][l]);
  return data;
}

inline std::vector<Cplx> flat_from_json(const json& j, std::size_t expect,
                                        const char* name) {
  std::vector<Cplx> out;
  std::function<void(const json&)> walk = [&](const json& node) {
    if (node.is_array() && node.size() == 2 && node[0].is_number() &&
        node[1].is_number()) {
      out.push_back(complex_from_json(node));
      return;
    }
    if (node.is_array()) {
      for (const auto& ch : node) walk(ch);
      return;
    }
    out.push_back(complex_from_json(node));
  };
  walk(j);
  if (out.size() != expect)
    throw Error(errc::shape_mismatch,
                std::string(name) + " has wrong number of values");
  return out;
}

/// AHZ components schema: named nested blocks with [re, im] leaves.
inline AHZComponents ahz_from_json(const json& j) {
  for (const char* key : {"n", "r", "g4", "h2", "hv2", "hv4", "hv3", "hab2"})
    if (!j.contains(key))
      throw Error(errc::parse_error,
                  std::string("AHZ JSON missing field ") + key);
  AHZComponents c;
  c.n = j.at("n").get<int>();
  c.r = j.at("r").get<int>();
  if (c.n < 1 || c.r < 1)
    throw Error(errc::parse_error, "n and r must be positive");
  const std::size_t n = c.n, r = c.r;
  c.g4 = flat_from_json(j.at("g4"), n * n * n * n, "g4");
  c.h2 = flat_from_json(j.at("h2"), r * r, "h2");
  c.hv2 = flat_from_json(j.at("hv2"), n * n, "hv2");
  c.hv4 = flat_from_json(j.at("hv4"), n * n * n * n, "hv4");
  c.hv3 = flat_from_json(j.at("hv3"), n * n * n * r, "hv3");
  c.hab2 = flat_from_json(j.at("hab2"), r * r * n * n, "hab2");
  return c;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(errc::parse_error, "cannot write file " + path);
  out << j.dump(2) << "\n";
}

}  // namespace htensor::io
