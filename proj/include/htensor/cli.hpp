#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "htensor/certify.hpp"
#include "htensor/complex_tensor.hpp"
#include "htensor/curvature.hpp"
#include "htensor/heig.hpp"
#include "htensor/inclusion.hpp"
#include "htensor/io.hpp"
#include "htensor/svg.hpp"

namespace htensor::cli {

using io::json;

/// Parses one complex literal: "1.5", "2i", "-1+0.5i", "3-i".
inline Cplx parse_complex_literal(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw Error(errc::parse_error, "empty complex literal");
  auto parse_part = [](std::string p) -> double {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    try {
      std::size_t used = 0;
      double v = std::stod(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
      return v;
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "bad number '" + p + "'");
    }
  };
  if (s.back() != 'i' && s.back() != 'I') return Cplx(parse_part(s), 0.0);
  // Locate the sign splitting real and imaginary parts, if any.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    char c = s[k - 1];
    if ((s[k] == '+' || s[k] == '-') && c != 'e' && c != 'E') {
      split = k;
      break;
    }
  }
  std::string imag = s.substr(0, s.size() - 1);
  if (split == std::string::npos) return Cplx(0.0, parse_part(imag));
  return Cplx(parse_part(s.substr(0, split)),
              parse_part(s.substr(split, s.size() - 1 - split)));
}

inline ComplexVector parse_vector_literal(const std::string& lit) {
  ComplexVector out;
  std::size_t start = 0;
  while (start <= lit.size()) {
    std::size_t comma = lit.find(',', start);
    std::string tok = lit.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_complex_literal(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace detail {

inline unsigned effective_seed(unsigned flag_seed) {
  if (const char* env = std::getenv("HTENSOR_SEED")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "HTENSOR_SEED must be an integer");
    }
  }
  return flag_seed;
}

inline Certificate certify_single_method(const ComplexTensor& A,
                                         const std::string& method) {
  htensor::detail::require_hermitian(A);
  ComplexTensor S = symmetrize(A);
  using Check = htensor::detail::PredicateResult (*)(const ComplexTensor&,
                                                     bool, double);
  Check check = nullptr;
  Rule strict_rule{}, weak_rule{};
  if (method == "dd") {
    check = htensor::detail::dd_check;
    strict_rule = Rule::StrictDD;
    weak_rule = Rule::DD;
  } else if (method == "llk") {
    check = htensor::detail::llk_check;
    strict_rule = Rule::StrictLLK;
    weak_rule = Rule::LLK;
  } else {
    check = htensor::detail::ll_check;
    strict_rule = Rule::StrictLL;
    weak_rule = Rule::LL;
  }
  auto strict = check(S, true, 0.0);
  Certificate cert;
  if (strict.holds) {
    cert.verdict = Verdict::PositiveDefinite;
    cert.rule = strict_rule;
    cert.slack = strict.slack;
    return cert;
  }
  auto weak = check(S, false, 0.0);
  cert.rule = weak.holds ? weak_rule : strict_rule;
  cert.verdict = weak.holds ? Verdict::PositiveSemidefinite
                            : Verdict::Inconclusive;
  cert.slack = weak.slack;
  if (!weak.holds) cert.failing_pair = weak.failing;
  return cert;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 success, 1 domain error (JSON error report), 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Spectral analysis of Hermitian and CPS complex tensors"};
  app.require_subcommand(1);

  std::string path, out_path, vector_lit, vector_file;
  std::string mode = "extremal", sets = "ger,llk,ll", method = "auto";
  std::string action = "tensor";
  int grid = 200, split = 1;
  std::string plot_path;
  SolverConfig cfg;
  double lambda = 1.0, bound_a = 1.0, bound_b = 1.0;
  std::optional<double> k1, k2;

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--starts", cfg.starts, "multi-start count");
    sub->add_option("--newton-tol", cfg.newton_tol, "residual tolerance");
    sub->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");
    sub->add_option("--dedup-tol", cfg.dedup_tol, "eigenvalue merge radius");
    sub->add_option("--seed", cfg.rng_seed, "RNG seed");
  };

  CLI::App* check = app.add_subcommand("check", "structural predicates");
  check->add_option("path", path)->required();

  CLI::App* symmetrize_cmd =
      app.add_subcommand("symmetrize", "conjugate partial symmetrization");
  symmetrize_cmd->add_option("path", path)->required();
  symmetrize_cmd->add_option("-o,--out", out_path)->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate the conjugate form");
  eval->add_option("path", path)->required();
  eval->add_option("--vector", vector_lit, "comma-separated a+bi literals");
  eval->add_option("--vector-file", vector_file, "JSON vector file");

  CLI::App* eigen = app.add_subcommand("eigen", "Ĥ-eigenvalues");
  eigen->add_option("path", path)->required();
  eigen->add_option("--mode", mode)
      ->check(CLI::IsMember({"extremal", "enumerate"}));
  add_solver_flags(eigen);

  CLI::App* inclusion =
      app.add_subcommand("inclusion", "eigenvalue inclusion sets");
  inclusion->add_option("path", path)->required();
  inclusion->add_option("--sets", sets, "subset of ger,llk,ll");
  inclusion->add_option("--plot", plot_path, "SVG output path");
  inclusion->add_option("--grid", grid, "raster grid size");

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "positive definiteness certificate");
  certify_cmd->add_option("path", path)->required();
  certify_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "dd", "llk", "ll", "eigen"}));
  add_solver_flags(certify_cmd);

  CLI::App* block = app.add_subcommand("block", "block criterion");
  block->add_option("path", path)->required();
  block->add_option("--s", split, "split index")->required();
  block->add_option("--k1", [&k1](auto res) { k1 = std::stod(res[0]); return true; },
                    "leading block lower bound");
  block->add_option("--k2", [&k2](auto res) { k2 = std::stod(res[0]); return true; },
                    "trailing block lower bound");
  add_solver_flags(block);

  CLI::App* curvature_cmd =
      app.add_subcommand("curvature", "holomorphic sectional curvature");
  curvature_cmd->add_option("path", path)->required();
  curvature_cmd->add_option("--action", action)
      ->check(CLI::IsMember({"tensor", "hsc", "certify", "ahz", "cheung"}));
  curvature_cmd->add_option("--vector", vector_lit);
  curvature_cmd->add_option("-o,--out", out_path);
  curvature_cmd->add_option("--lambda", lambda);
  curvature_cmd->add_option("--a", bound_a);
  curvature_cmd->add_option("--b", bound_b);
  curvature_cmd->add_option("--s", split);
  curvature_cmd->add_option("--k1", [&k1](auto res) { k1 = std::stod(res[0]); return true; });
  curvature_cmd->add_option("--k2", [&k2](auto res) { k2 = std::stod(res[0]); return true; });
  add_solver_flags(curvature_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    cfg.rng_seed = detail::effective_seed(cfg.rng_seed);
    json report;

    if (*check) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      report = {{"m", A.order_half()},
                {"n", A.dim()},
                {"nnz", A.nnz()},
                {"hermitian", is_hermitian(A)},
                {"cps", is_cps(A)}};
    } else if (*symmetrize_cmd) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      ComplexTensor S = htensor::symmetrize(A);
      io::save_json_file(out_path, io::tensor_to_json(S));
      report = {{"written", out_path}, {"nnz", S.nnz()}};
    } else if (*eval) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      ComplexVector x;
      if (!vector_lit.empty()) {
        x = parse_vector_literal(vector_lit);
      } else if (!vector_file.empty()) {
        for (const auto& c : io::load_json_file(vector_file))
          x.push_back(io::complex_from_json(c));
      } else {
        throw Error(errc::parse_error, "eval needs --vector or --vector-file");
      }
      report = {{"value", io::complex_to_json(eval_form(A, x))}};
    } else if (*eigen) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      report["mode"] = mode;
      if (mode == "enumerate") {
        auto pairs = enumerate_eigenvalues(A, cfg);
        json lams = json::array(), pj = json::array();
        for (const auto& p : pairs) {
          lams.push_back(p.lambda.real());
          pj.push_back(io::eigenpair_to_json(p));
        }
        report["eigenvalues"] = lams;
        report["pairs"] = pj;
      } else {
        auto [mn, mx] = extremal_eigenvalues(A, cfg);
        report["min"] = io::eigenpair_to_json(mn);
        report["max"] = io::eigenpair_to_json(mx);
      }
      report["seed"] = cfg.rng_seed;
    } else if (*inclusion) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      json sets_json = json::object();
      std::vector<std::pair<std::string, Region>> computed;
      if (sets.find("ger") != std::string::npos)
        computed.emplace_back("ger", gershgorin_set(A));
      if (sets.find("llk") != std::string::npos)
        computed.emplace_back("llk", llk_set(A));
      // match "ll" but not the one inside "llk"
      for (std::size_t pos = sets.find("ll"); pos != std::string::npos;
           pos = sets.find("ll", pos + 1)) {
        if (pos + 2 >= sets.size() || sets[pos + 2] != 'k') {
          computed.emplace_back("ll", ll_set(A));
          break;
        }
      }
      bool fallback = false;
      for (const auto& [name, region] : computed) {
        sets_json[name] = io::region_to_json(region);
        fallback = fallback || region.gershgorin_fallback;
      }
      report["sets"] = sets_json;
      if (fallback) report["warning"] = "n=1: llk/ll fall back to ger";
      if (!plot_path.empty()) {
        std::vector<std::pair<std::string, const Region*>> layers;
        for (const auto& [name, region] : computed)
          layers.emplace_back("K_" + name, &region);
        std::ofstream svg(plot_path);
        if (!svg) throw Error(errc::parse_error, "cannot write " + plot_path);
        svg << render_regions_svg(layers, grid);
        report["plot"] = plot_path;
      }
    } else if (*certify_cmd) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      Certificate cert;
      if (method == "auto") {
        cert = certify(A, cfg);
      } else if (method == "eigen") {
        htensor::detail::require_hermitian(A);
        cert = certify_pd_by_eigen(A, cfg);
      } else {
        cert = detail::certify_single_method(A, method);
      }
      report = io::certificate_to_json(cert);
    } else if (*block) {
      ComplexTensor A = io::tensor_from_json(io::load_json_file(path));
      report = io::certificate_to_json(block_criterion(A, split, k1, k2, cfg));
    } else if (*curvature_cmd) {
      if (action == "ahz") {
        AHZComponents c = io::ahz_from_json(io::load_json_file(path));
        if (!out_path.empty()) {
          ComplexTensor G = ahz_assemble_G(c, lambda);
          io::save_json_file(out_path, io::tensor_to_json(G));
          report["written"] = out_path;
          report["lambda"] = lambda;
        } else {
          report["lambda_star"] = ahz_lambda_threshold(c, bound_a, bound_b);
        }
      } else {
        CurvatureData data = io::curvature_from_json(io::load_json_file(path));
        if (action == "tensor") {
          ComplexTensor A = curvature_to_tensor(data);
          if (!out_path.empty()) {
            io::save_json_file(out_path, io::tensor_to_json(A));
            report["written"] = out_path;
          } else {
            report["tensor"] = io::tensor_to_json(A);
          }
          report["cps"] = is_cps(A);
        } else if (action == "hsc") {
          if (vector_lit.empty())
            throw Error(errc::parse_error, "hsc needs --vector");
          report = {{"hsc", hsc(data, parse_vector_literal(vector_lit))}};
        } else if (action == "certify") {
          report = io::certificate_to_json(check_hsc_positive(data, cfg));
        } else {  // cheung
          if (!k1 || !k2)
            throw Error(errc::parse_error, "cheung needs --k1 and --k2");
          report = io::certificate_to_json(
              cheung_lemma_check(data, split, *k1, *k2, cfg));
        }
      }
    }

    out << report.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    json ej{{"error", {{"code", e.code()}, {"message", e.message()}}}};
    out << ej.dump(2) << "\n";
    return 1;
  }
}

}  // namespace htensor::cli
