#pragma once

// Subcommand implementations for the `bch` command-line tool.
//
// Every command reads one JSON document (file path or "-" for stdin) and
// writes one response document. Exit codes: 0 success, 1 domain error
// (NullCone, ZeroChannel, NotSelfAdjoint, ConvergenceFailure, or a failed
// verification), 2 malformed input or usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bch/bch.hpp"
#include "bch/json_io.hpp"
#include "bch/verify.hpp"

namespace bch::cli {

using json::Json;

enum ExitCode { kOk = 0, kDomainError = 1, kInputError = 2 };

inline int exit_code_for(ErrorCode code) { return is_domain_error(code) ? kDomainError : kInputError; }

enum class Format { json, text };

struct Options {
  std::string input = "-";
  double tol = kDefaultOperatorTol;
  std::string pairing = "diagonal";
  Format format = Format::json;
  std::size_t samples = 10000;
  std::uint64_t seed = 20240501;
  bool strict = false;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline Json ok() {
  Json out = Json::object();
  out["status"] = "ok";
  return out;
}

inline Json error_document(ErrorCode code, const std::string& message) {
  Json out = Json::object();
  out["status"] = "error";
  Json e = Json::object();
  e["code"] = std::string(to_string(code));
  e["message"] = message;
  out["error"] = std::move(e);
  return out;
}

inline void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << json::dump(doc) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : json::dump(value))
        << '\n';
  }
}

// Commands -----------------------------------------------------------------------

inline Json cmd_info(const Json& input) {
  const Bicomplex w = json::bicomplex_from_json(input);
  Json out = ok();
  out["value"] = json::to_json(w);
  Json conjugates = Json::object();
  for (int k = 0; k <= 3; ++k) {
    conjugates["dag" + std::to_string(k)] = json::to_json(conj(w, to_conjugation(k)));
  }
  out["conjugates"] = std::move(conjugates);
  out["mod_sq_i1"] = json::to_json(mod_sq_i1(w));
  out["mod_sq_i2"] = json::to_json(mod_sq_i2(w));
  out["mod_sq_j"] = json::to_json(mod_sq_j(w));
  out["mod1"] = mod1(w);
  out["mod3"] = mod3(w);
  const auto p = to_idempotent(w);
  out["idempotent"] = Json::array({json::to_json(p.p1), json::to_json(p.p2)});
  const bool null_cone = is_null_cone(w);
  out["null_cone"] = null_cone;
  if (null_cone) {
    out["inverse_error"] = std::string(to_string(ErrorCode::NullCone));
  } else {
    out["inverse"] = json::to_json(inverse(w));
  }
  return out;
}

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  return doc[key];
}

/// {"x": TVector, "y": TVector, "metric"?: SplitMetric}
inline Json cmd_dot(const Json& input, const Options& opt) {
  const TVector x = json::tvector_from_json(field(input, "x"));
  const TVector y = json::tvector_from_json(field(input, "y"));
  Json out = ok();
  if (input.contains("metric")) {
    const SplitMetric m = json::metric_from_json(input["metric"]);
    out["dot"] = json::to_json(dot_split(x, y, m));
    out["closed"] = is_closed(m, opt.tol);
  } else {
    out["dot"] = json::to_json(dot(x, y));
  }
  return out;
}

/// TVector, or {"x": TVector, "y"?: TVector} to also get the distance.
inline Json cmd_norm(const Json& input) {
  Json out = ok();
  if (input.is_array()) {
    out["norm"] = norm(json::tvector_from_json(input));
    return out;
  }
  const TVector x = json::tvector_from_json(field(input, "x"));
  out["norm"] = norm(x);
  if (input.contains("y")) {
    const TVector y = json::tvector_from_json(input["y"]);
    out["distance"] = distance(x, y);
    const auto w = schwarz_witness(x, y);
    out["schwarz"] = Json::array({w.lhs, w.mid, w.rhs});
  }
  return out;
}

/// {"x": HVector, "y": HVector}
inline Json cmd_angle(const Json& input, const Options& opt) {
  const HVector x = json::hvector_from_json(field(input, "x"));
  const HVector y = json::hvector_from_json(field(input, "y"));
  const Hyperbolic angle = hyperbolic_angle(x, y, opt.tol);
  Json out = ok();
  out["angle"] = json::to_json(angle);
  out["theta1"] = angle.a();
  out["theta2"] = angle.b();
  out["hyp_dot"] = json::to_json(hyp_dot(x, y));
  return out;
}

inline Json cmd_adjoint(const Json& input) {
  const TMatrix a = json::tmatrix_from_json(input);
  Json out = ok();
  out["adjoint"] = json::to_json(adjoint(a));
  return out;
}

inline Json cmd_selfadjoint(const Json& input, const Options& opt) {
  const TMatrix a = json::tmatrix_from_json(input);
  Json out = ok();
  if (!is_self_adjoint(a, opt.tol)) {
    if (opt.strict) throw Error(ErrorCode::NotSelfAdjoint, "operator is not self-adjoint");
    out["self_adjoint"] = false;
    return out;
  }
  const SpectrumCheck check = selfadjoint_spectrum_check(a, opt.tol);
  out["self_adjoint"] = true;
  out["all_hyperbolic"] = check.all_hyperbolic;
  out["max_imaginary"] = check.max_imaginary;
  out["pairs_checked"] = check.pairs_checked;
  out["full_pairing_checked"] = check.full_pairing_checked;
  return out;
}

inline Json cmd_eig(const Json& input, const Options& opt) {
  const TMatrix a = json::tmatrix_from_json(input);
  const EigenReport report = bicomplex_eig(a, to_pairing(opt.pairing), opt.tol);
  Json out = ok();
  const Json body = json::to_json(report);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

inline Json cmd_verify(const Options& opt, bool& passed) {
  const auto suites = run_differential_suites(opt.samples, opt.seed);
  Json out = ok();
  out["samples"] = opt.samples;
  out["seed"] = opt.seed;
  Json list = Json::array();
  passed = true;
  for (const auto& s : suites) {
    Json sj = Json::object();
    sj["name"] = s.name;
    sj["samples"] = s.samples;
    sj["max_error"] = s.max_error;
    sj["tolerance"] = s.tolerance;
    sj["pass"] = s.pass();
    passed = passed && s.pass();
    list.push_back(std::move(sj));
  }
  out["suites"] = std::move(list);
  out["pass"] = passed;
  return out;
}

// Entry point --------------------------------------------------------------------

inline std::optional<double> tol_from_env() {
  const char* raw = std::getenv("BCH_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "BCH_TOL must be a non-negative number");
  }
  return v;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options opt;
  CLI::App app{"Bicomplex and hyperbolic linear algebra"};
  app.require_subcommand(1);

  std::string format = "json";
  std::optional<double> tol_flag;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_flag, "tolerance (default 1e-10, or BCH_TOL)");
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "input JSON file, '-' for stdin");
  };

  auto* info = app.add_subcommand("info", "all scalar quantities of one bicomplex number");
  auto* dot_cmd = app.add_subcommand("dot", "bicomplex scalar product of two kets");
  auto* norm_cmd = app.add_subcommand("norm", "module norm of a ket");
  auto* angle = app.add_subcommand("angle", "hyperbolic angle between two D-vectors");
  auto* adj = app.add_subcommand("adjoint", "bicomplex adjoint of a matrix");
  auto* sa = app.add_subcommand("selfadjoint", "self-adjointness and spectrum check");
  auto* eig = app.add_subcommand("eig", "bicomplex eigenpairs");
  auto* verify = app.add_subcommand("verify", "differential test against the brute-force oracle");
  for (auto* sub : {info, dot_cmd, norm_cmd, angle, adj, sa, eig}) {
    add_common(sub);
    add_input(sub);
  }
  add_common(verify);
  sa->add_flag("--strict", opt.strict, "fail with NotSelfAdjoint instead of reporting false");
  eig->add_option("--pairing", opt.pairing, "diagonal or full")
      ->check(CLI::IsMember({"diagonal", "full"}));
  verify->add_option("--samples", opt.samples, "samples per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto sub = app.get_subcommands();
    err << e.what() << '\n';
    if (!sub.empty()) err << sub.front()->help();
    return kInputError;
  }
  opt.format = format == "text" ? Format::text : Format::json;

  try {
    if (const auto env = tol_from_env()) opt.tol = *env;
    if (tol_flag) {
      if (!std::isfinite(*tol_flag) || *tol_flag < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "--tol must be a non-negative number");
      }
      opt.tol = *tol_flag;
    }

    if (verify->parsed()) {
      bool passed = false;
      emit(cmd_verify(opt, passed), opt.format, out);
      return passed ? kOk : kDomainError;
    }

    const Json input = json::parse(read_input(opt.input, in));
    Json result;
    if (info->parsed()) result = cmd_info(input);
    else if (dot_cmd->parsed()) result = cmd_dot(input, opt);
    else if (norm_cmd->parsed()) result = cmd_norm(input);
    else if (angle->parsed()) result = cmd_angle(input, opt);
    else if (adj->parsed()) result = cmd_adjoint(input);
    else if (sa->parsed()) result = cmd_selfadjoint(input, opt);
    else result = cmd_eig(input, opt);
    emit(result, opt.format, out);
    return kOk;
  } catch (const Error& e) {
    emit(error_document(e.code(), e.what()), opt.format, out);
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    emit(error_document(ErrorCode::ParseError, e.what()), opt.format, out);
    return kInputError;
  }
}

}  // namespace bch::cli
