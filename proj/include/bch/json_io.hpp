#pragma once

// JSON value forms shared by the CLI and tests:
//   Bicomplex [w0, w1, w2, w3]   Hyperbolic [x, y]   ComplexC1 [re, im]
//   TVector [[w0..w3], ...]      HVector [[x, y], ...]
//   TMatrix {"n": n, "entries": row-major [[w0..w3], ...]}
//   SplitMetric {"g1": row-major [[re, im], ...], "g2": ...}
// Output numbers are written with 17 significant digits so that every value
// re-parses to the identical double.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "bch/operators.hpp"
#include "bch/tmodule.hpp"
#include "bch/types.hpp"

namespace bch::json {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline double number(const Json& j) {
  if (!j.is_number()) fail("expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "non-finite number");
  return v;
}

inline const Json& array_of(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) fail(std::string("expected ") + what);
  return j;
}

inline std::size_t square_root_exact(std::size_t count) {
  std::size_t n = 0;
  while ((n + 1) * (n + 1) <= count) ++n;
  if (n * n != count || n == 0) fail("matrix entry count is not a positive square");
  return n;
}

inline void write_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline void write(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        write(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Compact serialization, insertion-ordered keys, %.17g floats.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write(out, j);
  return out;
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const nlohmann::json::out_of_range& e) {
    // A literal such as 1e400 has no binary64 value.
    throw Error(ErrorCode::NonFinite, e.what());
  }
}

// Encoding -----------------------------------------------------------------------

inline Json to_json(double v) { return Json(v); }
inline Json to_json(const ComplexC1& z) { return Json::array({z.real(), z.imag()}); }
inline Json to_json(const ComplexC2& z) { return Json::array({z.re(), z.i2()}); }
inline Json to_json(const Hyperbolic& h) { return Json::array({h.x(), h.y()}); }
inline Json to_json(const Bicomplex& w) {
  return Json::array({w.w0(), w.w1(), w.w2(), w.w3()});
}

template <class T>
Json to_json(const CoeffVector<T>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

template <class T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const TMatrix& a) {
  Json out = Json::object();
  out["n"] = a.n();
  out["entries"] = to_json(a.entries());
  return out;
}

inline Json to_json(const EigenReport& r) {
  Json out = Json::object();
  out["pairing"] = std::string(to_string(r.pairing));
  out["spectrum1"] = to_json(r.spectrum1);
  out["spectrum2"] = to_json(r.spectrum2);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json pj = Json::object();
    pj["lambda"] = to_json(p.lambda);
    pj["vector"] = to_json(p.vector);
    pj["residual"] = p.residual;
    pj["lambda_hyperbolic"] = p.lambda_hyperbolic;
    pj["vector_null_cone"] = p.vector_null_cone;
    pairs.push_back(std::move(pj));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

// Decoding -----------------------------------------------------------------------

inline Bicomplex bicomplex_from_json(const Json& j) {
  const auto& a = detail::array_of(j, 4, "a bicomplex [w0, w1, w2, w3]");
  return {detail::number(a[0]), detail::number(a[1]), detail::number(a[2]),
          detail::number(a[3])};
}

inline Hyperbolic hyperbolic_from_json(const Json& j) {
  const auto& a = detail::array_of(j, 2, "a hyperbolic [x, y]");
  return {detail::number(a[0]), detail::number(a[1])};
}

inline ComplexC1 complex_from_json(const Json& j) {
  const auto& a = detail::array_of(j, 2, "a complex [re, im]");
  return make_complex(detail::number(a[0]), detail::number(a[1]));
}

template <class T, class F>
std::vector<T> list_from_json(const Json& j, F&& element) {
  if (!j.is_array() || j.empty()) detail::fail("expected a non-empty list");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(element(e));
  return out;
}

inline TVector tvector_from_json(const Json& j) {
  return TVector(list_from_json<Bicomplex>(j, bicomplex_from_json));
}

inline HVector hvector_from_json(const Json& j) {
  return HVector(list_from_json<Hyperbolic>(j, hyperbolic_from_json));
}

inline TMatrix tmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    detail::fail("expected a matrix object with \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    detail::fail("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  auto entries = list_from_json<Bicomplex>(j["entries"], bicomplex_from_json);
  if (entries.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "\"entries\" must hold n*n values");
  }
  return TMatrix(n, std::move(entries));
}

inline ComplexMatrix complex_matrix_from_json(const Json& j) {
  auto entries = list_from_json<ComplexC1>(j, complex_from_json);
  const std::size_t n = detail::square_root_exact(entries.size());
  return ComplexMatrix(n, std::move(entries));
}

inline SplitMetric metric_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g1") || !j.contains("g2")) {
    detail::fail("expected a metric object with \"g1\" and \"g2\"");
  }
  return SplitMetric(complex_matrix_from_json(j["g1"]), complex_matrix_from_json(j["g2"]));
}

}  // namespace bch::json
