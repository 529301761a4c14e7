#pragma once

// JSON encoding of values, matrices, polynomials and reports.
//
//   value       "p/q" | "p" | integer | "-inf" (max-plus 0̄) | "+inf" (min-plus 0̄)
//               F1 values are the integers 0 and 1
//   matrix      {"semifield":"maxplus","rows":2,"cols":2,"entries":[["2","1"],["1","2"]]}
//   polynomial  {"semifield":"maxplus","coeffs":{"0":"4","1":"3","2":"0"}}
//   table       {"size":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1}
//   cover       tangible values as above, ghosts as {"ghost": value}

#include <string>
#include <vector>

#include "json.hpp"

#include "tropical/cover.hpp"
#include "tropical/error.hpp"
#include "tropical/finite_semiring.hpp"
#include "tropical/matrix.hpp"
#include "tropical/polynomial.hpp"
#include "tropical/rank.hpp"
#include "tropical/singularity.hpp"
#include "tropical/value.hpp"

namespace tropical::io {

using json = nlohmann::ordered_json;

template <class K>
json value_to_json(const K& v) {
  if constexpr (std::is_same_v<K, F1>) return v.bit() ? 1 : 0;
  else return format_value(v);
}

template <class K>
K value_from_json(const json& j) {
  if (j.is_string()) return parse_value<K>(j.get<std::string>());
  if (j.is_number_integer()) return parse_value<K>(std::to_string(j.get<long long>()));
  throw ParseError("expected a value (string or integer), got " + j.dump());
}

template <TotallyOrdered K>
json cover_to_json(const Cover<K>& c) {
  if (c.is_ghost()) return json{{"ghost", value_to_json(c.magnitude())}};
  return value_to_json(c.magnitude());
}

template <class K>
json vector_to_json(const std::vector<K>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(value_to_json(x));
  return a;
}

template <class K>
std::vector<K> vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of values, got " + j.dump());
  std::vector<K> v;
  for (const auto& x : j) v.push_back(value_from_json<K>(x));
  return v;
}

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::size_t require_size(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

/// The "semifield" field of an input document, or the fallback when absent.
inline SemifieldKind semifield_of(const json& j, SemifieldKind fallback) {
  if (j.is_object() && j.contains("semifield")) {
    if (!j["semifield"].is_string()) throw ParseError("field \"semifield\" must be a string");
    return parse_semifield_kind(j["semifield"].get<std::string>());
  }
  return fallback;
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(value_to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return json{{"semifield", to_string(kind_of<K>())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class K>
Matrix<K> matrix_from_json(const json& j) {
  const std::size_t rows = require_size(j, "rows");
  const std::size_t cols = require_size(j, "cols");
  const auto& e = require(j, "entries");
  if (!e.is_array() || e.size() != rows) throw ParseError("\"entries\" must hold one array per row");
  std::vector<K> data;
  for (const auto& r : e) {
    if (!r.is_array() || r.size() != cols) throw ParseError("every row of \"entries\" must have \"cols\" values");
    for (const auto& x : r) data.push_back(value_from_json<K>(x));
  }
  return Matrix<K>(rows, cols, std::move(data));
}

template <class K>
json polynomial_to_json(const Polynomial<K>& p) {
  json c = json::object();
  for (const auto& [deg, a] : p.coefficients()) c[std::to_string(deg)] = value_to_json(a);
  return json{{"semifield", to_string(kind_of<K>())}, {"coeffs", c}};
}

template <class K>
Polynomial<K> polynomial_from_json(const json& j) {
  const auto& c = require(j, "coeffs");
  if (!c.is_object()) throw ParseError("\"coeffs\" must map degrees to values");
  typename Polynomial<K>::Coefficients coeffs;
  for (const auto& [key, val] : c.items()) {
    std::size_t pos = 0;
    unsigned long deg = 0;
    try {
      deg = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || key.empty()) throw ParseError("polynomial degree \"" + key + "\" is not a natural number");
    coeffs[deg] = value_from_json<K>(val);
  }
  return Polynomial<K>(std::move(coeffs));
}

inline FiniteSemiringTable table_from_json(const json& j) {
  const std::size_t n = require_size(j, "size");
  auto table = [&](const char* key) {
    const auto& t = require(j, key);
    if (!t.is_array() || t.size() != n) throw ParseError(std::string("\"") + key + "\" must be a size x size table");
    FiniteSemiringTable::Table out;
    for (const auto& r : t) {
      if (!r.is_array() || r.size() != n) throw ParseError(std::string("\"") + key + "\" must be a size x size table");
      std::vector<std::size_t> row;
      for (const auto& x : r) {
        if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("table entries must be element indices");
        row.push_back(x.get<std::size_t>());
      }
      out.push_back(std::move(row));
    }
    return out;
  };
  return FiniteSemiringTable(table("add"), table("mul"), require_size(j, "zero"), require_size(j, "one"));
}

inline json table_to_json(const FiniteSemiringTable& t) {
  return json{{"size", t.size()}, {"add", t.add_table()}, {"mul", t.mul_table()}, {"zero", t.zero()}, {"one", t.one()}};
}

inline json permutation_to_json(const Permutation& p) {
  json img = json::array();
  for (std::size_t x : p.image) img.push_back(x + 1);
  return json{{"image", img}, {"parity", p.parity == Parity::even ? "even" : "odd"}};
}

template <TotallyOrdered K>
json det_report_to_json(const DetReport<K>& r) {
  json even = json::array(), odd = json::array();
  for (const auto& p : r.optimal_even) even.push_back(permutation_to_json(p));
  for (const auto& p : r.optimal_odd) odd.push_back(permutation_to_json(p));
  return json{{"det", value_to_json(r.det)},
              {"det_plus", value_to_json(r.det_plus)},
              {"det_minus", value_to_json(r.det_minus)},
              {"optimal_even", even},
              {"optimal_odd", odd}};
}

template <TotallyOrdered K>
json singularity_report_to_json(const Matrix<K>& a, const SingularityReport<K>& r) {
  json out{{"d_singular", r.d_singular},
           {"D_singular", r.D_singular},
           {"definitional_singular", r.definitional_singular},
           {"gm_dependent", r.gm_dependent},
           {"det", det_report_to_json(r.det)}};
  if (r.witness) {
    json cover = json::array();
    for (const auto& c : cover_mat_vec<K>(a, r.witness->x)) cover.push_back(cover_to_json(c));
    out["witness"] = json{{"x", vector_to_json(r.witness->x)},
                          {"a1", matrix_to_json(r.witness->a1)},
                          {"a2", matrix_to_json(r.witness->a2)},
                          {"cover_product", cover}};
  } else {
    out["witness"] = nullptr;
  }
  if (r.gm_witness) {
    out["gm_witness"] = json{{"x1", vector_to_json(r.gm_witness->x1)}, {"x2", vector_to_json(r.gm_witness->x2)}};
  } else {
    out["gm_witness"] = nullptr;
  }
  return out;
}

template <TotallyOrdered K>
json family_to_json(const std::vector<Vector<K>>& family) {
  json f = json::array();
  for (const auto& v : family) f.push_back(vector_to_json(v));
  return f;
}

template <TotallyOrdered K>
json family_report_to_json(const FamilyReport<K>& r) {
  json idx = json::array();
  for (std::size_t i : r.max_regular_subfamily) idx.push_back(i + 1);
  return json{{"vectors", family_to_json(r.vectors)},
              {"is_regular", r.is_regular},
              {"tropical_dimension", r.tropical_dimension},
              {"max_regular_subfamily", idx}};
}

template <RationalMagnitude K>
json roots_to_json(const std::vector<Root<K>>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(json{{"root", value_to_json(r.value)}, {"multiplicity", r.multiplicity}});
  return a;
}

}  // namespace tropical::io
