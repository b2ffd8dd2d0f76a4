#pragma once

// JSON for scalars, points, group elements and S3 points.
//
// A Q(i) scalar is the string "a/b+c/d*i".  A tower scalar is
//   {"gens": [d_1, ..., d_k], "coeffs": ["..", ...]}
// with d_j (itself a scalar of level j-1) the radicand adjoined at level j
// and 2^k Gaussian-rational coefficients in the internal basis order.
// Parsing within one document goes through a ScalarReader so equal
// generator lists map to the same field object.

#include <map>
#include <string>

#include "json.hpp"

#include "d4vgit/field.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/s3.hpp"

namespace d4vgit {

using Json = nlohmann::json;

inline Json gens_to_json(const Field& f) {
  Json gens = Json::array();
  for (const Scalar& d : tower_generators(f)) {
    if (d.field()) {
      Json sub;
      sub["gens"] = gens_to_json(d.field());
      Json cs = Json::array();
      for (const auto& c : d.coeffs()) cs.push_back(c.str());
      sub["coeffs"] = cs;
      gens.push_back(sub);
    } else {
      gens.push_back(d.coeffs()[0].str());
    }
  }
  return gens;
}

inline Json to_json(const Scalar& s) {
  if (!s.field()) return s.coeffs()[0].str();
  Json j;
  j["gens"] = gens_to_json(s.field());
  Json cs = Json::array();
  for (const auto& c : s.coeffs()) cs.push_back(c.str());
  j["coeffs"] = cs;
  return j;
}

/// Reads scalars, sharing field objects between equal generator lists.
class ScalarReader {
 public:
  Scalar read(const Json& j) {
    if (j.is_string()) return Scalar(GaussQ::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_object() || !j.contains("gens") || !j.contains("coeffs"))
      throw ParseError("scalar must be a string or {\"gens\", \"coeffs\"}: " + j.dump());
    Field f = field(j.at("gens"));
    const Json& cs = j.at("coeffs");
    if (!cs.is_array() || cs.size() != (std::size_t{1} << depth_of(f)))
      throw ParseError("coefficient list must have 2^depth entries: " + j.dump());
    std::vector<GaussQ> coeffs;
    for (const auto& c : cs) {
      if (!c.is_string()) throw ParseError("coefficients are strings");
      coeffs.push_back(GaussQ::parse(c.get<std::string>()));
    }
    return Scalar(f, std::move(coeffs));
  }

  Field field(const Json& gens) {
    if (!gens.is_array()) throw ParseError("gens must be an array");
    Field f = nullptr;
    Json prefix = Json::array();
    for (const auto& g : gens) {
      prefix.push_back(g);
      std::string key = prefix.dump();
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        f = it->second;
        continue;
      }
      Scalar d = read(g);
      if (!is_ancestor_or_same(d.field(), f)) throw ParseError("generator does not live one level down: " + g.dump());
      d = d.lifted_to(f);
      if (d.is_zero()) throw ParseError("zero generator");
      auto node = std::make_shared<FieldNode>();
      node->parent = f;
      node->d = d;
      node->depth = depth_of(f) + 1;
      f = std::move(node);
      cache_[key] = f;
    }
    return f;
  }

 private:
  std::map<std::string, Field> cache_;
};

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline void expect_array(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(n) + " entries");
}

}  // namespace detail

inline Json to_json(const PointHV& p) {
  Json j;
  j["alpha"] = {to_json(p.alpha[0]), to_json(p.alpha[1]), to_json(p.alpha[2])};
  j["beta"] = to_json(p.beta);
  Json B = Json::array();
  for (int i = 0; i < 3; ++i) B.push_back({to_json(p.B[i][0]), to_json(p.B[i][1]), to_json(p.B[i][2])});
  j["B"] = B;
  j["x"] = {to_json(p.x[0]), to_json(p.x[1])};
  return j;
}

inline PointHV point_from_json(const Json& j, ScalarReader& r) {
  PointHV p;
  const Json& a = detail::member(j, "alpha");
  detail::expect_array(a, 3, "alpha");
  for (int i = 0; i < 3; ++i) p.alpha[i] = r.read(a[i]);
  p.beta = r.read(detail::member(j, "beta"));
  const Json& B = detail::member(j, "B");
  detail::expect_array(B, 3, "B");
  for (int i = 0; i < 3; ++i) {
    detail::expect_array(B[i], 3, "B row");
    for (int c = 0; c < 3; ++c) p.B[i][c] = r.read(B[i][c]);
  }
  const Json& x = detail::member(j, "x");
  detail::expect_array(x, 2, "x");
  for (int c = 0; c < 2; ++c) p.x[c] = r.read(x[c]);
  return p;
}

inline PointHV point_from_json(const Json& j) {
  ScalarReader r;
  return point_from_json(j, r);
}

inline Json to_json(const Mat2<Scalar>& g) {
  return Json::array({Json::array({to_json(g[0][0]), to_json(g[0][1])}), Json::array({to_json(g[1][0]), to_json(g[1][1])})});
}

inline Json to_json(const GroupElement& h) {
  Json j;
  j["t"] = {to_json(h.t[0]), to_json(h.t[1]), to_json(h.t[2])};
  j["g"] = to_json(h.g);
  return j;
}

inline Mat2<Scalar> mat2_from_json(const Json& j, ScalarReader& r) {
  detail::expect_array(j, 2, "g");
  Mat2<Scalar> g;
  for (int a = 0; a < 2; ++a) {
    detail::expect_array(j[a], 2, "g row");
    for (int b = 0; b < 2; ++b) g[a][b] = r.read(j[a][b]);
  }
  return g;
}

inline GroupElement group_element_from_json(const Json& j, ScalarReader& r) {
  const Json& t = detail::member(j, "t");
  detail::expect_array(t, 3, "t");
  std::array<Scalar, 3> ts{r.read(t[0]), r.read(t[1]), r.read(t[2])};
  return GroupElement(ts, mat2_from_json(detail::member(j, "g"), r));
}

inline GroupElement group_element_from_json(const Json& j) {
  ScalarReader r;
  return group_element_from_json(j, r);
}

/// S3 points: {"B": [[..3..] x 3]} with rows (U_1, U_2, C).
inline Json to_json(const S3Point& p) {
  Json B = Json::array();
  for (int i = 0; i < 3; ++i) B.push_back({to_json(p.B[i][0]), to_json(p.B[i][1]), to_json(p.B[i][2])});
  Json j;
  j["B"] = B;
  return j;
}

inline S3Point s3_point_from_json(const Json& j) {
  ScalarReader r;
  S3Point p;
  const Json& B = detail::member(j, "B");
  detail::expect_array(B, 3, "B");
  for (int i = 0; i < 3; ++i) {
    detail::expect_array(B[i], 3, "B row");
    for (int c = 0; c < 3; ++c) p.B[i][c] = r.read(B[i][c]);
  }
  return p;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace d4vgit
