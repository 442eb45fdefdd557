#include "toric/json_io.hpp"

#include <cstdint>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

bool decimal_string_ok(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_decimal(const std::string& s) {
  if (!decimal_string_ok(s))
    throw ParseError("not a decimal integer: \"" + s + "\"");
  Int x;
  mpz_set_str(x.get_mpz_t(), s.c_str(), 10);
  return x;
}

}  // namespace

Json int_to_json(const Int& x) {
  static const Int kCut = Int(1) << 53;
  if (x <= kCut && x >= -kCut) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Int json_to_int(const Json& j) {
  if (j.is_number_unsigned())
    return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  throw ParseError("expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return int_to_json(q.get_num());
  return Json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

Rat json_to_rat(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_decimal(s));
    Int num = parse_decimal(s.substr(0, slash));
    Int den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    return Rat(num) / Rat(den);
  }
  return Rat(json_to_int(j));
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& c : v) a.push_back(int_to_json(c));
  return a;
}

Vec json_to_vec(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  Vec v;
  for (const Json& c : j) v.push_back(json_to_int(c));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

Mat json_to_mat(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix");
  std::vector<Vec> rows;
  for (const Json& r : j) rows.push_back(json_to_vec(r));
  for (const Vec& r : rows)
    if (r.size() != rows.front().size() || r.empty())
      throw ParseError("matrix rows must be nonempty and equally long");
  return Mat::from_rows(rows, rows.front().size());
}

Json cone_to_json(const Cone& c) {
  Json out = Json::object();
  out["ambient_rank"] = c.ambient_rank();
  Json rays = Json::array();
  for (const Vec& g : c.generators()) rays.push_back(vec_to_json(g));
  out["rays"] = rays;
  return out;
}

Cone json_to_cone(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("rays"))
    throw ParseError("cone needs \"ambient_rank\" and \"rays\"");
  Int n = json_to_int(j.at("ambient_rank"));
  if (n < 0 || n > 1024) throw ParseError("ambient_rank out of range");
  std::size_t rank = n.get_ui();
  if (!j.at("rays").is_array()) throw ParseError("\"rays\" must be an array");
  std::vector<Vec> gens;
  for (const Json& r : j.at("rays")) {
    Vec v = json_to_vec(r);
    if (v.size() != rank) throw ParseError("ray length differs from ambient_rank");
    gens.push_back(std::move(v));
  }
  return Cone::from_generators(rank, gens);
}

Json fan_to_json(const Fan2D& f) {
  Json out = Json::object();
  Json rays = Json::array();
  for (const Vec& r : f.rays()) rays.push_back(vec_to_json(r));
  out["rays"] = rays;
  return out;
}

Fan2D json_to_fan(const Json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.at("rays").is_array())
    throw ParseError("fan needs a \"rays\" array");
  std::vector<Vec> rays;
  for (const Json& r : j.at("rays")) {
    Vec v = json_to_vec(r);
    if (v.size() != 2) throw ParseError("fan rays must have 2 entries");
    rays.push_back(std::move(v));
  }
  return Fan2D(rays);
}

Json root_to_json(const DemazureRoot& r) {
  Json out = Json::object();
  out["ray"] = r.ray_index;
  out["weight"] = vec_to_json(r.weight);
  return out;
}

DemazureRoot json_to_root(const Json& j) {
  if (!j.is_object() || !j.contains("ray") || !j.contains("weight"))
    throw ParseError("root needs \"ray\" and \"weight\"");
  Int ray = json_to_int(j.at("ray"));
  if (ray < 0 || ray > 100000) throw ParseError("\"ray\" out of range");
  return DemazureRoot{ray.get_ui(), json_to_vec(j.at("weight"))};
}

Json function_to_json(const MonomialFunction& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t = Json::object();
    t["m"] = vec_to_json(m);
    t["coeff"] = rat_to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

MonomialFunction json_to_function(const Json& j) {
  if (!j.is_array()) throw ParseError("function must be an array of terms");
  MonomialFunction f;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("m") || !t.contains("coeff"))
      throw ParseError("each term needs \"m\" and \"coeff\"");
    f = f + MonomialFunction::monomial(json_to_vec(t.at("m")),
                                       json_to_rat(t.at("coeff")));
  }
  return f;
}

Json quotient_to_json(const QuotientStructure& q) {
  Json out = Json::object();
  out["free_rank"] = q.free_rank;
  Json tor = Json::array();
  for (const Int& d : q.invariant_factors) tor.push_back(int_to_json(d));
  out["torsion"] = tor;
  return out;
}

Json witness_to_json(const IsoWitness& w) {
  Json out = Json::object();
  out["equivalent"] = w.equivalent;
  if (w.map) out["witness"] = mat_to_json(*w.map);
  if (!w.reason.empty()) out["reason"] = w.reason;
  return out;
}

Json fingerprint_to_json(const ConeFingerprint& f) {
  Json out = Json::object();
  out["ambient_rank"] = f.ambient_rank;
  out["dim"] = f.dim;
  out["ray_count"] = f.ray_count;
  Json fi = Json::array();
  for (const Int& d : f.facet_indices) fi.push_back(int_to_json(d));
  out["facet_indices"] = fi;
  out["dual_hilbert_size"] = f.dual_hilbert_size;
  out["group"] = f.group;
  return out;
}

Json du_report_to_json(const DuOrbitReport& r) {
  Json out = Json::object();
  out["kernel"] = quotient_to_json(r.kernel);
  out["kernel_connected"] = r.kernel_connected;
  out["span_is_full"] = r.span_is_full;
  out["pass"] = r.pass;
  return out;
}

Json ok_envelope(Json result) {
  Json out = Json::object();
  out["ok"] = true;
  out["result"] = std::move(result);
  return out;
}

Json error_envelope(const std::string& code, const std::string& message) {
  Json err = Json::object();
  err["code"] = code;
  err["message"] = message;
  Json out = Json::object();
  out["ok"] = false;
  out["error"] = err;
  return out;
}

}  // namespace toric
