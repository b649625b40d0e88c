#include "hypersimplex/serialize.hpp"

#include <limits>
#include <sstream>

namespace hypersimplex {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  require(j.is_number_integer(), ErrorKind::parameter, "expected an integer");
  return BigInt(j.get<std::int64_t>());
}

Json to_json(const Subset& s) { return Json(std::vector<int>(s.elements().begin(), s.elements().end())); }

Json to_json(const CharVec& v) { return Json(v.entries()); }

Json to_json(const std::vector<CharVec>& face) {
  Json out = Json::array();
  for (const auto& v : face) out.push_back(to_json(v));
  return out;
}

Json to_json(const StableFamily& f) {
  Json members = Json::array();
  for (const auto& s : f.members) members.push_back(to_json(s));
  return Json{{"n", f.n}, {"k", f.k}, {"r", f.r}, {"members", members}};
}

Json to_json(const Simplex& s) { return Json{{"omega", s.omega}, {"vertices", to_json(s.vertices)}}; }

Json to_json(const Triangulation& t) {
  Json simplices = Json::array();
  for (const auto& s : t.simplices) simplices.push_back(to_json(s));
  return Json{{"n", t.n}, {"k", t.k}, {"r", t.r}, {"count", t.simplices.size()}, {"simplices", simplices}};
}

Json to_json(const SimplexLabel& label) {
  return Json{{"ell", label.ell}, {"lambda", label.lambda.parts}, {"s", label.s}};
}

Json to_json(const ShellingStep& step) {
  return Json{{"omega", step.simplex.omega},
              {"label", step.label ? to_json(*step.label) : Json(nullptr)},
              {"restriction_face", to_json(step.restriction_face)},
              {"shelling_number", step.shelling_number}};
}

Json to_json(const std::vector<ShellingStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Json to_json(const ShellingVerdict& v) {
  Json out{{"ok", v.ok && v.complete}, {"count", v.count}};
  if (!v.complete) out["complete"] = false;
  if (!v.ok || !v.complete) out["checked"] = v.checked;
  if (v.violation)
    out["violation"] = Json{{"index", v.violation->index},
                            {"witness_face", to_json(v.violation->witness_face)},
                            {"witness_is_new", v.violation->witness_is_new}};
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(big_to_json(c));
  return Json{{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j.at("coeffs")) c.push_back(big_from_json(x));
  return IntPolynomial(std::move(c));
}

Json to_json(const BivariatePoly& p) {
  Json out = Json::array();
  for (const auto& [xy, c] : p.terms()) out.push_back(Json{{"x", xy.first}, {"y", xy.second}, {"c", big_to_json(c)}});
  return out;
}

Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.num_vertices}, {"labels", g.labels}, {"edges", edges}};
}

Json to_json(const InhibitionDiagram& d) {
  Json out{{"n", d.n}, {"r", d.r}, {"ell", d.ell}, {"empty_region", d.empty_region}};
  out["graph"] = to_json(d.graph);
  out["coeffs"] = to_json(region_polynomial(d))["coeffs"];
  return out;
}

Json to_json(const HStarResult& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.poly.padded(h.n)) coeffs.push_back(big_to_json(c));
  const auto shape = shape_predicates(h.poly);
  Json out{{"n", h.n}, {"k", h.k}, {"r", h.r}, {"method", std::string(to_string(h.method))}, {"coeffs", coeffs}};
  out["unimodal"] = shape.unimodal;
  out["log_concave"] = shape.log_concave;
  out["volume_normalized"] = big_to_json(h.poly.sum());
  if (is_advisory(h.method)) out["advisory"] = true;
  return out;
}

Json to_json(const EhrhartData& e) {
  Json counts = Json::array();
  for (const auto& c : e.counts) counts.push_back(big_to_json(c));
  Json rational = Json::array();
  for (const auto& q : e.ehrhart)
    rational.push_back(Json::array({numerator(q).str(), denominator(q).str()}));
  Json out{{"n", e.n}, {"k", e.k}, {"r", e.r}, {"counts", counts}, {"ehrhart_rational", rational}};
  Json h = Json::array();
  for (const auto& c : e.hstar.padded(e.n)) h.push_back(big_to_json(c));
  out["hstar"] = h;
  return out;
}

Json to_json(const ConjectureReport& rep) {
  Json out{{"n", rep.n}, {"k", rep.k}, {"r", rep.r}, {"simplices", rep.simplices}, {"shelling_ok", rep.shelling_ok}};
  out["complete"] = rep.complete;
  out["checked"] = rep.checked;
  out["violation"] = rep.violation ? Json{{"index", rep.violation->index},
                                          {"witness_face", to_json(rep.violation->witness_face)},
                                          {"witness_is_new", rep.violation->witness_is_new}}
                                   : Json(nullptr);
  out["tiebreak_fallbacks"] = rep.tiebreak_fallbacks;
  return out;
}

Json error_json(const Error& e) {
  return Json{{"error", Json{{"kind", std::string(to_string(e.kind()))}, {"detail", e.what()}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string polynomial_csv(int n, int k, int r, const std::string& method, const IntPolynomial& p, int length) {
  std::ostringstream os;
  os << "n,k,r,method,degree,coeff\n";
  const auto c = p.padded(std::max(length, p.degree() + 1));
  for (std::size_t i = 0; i < c.size(); ++i)
    os << n << ',' << k << ',' << r << ',' << csv_field(method) << ',' << i << ',' << c[i] << '\n';
  return os.str();
}

}  // namespace hypersimplex
