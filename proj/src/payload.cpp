#include "fibcomm/payload.hpp"
#include "fibcomm/error.hpp"

namespace fibcomm {

using json = nlohmann::json;

void to_json(json& j, const CohomologyClass& c) { j = c.coords(); }
void from_json(const json& j, CohomologyClass& c) { c = CohomologyClass(j.get<IntVector>()); }

json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  Rational q;
  if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0)
    fail(ErrorCode::ParseError, "expected a rational \"p/q\", got " + j.dump());
  q.canonicalize();
  return q;
}

json rational_vector_to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

RationalVector rational_vector_from_json(const json& j) {
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

} // namespace fibcomm

namespace fibcomm::entropy {

void to_json(nlohmann::json& j, const EntropyRecord& r) {
  j = {{"class", r.cls}, {"norm", rational_to_json(r.norm)}, {"dilatation", r.dilatation},
       {"entropy", r.entropy}};
}

void from_json(const nlohmann::json& j, EntropyRecord& r) {
  r.cls = j.at("class").get<CohomologyClass>();
  r.norm = rational_from_json(j.at("norm"));
  r.dilatation = j.at("dilatation").get<double>();
  r.entropy = j.at("entropy").get<double>();
}

void to_json(nlohmann::json& j, const ConcavityProbe& p) {
  j = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"margin", p.margin()}, {"strict", p.strict}};
}

void from_json(const nlohmann::json& j, ConcavityProbe& p) {
  p.lhs = j.at("lhs").get<double>();
  p.rhs = j.at("rhs").get<double>();
  p.strict = j.at("strict").get<bool>();
}

} // namespace fibcomm::entropy

namespace fibcomm::commensurability {

void to_json(nlohmann::json& j, const OrbitWitness& w) { j = {{"word", w.word}, {"sign", w.sign}}; }

void from_json(const nlohmann::json& j, OrbitWitness& w) {
  w.word = j.at("word").get<std::vector<std::size_t>>();
  w.sign = j.at("sign").get<int>();
}

void to_json(nlohmann::json& j, const PairVerdict& v) {
  j = {{"kind", std::string(to_string(v.kind))}, {"reason", v.reason}};
  j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
  j["entropy1"] = v.entropy1 ? nlohmann::json(*v.entropy1) : nlohmann::json(nullptr);
  j["entropy2"] = v.entropy2 ? nlohmann::json(*v.entropy2) : nlohmann::json(nullptr);
  j["gap"] = v.gap() ? nlohmann::json(*v.gap()) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, PairVerdict& v) {
  v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
  v.reason = j.at("reason").get<std::string>();
  v.witness.reset();
  v.entropy1.reset();
  v.entropy2.reset();
  if (!j.at("witness").is_null()) v.witness = j["witness"].get<OrbitWitness>();
  if (!j.at("entropy1").is_null()) v.entropy1 = j["entropy1"].get<double>();
  if (!j.at("entropy2").is_null()) v.entropy2 = j["entropy2"].get<double>();
}

void to_json(nlohmann::json& j, const MinimalityGate& g) {
  j = {{"possible", g.possible},
       {"reason", g.reason},
       {"quotient_volume", g.quotient_volume},
       {"min_quotient_cusps", g.min_quotient_cusps}};
}

void from_json(const nlohmann::json& j, MinimalityGate& g) {
  g.possible = j.at("possible").get<bool>();
  g.reason = j.at("reason").get<std::string>();
  g.quotient_volume = j.at("quotient_volume").get<double>();
  g.min_quotient_cusps = j.at("min_quotient_cusps").get<std::int64_t>();
}

} // namespace fibcomm::commensurability

namespace fibcomm::covers {

void to_json(nlohmann::json& j, const CoverReport& r) {
  j = {{"degree", r.degree},
       {"m", r.m.get_str()},
       {"d", r.d},
       {"components", r.components},
       {"component_degree", r.component_degree},
       {"component_chi", r.component_chi},
       {"fibers_homeomorphic", r.fibers_homeomorphic},
       {"nonsymmetric_commensurable", r.nonsymmetric_commensurable}};
}

void from_json(const nlohmann::json& j, CoverReport& r) {
  r.degree = j.at("degree").get<std::int64_t>();
  if (r.m.set_str(j.at("m").get<std::string>(), 10) != 0)
    fail(ErrorCode::ParseError, "cover report field m is not an integer");
  r.d = j.at("d").get<std::int64_t>();
  r.components = j.at("components").get<std::int64_t>();
  r.component_degree = j.at("component_degree").get<std::int64_t>();
  r.component_chi = j.at("component_chi").get<std::int64_t>();
  r.fibers_homeomorphic = j.at("fibers_homeomorphic").get<bool>();
  r.nonsymmetric_commensurable = j.at("nonsymmetric_commensurable").get<bool>();
}

} // namespace fibcomm::covers
