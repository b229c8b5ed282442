#pragma once

// JSON encodings of the result types, used for the CLI's --json payload.
// Every encoding round-trips: x.get<T>() == original.

#include "fibcomm/commensurability.hpp"
#include "fibcomm/covers.hpp"
#include "fibcomm/entropy.hpp"
#include "fibcomm/types.hpp"

#include <json.hpp>

namespace fibcomm {

void to_json(nlohmann::json& j, const CohomologyClass& c);
void from_json(const nlohmann::json& j, CohomologyClass& c);

// Rationals travel as "p/q" strings, Integers as decimal strings.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_vector_to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const nlohmann::json& j);

} // namespace fibcomm

namespace fibcomm::entropy {
void to_json(nlohmann::json& j, const EntropyRecord& r);
void from_json(const nlohmann::json& j, EntropyRecord& r);
void to_json(nlohmann::json& j, const ConcavityProbe& p);
void from_json(const nlohmann::json& j, ConcavityProbe& p);
} // namespace fibcomm::entropy

namespace fibcomm::commensurability {
void to_json(nlohmann::json& j, const OrbitWitness& w);
void from_json(const nlohmann::json& j, OrbitWitness& w);
void to_json(nlohmann::json& j, const PairVerdict& v);
void from_json(const nlohmann::json& j, PairVerdict& v);
void to_json(nlohmann::json& j, const MinimalityGate& g);
void from_json(const nlohmann::json& j, MinimalityGate& g);
} // namespace fibcomm::commensurability

namespace fibcomm::covers {
void to_json(nlohmann::json& j, const CoverReport& r);
void from_json(const nlohmann::json& j, CoverReport& r);
} // namespace fibcomm::covers
