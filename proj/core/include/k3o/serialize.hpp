#pragma once

#include "k3o/surfaces.hpp"
#include "k3o/tame.hpp"
#include "k3o/wild.hpp"

#include "json.hpp"

namespace k3o {

using json = nlohmann::json;

/// {"orbits": {"d": m_d, ...}, "dim": 22}
json to_json(const EigenProfile& p);
EigenProfile profile_from_json(const json& j);

json to_json(const Certificate& c);
json to_json(const ShapeVerdict& v);
json to_json(const OrderVerdict& v);
json to_json(const ReplayReport& r);
json to_json(const WildClassEntry& e);
json wild_classification_json(Int p);
json to_json(const VerificationReport& r);
json to_json(const VerifySummary& s);
json table1_json();
json sets_json(Int characteristic);
json bounds_json(Int p);

} // namespace k3o
