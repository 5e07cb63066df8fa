#pragma once

#include <json.hpp>

#include "hurwitz/bridge.hpp"
#include "hurwitz/zigzag.hpp"

namespace hurwitz::cli {

nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(const TropicalCover& c);
nlohmann::json to_json(const RealTropicalCover& rc);
nlohmann::json to_json(const Factorization& f, const SignSequence& signs);
nlohmann::json to_json(const FactorizationSpec& spec);
// Witness string with its edge list, tails and components.
nlohmann::json to_json(const TropicalCover& c, const ZigzagStructure& z);
nlohmann::json to_json(const CorrespondenceReport& report);

std::string rational_str(const Rational& q);

}  // namespace hurwitz::cli
