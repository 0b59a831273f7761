#pragma once

#include <json.hpp>

#include "waring/poly.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const QQi& c);
Json scalar_to_json(const C64& c);
QQi qqi_from_json(const Json& j);
C64 c64_from_json(const Json& j);

Json poly_to_json(const PolyQ& p);
Json poly_to_json(const PolyC& p);
PolyQ poly_q_from_json(const Json& j);
PolyC poly_c_from_json(const Json& j);

}  // namespace waring
