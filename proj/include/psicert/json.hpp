#pragma once

#include "psicert/interval.hpp"

#include <nlohmann/json.hpp>

namespace psicert {

/// Insertion-ordered JSON, so coefficient maps and reports keep their natural order.
using Json = nlohmann::ordered_json;

/// {"lo": "p/q", "hi": "p/q"}
inline Json to_json(const Interval& iv) { return {{"lo", to_string(iv.lo())}, {"hi", to_string(iv.hi())}}; }

inline Interval interval_from_json(const Json& j)
{
    return {parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>())};
}

} // namespace psicert
