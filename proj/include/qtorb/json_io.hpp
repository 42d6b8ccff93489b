#pragma once

// JSON encoding of exact values. Integers below 2^53 in magnitude become JSON
// numbers, larger ones decimal strings; rationals are always "p/q" strings.

#include <json.hpp>

#include <vector>

#include "qtorb/exact.hpp"
#include "qtorb/intlat.hpp"

namespace qtorb::json_io {

using nlohmann::json;

json encode(const Int& v);
json encode(const Rat& v);
json encode(const IntVec& v);
json encode(const RatVec& v);
json encode(const std::vector<int>& v);
/// s-coefficients of the polynomial, index i = degree 2i.
json encode(const Poly& p);

/// Accepts an integral JSON number or a decimal string.
Int decode_int(const json& j);

}  // namespace qtorb::json_io
