#include "qtorb/json_io.hpp"

#include <cstdint>

namespace qtorb::json_io {

namespace {
const Int kSafeLimit = Int(1) << 53;
}

json encode(const Int& v) {
  if (abs(v) < kSafeLimit) return json(v.get_si());
  return json(v.get_str());
}

json encode(const Rat& v) { return json(to_string(v)); }

json encode(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

json encode(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

json encode(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x);
  return out;
}

json encode(const Poly& p) { return encode(p.coeffs()); }

Int decode_int(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

}  // namespace qtorb::json_io
