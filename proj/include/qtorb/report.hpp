#pragma once

// Canonical JSON reports. Objects use sorted keys, so dump() is byte-stable.

#include <json.hpp>

#include <cstdint>

#include "qtorb/blowup.hpp"
#include "qtorb/cohomology.hpp"
#include "qtorb/model.hpp"

namespace qtorb::report {

using nlohmann::json;

json validate_ok(const Model& model);
json validate_failed(const std::vector<std::string>& violations);

/// [{facets, codim, dim, vertices, f_vector, h_vector}] in canonical order.
json faces(const Model& model);

/// [{face, coeffs, point, age, height}]; age is an integer when integral and
/// a "p/q" string otherwise.
json sectors(const Model& model);

/// {pp: {s_coeffs, betti}, quasi_sl, pp_cr?: {s_coeffs, betti}}; betti lists
/// every degree 0..2d with zeros in odd degrees.
json betti(const Model& model);

/// {pp, pp_cr, routes_agree, sectors, identities: {morestrat, h_identity, newpon}}.
json cr(const CrReport& cr);

/// [{face, psi, order, dilates}] for every face of codim >= 1. With `oracle`
/// the dilates come from exhaustive counting and psi is compared against W;
/// `consistent` is cleared on any mismatch.
json ehrhart(const Model& model, bool oracle, bool& consistent);

/// Summary of a blowup: spec, λ_0, crepancy, new sizes, quasi-SL.
json blowup(const BlowupSpec& spec, const Model& after);

json mckay(const McKayReport& r);

/// Generates a corpus and verifies every model; `all_pass` is false when any
/// check fails or the generator ran out of budget.
json fuzz(std::uint64_t seed, int count, int n, int budget, bool oracle, bool& all_pass);

}  // namespace qtorb::report
