#include "qtorb/report.hpp"

#include "qtorb/ehrhart.hpp"
#include "qtorb/generate.hpp"
#include "qtorb/json_io.hpp"
#include "qtorb/sectors.hpp"
#include "qtorb/verify.hpp"

namespace qtorb::report {

using json_io::encode;

namespace {

json betti_block(const Poly& p) {
  json out;
  out["s_coeffs"] = encode(p);
  json degrees = json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) degrees.push_back(0);
    degrees.push_back(encode(p.coeffs()[i]));
  }
  out["betti"] = degrees;
  return out;
}

json age_value(const Rat& age) {
  if (is_integral(age)) return encode(age.get_num());
  return encode(age);
}

json sector_entry(const Face& f, const BoxElement& g) {
  json e;
  e["face"] = encode(f.facets);
  e["coeffs"] = encode(g.coeffs);
  e["point"] = encode(g.point);
  e["age"] = age_value(g.age);
  e["height"] = g.height;
  return e;
}

json identity_list(const std::vector<IdentityCheck>& ids) {
  json out = json::array();
  for (const auto& c : ids) {
    json e;
    e["name"] = c.name;
    e["face"] = encode(c.face);
    e["pass"] = c.pass;
    e["lhs"] = encode(c.lhs);
    e["rhs"] = encode(c.rhs);
    out.push_back(e);
  }
  return out;
}

}  // namespace

json validate_ok(const Model& model) {
  json out;
  out["valid"] = true;
  out["name"] = model.name;
  out["n"] = model.n;
  out["m"] = model.m;
  out["vertex_count"] = model.vertices.size();
  auto q = is_quasi_sl(model);
  out["quasi_sl"] = q.quasi_sl;
  json signs = json::array();
  for (std::size_t k = 0; k < model.vertices.size(); ++k) signs.push_back(vertex_sign(model, static_cast<int>(k)));
  out["vertex_signs"] = signs;
  return out;
}

json validate_failed(const std::vector<std::string>& violations) {
  json out;
  out["valid"] = false;
  out["violations"] = violations;
  return out;
}

json faces(const Model& model) {
  auto all = qtorb::faces(model);
  json out = json::array();
  for (const Face& f : all) {
    json e;
    e["facets"] = encode(f.facets);
    e["codim"] = f.codim;
    e["dim"] = f.dim;
    e["vertices"] = encode(f.vertex_ids);
    e["f_vector"] = encode(f_vector(f, all));
    e["h_vector"] = encode(h_vector(f, all));
    out.push_back(e);
  }
  return out;
}

json sectors(const Model& model) {
  json out = json::array();
  for (const auto& s : qtorb::sectors(model)) out.push_back(sector_entry(s.face, s.element));
  return out;
}

json betti(const Model& model) {
  json out;
  auto all = qtorb::faces(model);
  out["pp"] = betti_block(pp_ordinary(all.front(), all));
  bool q = is_quasi_sl(model).quasi_sl;
  out["quasi_sl"] = q;
  if (q) out["pp_cr"] = betti_block(cr_report(model).pp_cr_direct);
  return out;
}

json cr(const CrReport& r) {
  json out;
  out["pp"] = encode(r.pp);
  out["pp_cr"] = encode(r.pp_cr_direct);
  out["routes_agree"] = r.routes_agree();
  json secs = json::array();
  for (const auto& s : r.per_sector) {
    json e;
    e["face"] = encode(s.face.facets);
    e["age"] = age_value(s.age);
    e["contribution"] = encode(s.contribution);
    secs.push_back(e);
  }
  out["sectors"] = secs;
  json ids;
  ids["morestrat"] = r.identity_passes("morestrat");
  ids["h_identity"] = r.identity_passes("h_identity");
  ids["newpon"] = r.identity_passes("newpon") && r.identity_passes("newpon_-1");
  out["identities"] = ids;
  return out;
}

json ehrhart(const Model& model, bool oracle, bool& consistent) {
  consistent = true;
  json out = json::array();
  for (const Face& f : qtorb::faces(model)) {
    if (f.codim == 0) continue;
    LatticeSimplex delta = delta_of_face(f, model);
    const int d = f.codim;
    std::vector<Int> dilates;
    for (int k = 0; k < d; ++k) dilates.push_back(oracle ? dilate_count(delta, k) : dilate_count_fast(delta, k));
    auto psi = numerator_from_dilates(dilates, d);
    if (oracle && Poly(psi) != w_polynomial(f, model)) consistent = false;
    json e;
    e["face"] = encode(f.facets);
    e["psi"] = encode(psi);
    e["order"] = encode(local_group_order(f, model));
    e["dilates"] = encode(dilates);
    out.push_back(e);
  }
  return out;
}

json blowup(const BlowupSpec& raw, const Model& after) {
  BlowupSpec spec = normalized(raw);
  json out;
  out["face"] = encode(spec.face);
  out["weights"] = encode(spec.weights);
  out["crepant"] = is_crepant(spec);
  out["lambda0"] = encode(after.lambda.back());
  out["m"] = after.m;
  out["vertex_count"] = after.vertices.size();
  out["quasi_sl"] = is_quasi_sl(after).quasi_sl;
  return out;
}

json mckay(const McKayReport& r) {
  json out;
  out["face"] = encode(r.spec.face);
  out["weights"] = encode(r.spec.weights);
  out["lambda0"] = encode(r.lambda0);
  out["quasi_sl_after"] = r.quasi_sl_after;
  out["pp_cr_before"] = encode(r.before.pp_cr_direct);
  out["pp_cr_after"] = encode(r.after.pp_cr_direct);
  out["pp_cr_equal"] = r.pp_cr_equal;
  out["routes_agree_before"] = r.before.routes_agree();
  out["routes_agree_after"] = r.after.routes_agree();
  out["identities_before"] = identity_list(r.before.identities);
  out["identities_after"] = identity_list(r.after.identities);
  json wd = json::array();
  for (const auto& w : r.wdelta) {
    json e;
    e["face"] = encode(w.face);
    e["pass"] = w.pass;
    e["lhs"] = encode(w.lhs);
    e["rhs"] = encode(w.rhs);
    e["interior_simplices"] = w.interior_count;
    e["problems"] = w.subdivision_problems;
    wd.push_back(e);
  }
  out["wdelta"] = wd;
  json omni;
  omni["convention"] = "increasing facet order";
  omni["positive_before"] = r.positive_before;
  omni["positive_after"] = r.positive_after;
  out["omniorientation"] = omni;
  out["blown_up"] = json::parse(model_to_json_text(r.blown_up));
  out["verdict"] = r.verdict;
  return out;
}

json fuzz(std::uint64_t seed, int count, int n, int budget, bool oracle, bool& all_pass) {
  GeneratedCorpus corpus = generate_test_models(seed, count, n, budget);
  all_pass = corpus.failures.empty();
  json models = json::array();
  std::size_t blowups = 0;
  for (std::size_t i = 0; i < corpus.models.size(); ++i) {
    VerifyOptions opts;
    opts.oracle = oracle;
    opts.seed = seed * 1000003ULL + i;
    ModelVerification v = verify_model(corpus.models[i], opts);
    blowups += v.crepant_blowups;
    json e;
    e["name"] = v.model;
    e["pass"] = v.pass();
    e["crepant_blowups"] = v.crepant_blowups;
    e["failures"] = v.failures();
    e["model"] = json::parse(model_to_json_text(corpus.models[i]));
    models.push_back(e);
    all_pass = all_pass && v.pass();
  }
  json out;
  out["seed"] = seed;
  out["n"] = n;
  out["requested"] = count;
  out["generated"] = corpus.models.size();
  out["generator_failures"] = corpus.failures;
  out["crepant_blowups_checked"] = blowups;
  out["oracle"] = oracle;
  out["models"] = models;
  out["pass"] = all_pass;
  return out;
}

}  // namespace qtorb::report
