#include "qtorb/verify.hpp"

#include <algorithm>
#include <random>

#include "qtorb/blowup.hpp"
#include "qtorb/cohomology.hpp"
#include "qtorb/ehrhart.hpp"
#include "qtorb/generate.hpp"
#include "qtorb/sectors.hpp"

namespace qtorb {

namespace {

std::string set_str(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

class Recorder {
 public:
  explicit Recorder(ModelVerification& v) : v_(v) {}

  // Records a named check once; later failures append detail.
  void expect(const std::string& name, bool ok, const std::string& detail = {}) {
    auto it = std::find_if(v_.checks.begin(), v_.checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    if (it == v_.checks.end()) {
      v_.checks.push_back(CheckResult{name, true, {}});
      it = std::prev(v_.checks.end());
    }
    if (!ok) {
      it->pass = false;
      if (!detail.empty()) it->detail += (it->detail.empty() ? "" : "; ") + detail;
    }
  }

 private:
  ModelVerification& v_;
};

}  // namespace

bool ModelVerification::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> ModelVerification::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return out;
}

ModelVerification verify_model(const Model& model, const VerifyOptions& options) {
  ModelVerification v;
  v.model = model.name;
  Recorder rec(v);

  auto problems = validation_problems(model);
  rec.expect("valid", problems.empty(), problems.empty() ? "" : problems.front());
  if (!problems.empty()) return v;
  auto qsl = is_quasi_sl(model);
  rec.expect("quasi_sl", qsl.quasi_sl, qsl.quasi_sl ? "" : "age " + to_string(qsl.witnesses.front().age));
  if (!qsl.quasi_sl) return v;

  FaceTable table = build_face_table(model);
  for (std::size_t i = 0; i < table.faces.size(); ++i) {
    const Face& f = table.faces[i];
    const auto& box = table.boxes[i];
    const Int order = local_group_order(f, model);
    const std::string label = "face " + set_str(f.facets);
    rec.expect("box_order", Int(static_cast<long>(box.size())) == order, label);
    bool heights_ok = std::all_of(box.begin(), box.end(), [&](const BoxElement& g) {
      bool zero_iff_identity = (g.height == 0) == std::all_of(g.point.begin(), g.point.end(),
                                                              [](const Int& x) { return x == 0; });
      return g.height <= f.codim && zero_iff_identity;
    });
    rec.expect("heights", heights_ok, label);
    Poly w = w_polynomial(box, f);
    rec.expect("w_at_one", w.eval(1) == order, label);

    if (f.codim == 0) continue;
    LatticeSimplex delta = delta_of_face(f, model);
    const int d = f.codim;
    std::vector<Int> fast;
    for (int k = 0; k < d; ++k) fast.push_back(dilate_count_fast(delta, k));
    rec.expect("ehrhart_fast_vs_box", Poly(numerator_from_dilates(fast, d)) == w, label);

    if (options.oracle && order <= options.oracle_order_limit) {
      bool dilates_ok = true;
      for (int k = 0; k <= d + 2; ++k) dilates_ok = dilates_ok && dilate_count(delta, k) == dilate_count_fast(delta, k);
      rec.expect("oracle_dilates", dilates_ok, label);
      rec.expect("oracle_ehrhart_vs_box", Poly(ehrhart_numerator(delta)) == w, label);
    }
  }

  CrReport cr = cr_report(model);
  for (const auto& id : cr.identities) {
    rec.expect(id.name, id.pass,
               (id.face.empty() ? std::string() : "face " + set_str(id.face) + ": ") + id.lhs.to_string() +
                   " vs " + id.rhs.to_string());
  }
  rec.expect("routes_agree", cr.routes_agree());
  rec.expect("constant_term", cr.pp_cr_direct.coeff(0) == 1, cr.pp_cr_direct.to_string());

  Int expected_at_one = 0;
  for (std::size_t i = 0; i < table.faces.size(); ++i) {
    expected_at_one += Int(static_cast<long>(interior_of(table.boxes[i], table.faces[i]).size())) *
                       static_cast<long>(table.faces[i].vertex_ids.size());
  }
  rec.expect("pp_cr_at_one", cr.pp_cr_direct.eval(1) == expected_at_one);

  auto h = h_vector(table.faces.front(), table.faces);
  rec.expect("dehn_sommerville", std::equal(h.begin(), h.end(), h.rbegin()));

  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.metamorphic_trials; ++t) {
    Model changed = apply_basis_change(model, random_unimodular(rng, model.n, 6));
    CrReport other = cr_report(changed);
    rec.expect("unimodular_invariance", other.pp_cr_direct == cr.pp_cr_direct && other.pp == cr.pp);
    Model relabeled = relabel_facets(model, random_permutation(rng, model.m));
    CrReport other2 = cr_report(relabeled);
    rec.expect("relabel_invariance", other2.pp_cr_direct == cr.pp_cr_direct && other2.pp == cr.pp);
  }

  for (const auto& spec : crepant_specs(model)) {
    ++v.crepant_blowups;
    const std::string label = "blowup at " + set_str(spec.face);
    try {
      McKayReport mk = mckay_check(model, spec);
      rec.expect("lemma_quasi_sl_preserved", mk.quasi_sl_after, label);
      rec.expect("mckay", mk.verdict, label);
    } catch (const BlowupError& e) {
      rec.expect("blowup_valid", false, label + ": " + e.what());
    }
  }
  return v;
}

}  // namespace qtorb
