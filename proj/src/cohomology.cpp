#include "qtorb/cohomology.hpp"

#include <algorithm>

namespace qtorb {

namespace {

bool contains(const FacetSet& super, const FacetSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Poly shift(const Poly& p, const Rat& age) {
  return Poly::monomial(1, age.get_num().get_ui()) * p;
}

std::vector<Poly> face_pps(const std::vector<Face>& all) {
  std::vector<Poly> out;
  out.reserve(all.size());
  for (const Face& f : all) out.push_back(pp_ordinary(f, all));
  return out;
}

}  // namespace

FaceTable build_face_table(const Model& model) {
  FaceTable t;
  t.faces = faces(model);
  t.boxes.reserve(t.faces.size());
  for (const Face& f : t.faces) t.boxes.push_back(enumerate_box(f, model));
  return t;
}

Poly pp_ordinary(const Face& face, const std::vector<Face>& all_faces) {
  return Poly(h_vector(face, all_faces));
}

Poly pp_ordinary(const Face& face, const Model& model) { return pp_ordinary(face, faces(model)); }

Poly e_torus(int k) {
  if (k < 0) throw Error("negative torus dimension");
  return pow(Poly{-1, 1}, static_cast<unsigned>(k));
}

void require_quasi_sl(const Model& model) {
  QuasiSlReport r = is_quasi_sl(model);
  if (r.quasi_sl) return;
  const BoxElement& w = r.witnesses.front();
  std::string face = "{";
  for (std::size_t i = 0; i < w.face.size(); ++i) face += (i ? "," : "") + std::to_string(w.face[i]);
  throw NotQuasiSl("model is not quasi-SL: vertex " + face + "} has a box element of age " +
                   to_string(w.age));
}

Poly pp_cr_direct(const Model& model) {
  require_quasi_sl(model);
  auto all = faces(model);
  Poly total;
  for (const Face& f : all) {
    Poly pp = pp_ordinary(f, all);
    for (const auto& g : box_interior(f, model)) total += shift(pp, g.age);
  }
  return total;
}

Poly pp_cr_via_closures(const Model& model) {
  require_quasi_sl(model);
  auto all = faces(model);
  Poly total;
  for (const Face& f : all) total += pp_ordinary(f, all) * w_tilde_polynomial(f, model);
  return total;
}

Poly pp_cr_via_strata(const Model& model) {
  require_quasi_sl(model);
  Poly total;
  for (const Face& f : faces(model)) total += e_torus(f.dim) * w_polynomial(f, model);
  return total;
}

std::vector<IdentityCheck> check_morestrat(const Model& model) {
  FaceTable t = build_face_table(model);
  std::vector<Poly> w_tilde;
  for (std::size_t i = 0; i < t.faces.size(); ++i)
    w_tilde.push_back(w_tilde_polynomial(t.boxes[i], t.faces[i]));

  std::vector<IdentityCheck> out;
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    IdentityCheck c;
    c.name = "morestrat";
    c.face = t.faces[i].facets;
    c.lhs = w_polynomial(t.boxes[i], t.faces[i]);
    for (std::size_t j = 0; j < t.faces.size(); ++j)
      if (contains(t.faces[i].facets, t.faces[j].facets)) c.rhs += w_tilde[j];
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

IdentityCheck check_h_identity(const Model& model) {
  auto all = faces(model);
  IdentityCheck c;
  c.name = "h_identity";
  c.lhs = pp_ordinary(all.front(), all);
  for (const Face& f : all) c.rhs += e_torus(f.dim);
  c.pass = c.lhs == c.rhs;
  return c;
}

bool CrReport::routes_agree() const {
  return pp_cr_direct == pp_cr_closures && pp_cr_closures == pp_cr_strata;
}

bool CrReport::identity_passes(const std::string& name) const {
  return std::all_of(identities.begin(), identities.end(),
                     [&](const IdentityCheck& c) { return c.name != name || c.pass; });
}

bool CrReport::all_identities_pass() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

CrReport cr_report(const Model& model) {
  require_quasi_sl(model);
  FaceTable t = build_face_table(model);
  std::vector<Poly> pps = face_pps(t.faces);
  CrReport r;
  r.pp = pps.front();

  std::vector<Poly> w(t.faces.size()), w_tilde(t.faces.size());
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    const Face& f = t.faces[i];
    w[i] = w_polynomial(t.boxes[i], f);
    w_tilde[i] = w_tilde_polynomial(t.boxes[i], f);
    for (const auto& g : interior_of(t.boxes[i], f)) {
      Poly contribution = shift(pps[i], g.age);
      r.pp_cr_direct += contribution;
      r.per_sector.push_back(SectorContribution{f, g.age, contribution});
    }
    r.pp_cr_closures += pps[i] * w_tilde[i];
    r.pp_cr_strata += e_torus(f.dim) * w[i];
  }

  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    IdentityCheck c;
    c.name = "morestrat";
    c.face = t.faces[i].facets;
    c.lhs = w[i];
    for (std::size_t j = 0; j < t.faces.size(); ++j)
      if (contains(t.faces[i].facets, t.faces[j].facets)) c.rhs += w_tilde[j];
    c.pass = c.lhs == c.rhs;
    r.identities.push_back(std::move(c));
  }

  IdentityCheck h;
  h.name = "h_identity";
  h.lhs = r.pp;
  for (const Face& f : t.faces) h.rhs += e_torus(f.dim);
  h.pass = h.lhs == h.rhs;
  r.identities.push_back(std::move(h));

  IdentityCheck closures{"newpon_-1", {}, r.pp_cr_direct == r.pp_cr_closures, r.pp_cr_direct,
                         r.pp_cr_closures};
  r.identities.push_back(std::move(closures));
  IdentityCheck strata{"newpon", {}, r.pp_cr_closures == r.pp_cr_strata, r.pp_cr_closures,
                       r.pp_cr_strata};
  r.identities.push_back(std::move(strata));

  for (auto& p : check_box_partition(model)) {
    IdentityCheck c;
    c.name = "gdecom";
    c.face = p.vertex;
    c.pass = p.pass;
    r.identities.push_back(std::move(c));
  }
  return r;
}

}  // namespace qtorb
