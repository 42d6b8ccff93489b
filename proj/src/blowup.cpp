#include "qtorb/blowup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qtorb/sectors.hpp"

namespace qtorb {

namespace {

std::string set_str(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool contains(const FacetSet& super, const FacetSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool same_or_opposite(const IntVec& a, const IntVec& b) {
  IntVec neg(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
  return a == b || a == neg;
}

// Sorted vertex tags -> lattice points, for assembling simplices.
using TagSet = std::vector<int>;

bool tag_less(const TagSet& a, const TagSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Subdivision assemble(const Model& model, const FacetSet& ambient,
                     const std::set<TagSet, decltype(&tag_less)>& tag_sets,
                     const std::map<int, IntVec>& points) {
  Subdivision sub;
  sub.ambient_face = ambient;
  for (const TagSet& tags : tag_sets) {
    std::vector<IntVec> verts;
    for (int t : tags) verts.push_back(points.at(t));
    LatticeSimplex sx = make_simplex(model, ambient, std::move(verts), tags);
    // Interior iff the coordinate supports of the vertices cover λ_F.
    std::vector<bool> covered(ambient.size(), false);
    for (const auto& c : sx.coords)
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) covered[i] = true;
    bool interior = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    if (interior) sub.interior_simplices.push_back(sx);
    sub.simplices.push_back(std::move(sx));
  }
  return sub;
}

// Barycentric coordinates of x (given over λ_F) in the simplex with vertex
// coordinates `cols`; false when the system is singular.
bool barycentric(const std::vector<RatVec>& cols, const RatVec& x, RatVec& out) {
  const std::size_t d = cols.size();
  std::vector<RatVec> a(d, RatVec(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = cols[j][i];
    a[i][d] = x[i];
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) return false;
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[c][j];
    }
  }
  out.assign(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) out[i] = a[i][d] / a[i][i];
  return true;
}

Rat abs_det(const std::vector<RatVec>& cols) {
  const std::size_t d = cols.size();
  std::vector<RatVec> a(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i][j] = cols[j][i];
  Rat result = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) return 0;
    if (p != c) std::swap(a[c], a[p]);
    result *= a[c][c];
    for (std::size_t i = c + 1; i < d; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < d; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return abs(result);
}

}  // namespace

BlowupSpec normalized(BlowupSpec spec) {
  if (spec.face.size() != spec.weights.size()) {
    throw BlowupError("face has " + std::to_string(spec.face.size()) + " facets but " +
                      std::to_string(spec.weights.size()) + " weights were given");
  }
  std::vector<std::size_t> order(spec.face.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return spec.face[a] < spec.face[b]; });
  BlowupSpec out;
  for (std::size_t i : order) {
    out.face.push_back(spec.face[i]);
    out.weights.push_back(spec.weights[i]);
  }
  return out;
}

bool is_crepant(const BlowupSpec& spec) {
  Rat sum = 0;
  for (const auto& b : spec.weights) sum += b;
  return sum == 1;
}

IntVec blowup_vector(const Model& model, const BlowupSpec& raw) {
  BlowupSpec spec = normalized(raw);
  if (std::adjacent_find(spec.face.begin(), spec.face.end()) != spec.face.end()) {
    throw BlowupError("face " + set_str(spec.face) + " repeats a facet");
  }
  for (int f : spec.face)
    if (f < 0 || f >= model.m) throw BlowupError("facet index " + std::to_string(f) + " out of range");
  if (spec.face.size() < 2) throw BlowupError("blowups need a face of codimension at least 2");
  bool is_face = std::any_of(model.vertices.begin(), model.vertices.end(), [&](FacetSet v) {
    std::sort(v.begin(), v.end());
    return contains(v, spec.face);
  });
  if (!is_face) throw BlowupError("facet set " + set_str(spec.face) + " is not a face");
  for (const auto& b : spec.weights)
    if (b <= 0) throw BlowupError("weight " + to_string(b) + " is not positive");

  const auto n = static_cast<std::size_t>(model.n);
  RatVec sum(n, Rat(0));
  for (std::size_t j = 0; j < spec.face.size(); ++j) {
    const IntVec& l = model.lambda[static_cast<std::size_t>(spec.face[j])];
    for (std::size_t r = 0; r < n; ++r) sum[r] += spec.weights[j] * l[r];
  }
  IntVec lambda0(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!is_integral(sum[r])) {
      std::string text = "(";
      for (std::size_t i = 0; i < n; ++i) text += (i ? "," : "") + to_string(sum[i]);
      throw BlowupError("lambda_0 = " + text + ") is not integral");
    }
    lambda0[r] = sum[r].get_num();
  }
  if (gcd_of(lambda0) == 0 || !is_primitive(lambda0)) {
    throw BlowupError("lambda_0 is not primitive");
  }
  for (int f : spec.face)
    if (same_or_opposite(lambda0, model.lambda[static_cast<std::size_t>(f)]))
      throw BlowupError("lambda_0 coincides with ±lambda_" + std::to_string(f));
  return lambda0;
}

Model blow_up(const Model& model, const BlowupSpec& raw) {
  BlowupSpec spec = normalized(raw);
  IntVec lambda0 = blowup_vector(model, spec);
  Model out;
  out.n = model.n;
  out.m = model.m + 1;
  out.name = model.name.empty() ? std::string() : model.name + "^";
  out.lambda = model.lambda;
  out.lambda.push_back(lambda0);
  for (FacetSet v : model.vertices) {
    std::sort(v.begin(), v.end());
    if (!contains(v, spec.face)) {
      out.vertices.push_back(v);
      continue;
    }
    for (int j : spec.face) {
      FacetSet w;
      for (int f : v)
        if (f != j) w.push_back(f);
      w.push_back(model.m);
      std::sort(w.begin(), w.end());
      out.vertices.push_back(std::move(w));
    }
  }
  auto problems = validation_problems(out);
  if (!problems.empty()) {
    std::string msg = "blown-up model is invalid:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw BlowupError(msg);
  }
  return out;
}

std::vector<BlowupSpec> crepant_specs(const Model& model) {
  std::vector<BlowupSpec> out;
  for (const Face& f : faces(model)) {
    if (f.codim < 2) continue;
    for (const auto& g : box_interior(f, model)) {
      if (g.age != 1 || !is_primitive(g.point)) continue;
      out.push_back(BlowupSpec{f.facets, g.coeffs});
    }
  }
  return out;
}

Subdivision star_subdivide(const Face& face, const IntVec& lambda0, const Model& model) {
  if (face.codim < 1) throw Error("cannot subdivide Δ_P");
  IntMat basis = IntMat::from_columns(characteristic_set(model, face.facets),
                                      static_cast<std::size_t>(model.n));
  RatVec b;
  if (!try_coords_in_basis(basis, lambda0, b)) throw Error("lambda_0 is outside the span of λ_F");
  Rat sum = 0;
  for (const auto& x : b) {
    if (x <= 0) throw Error("lambda_0 is not interior to Δ_F");
    sum += x;
  }
  if (sum != 1) throw Error("lambda_0 does not lie on Δ_F (coefficient sum " + to_string(sum) + ")");

  const int center = model.m;
  std::map<int, IntVec> points;
  for (int f : face.facets) points[f] = model.lambda[static_cast<std::size_t>(f)];
  points[center] = lambda0;

  std::set<TagSet, decltype(&tag_less)> tag_sets(&tag_less);
  for (int j : face.facets) {
    TagSet maximal{center};
    for (int f : face.facets)
      if (f != j) maximal.push_back(f);
    std::sort(maximal.begin(), maximal.end());
    const std::size_t k = maximal.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      TagSet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(maximal[i]);
      tag_sets.insert(std::move(s));
    }
  }
  return assemble(model, face.facets, tag_sets, points);
}

Subdivision induced_triangulation(const Face& subface, const Subdivision& tau, const Model& model) {
  if (!contains(subface.facets, tau.ambient_face)) {
    throw Error("face " + set_str(subface.facets) + " is not a subface of " +
                set_str(tau.ambient_face));
  }
  std::map<int, IntVec> points;
  for (const auto& sx : tau.simplices)
    for (std::size_t i = 0; i < sx.verts.size(); ++i) points[sx.tags.at(i)] = sx.verts[i];
  TagSet extra;
  for (int f : subface.facets) {
    if (!std::binary_search(tau.ambient_face.begin(), tau.ambient_face.end(), f)) {
      extra.push_back(f);
      points[f] = model.lambda[static_cast<std::size_t>(f)];
    }
  }

  std::vector<TagSet> thetas{TagSet{}};
  for (const auto& sx : tau.simplices) thetas.push_back(sx.tags);

  std::set<TagSet, decltype(&tag_less)> tag_sets(&tag_less);
  for (const TagSet& theta : thetas) {
    for (unsigned long mask = 0; mask < (1UL << extra.size()); ++mask) {
      TagSet s = theta;
      for (std::size_t i = 0; i < extra.size(); ++i)
        if (mask & (1UL << i)) s.push_back(extra[i]);
      if (s.empty()) continue;
      std::sort(s.begin(), s.end());
      tag_sets.insert(std::move(s));
    }
  }
  return assemble(model, subface.facets, tag_sets, points);
}

std::vector<std::string> subdivision_problems(const Subdivision& sub) {
  std::vector<std::string> problems;
  const std::size_t d = sub.ambient_face.size();
  std::set<TagSet> present;
  for (const auto& sx : sub.simplices) present.insert(sx.tags);

  for (const auto& sx : sub.simplices) {
    const std::size_t k = sx.tags.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      TagSet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(sx.tags[i]);
      if (!present.count(s)) {
        problems.push_back("face " + set_str(s) + " of simplex " + set_str(sx.tags) + " is missing");
      }
    }
  }

  std::vector<const LatticeSimplex*> maximal;
  for (const auto& sx : sub.simplices)
    if (sx.verts.size() == d) maximal.push_back(&sx);
  Rat volume = 0;
  for (const auto* sx : maximal) {
    Rat v = abs_det(sx->coords);
    if (v == 0) problems.push_back("maximal simplex " + set_str(sx->tags) + " is degenerate");
    volume += v;
  }
  if (volume != 1) {
    problems.push_back("normalized volumes of maximal simplices sum to " + to_string(volume) +
                       ", expected 1");
  }

  for (const auto* a : maximal) {
    RatVec center(d, Rat(0));
    for (const auto& c : a->coords)
      for (std::size_t i = 0; i < d; ++i) center[i] += c[i];
    for (auto& x : center) x /= static_cast<long>(d);
    for (const auto* b : maximal) {
      if (a == b) continue;
      RatVec mu;
      if (!barycentric(b->coords, center, mu)) continue;
      if (std::all_of(mu.begin(), mu.end(), [](const Rat& x) { return x > 0; })) {
        problems.push_back("maximal simplices " + set_str(a->tags) + " and " + set_str(b->tags) +
                           " overlap");
      }
    }
  }
  return problems;
}

WdeltaCheck check_wdelta(const Face& face, const Subdivision& sub, const Model& model) {
  WdeltaCheck c;
  c.face = face.facets;
  c.subdivision_problems = subdivision_problems(sub);
  c.interior_count = sub.interior_simplices.size();
  try {
    c.lhs = w_polynomial(face, model);
    for (const auto& sx : sub.interior_simplices) {
      c.rhs += e_torus(sx.codim()) * cone_w_polynomial(sx.verts, model.n);
    }
  } catch (const NonIntegralAge& e) {
    c.subdivision_problems.push_back(e.what());
  }
  c.pass = c.subdivision_problems.empty() && c.lhs == c.rhs;
  return c;
}

McKayReport mckay_check(const Model& model, const BlowupSpec& raw) {
  BlowupSpec spec = normalized(raw);
  if (!is_crepant(spec)) throw BlowupError("blowup is not crepant (weights do not sum to 1)");
  require_quasi_sl(model);

  McKayReport r;
  r.spec = spec;
  r.lambda0 = blowup_vector(model, spec);
  r.blown_up = blow_up(model, spec);
  r.positive_before = positively_omnioriented(model);
  r.positive_after = positively_omnioriented(r.blown_up);
  r.before = cr_report(model);
  r.quasi_sl_after = is_quasi_sl(r.blown_up).quasi_sl;
  if (r.quasi_sl_after) {
    r.after = cr_report(r.blown_up);
    r.pp_cr_equal = r.before.pp_cr_direct == r.after.pp_cr_direct;
  }

  Face f = face_of(model, spec.face);
  Subdivision tau = star_subdivide(f, r.lambda0, model);
  for (const Face& sub : faces(model)) {
    if (!contains(sub.facets, f.facets)) continue;
    Subdivision induced = induced_triangulation(sub, tau, model);
    r.wdelta.push_back(check_wdelta(sub, induced, model));
  }

  r.verdict = r.quasi_sl_after && r.pp_cr_equal && r.before.routes_agree() &&
              r.before.all_identities_pass() && r.after.routes_agree() &&
              r.after.all_identities_pass() &&
              std::all_of(r.wdelta.begin(), r.wdelta.end(),
                          [](const WdeltaCheck& w) { return w.pass; });
  return r;
}

}  // namespace qtorb
