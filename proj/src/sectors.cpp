#include "qtorb/sectors.hpp"

#include <algorithm>
#include <map>

namespace qtorb {

namespace {

std::string describe(const BoxElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    if (i) out += ",";
    out += to_string(g.coeffs[i]);
  }
  return out + ") age " + to_string(g.age);
}

std::string face_label(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

BoxElement identity_element(int ambient, std::size_t k, const FacetSet& face) {
  BoxElement e;
  e.face = face;
  e.coeffs.assign(k, Rat(0));
  e.point.assign(static_cast<std::size_t>(ambient), Int(0));
  e.age = 0;
  e.height = 0;
  return e;
}

}  // namespace

Int cone_group_order(std::span<const IntVec> gens, int ambient) {
  if (gens.empty()) return 1;
  IntMat l = IntMat::from_columns(gens, static_cast<std::size_t>(ambient));
  SmithForm s = smith_normal_form(l);
  Int order = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i >= s.d.rows() || s.d(i, i) == 0) throw Error("cone generators are linearly dependent");
    order *= s.d(i, i);
  }
  return order;
}

std::vector<BoxElement> enumerate_cone_box(std::span<const IntVec> gens, int ambient,
                                           const FacetSet& face) {
  const std::size_t k = gens.size();
  if (k == 0) return {identity_element(ambient, 0, face)};

  // U L V = D. The coordinate matrix of L in the saturated basis is
  // M = D_k V^-1, so Z^k / M Z^k has coset representatives y with
  // 0 <= y_i < d_i and coefficients c = V D_k^-1 y.
  IntMat l = IntMat::from_columns(gens, static_cast<std::size_t>(ambient));
  SmithForm s = smith_normal_form(l);
  std::vector<Int> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= s.d.rows() || s.d(i, i) == 0) throw Error("cone generators are linearly dependent");
    d[i] = s.d(i, i);
  }

  std::vector<BoxElement> out;
  std::vector<Int> y(k, Int(0));
  for (;;) {
    BoxElement e;
    e.face = face;
    e.coeffs.assign(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      Rat c = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (y[i] != 0) c += Rat(s.v(j, i) * y[i]) / Rat(d[i]);
      }
      c.canonicalize();
      e.coeffs[j] = frac(c);
    }
    e.point.assign(static_cast<std::size_t>(ambient), Int(0));
    e.age = 0;
    e.height = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& a = e.coeffs[j];
      if (a == 0) continue;
      e.age += a;
      ++e.height;
    }
    // Integrality of Σ a_j λ_j is an invariant of the construction.
    for (std::size_t r = 0; r < static_cast<std::size_t>(ambient); ++r) {
      Rat x = 0;
      for (std::size_t j = 0; j < k; ++j) x += e.coeffs[j] * gens[j][r];
      if (!is_integral(x)) throw Error("internal: box element is not a lattice point");
      e.point[r] = x.get_num();
    }
    out.push_back(std::move(e));

    std::size_t i = 0;
    while (i < k) {
      ++y[i];
      if (y[i] < d[i]) break;
      y[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  std::sort(out.begin(), out.end(),
            [](const BoxElement& a, const BoxElement& b) { return a.coeffs < b.coeffs; });
  return out;
}

Poly age_polynomial(std::span<const BoxElement> elements, const std::string& context) {
  std::vector<Int> coeffs;
  for (const auto& g : elements) {
    if (!is_integral(g.age)) {
      throw NonIntegralAge("non-integral age at " + context + ": element " + describe(g));
    }
    std::size_t deg = g.age.get_num().get_ui();
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += 1;
  }
  return Poly(std::move(coeffs));
}

Poly cone_w_polynomial(std::span<const IntVec> gens, int ambient) {
  auto box = enumerate_cone_box(gens, ambient);
  return age_polynomial(box, "cone");
}

Int local_group_order(const Face& face, const Model& model) {
  auto gens = characteristic_set(model, face.facets);
  return cone_group_order(gens, model.n);
}

std::vector<BoxElement> enumerate_box(const Face& face, const Model& model) {
  auto gens = characteristic_set(model, face.facets);
  return enumerate_cone_box(gens, model.n, face.facets);
}

std::vector<BoxElement> interior_of(std::span<const BoxElement> box, const Face& face) {
  std::vector<BoxElement> out;
  for (const auto& g : box) {
    if (face.is_polytope() ? g.is_identity() : g.height == face.codim) out.push_back(g);
  }
  return out;
}

std::vector<BoxElement> box_interior(const Face& face, const Model& model) {
  auto box = enumerate_box(face, model);
  return interior_of(box, face);
}

Poly w_polynomial(std::span<const BoxElement> box, const Face& face) {
  return age_polynomial(box, "face " + face_label(face.facets));
}

Poly w_tilde_polynomial(std::span<const BoxElement> box, const Face& face) {
  auto interior = interior_of(box, face);
  return age_polynomial(interior, "face " + face_label(face.facets));
}

Poly w_polynomial(const Face& face, const Model& model) {
  return w_polynomial(enumerate_box(face, model), face);
}

Poly w_tilde_polynomial(const Face& face, const Model& model) {
  return w_tilde_polynomial(enumerate_box(face, model), face);
}

QuasiSlReport is_quasi_sl(const Model& model) {
  QuasiSlReport report;
  for (std::size_t k = 0; k < model.vertices.size(); ++k) {
    FacetSet v = model.vertices[k];
    std::sort(v.begin(), v.end());
    auto gens = characteristic_set(model, v);
    for (auto& g : enumerate_cone_box(gens, model.n, v)) {
      if (!is_integral(g.age)) {
        report.quasi_sl = false;
        report.witnesses.push_back(std::move(g));
      }
    }
  }
  return report;
}

std::vector<Sector> sectors(const Model& model) {
  std::vector<Sector> out;
  for (const Face& f : faces(model)) {
    for (auto& g : box_interior(f, model)) out.push_back(Sector{f, std::move(g)});
  }
  return out;
}

std::vector<PartitionCheck> check_box_partition(const Model& model) {
  auto all = faces(model);
  std::map<FacetSet, std::vector<BoxElement>> interiors;
  for (const Face& f : all) interiors[f.facets] = box_interior(f, model);

  std::vector<PartitionCheck> out;
  for (const Face& v : all) {
    if (v.dim != 0) continue;
    PartitionCheck check;
    check.vertex = v.facets;
    std::vector<IntVec> whole;
    for (const auto& g : enumerate_box(v, model)) whole.push_back(g.point);
    std::vector<IntVec> parts;
    for (const Face& f : all) {
      if (!std::includes(v.facets.begin(), v.facets.end(), f.facets.begin(), f.facets.end()))
        continue;
      for (const auto& g : interiors[f.facets]) parts.push_back(g.point);
    }
    std::sort(whole.begin(), whole.end());
    std::sort(parts.begin(), parts.end());
    bool disjoint = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
    check.pass = disjoint && whole == parts;
    check.detail = std::to_string(whole.size()) + " box elements, " +
                   std::to_string(parts.size()) + " interior elements over containing faces" +
                   (disjoint ? "" : " (overlap)");
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace qtorb
