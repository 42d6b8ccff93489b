#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtorb/blowup.hpp"
#include "qtorb/generate.hpp"
#include "qtorb/sectors.hpp"
#include "support.hpp"

using namespace qtorb;
namespace qt = qtorb::testing;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

BlowupSpec spec(FacetSet face, std::vector<Rat> weights) { return BlowupSpec{std::move(face), std::move(weights)}; }

std::vector<int> sorted_tags(const LatticeSimplex& s) {
  auto t = s.tags;
  std::sort(t.begin(), t.end());
  return t;
}

// Interior simplices by barycenter: strictly positive in every coordinate over λ_F.
std::set<std::vector<int>> barycenter_interior(const Subdivision& sub) {
  std::set<std::vector<int>> out;
  for (const auto& s : sub.simplices) {
    const std::size_t k = s.coords.front().size();
    bool inside = true;
    for (std::size_t j = 0; j < k; ++j) {
      Rat sum = 0;
      for (const auto& c : s.coords) sum += c[j];
      if (sum <= 0) inside = false;
    }
    if (inside) out.insert(sorted_tags(s));
  }
  return out;
}

std::set<std::vector<int>> reported_interior(const Subdivision& sub) {
  std::set<std::vector<int>> out;
  for (const auto& s : sub.interior_simplices) out.insert(sorted_tags(s));
  return out;
}

bool is_superset(const FacetSet& big, const FacetSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("blowup of WP112 at a vertex gives the square") {
  Model w = qt::wp112();
  auto s = spec({0, 2}, {make_rat(1, 2), make_rat(1, 2)});
  CHECK(blowup_vector(w, s) == iv({0, -1}));
  Model b = blow_up(w, s);
  CHECK(b.m == 4);
  CHECK(b.lambda[3] == iv({0, -1}));
  std::set<FacetSet> verts(b.vertices.begin(), b.vertices.end());
  CHECK(verts == std::set<FacetSet>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(validation_problems(b).empty());
  CHECK(w.m == 3);
}

TEST_CASE("blowup of the Z3 vertex is smooth") {
  Model z = qt::z3_tetrahedron();
  auto s = spec({0, 1, 2}, std::vector<Rat>(3, make_rat(1, 3)));
  Model b = blow_up(z, s);
  CHECK(b.m == 5);
  CHECK(b.vertices.size() == 6);
  CHECK(b.lambda[4] == iv({0, 0, 1}));
  for (std::size_t k = 0; k < b.vertices.size(); ++k) {
    std::vector<qt::LVec> rows(3, qt::LVec(3));
    FacetSet v = b.vertices[k];
    std::sort(v.begin(), v.end());
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) rows[i][j] = b.lambda[static_cast<std::size_t>(v[j])][i].get_si();
    std::int64_t d = qt::cofactor_det(rows);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("blowup errors") {
  Model w = qt::wp112();
  CHECK_THROWS_AS(blow_up(w, spec({0, 1}, {make_rat(1, 3), make_rat(1, 3)})), BlowupError);
  CHECK_THROWS_AS(blow_up(w, spec({0, 0}, {1, 1})), BlowupError);
  CHECK_THROWS_AS(blow_up(w, spec({0}, {1})), BlowupError);
  CHECK_THROWS_AS(blow_up(w, spec({0, 2}, {make_rat(-1, 2), make_rat(3, 2)})), BlowupError);
  CHECK_THROWS_AS(blow_up(w, spec({0, 5}, {1, 1})), BlowupError);
  CHECK_THROWS_AS(blow_up(w, spec({0, 2}, {2, 2})), BlowupError);  // λ_0 = (2,-4) not primitive
}

TEST_CASE("crepancy") {
  CHECK(is_crepant(spec({0, 2}, {make_rat(1, 2), make_rat(1, 2)})));
  CHECK_FALSE(is_crepant(spec({0, 1}, {1, 1})));
  CHECK(is_crepant(spec({0, 1, 2}, std::vector<Rat>(3, make_rat(1, 3)))));
  auto specs = crepant_specs(qt::z3_tetrahedron());
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].face == FacetSet{0, 1, 2});
  CHECK(crepant_specs(qt::cp2()).empty());
}

TEST_CASE("star subdivisions") {
  Model w = qt::wp112();
  auto seg = star_subdivide(face_of(w, {0, 2}), iv({0, -1}), w);
  CHECK(seg.interior_simplices.size() == 3);
  CHECK(subdivision_problems(seg).empty());

  Model z = qt::z3_tetrahedron();
  Face v = face_of(z, {0, 1, 2});
  auto tri = star_subdivide(v, iv({0, 0, 1}), z);
  CHECK(tri.interior_simplices.size() == 7);
  std::size_t maximal = 0;
  for (const auto& s : tri.simplices) maximal += s.dim() == 2 ? 1 : 0;
  CHECK(maximal == 3);
  CHECK(subdivision_problems(tri).empty());
  CHECK(barycenter_interior(tri) == reported_interior(tri));

  CHECK_THROWS_AS(star_subdivide(v, iv({1, 0, 0}), z), Error);
  CHECK_THROWS_AS(star_subdivide(v, iv({0, 0, 2}), z), Error);
}

TEST_CASE("induced triangulations") {
  Model z = qt::z3_tetrahedron();
  Face v = face_of(z, {0, 1, 2});
  auto tau = star_subdivide(v, iv({0, 0, 1}), z);
  auto same = induced_triangulation(v, tau, z);
  CHECK(reported_interior(same) == reported_interior(tau));
  CHECK_THROWS_AS(induced_triangulation(face_of(z, {0, 1, 3}), tau, z), Error);

  // Every crepant blowup of a codim-2 face in dimension 3: the triangulation
  // induced on each vertex above it, checked by barycenters.
  std::size_t checked = 0;
  for (const Model& m : generate_test_models(8, 20, 3).models) {
    for (const auto& s : crepant_specs(m)) {
      Face f = face_of(m, s.face);
      auto t = star_subdivide(f, blowup_vector(m, s), m);
      CHECK(barycenter_interior(t) == reported_interior(t));
      for (const Face& g : faces(m)) {
        if (g.codim <= f.codim || !is_superset(g.facets, f.facets)) continue;
        auto induced = induced_triangulation(g, t, m);
        CHECK(subdivision_problems(induced).empty());
        CHECK(barycenter_interior(induced) == reported_interior(induced));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("wdelta examples") {
  Model w = qt::wp112();
  Face v = face_of(w, {0, 2});
  auto seg = star_subdivide(v, iv({0, -1}), w);
  auto c = check_wdelta(v, seg, w);
  CHECK(c.pass);
  CHECK(c.lhs == Poly{1, 1});
  CHECK(c.rhs == Poly{1, 1});

  Model z = qt::z3_tetrahedron();
  Face zv = face_of(z, {0, 1, 2});
  auto zc = check_wdelta(zv, star_subdivide(zv, iv({0, 0, 1}), z), z);
  CHECK(zc.pass);
  CHECK(zc.lhs == Poly{1, 1, 1});
  CHECK(zc.interior_count == 7);
}

TEST_CASE("McKay checks on the golden models") {
  auto w = mckay_check(qt::wp112(), spec({0, 2}, {make_rat(1, 2), make_rat(1, 2)}));
  CHECK(w.verdict);
  CHECK(w.before.pp_cr_direct == Poly{1, 2, 1});
  CHECK(w.after.pp_cr_direct == Poly{1, 2, 1});

  auto z = mckay_check(qt::z3_tetrahedron(), spec({0, 1, 2}, std::vector<Rat>(3, make_rat(1, 3))));
  CHECK(z.verdict);
  CHECK(z.before.pp_cr_direct == Poly{1, 2, 2, 1});
  CHECK(z.after.pp_cr_direct == Poly{1, 2, 2, 1});
  CHECK(z.after.pp == Poly{1, 2, 2, 1});
  auto h = qt::brute_h_vector(z.blown_up);
  CHECK(h == std::vector<std::int64_t>{1, 2, 2, 1});

  CHECK_THROWS_AS(mckay_check(qt::wp112(), spec({0, 2}, {1, 1})), BlowupError);
}

TEST_CASE("crepant blowups of generated models preserve quasi-SL and PP_CR") {
  for (int n : {2, 3}) {
    for (const Model& m : generate_test_models(77, 10, n).models) {
      for (const auto& s : crepant_specs(m)) {
        CHECK(is_quasi_sl(blow_up(m, s)).quasi_sl);
        auto r = mckay_check(m, s);
        CHECK(r.verdict);
        CHECK(r.pp_cr_equal);
      }
    }
  }
}
