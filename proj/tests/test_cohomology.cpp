#include <doctest.h>

#include "qtorb/cohomology.hpp"
#include "qtorb/generate.hpp"
#include "support.hpp"

using namespace qtorb;
namespace qt = qtorb::testing;

TEST_CASE("ordinary Poincare polynomials") {
  Model w = qt::wp112();
  CHECK(pp_ordinary(faces(w).front(), w) == Poly{1, 1, 1});
  CHECK(pp_ordinary(face_of(w, {0, 1}), w) == Poly{1});
  Model sq = qt::square();
  CHECK(pp_ordinary(faces(sq).front(), sq) == Poly{1, 2, 1});
}

TEST_CASE("torus E-polynomials") {
  CHECK(e_torus(0) == Poly{1});
  CHECK(e_torus(1) == Poly{-1, 1});
  CHECK(e_torus(2) == Poly{1, -2, 1});
}

TEST_CASE("Chen-Ruan Poincare polynomial by three routes") {
  struct Case {
    Model model;
    Poly expected;
  };
  std::vector<Case> cases{{qt::cp2(), Poly{1, 1, 1}},
                          {qt::wp112(), Poly{1, 2, 1}},
                          {qt::z3_tetrahedron(), Poly{1, 2, 2, 1}}};
  for (const auto& c : cases) {
    CHECK(pp_cr_direct(c.model) == c.expected);
    CHECK(pp_cr_via_closures(c.model) == c.expected);
    CHECK(pp_cr_via_strata(c.model) == c.expected);
  }
  Model k3 = qt::make_model("k3", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-1, -3}});
  CHECK_THROWS_AS(pp_cr_direct(k3), NotQuasiSl);
}

TEST_CASE("stratification identity per face") {
  for (const auto& c : check_morestrat(qt::cp2())) {
    CHECK(c.pass);
    CHECK(c.lhs == Poly{1});
  }
  for (const auto& c : check_morestrat(qt::wp112())) {
    CHECK(c.pass);
    if (c.face == FacetSet{0, 2}) CHECK(c.lhs == Poly{1, 1});
  }
  for (const auto& c : check_morestrat(qt::z3_tetrahedron())) {
    CHECK(c.pass);
    if (c.face == FacetSet{0, 1, 2}) CHECK(c.rhs == Poly{1, 1, 1});
  }
}

TEST_CASE("h identity") {
  auto tri = check_h_identity(qt::wp112());
  CHECK(tri.pass);
  CHECK(tri.lhs == Poly{1, 1, 1});
  auto sq = check_h_identity(qt::square());
  CHECK(sq.pass);
  CHECK(sq.lhs == Poly{1, 2, 1});
}

TEST_CASE("full report on generated models") {
  for (int n : {2, 3, 4}) {
    for (const Model& m : generate_test_models(5, 6, n).models) {
      CrReport r = cr_report(m);
      CHECK(r.routes_agree());
      CHECK(r.all_identities_pass());
      CHECK(r.pp_cr_direct.coeff(0) == 1);
      const auto& c = r.pp_cr_direct.coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == c[c.size() - 1 - i]);
      CHECK(static_cast<int>(c.size()) == n + 1);
      auto h = qt::brute_h_vector(m);
      for (std::size_t i = 0; i < h.size(); ++i) CHECK(r.pp.coeff(i) == h[i]);
    }
  }
}
