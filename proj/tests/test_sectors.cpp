#include <doctest.h>

#include <set>

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

using Key = std::vector<std::string>;

std::set<Key> library_keys(const std::vector<BoxElement>& box) {
  std::set<Key> out;
  for (const auto& g : box) {
    Key k;
    for (const auto& c : g.coeffs) k.push_back(to_string(c));
    out.insert(k);
  }
  return out;
}

std::set<Key> oracle_keys(const std::vector<qt::BruteElement>& box) {
  std::set<Key> out;
  for (const auto& g : box) {
    Key k;
    for (auto t : g.num) k.push_back(to_string(make_rat(t, g.den)));
    out.insert(k);
  }
  return out;
}

}  // namespace

TEST_CASE("local group orders") {
  Model w = qt::wp112();
  CHECK(local_group_order(face_of(w, {0}), w) == 1);
  std::vector<IntVec> two{iv({1, 0}), iv({1, 2})};
  CHECK(cone_group_order(two, 2) == 2);
  Model z = qt::z3_tetrahedron();
  CHECK(local_group_order(face_of(z, {0, 1, 2}), z) == 3);
  CHECK(local_group_order(faces(z).front(), z) == 1);
}

TEST_CASE("box enumeration examples") {
  Model c = qt::cp2();
  auto unimodular = enumerate_box(face_of(c, {0, 1}), c);
  REQUIRE(unimodular.size() == 1);
  CHECK(unimodular[0].is_identity());

  std::vector<IntVec> two{iv({1, 0}), iv({1, 2})};
  auto box = enumerate_cone_box(two, 2);
  REQUIRE(box.size() == 2);
  CHECK(box[0].is_identity());
  CHECK(box[1].coeffs == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(box[1].point == iv({1, 1}));
  CHECK(box[1].age == 1);
  CHECK(box[1].height == 2);

  Model z = qt::z3_tetrahedron();
  auto zb = enumerate_box(face_of(z, {0, 1, 2}), z);
  REQUIRE(zb.size() == 3);
  CHECK(zb[1].coeffs == RatVec(3, make_rat(1, 3)));
  CHECK(zb[1].point == iv({0, 0, 1}));
  CHECK(zb[1].age == 1);
  CHECK(zb[2].coeffs == RatVec(3, make_rat(2, 3)));
  CHECK(zb[2].point == iv({0, 0, 2}));
  CHECK(zb[2].age == 2);
}

TEST_CASE("box interior examples") {
  std::vector<IntVec> two{iv({1, 0}), iv({1, 2})};
  auto box = enumerate_cone_box(two, 2);
  int interior = 0;
  for (const auto& g : box) interior += g.is_interior() ? 1 : 0;
  CHECK(interior == 1);

  Model w = qt::wp112();
  CHECK(box_interior(face_of(w, {1}), w).empty());
  auto top = box_interior(faces(w).front(), w);
  REQUIRE(top.size() == 1);
  CHECK(top[0].is_identity());
}

TEST_CASE("W polynomials") {
  Model z = qt::z3_tetrahedron();
  Face v = face_of(z, {0, 1, 2});
  CHECK(w_polynomial(v, z) == Poly{1, 1, 1});
  CHECK(w_tilde_polynomial(v, z) == Poly{0, 1, 1});
  std::vector<IntVec> two{iv({1, 0}), iv({1, 2})};
  CHECK(cone_w_polynomial(two, 2) == Poly{1, 1});
  Model w = qt::wp112();
  CHECK(w_tilde_polynomial(face_of(w, {0, 2}), w) == Poly{0, 1});
  Model c = qt::cp2();
  CHECK(w_polynomial(face_of(c, {0, 1}), c) == Poly{1});
  CHECK(w_tilde_polynomial(face_of(c, {0, 1}), c).is_zero());
  CHECK(w_polynomial(faces(c).front(), c) == Poly{1});
  CHECK(w_tilde_polynomial(faces(c).front(), c) == Poly{1});

  Model k3 = qt::make_model("k3", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-1, -3}});
  CHECK_THROWS_AS(w_polynomial(face_of(k3, {0, 2}), k3), NonIntegralAge);
}

TEST_CASE("quasi-SL classification") {
  CHECK(is_quasi_sl(qt::wp112()).quasi_sl);
  CHECK(is_quasi_sl(qt::cp2()).quasi_sl);
  CHECK(is_quasi_sl(qt::z3_tetrahedron()).quasi_sl);
  Model k3 = qt::make_model("k3", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-1, -3}});
  auto q = is_quasi_sl(k3);
  CHECK_FALSE(q.quasi_sl);
  REQUIRE(q.witnesses.size() >= 1);
  CHECK(q.witnesses[0].age == make_rat(2, 3));

  // λ_2 = (-a, -b): quasi-SL exactly for these pairs in the range 1..4.
  std::set<std::pair<int, int>> expected{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      Model m = qt::make_model("t", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-a, -b}});
      if (!validation_problems(m).empty()) continue;
      CHECK(is_quasi_sl(m).quasi_sl == (expected.count({a, b}) == 1));
    }
}

TEST_CASE("sectors") {
  auto smooth = sectors(qt::cp2());
  REQUIRE(smooth.size() == 1);
  CHECK(smooth[0].untwisted());

  auto w = sectors(qt::wp112());
  REQUIRE(w.size() == 2);
  CHECK(w[1].face.facets == FacetSet{0, 2});
  CHECK(w[1].element.age == 1);

  auto z = sectors(qt::z3_tetrahedron());
  REQUIRE(z.size() == 3);
  CHECK(z[1].face.facets == FacetSet{0, 1, 2});
  CHECK(z[2].face.facets == FacetSet{0, 1, 2});
  std::multiset<long> ages{z[1].element.age.get_num().get_si(), z[2].element.age.get_num().get_si()};
  CHECK(ages == std::multiset<long>{1, 2});
}

TEST_CASE("box enumeration equals the brute-force oracle") {
  std::vector<Model> corpus{qt::wp112(), qt::cp2(), qt::z3_tetrahedron()};
  for (int n : {2, 3}) {
    auto g = generate_test_models(23, 8, n);
    corpus.insert(corpus.end(), g.models.begin(), g.models.end());
  }
  for (const Model& m : corpus) {
    for (const Face& f : faces(m)) {
      auto cols = qt::to_long(m, f.facets);
      auto oracle = qt::brute_box(cols);
      auto box = enumerate_box(f, m);
      CHECK(local_group_order(f, m) == qt::minor_gcd(cols));
      CHECK(box.size() == oracle.size());
      CHECK(library_keys(box) == oracle_keys(oracle));
    }
    for (const auto& p : check_box_partition(m)) CHECK_MESSAGE(p.pass, p.detail);
  }
}
