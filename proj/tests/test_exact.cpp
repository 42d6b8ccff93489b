#include <doctest.h>

#include <random>

#include "qtorb/exact.hpp"

using namespace qtorb;

TEST_CASE("poly arithmetic examples") {
  CHECK(Poly{1, 1} * Poly{1, 1} == Poly{1, 2, 1});
  CHECK(pow(Poly{-1, 1}, 0) == Poly{1});
  Poly zero = Poly{1, 1} + Poly{-1, -1};
  CHECK(zero.is_zero());
  CHECK(zero.coeffs().empty());
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(Poly{1, 2, 0}.coeffs().size() == 2);
}

TEST_CASE("poly evaluation and printing") {
  Poly p{1, 2, 1};
  CHECK(p.eval(1) == 4);
  CHECK(p.eval(-1) == 0);
  CHECK(p.to_string() == "1 + 2s + s^2");
  CHECK(Poly().to_string() == "0");
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("binomials") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 4) == 0);
  CHECK(binom(30, 15) == 155117520);
}

TEST_CASE("rational helpers") {
  CHECK(parse_rat("1/2") == make_rat(1, 2));
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(parse_rat("3") == 3);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK(to_string(make_rat(2, 4)) == "1/2");
  CHECK(frac(make_rat(-1, 3)) == make_rat(2, 3));
  CHECK(floor(make_rat(-1, 3)) == -1);
  CHECK(is_integral(make_rat(4, 2)));
  CHECK_FALSE(is_integral(make_rat(1, 2)));
}

namespace {

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<Int> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return Poly(c);
}

}  // namespace

TEST_CASE("poly ring axioms on random inputs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Poly{1} == a);
    CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
    CHECK(pow(a, 3) == a * a * a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    if (!a.coeffs().empty()) CHECK(a.coeffs().back() != 0);
  }
}

TEST_CASE("binomial recurrence") {
  for (long n = 1; n < 25; ++n)
    for (long k = -1; k <= n + 1; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}
