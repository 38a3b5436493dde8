#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <blob/laurent.hpp>

#include <random>
#include <vector>

using blob::Int;
using blob::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_terms(0, 6);
  std::uniform_int_distribution<int> exp_dist(-8, 8);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  LaurentPoly p;
  int k = n_terms(rng);
  for (int i = 0; i < k; ++i) {
    p += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("zero and constant construction") {
  LaurentPoly z;
  CHECK(z.is_zero());
  CHECK(z.coefficient(0) == 0);
  CHECK(z.coefficient(5) == 0);

  LaurentPoly c(Int(7));
  CHECK(!c.is_zero());
  CHECK(c.is_constant());
  CHECK(c.coefficient(0) == 7);

  LaurentPoly zero_const(Int(0));
  CHECK(zero_const.is_zero());
}

TEST_CASE("monomial construction and canonical form") {
  auto m = LaurentPoly::monomial(3);
  CHECK(m.is_monomial());
  CHECK(m.coefficient(3) == 1);
  CHECK(m.min_exponent() == 3);
  CHECK(m.max_exponent() == 3);

  auto neg = LaurentPoly::monomial(-2, Int(4));
  CHECK(neg.coefficient(-2) == 4);
  CHECK(neg.min_exponent() == -2);

  // A zero-coefficient monomial collapses to the zero polynomial.
  CHECK(LaurentPoly::monomial(5, Int(0)).is_zero());

  // Cancellation must not leave explicit zero terms behind.
  auto diff = m - m;
  CHECK(diff.is_zero());
  CHECK(diff.terms().empty());
}

TEST_CASE("arithmetic examples") {
  auto t = LaurentPoly::monomial(1);
  auto tinv = LaurentPoly::monomial(-1);
  auto one = LaurentPoly(Int(1));

  auto quantum2 = t + tinv;
  CHECK(quantum2.coefficient(1) == 1);
  CHECK(quantum2.coefficient(-1) == 1);
  CHECK(quantum2.coefficient(0) == 0);

  // (t + t^-1)^2 = t^2 + 2 + t^-2
  auto sq = quantum2 * quantum2;
  CHECK(sq.coefficient(2) == 1);
  CHECK(sq.coefficient(0) == 2);
  CHECK(sq.coefficient(-2) == 1);
  CHECK(sq.eval_at_one() == 4);

  // (t - 1)(t + 1) = t^2 - 1
  auto prod = (t - one) * (t + one);
  CHECK(prod == LaurentPoly::monomial(2) - one);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    auto c = random_poly(rng);

    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + LaurentPoly() == a);
    CHECK(a * LaurentPoly(Int(1)) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation at one is a ring homomorphism") {
  std::mt19937 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
  }
}

TEST_CASE("shift multiplies by a power of t") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng);
    CHECK(a.shifted(3) == a * LaurentPoly::monomial(3));
    CHECK(a.shifted(-2) == a * LaurentPoly::monomial(-2));
    CHECK(a.shifted(0) == a);
    CHECK(a.shifted(4).shifted(-4) == a);
  }
}

TEST_CASE("negative coefficient detection") {
  CHECK(!LaurentPoly().has_negative_coefficient());
  CHECK(!(LaurentPoly::monomial(2) + LaurentPoly(Int(3))).has_negative_coefficient());
  CHECK(LaurentPoly::monomial(2, Int(-1)).has_negative_coefficient());
  auto mixed = LaurentPoly::monomial(1) - LaurentPoly(Int(2));
  CHECK(mixed.has_negative_coefficient());
}

TEST_CASE("bar symmetry") {
  auto t = LaurentPoly::monomial(1);
  auto tinv = LaurentPoly::monomial(-1);
  CHECK(LaurentPoly(Int(5)).is_bar_symmetric());
  CHECK((t + tinv).is_bar_symmetric());
  CHECK((t + LaurentPoly(Int(2)) + tinv).is_bar_symmetric());
  CHECK(!t.is_bar_symmetric());
  CHECK(!(t + LaurentPoly(Int(1))).is_bar_symmetric());
  CHECK(LaurentPoly().is_bar_symmetric());
}

TEST_CASE("string rendering") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(Int(1)).to_string() == "1");
  CHECK(LaurentPoly(Int(-3)).to_string() == "-3");
  CHECK(LaurentPoly::monomial(1).to_string() == "t");
  CHECK(LaurentPoly::monomial(2).to_string() == "t^2");
  CHECK(LaurentPoly::monomial(-2, Int(3)).to_string() == "3t^-2");
  auto t = LaurentPoly::monomial(1);
  auto one = LaurentPoly(Int(1));
  CHECK((LaurentPoly::monomial(3) + t).to_string() == "t^3+t");
  CHECK((LaurentPoly::monomial(2, Int(2)) + one).to_string() == "2t^2+1");
  CHECK((LaurentPoly::monomial(2) - one).to_string() == "t^2-1");
  CHECK((t - LaurentPoly::monomial(-1, Int(2))).to_string() == "t-2t^-1");
  CHECK((LaurentPoly() - t).to_string() == "-t");
}
