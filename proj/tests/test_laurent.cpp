#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratlink/laurent.hpp"

using namespace ratlink;

namespace {

Laurent2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6), pw(-4, 4), cf(-5, 5);
  Laurent2 x;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) x.add_term(cf(rng), pw(rng), pw(rng));
  return x;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(42);
  for (int it = 0; it < 200; ++it) {
    Laurent2 x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x - x == Laurent2::zero());
    CHECK(x * Laurent2::one() == x);
    CHECK(x.pow(3) == x * x * x);
  }
}

TEST_CASE("ladder") {
  CHECK(ladder(0) == Laurent2::zero());
  Laurent2 l4;
  l4.add_term(-1, 1, 0);
  l4.add_term(-1, 3, 0);
  CHECK(ladder(4) == l4);
  Laurent2 lm4;
  lm4.add_term(1, -1, 0);
  lm4.add_term(1, -3, 0);
  CHECK(ladder(-4) == lm4);
  CHECK_THROWS_AS(ladder(3), domain_error);
  // defining identity: ladder(n) * (a - a^-1) = 1 - a^n
  for (long long n = -10; n <= 10; n += 2) {
    Laurent2 rhs = Laurent2::one();
    rhs.add_term(-1, static_cast<int>(n), 0);
    CHECK(ladder(n) * a_minus_ainv() == rhs);
  }
}

TEST_CASE("exact division by (a - a^-1)^k") {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    Laurent2 x = random_poly(rng);
    for (int k = 0; k <= 3; ++k)
      CHECK(div_exact_a_minus_ainv(x * a_minus_ainv().pow(k), k) == x);
  }
  Laurent2 a = Laurent2::monomial(1, 1, 0);
  CHECK_THROWS_AS(div_exact_a_minus_ainv(a, 1), internal_error);
}

TEST_CASE("mirror substitution is an involution and a ring map") {
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    Laurent2 x = random_poly(rng), y = random_poly(rng);
    CHECK(mirror_subst(mirror_subst(x)) == x);
    CHECK(mirror_subst(x * y) == mirror_subst(x) * mirror_subst(y));
    CHECK(mirror_subst(x + y) == mirror_subst(x) + mirror_subst(y));
  }
  // a -> -a^-1
  CHECK(mirror_subst(Laurent2::monomial(1, 1, 0)) ==
        Laurent2::monomial(-1, -1, 0));
  CHECK(mirror_subst(Laurent2::monomial(1, 2, 1)) ==
        Laurent2::monomial(1, -2, 1));
}

TEST_CASE("conway_reduce") {
  Laurent2 x;  // z^2*a^3 + 2*z^2*a - z^2 -> 2 t^2 after a = 1
  x.add_term(1, 3, 2);
  x.add_term(2, 1, 2);
  x.add_term(-1, 0, 2);
  Laurent1 c = conway_reduce(x);
  CHECK(c == Laurent1::monomial(Laurent1::Var::T, 2, 2));
}

TEST_CASE("jones_reduce basics") {
  // unknot
  CHECK(jones_reduce(Laurent2::one()) ==
        Laurent1::one(Laurent1::Var::S));
  // a alone maps to s^-2
  CHECK(jones_reduce(Laurent2::monomial(1, 1, 0)) ==
        Laurent1::monomial(Laurent1::Var::S, 1, -2));
  // z^-1 (a - a^-1) = (s^-2 - s^2)/(s - s^-1) = -s - s^-1
  Laurent2 unlink;
  unlink.add_term(1, 1, -1);
  unlink.add_term(-1, -1, -1);
  Laurent1 want(Laurent1::Var::S);
  want.add_term(-1, 1);
  want.add_term(-1, -1);
  CHECK(jones_reduce(unlink) == want);
}

TEST_CASE("even_s_powers_only and s_to_t") {
  Laurent1 j(Laurent1::Var::S);
  j.add_term(1, -4);
  j.add_term(2, 0);
  j.add_term(-1, 6);
  CHECK(even_s_powers_only(j));
  Laurent1 t = s_to_t(j);
  CHECK(t.var() == Laurent1::Var::T);
  CHECK(t == Laurent1::monomial(Laurent1::Var::T, 1, -2) +
                 Laurent1::monomial(Laurent1::Var::T, 2, 0) +
                 Laurent1::monomial(Laurent1::Var::T, -1, 3));
  j.add_term(1, 1);
  CHECK_FALSE(even_s_powers_only(j));
  CHECK_THROWS_AS(s_to_t(j), domain_error);
}

TEST_CASE("determinant") {
  // trefoil Jones in s: -s^-16? no -- use a direct small value:
  // J = -t^-4 + t^-3 + t^-1 evaluates at t = -1 to -1 - 1 - 1 = -3
  Laurent1 j(Laurent1::Var::S);
  // feed through a HOMFLY value instead: z^-1(a - a^-1) is a link, det throws
  Laurent2 unlink;
  unlink.add_term(1, 1, -1);
  unlink.add_term(-1, -1, -1);
  CHECK_THROWS_AS(determinant(unlink), domain_error);
  CHECK(determinant(Laurent2::one()) == 1);
}

TEST_CASE("canonical string format") {
  CHECK(to_canonical_string(Laurent2::zero()) == "0");
  CHECK(to_canonical_string(Laurent2::one()) == "1");
  Laurent2 x;
  x.add_term(1, 2, 0);
  x.add_term(1, 4, 0);
  x.add_term(-1, 6, 0);
  x.add_term(1, 2, 2);
  x.add_term(1, 4, 2);
  CHECK(to_canonical_string(x) ==
        "a^2 + a^4 - a^6 + z^2*(a^2 + a^4)");
  Laurent2 y;
  y.add_term(-1, 1, -1);
  y.add_term(1, 3, -1);
  y.add_term(-1, 1, 1);
  CHECK(to_canonical_string(y) == "z^-1*(-a + a^3) + z*(-a)");
  Laurent2 z;
  z.add_term(2, 0, 0);
  z.add_term(-3, -2, 1);
  z.add_term(1, 0, 1);
  CHECK(to_canonical_string(z) == "2 + z*(-3*a^-2 + 1)");
  Laurent1 s(Laurent1::Var::S);
  s.add_term(-1, -1);
  s.add_term(1, 0);
  s.add_term(5, 2);
  CHECK(to_canonical_string(s) == "-s^-1 + 1 + 5*s^2");
}

TEST_CASE("json format") {
  Laurent2 x;
  x.add_term(-1, 1, -1);
  x.add_term(1, 3, -1);
  CHECK(to_json_string(x) ==
        "[{\"a\":1,\"z\":-1,\"c\":\"-1\"},{\"a\":3,\"z\":-1,\"c\":\"1\"}]");
  Laurent1 t(Laurent1::Var::T);
  t.add_term(2, -1);
  CHECK(to_json_string(t) == "[{\"t\":-1,\"c\":\"2\"}]");
  CHECK(to_json_string(Laurent2::zero()) == "[]");
}

TEST_CASE("mixed variable tags throw") {
  Laurent1 s = Laurent1::one(Laurent1::Var::S);
  Laurent1 t = Laurent1::one(Laurent1::Var::T);
  CHECK_THROWS_AS(s + t, internal_error);
  CHECK_THROWS_AS(s * t, internal_error);
}
