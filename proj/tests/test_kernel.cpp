#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epure/kernel.hpp"
#include "epure/linalg.hpp"
#include "epure/rational.hpp"
#include "util.hpp"

using namespace epure;
using tutil::Q;

TEST_CASE("rational canonical form") {
  CHECK(Rat(BigInt(2), BigInt(-4)) == Q(-1, 2));
  CHECK(Rat(BigInt(2), BigInt(-4)).denominator() == BigInt(2));
  CHECK(Q(0, 7).is_zero());
  CHECK(Q(0, 7).denominator() == BigInt(1));
  CHECK(Q(6, 3).is_integer());
  CHECK(Q(-5).sign() == -1);
  CHECK_FAILS(zero_denominator, [] { Rat(BigInt(1), BigInt(0)); });
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rat::parse("3/4") == Q(3, 4));
  CHECK(Rat::parse("-7") == Q(-7));
  CHECK(Rat::parse("0.25") == Q(1, 4));
  CHECK(Rat::parse("-1.5") == Q(-3, 2));
  CHECK(Rat::parse("2/4") == Q(1, 2));
  CHECK(Rat::parse("+0.1") == Q(1, 10));
  CHECK(Q(-3, 2).str() == "-3/2");
  CHECK(Q(5).str() == "5");
  CHECK(Q(1, 3).str() == "1/3");
  CHECK_FAILS(parse_error, [] { Rat::parse("1/0"); });
  CHECK_FAILS(parse_error, [] { Rat::parse("abc"); });
  CHECK_FAILS(parse_error, [] { Rat::parse(""); });
}

TEST_CASE("rational arithmetic") {
  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  CHECK(Q(1, 2) - Q(1, 3) == Q(1, 6));
  CHECK(Q(2, 3) * Q(9, 4) == Q(3, 2));
  CHECK(Q(1, 2) / Q(1, 4) == Q(2));
  CHECK(-Q(3, 5) == Q(-3, 5));
  CHECK(abs(Q(-3, 5)) == Q(3, 5));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK(Q(1, 2).to_double() == doctest::Approx(0.5));
  CHECK_FAILS(zero_denominator, [] { Q(1) / Q(0); });
}

TEST_CASE("rational square roots") {
  Rat r;
  CHECK(rational_sqrt(Q(49, 64), r));
  CHECK(r == Q(7, 8));
  CHECK(rational_sqrt(Q(0), r));
  CHECK(r == Q(0));
  CHECK(rational_sqrt(Q(9), r));
  CHECK(r == Q(3));
  CHECK_FALSE(rational_sqrt(Q(2), r));
  CHECK_FALSE(rational_sqrt(Q(-4), r));
  CHECK_FALSE(rational_sqrt(Q(1, 3), r));
}

TEST_CASE("floor division") {
  CHECK(floor_div(BigInt(7), BigInt(2)) == BigInt(3));
  CHECK(floor_div(BigInt(-7), BigInt(2)) == BigInt(-4));
  CHECK(floor_div(BigInt(7), BigInt(-2)) == BigInt(-4));
  CHECK(floor_div(BigInt(6), BigInt(3)) == BigInt(2));
}

TEST_CASE("tolerance policy") {
  Tol t;
  CHECK(t.eps_abs == doctest::Approx(1e-12));
  CHECK(t.eps_rel == doctest::Approx(1e-12));
  CHECK(is_zero(1e-13, t, 1.0));
  CHECK_FALSE(is_zero(1e-11, t, 1.0));
  CHECK(is_zero(1e-9, t, 1e4));  // relative slack grows with the scale hint
  CHECK(is_zero(Q(0), t, 1.0));
  CHECK_FALSE(is_zero(Q(1, 1000000000000000), t, 1.0));  // exact is exact
  CHECK_FAILS(invalid_tolerance, [] { Tol(-1e-9, 1e-9); });
  CHECK_FAILS(invalid_tolerance, [] { Tol(1e-9, -1e-9); });
}

TEST_CASE("scalar tagged union") {
  Scalar a(Q(1, 2)), b(Q(1, 3));
  CHECK((a + b).rat() == Q(5, 6));
  CHECK((a * b).rat() == Q(1, 6));
  Scalar x(0.5), y(0.25);
  CHECK((x - y).dbl() == doctest::Approx(0.25));
  CHECK(a.exact());
  CHECK_FALSE(x.exact());
  CHECK(a.value_as_double() == doctest::Approx(0.5));
  CHECK_FAILS(mixed_backend, [&] { (void)(a + x); });
  CHECK_FAILS(mixed_backend, [&] { (void)(x * b); });
  CHECK(scalar_is_zero(Scalar(Q(0)), Tol()));
  CHECK(scalar_is_zero(Scalar(1e-14), Tol()));
}

TEST_CASE("canonical tuples, exact") {
  std::array<Rat, 3> t = {Q(2, 3), Q(-4, 3), Q(2)};
  canon_tuple(t);
  CHECK(t[0] == Q(1));
  CHECK(t[1] == Q(-2));
  CHECK(t[2] == Q(3));
  std::array<Rat, 2> s = {Q(-2), Q(4)};
  canon_tuple(s);
  CHECK(s[0] == Q(1));
  CHECK(s[1] == Q(-2));
  std::array<Rat, 3> z = {Q(0), Q(-3), Q(6)};
  canon_tuple(z);
  CHECK(z[0] == Q(0));
  CHECK(z[1] == Q(1));
  CHECK(z[2] == Q(-2));
}

TEST_CASE("canonical tuples, floating") {
  std::array<double, 3> t = {3.0, -4.0, 0.0};
  canon_tuple(t);
  CHECK(t[0] == doctest::Approx(0.75));
  CHECK(t[1] == doctest::Approx(-1.0));
  CHECK(t[2] == doctest::Approx(0.0));
  std::array<double, 2> s = {-1.0, 0.5};
  canon_tuple(s);
  CHECK(s[0] == doctest::Approx(1.0));
  CHECK(s[1] == doctest::Approx(-0.5));
}

TEST_CASE("null space, exact") {
  std::vector<std::vector<Rat>> m = {{Q(1), Q(2), Q(3)}, {Q(4), Q(5), Q(6)}};
  auto ker = null_space<Rat>(m, 3);
  REQUIRE(ker.size() == 1);
  // Kernel direction (1, -2, 1) up to scale.
  const auto& v = ker[0];
  CHECK(v[0] * Q(-2) == v[1]);
  CHECK(v[0] == v[2]);
  CHECK((v[0] * Q(1) + v[1] * Q(2) + v[2] * Q(3)).is_zero());
  CHECK((v[0] * Q(4) + v[1] * Q(5) + v[2] * Q(6)).is_zero());
}

TEST_CASE("null space, full rank and zero map") {
  std::vector<std::vector<Rat>> id = {{Q(1), Q(0)}, {Q(0), Q(1)}};
  CHECK(null_space<Rat>(id, 2).empty());
  std::vector<std::vector<Rat>> zero = {{Q(0), Q(0)}};
  CHECK(null_space<Rat>(zero, 2).size() == 2);
  CHECK(matrix_rank<Rat>(id, 2) == 2);
  CHECK(matrix_rank<Rat>(zero, 2) == 0);
}

TEST_CASE("null space, floating") {
  std::vector<std::vector<double>> m = {{1, 2, 3}, {4, 5, 6}};
  auto ker = null_space<double>(m, 3);
  REQUIRE(ker.size() == 1);
  const auto& v = ker[0];
  CHECK(v[0] * 1 + v[1] * 2 + v[2] * 3 == doctest::Approx(0).epsilon(1e-9));
  CHECK(v[0] * 4 + v[1] * 5 + v[2] * 6 == doctest::Approx(0).epsilon(1e-9));
}
