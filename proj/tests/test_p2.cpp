#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epure/gen.hpp"
#include "epure/p2.hpp"
#include "util.hpp"

using namespace epure;
using tutil::Q;
using tutil::pt;
using tutil::ptq;

using P = Pt2<Rat>;
using L = Ln2<Rat>;

TEST_CASE("point canonical form") {
  CHECK(P::affine(Q(1, 2), Q(1, 3)) == P(Q(3), Q(2), Q(6)));
  CHECK(P::at_infinity(Q(2), Q(-4)) == P(Q(1), Q(-2), Q(0)));
  CHECK(P(Q(2), Q(4), Q(6)) == P(Q(1), Q(2), Q(3)));
  CHECK(P(Q(-1), Q(2), Q(3)) == P(Q(1), Q(-2), Q(-3)));
  CHECK(P::at_infinity(Q(1), Q(0)).infinite());
  CHECK_FALSE(pt(1, 1).infinite());
  CHECK(pt(3, -2).ax() == Q(3));
  CHECK(pt(3, -2).ay() == Q(-2));
  CHECK_FAILS(zero_vector, [] { P(Q(0), Q(0), Q(0)); });
}

TEST_CASE("join and meet") {
  CHECK(join(pt(0, 0), pt(1, 1)) == L(Q(1), Q(-1), Q(0)));
  CHECK_FAILS(coincident_points, [] { (void)join(P(Q(1), Q(1), Q(1)), P(Q(2), Q(2), Q(2))); });
  CHECK_FAILS(coincident_lines, [] { (void)meet(L(Q(1), Q(1), Q(1)), L(Q(2), Q(2), Q(2))); });
  // Parallel affine lines meet at infinity.
  CHECK(meet(L(Q(1), Q(0), Q(-1)), L(Q(1), Q(0), Q(-2))) == P::at_infinity(Q(0), Q(1)));
  CHECK(meet(L(Q(1), Q(0), Q(0)), L(Q(0), Q(1), Q(0))) == pt(0, 0));
}

TEST_CASE("incidence") {
  CHECK(incident(P(Q(1), Q(1), Q(1)), L(Q(1), Q(-1), Q(0))));
  CHECK_FALSE(incident(P(Q(1), Q(1), Q(1)), L(Q(1), Q(1), Q(1))));
  CHECK(incident(P::at_infinity(Q(0), Q(1)), L(Q(1), Q(0), Q(-5))));
}

TEST_CASE("collinear and concurrent") {
  CHECK(collinear(pt(4, -3), pt(-8, 1), pt(1, -2)));
  CHECK_FALSE(collinear(pt(1, 0), pt(0, 1), pt(0, 0)));
  CHECK(collinear(pt(2, 3), pt(2, 3), pt(9, 9)));
  CHECK(concurrent(L(Q(1), Q(0), Q(0)), L(Q(0), Q(1), Q(0)), L(Q(1), Q(1), Q(0))));
  CHECK_FALSE(concurrent(L(Q(1), Q(0), Q(0)), L(Q(0), Q(1), Q(0)), L(Q(0), Q(0), Q(1))));
  // Parallel lines all pass through the shared point at infinity.
  CHECK(concurrent(L(Q(1), Q(0), Q(-1)), L(Q(1), Q(0), Q(-2)), L(Q(1), Q(0), Q(-3))));
}

TEST_CASE("duality of meet and join, randomized") {
  gen::Rng r(20240817);
  for (int i = 0; i < 100; ++i) {
    P a = gen::rnd_affine_point(r), b = gen::rnd_affine_point(r);
    if (a == b) continue;
    L l = join(a, b);
    CHECK(incident(a, l));
    CHECK(incident(b, l));
    P c = gen::rnd_affine_point(r), d = gen::rnd_affine_point(r);
    if (c == d) continue;
    L m = join(c, d);
    if (l == m) continue;
    P x = meet(l, m);
    CHECK(incident(x, l));
    CHECK(incident(x, m));
  }
}

TEST_CASE("line basis coordinates round trip") {
  L l = join(pt(1, 2), pt(3, 5));
  LineBasis<Rat> lb = line_basis(l);
  P x = combine(Q(2), lb.p0, Q(-7, 3), lb.p1);
  auto [s, t] = coords_on_basis(lb.p0, lb.p1, x);
  CHECK(combine(s, lb.p0, t, lb.p1) == x);
  CHECK_FAILS(not_on_line, [&] { coords_on_basis(lb.p0, lb.p1, pt(100, 100)); });
}

TEST_CASE("homographies") {
  Homography<Rat> id = Homography<Rat>::identity();
  CHECK(id(P(Q(2), Q(3), Q(5))) == P(Q(2), Q(3), Q(5)));
  std::array<std::array<Rat, 3>, 3> d = {{{Q(2), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}}};
  Homography<Rat> h(d);
  CHECK(h(P(Q(1), Q(1), Q(1))) == P(Q(2), Q(1), Q(1)));
  std::array<std::array<Rat, 3>, 3> sing = {{{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}, {Q(0), Q(0), Q(1)}}};
  CHECK_FAILS(singular_matrix, [&] { Homography<Rat>{sing}; });

  gen::Rng r(7);
  for (int i = 0; i < 50; ++i) {
    Homography<Rat> g = gen::rnd_homography(r);
    P p = gen::rnd_affine_point(r);
    CHECK(g.inverse()(g(p)) == p);
    P q = gen::rnd_affine_point(r);
    if (p == q) continue;
    L l = join(p, q);
    // Lines map contravariantly: images of incident pairs stay incident.
    CHECK(incident(g(p), g(l)));
    CHECK(incident(g(q), g(l)));
  }
}

TEST_CASE("cross ratio on frozen instances") {
  P a = pt(0, 0), b = pt(1, 0), c = pt(2, 0), d = pt(3, 0);
  CHECK(cross_ratio(a, b, c, d) == Rat(Q(4, 3)));
  // Harmonic quadruple 0, infinity, 1, -1.
  CHECK(cross_ratio(pt(0, 0), P::at_infinity(Q(1), Q(0)), pt(1, 0), pt(-1, 0)) == Rat(Q(-1)));
  CHECK_FAILS(not_collinear, [] { cross_ratio(pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)); });
  CHECK_FAILS(degenerate_quadruple, [] { cross_ratio(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0)); });
}

TEST_CASE("cross ratio invariance and permutation identity") {
  gen::Rng r(99);
  for (int i = 0; i < 60; ++i) {
    gen::CollinearQuad quad = gen::rnd_collinear_quad(r);
    Rat v = cross_ratio(quad.pts[0], quad.pts[1], quad.pts[2], quad.pts[3]);
    // Affine-parameter convention.
    const auto& t = quad.params;
    Rat expect = ((t[2] - t[0]) * (t[3] - t[1])) / ((t[2] - t[1]) * (t[3] - t[0]));
    CHECK(v == expect);
    Homography<Rat> g = gen::rnd_homography(r);
    CHECK(cross_ratio(g(quad.pts[0]), g(quad.pts[1]), g(quad.pts[2]), g(quad.pts[3])) == v);
    Rat w = cross_ratio(quad.pts[0], quad.pts[1], quad.pts[3], quad.pts[2]);
    CHECK(v * w == Rat(1));
  }
}

TEST_CASE("involution swapping 0 and infinity") {
  // Pairs (-1,0)<->(1,0) and (0,0)<->infinity force t -> -1/t.
  auto inv = involution_from_pairs<Rat>({pt(-1, 0), pt(1, 0)}, {pt(0, 0), P::at_infinity(Q(1), Q(0))});
  CHECK(apply_involution(inv, pt(5, 0)) == ptq(Q(-1, 5), Q(0)));
  CHECK(apply_involution(inv, P::at_infinity(Q(1), Q(0))) == pt(0, 0));
  CHECK(apply_involution(inv, pt(0, 0)) == P::at_infinity(Q(1), Q(0)));
  CHECK(apply_involution(inv, pt(-1, 0)) == pt(1, 0));

  // Parameter matrix squares to a nonzero multiple of the identity.
  auto m = inv.matrix();
  Rat lam = m[0][0] * m[0][0] + m[0][1] * m[1][0];
  CHECK(!lam.is_zero());
  CHECK(m[0][0] * m[0][1] + m[0][1] * m[1][1] == Q(0));
  CHECK(m[1][0] * m[0][0] + m[1][1] * m[1][0] == Q(0));
  CHECK(m[1][0] * m[0][1] + m[1][1] * m[1][1] == lam);
}

TEST_CASE("involution with a fixed point") {
  // Doubled pair (0,0) plus swapped (1,0),(-1,0): the reflection t -> -t.
  auto inv = involution_from_pairs<Rat>({pt(0, 0), pt(0, 0)}, {pt(1, 0), pt(-1, 0)});
  CHECK(apply_involution(inv, pt(5, 0)) == pt(-5, 0));
  CHECK(apply_involution(inv, pt(0, 0)) == pt(0, 0));
  CHECK(apply_involution(inv, P::at_infinity(Q(1), Q(0))) == P::at_infinity(Q(1), Q(0)));
}

TEST_CASE("involution properties and errors") {
  CHECK_FAILS(not_collinear, [] {
    involution_from_pairs<Rat>({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(0, 2)});
  });
  gen::Rng r(4242);
  auto inv = involution_from_pairs<Rat>({pt(-2, 0), pt(3, 0)}, {pt(1, 0), pt(7, 0)});
  for (int i = 0; i < 100; ++i) {
    Rat t = gen::rnd_rat(r, 20, 7);
    P x = ptq(t, Q(0));
    P y = apply_involution(inv, x);
    CHECK(apply_involution(inv, y) == x);
    CHECK(inv.pairing_form(x, y).is_zero());
  }
  CHECK_FAILS(not_on_line, [&] { apply_involution(inv, pt(1, 1)); });
}
