#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epure/conic.hpp"
#include "epure/gen.hpp"
#include "util.hpp"

using namespace epure;
using tutil::Q;
using tutil::pt;
using tutil::ptq;

namespace {

Conic<Rat> unit_circle() { return conic_from_circle(pt(0, 0), Q(1)); }

// xy = 0: the degenerate conic made of both coordinate axes.
Conic<Rat> axes_conic() {
  typename Conic<Rat>::Mat m = {{{Q(0), Q(1), Q(0)}, {Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(0)}}};
  return Conic<Rat>(m);
}

bool same_unordered(const std::pair<Pt2<Rat>, Pt2<Rat>>& got, const Pt2<Rat>& a,
                    const Pt2<Rat>& b) {
  return (got.first == a && got.second == b) || (got.first == b && got.second == a);
}

}  // namespace

TEST_CASE("circle conics") {
  Conic<Rat> c = unit_circle();
  CHECK(c.matrix()[0][0] == Q(1));
  CHECK(c.matrix()[1][1] == Q(1));
  CHECK(c.matrix()[2][2] == Q(-1));
  CHECK(c.matrix()[0][1] == Q(0));
  CHECK(c.contains(pt(1, 0)));
  CHECK(c.contains(ptq(Q(3, 5), Q(4, 5))));
  CHECK_FALSE(c.contains(pt(2, 0)));
  CHECK_FALSE(c.degenerate());
  CHECK(axes_conic().degenerate());
  CHECK_FAILS(invalid_circle, [] { conic_from_circle(pt(0, 0), Q(0)); });
  CHECK_FAILS(invalid_circle, [] { conic_from_circle(pt(0, 0), Q(-2)); });
  CHECK_FAILS(invalid_circle, [] { conic_from_circle(Pt2<Rat>::at_infinity(Q(1), Q(0)), Q(1)); });
  CHECK_FAILS(singular_matrix, [] {
    typename Conic<Rat>::Mat m = {{{Q(1), Q(2), Q(0)}, {Q(3), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}}};
    Conic<Rat> bad(m);
  });
}

TEST_CASE("polar lines and tangents") {
  Conic<Rat> c = unit_circle();
  CHECK(tangent_at(c, pt(1, 0)) == Ln2<Rat>(Q(1), Q(0), Q(-1)));
  CHECK(tangent_at(c, pt(0, -1)) == Ln2<Rat>(Q(0), Q(1), Q(1)));
  CHECK(polar(c, pt(2, 0)) == Ln2<Rat>(Q(2), Q(0), Q(-1)));
  // The polar of a point of the conic is its tangent.
  CHECK(polar(c, ptq(Q(3, 5), Q(4, 5))) == tangent_at(c, ptq(Q(3, 5), Q(4, 5))));
  CHECK_FAILS(point_not_on_conic, [&] { tangent_at(c, pt(2, 0)); });
  // The crossing point of a degenerate conic kills both polar and tangent.
  CHECK_FAILS(singular_point, [] { polar(axes_conic(), pt(0, 0)); });
  CHECK_FAILS(singular_point, [] { tangent_at(axes_conic(), pt(0, 0)); });
}

TEST_CASE("conic through five points") {
  std::array<Pt2<Rat>, 5> on_circle = {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1),
                                       ptq(Q(3, 5), Q(4, 5))};
  CHECK(conic_through_five(on_circle) == unit_circle());
  std::array<Pt2<Rat>, 5> four_collinear = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(0, 1)};
  CHECK_FAILS(no_unique_conic, [&] { conic_through_five(four_collinear); });
  std::array<Pt2<Rat>, 5> repeated = {pt(1, 0), pt(1, 0), pt(0, 1), pt(2, 3), pt(-1, 5)};
  CHECK_FAILS(no_unique_conic, [&] { conic_through_five(repeated); });
}

TEST_CASE("conic through five random points") {
  gen::Rng r(97);
  for (int i = 0; i < 30; ++i) {
    Pt2<Rat> center = gen::rnd_affine_point(r);
    Rat radius = Q(1) + gen::rnd_rat(r) * gen::rnd_rat(r);
    if (radius.sign() <= 0) continue;
    Conic<Rat> c = conic_from_circle(center, radius);
    std::array<Pt2<Rat>, 5> pts;
    bool distinct = true;
    for (int k = 0; k < 5; ++k) {
      pts[k] = gen::rnd_circle_point(r, center, radius);
      for (int j = 0; j < k; ++j) distinct = distinct && pts[j] != pts[k];
    }
    if (!distinct) continue;
    CHECK(conic_through_five(pts) == c);
  }
}

TEST_CASE("meets of a line and a conic") {
  Conic<Rat> c = unit_circle();
  auto vertical = line_conic_meet(c, Ln2<Rat>(Q(1), Q(0), Q(0)));
  REQUIRE(vertical.kind == MeetResult<Rat>::Kind::two_rational);
  CHECK(same_unordered(*vertical.points, pt(0, 1), pt(0, -1)));

  auto touching = line_conic_meet(c, Ln2<Rat>(Q(1), Q(0), Q(-1)));
  REQUIRE(touching.kind == MeetResult<Rat>::Kind::tangent);
  CHECK(*touching.touch == pt(1, 0));

  CHECK(line_conic_meet(c, Ln2<Rat>(Q(1), Q(0), Q(-2))).kind ==
        MeetResult<Rat>::Kind::no_real_meet);
  CHECK(line_conic_meet(c, Ln2<Rat>(Q(0), Q(0), Q(1))).kind ==
        MeetResult<Rat>::Kind::no_real_meet);

  // y = x crosses at (+-1/sqrt(2), +-1/sqrt(2)): real but not rational.
  auto diag = line_conic_meet(c, Ln2<Rat>(Q(1), Q(-1), Q(0)));
  REQUIRE(diag.kind == MeetResult<Rat>::Kind::irrational);
  Rat disc = diag.quadratic[1] * diag.quadratic[1] - Q(4) * diag.quadratic[0] * diag.quadratic[2];
  CHECK(disc.sign() > 0);
  Rat w;
  CHECK_FALSE(rational_sqrt(disc, w));

  CHECK(line_conic_meet(axes_conic(), Ln2<Rat>(Q(1), Q(0), Q(0))).kind ==
        MeetResult<Rat>::Kind::contained);
}

TEST_CASE("meets with the approximate backend") {
  Conic<double> c = conic_from_circle(Pt2<double>::affine(0.0, 0.0), 1.0);
  auto diag = line_conic_meet(c, Ln2<double>(1.0, -1.0, 0.0));
  REQUIRE(diag.kind == MeetResult<double>::Kind::two_rational);
  Tol tol;
  CHECK(c.contains(diag.points->first, tol));
  CHECK(c.contains(diag.points->second, tol));
  CHECK(incident(diag.points->first, Ln2<double>(1.0, -1.0, 0.0), tol));
}

TEST_CASE("second meets by vieta") {
  Conic<Rat> c = unit_circle();
  Pt2<Rat> known = ptq(Q(3, 5), Q(4, 5));
  Ln2<Rat> l = join(pt(-4, 0), known);
  CHECK(second_intersection(c, known, l) == ptq(Q(-91, 109), Q(60, 109)));
  // Through a tangent line the "second" meet is the point itself.
  CHECK(second_intersection(c, pt(1, 0), Ln2<Rat>(Q(1), Q(0), Q(-1))) == pt(1, 0));
  CHECK_FAILS(invalid_incidence, [&] { second_intersection(c, pt(2, 0), l); });
  CHECK_FAILS(invalid_incidence, [&] {
    second_intersection(c, pt(0, 1), join(pt(-4, 0), ptq(Q(3, 5), Q(4, 5))));
  });
  // A component of a degenerate conic: every point is a meet.
  CHECK_FAILS(invalid_incidence, [&] {
    second_intersection(axes_conic(), pt(0, 5), Ln2<Rat>(Q(1), Q(0), Q(0)));
  });
}

TEST_CASE("second meets agree with the full solver") {
  gen::Rng r(4242);
  Conic<Rat> c = unit_circle();
  for (int i = 0; i < 40; ++i) {
    Pt2<Rat> a = gen::rnd_circle_point(r, pt(0, 0), Q(1));
    Pt2<Rat> b = gen::rnd_circle_point(r, pt(0, 0), Q(1));
    if (a == b) continue;
    Ln2<Rat> l = join(a, b);
    CHECK(second_intersection(c, a, l) == b);
    auto m = line_conic_meet(c, l);
    REQUIRE(m.kind == MeetResult<Rat>::Kind::two_rational);
    CHECK(same_unordered(*m.points, a, b));
  }
}

TEST_CASE("circle pairs and their tangent apex") {
  CirclePair<Rat> cp(pt(0, 0), Q(1), pt(4, 0), Q(2));
  CHECK(same_side_tangent_apex(cp) == pt(-4, 0));
  CHECK(cp.conic1() == unit_circle());
  CHECK_FAILS(invalid_circle, [] { CirclePair<Rat>(pt(0, 0), Q(0), pt(4, 0), Q(2)); });
  CHECK_FAILS(no_same_side_tangents, [] { CirclePair<Rat>(pt(0, 0), Q(1), pt(0, 0), Q(2)); });
  CHECK_FAILS(no_same_side_tangents, [] { CirclePair<Rat>(pt(0, 0), Q(5), pt(1, 0), Q(1)); });
  // Equal radii push the apex onto the line at infinity.
  CirclePair<Rat> eq(pt(0, 0), Q(2), pt(6, 0), Q(2));
  CHECK(same_side_tangent_apex(eq) == Pt2<Rat>::at_infinity(Q(1), Q(0)));
}

TEST_CASE("homothety between the circles") {
  CirclePair<Rat> cp(pt(0, 0), Q(1), pt(4, 0), Q(2));
  CHECK(homothety_image(cp, ptq(Q(3, 5), Q(4, 5))) == ptq(Q(26, 5), Q(8, 5)));
  CHECK(homothety_image(cp, pt(1, 0)) == pt(6, 0));
  CHECK(homothety_image(cp, pt(-1, 0)) == pt(2, 0));
  CHECK_FAILS(point_not_on_conic, [&] { homothety_image(cp, pt(5, 5)); });
  // Images land on the second circle, and the apex, source, image align.
  gen::Rng r(77);
  Pt2<Rat> apex = same_side_tangent_apex(cp);
  for (int i = 0; i < 25; ++i) {
    Pt2<Rat> p = gen::rnd_circle_point(r, pt(0, 0), Q(1));
    Pt2<Rat> q = homothety_image(cp, p);
    CHECK(cp.conic2().contains(q));
    if (p != q) CHECK(incident(apex, join(p, q)));
  }
}

TEST_CASE("conics transported by homographies") {
  // Translation by (1, 2) carries the unit circle to the circle at (1, 2).
  Homography<Rat> h({{{Q(1), Q(0), Q(1)}, {Q(0), Q(1), Q(2)}, {Q(0), Q(0), Q(1)}}});
  CHECK(apply_homography(h, unit_circle()) == conic_from_circle(pt(1, 2), Q(1)));
  // Membership and tangency are carried along by any homography.
  gen::Rng r(99);
  for (int i = 0; i < 20; ++i) {
    Homography<Rat> g = gen::rnd_homography(r);
    Conic<Rat> img = apply_homography(g, unit_circle());
    Pt2<Rat> p = gen::rnd_circle_point(r, pt(0, 0), Q(1));
    CHECK(img.contains(g(p)));
    try {
      Ln2<Rat> t = tangent_at(unit_circle(), p);
      CHECK(tangent_at(img, g(p)) == g(t));
    } catch (const Error&) {
      // image point may be singular only for degenerate draws; none expected
      CHECK(false);
    }
  }
}
