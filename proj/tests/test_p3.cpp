#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epure/gen.hpp"
#include "epure/p3.hpp"
#include "epure/theorems.hpp"
#include "util.hpp"

using namespace epure;
using tutil::Q;
using tutil::pt;

using P3 = Pt3<Rat>;
using Pl = Plane3<Rat>;

namespace {

P3 apt(long long x, long long y, long long z) { return P3(Q(x), Q(y), Q(z), Q(1)); }

// The five-face staircase sheet used as the frozen section oracle:
// faces z = y - x, z = y, z = x + y - 1, z = 2x + y - 3, z = 5x + y - 12,
// whose folds lie over the vertical lines x = 0, 1, 2, 3.
FoldedSheet<Rat> staircase_sheet() {
  std::vector<Pl> faces = {Pl(Q(1), Q(-1), Q(1), Q(0)), Pl(Q(0), Q(1), Q(-1), Q(0)),
                           Pl(Q(1), Q(1), Q(-1), Q(-1)), Pl(Q(2), Q(1), Q(-1), Q(-3)),
                           Pl(Q(5), Q(1), Q(-1), Q(-12))};
  return FoldedSheet<Rat>::from_faces(faces);
}

}  // namespace

TEST_CASE("plane through three points") {
  CHECK(plane_through(apt(1, 0, 0), apt(0, 1, 0), apt(0, 0, 1)) == Pl(Q(1), Q(1), Q(1), Q(-1)));
  // Three directions span the plane at infinity.
  CHECK(plane_through(P3(Q(1), Q(0), Q(0), Q(0)), P3(Q(0), Q(1), Q(0), Q(0)),
                      P3(Q(0), Q(0), Q(1), Q(0))) == Pl(Q(0), Q(0), Q(0), Q(1)));
  CHECK_FAILS(collinear_points, [] { plane_through(apt(0, 0, 0), apt(2, 2, 2), apt(1, 1, 1)); });
}

TEST_CASE("meet of planes") {
  // z = 0 and y = 0 give the x-axis.
  Line3<Rat> xaxis = meet_planes(Pl(Q(0), Q(0), Q(1), Q(0)), Pl(Q(0), Q(1), Q(0), Q(0)));
  CHECK(contains(xaxis, apt(0, 0, 0)));
  CHECK(contains(xaxis, apt(1, 0, 0)));
  CHECK(contains(xaxis, P3(Q(1), Q(0), Q(0), Q(0))));
  // Parallel planes meet in a line at infinity.
  Line3<Rat> inf = meet_planes(Pl(Q(0), Q(0), Q(1), Q(0)), Pl(Q(0), Q(0), Q(1), Q(-1)));
  CHECK(inf.p().w().is_zero());
  CHECK(inf.q().w().is_zero());
  CHECK(inf.p().z().is_zero());
  CHECK(inf.q().z().is_zero());
  CHECK_FAILS(coincident_planes, [] {
    (void)meet_planes(Pl(Q(1), Q(2), Q(3), Q(4)), Pl(Q(2), Q(4), Q(6), Q(8)));
  });
}

TEST_CASE("meet of line and plane") {
  Line3<Rat> xaxis(apt(0, 0, 0), apt(1, 0, 0));
  CHECK(meet_line_plane(xaxis, Pl(Q(1), Q(0), Q(0), Q(-1))) == apt(1, 0, 0));
  CHECK_FAILS(line_in_plane, [&] { meet_line_plane(xaxis, Pl(Q(0), Q(0), Q(1), Q(0))); });
  Line3<Rat> diag(apt(0, 0, 0), apt(1, 1, 1));
  CHECK(meet_line_plane(diag, Pl(Q(0), Q(0), Q(1), Q(-2))) == apt(2, 2, 2));
}

TEST_CASE("meets of lines in space") {
  Line3<Rat> a(apt(0, 0, 0), apt(1, 1, 0));
  Line3<Rat> b(apt(1, 0, 0), apt(0, 1, 0));
  auto m = lines_meet(a, b);
  REQUIRE(m.has_value());
  CHECK(*m == P3(Q(1), Q(1), Q(0), Q(2)));
  Line3<Rat> skew(apt(0, 0, 1), apt(1, 0, 2));
  CHECK_FALSE(lines_meet(a, skew).has_value());
}

TEST_CASE("projections") {
  Projection<Rat> base = Projection<Rat>::onto_base();
  CHECK(project(base, P3(Q(3), Q(4), Q(7), Q(1))) == Pt2<Rat>(Q(3), Q(4), Q(1)));
  // A central projection whose center is the ideal z-direction acts the same.
  Projection<Rat> central_ideal = Projection<Rat>::central(
      P3(Q(0), Q(0), Q(1), Q(0)), Pl(Q(0), Q(0), Q(1), Q(0)), apt(0, 0, 0), apt(1, 0, 0),
      apt(0, 1, 0));
  CHECK(project(central_ideal, P3(Q(3), Q(4), Q(7), Q(1))) == Pt2<Rat>(Q(3), Q(4), Q(1)));
  // Finite eye at (0,0,5): similar triangles scale by 5/4.
  Projection<Rat> eye5 = Projection<Rat>::central(apt(0, 0, 5), Pl(Q(0), Q(0), Q(1), Q(0)),
                                                  apt(0, 0, 0), apt(1, 0, 0), apt(0, 1, 0));
  CHECK(project(eye5, apt(1, 1, 1)) == Pt2<Rat>(Q(5), Q(5), Q(4)));
  CHECK_FAILS(undefined_projection, [&] { project(eye5, apt(0, 0, 5)); });
  CHECK_FAILS(invalid_frame, [] {
    Projection<Rat>::central(apt(1, 1, 0), Pl(Q(0), Q(0), Q(1), Q(0)), apt(0, 0, 0),
                             apt(1, 0, 0), apt(0, 1, 0));
  });
}

TEST_CASE("projection preserves collinearity") {
  gen::Rng r(31337);
  Projection<Rat> eye5 = Projection<Rat>::central(apt(0, 0, 5), Pl(Q(0), Q(0), Q(1), Q(0)),
                                                  apt(0, 0, 0), apt(1, 0, 0), apt(0, 1, 0));
  int done = 0;
  while (done < 100) {
    try {
      P3 p(gen::rnd_rat(r), gen::rnd_rat(r), gen::rnd_rat(r), Q(1));
      P3 q(gen::rnd_rat(r), gen::rnd_rat(r), gen::rnd_rat(r), Q(1));
      if (p == q) continue;
      Rat s = gen::rnd_rat(r), t = gen::rnd_rat(r);
      if (s.is_zero() && t.is_zero()) continue;
      std::array<Rat, 4> cc;
      for (int i = 0; i < 4; ++i) cc[i] = s * p.coords()[i] + t * q.coords()[i];
      P3 x(cc[0], cc[1], cc[2], cc[3]);
      Pt2<Rat> pp = project(eye5, p), pq = project(eye5, q), px = project(eye5, x);
      if (pp == pq) continue;
      CHECK(incident(px, join(pp, pq)));
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("folded sheet structure") {
  FoldedSheet<Rat> sheet = staircase_sheet();
  REQUIRE(sheet.folds().size() == 4);
  // Folds lie over x = 0,1,2,3 at heights y, y, y+1, y+3.
  CHECK(contains(sheet.folds()[0], apt(0, 0, 0)));
  CHECK(contains(sheet.folds()[0], apt(0, 1, 1)));
  CHECK(contains(sheet.folds()[1], apt(1, 0, 0)));
  CHECK(contains(sheet.folds()[1], apt(1, 1, 1)));
  CHECK(contains(sheet.folds()[2], apt(2, 0, 1)));
  CHECK(contains(sheet.folds()[2], apt(2, 1, 2)));
  CHECK(contains(sheet.folds()[3], apt(3, 0, 3)));
  CHECK(contains(sheet.folds()[3], apt(3, 1, 4)));
  std::vector<Plane3<Rat>> bad = {Pl(Q(0), Q(0), Q(1), Q(0)), Pl(Q(0), Q(0), Q(1), Q(0))};
  CHECK_FAILS(invalid_sheet, [&] { FoldedSheet<Rat>::from_faces(bad); });
}

TEST_CASE("section by plane") {
  FoldedSheet<Rat> sheet = staircase_sheet();
  // Cutting plane z = x.
  std::vector<P3> sec = section_by_plane(sheet, Pl(Q(1), Q(0), Q(-1), Q(0)));
  REQUIRE(sec.size() == 4);
  CHECK(sec[0] == apt(0, 0, 0));
  CHECK(sec[1] == apt(1, 1, 1));
  CHECK(sec[2] == apt(2, 1, 2));
  CHECK(sec[3] == apt(3, 0, 3));
  // The plane z = y + 1 contains the third fold entirely.
  CHECK_FAILS(plane_contains_fold, [&] {
    section_by_plane(sheet, Pl(Q(0), Q(1), Q(-1), Q(1)));
  });
}

TEST_CASE("desargues lift on the worked instance") {
  Pt2<Rat> A = pt(1, 0), B = pt(0, 1), C = pt(1, 1);
  Pt2<Rat> A2 = pt(2, 0), B2 = pt(0, 3), C2 = pt(4, 4);
  Pt2<Rat> O = pt(0, 0);
  DesarguesLift<Rat> lift = lift_desargues(A, B, C, A2, B2, C2, O);
  std::array<Pt2<Rat>, 6> inputs = {A, B, C, A2, B2, C2};
  for (int i = 0; i < 6; ++i) CHECK(project(lift.view, lift.points[i]) == inputs[i]);
  for (int i = 0; i < 3; ++i) CHECK(incident(lift.points[i], lift.base_plane));
  for (int i = 3; i < 6; ++i) CHECK(incident(lift.points[i], lift.section_plane));
  CHECK_FALSE(lift.base_plane == lift.section_plane);

  // Corresponding side lines in space are coplanar, hence meet.
  for (int i = 0; i < 3; ++i) {
    Line3<Rat> s(lift.points[i], lift.points[(i + 1) % 3]);
    Line3<Rat> s2(lift.points[3 + i], lift.points[3 + (i + 1) % 3]);
    CHECK(lines_meet(s, s2).has_value());
  }

  // The plane-plane meet projects onto the 2D axis.
  Line3<Rat> crease = meet_planes(lift.base_plane, lift.section_plane);
  Ln2<Rat> shadow = join(project(lift.view, crease.p()), project(lift.view, crease.q()));
  CHECK(shadow == join(pt(4, -3), pt(-8, 1)));
  CHECK(incident(pt(1, -2), shadow));
}

TEST_CASE("desargues lift rejects bad input") {
  CHECK_FAILS(hypothesis_fails, [] {
    lift_desargues(pt(1, 0), pt(0, 1), pt(1, 1), pt(2, 0), pt(0, 3), pt(5, 4), pt(0, 0));
  });
  // Identical triangles: each vertex coincides with its partner.
  CHECK_FAILS(coincident_points, [] {
    lift_desargues(pt(1, 0), pt(0, 1), pt(1, 1), pt(1, 0), pt(0, 1), pt(1, 1), pt(0, 0));
  });
  // Distinct vertices but A'B' lands on the line AB: the side pair collapses.
  CHECK_FAILS(coincident_sides, [] {
    lift_desargues(pt(1, 0), pt(0, 1), pt(1, 1), pt(2, -1), pt(-1, 2), pt(2, 2), pt(0, 0));
  });
}

TEST_CASE("desargues lift on random configurations") {
  gen::Rng r(555);
  for (int i = 0; i < 25; ++i) {
    gen::PerspectiveConfig cfg = gen::rnd_perspective(r, i % 5 == 0);
    const auto& p = cfg.pts;
    std::optional<DesarguesLift<Rat>> got;
    try {
      got = lift_desargues(p[0], p[1], p[2], p[3], p[4], p[5], cfg.center);
    } catch (const Error&) {
      continue;  // degenerate draw (e.g. axis undefined)
    }
    const DesarguesLift<Rat>& lift = *got;
    for (int k = 0; k < 6; ++k) CHECK(project(lift.view, lift.points[k]) == p[k]);
    PerspectiveFrame<Rat> f = perspective_frame(p[0], p[1], p[2], p[3], p[4], p[5]);
    REQUIRE(f.axis.has_value());
    Line3<Rat> crease = meet_planes(lift.base_plane, lift.section_plane);
    Ln2<Rat> shadow = join(project(lift.view, crease.p()), project(lift.view, crease.q()));
    CHECK(shadow == *f.axis);
  }
}
