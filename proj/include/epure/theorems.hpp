#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "epure/conic.hpp"
#include "epure/p3.hpp"
#include "epure/perspective.hpp"

namespace epure {

// Are a and b the same projective point?  Exact canonical compare for the
// exact ring, cross-product residual against tol for the floating one.
template <class R>
bool same_point(const Pt2<R>& a, const Pt2<R>& b, const Tol& tol = Tol()) {
  if constexpr (ring<R>::exact) {
    (void)tol;
    return a == b;
  } else {
    auto c = cross3(a.coords(), b.coords());
    double scale = 0;
    for (double x : a.coords()) scale = std::max(scale, std::abs(x));
    double sb = 0;
    for (double x : b.coords()) sb = std::max(sb, std::abs(x));
    scale *= sb;
    return is_zero(c[0], tol, scale) && is_zero(c[1], tol, scale) && is_zero(c[2], tol, scale);
  }
}

template <class R>
struct DesarguesVerdict {
  bool hypothesis_holds = false;
  std::optional<Pt2<R>> perspective_center;
  std::array<Pt2<R>, 3> side_meets;
  std::optional<Ln2<R>> axis;
  bool conclusion_holds = false;
};

// Forward statement: spokes concurrent => side meets aligned.
template <class R>
DesarguesVerdict<R> check_desargues(const Pt2<R>& A, const Pt2<R>& B, const Pt2<R>& C,
                                    const Pt2<R>& A2, const Pt2<R>& B2, const Pt2<R>& C2,
                                    const Tol& tol = Tol()) {
  PerspectiveFrame<R> f = perspective_frame(A, B, C, A2, B2, C2, tol);
  DesarguesVerdict<R> v;
  v.hypothesis_holds = f.hypothesis;
  v.perspective_center = f.center;
  v.side_meets = f.meets;
  v.axis = f.axis;
  v.conclusion_holds = f.conclusion;
  return v;
}

// Converse (the projective dual): side meets aligned => spokes concurrent.
// hypothesis/conclusion swap roles relative to the forward check.
template <class R>
DesarguesVerdict<R> check_desargues_converse(const Pt2<R>& A, const Pt2<R>& B, const Pt2<R>& C,
                                             const Pt2<R>& A2, const Pt2<R>& B2,
                                             const Pt2<R>& C2, const Tol& tol = Tol()) {
  PerspectiveFrame<R> f = perspective_frame(A, B, C, A2, B2, C2, tol);
  DesarguesVerdict<R> v;
  v.hypothesis_holds = f.conclusion;
  v.perspective_center = f.center;
  v.side_meets = f.meets;
  v.axis = f.axis;
  v.conclusion_holds = f.hypothesis;
  return v;
}

// Degenerate members of the pencil of conics through four base points: the
// three line pairs, each meeting any test line in one pair of an involution.
// Builds the involution from two of the pairs and confirms it exchanges the
// third.
template <class R>
bool check_desargues_involution(const std::array<Pt2<R>, 4>& base, const Ln2<R>& l,
                                const Tol& tol = Tol()) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(base[i], base[j], base[k], tol))
          fail(errc::degenerate_base, "three base points are collinear");
  for (const Pt2<R>& p : base)
    if (incident(p, l, tol)) fail(errc::line_through_base_point, "line passes through a base point");

  static constexpr int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::array<std::pair<Pt2<R>, Pt2<R>>, 3> pairs;
  for (int s = 0; s < 3; ++s) {
    Ln2<R> g1 = join(base[splits[s][0]], base[splits[s][1]]);
    Ln2<R> g2 = join(base[splits[s][2]], base[splits[s][3]]);
    pairs[s] = {meet(l, g1), meet(l, g2)};
  }
  Involution<R> inv = involution_from_pairs(pairs[0], pairs[1], tol);
  R f = inv.pairing_form(pairs[2].first, pairs[2].second, tol);
  if constexpr (ring<R>::exact) {
    return f.is_zero();
  } else {
    return is_zero(f, tol, 1.0);
  }
}

enum class Pairing { near_near, far_far, near_far, far_near };

inline const char* pairing_name(Pairing p) {
  switch (p) {
    case Pairing::near_near: return "near-near";
    case Pairing::far_far: return "far-far";
    case Pairing::near_far: return "near-far";
    case Pairing::far_near: return "far-near";
  }
  return "?";
}

template <class R>
struct AlignmentReport {
  int secant_count = 0;
  std::vector<Pt2<R>> meets;
  std::optional<Ln2<R>> fitted_line;
  bool all_collinear = false;
  std::optional<double> max_residual;  // floating backend only
};

namespace detail {

// Both meets of the secant with the conic as affine parameters along
// P(lambda) = p0 + lambda p1.  Requires two real finite meets; the exact
// ring additionally requires them rational.
template <class R>
std::pair<R, R> secant_params(const Conic<R>& c, const LineBasis<R>& lb, const char* which) {
  auto q = restrict_to_line(c, lb);
  const R& a = q[0];
  const R& b = q[1];
  const R& cc = q[2];
  auto zero = [](const R& x) {
    if constexpr (ring<R>::exact) return x.is_zero();
    else return x == 0;
  };
  if (zero(cc))
    fail(errc::secant_misses_conic,
         std::string(which) + ": secant meets the conic at infinity");
  // Roots of cc t^2 + 2 b t + a = 0 (the restricted quadratic in lambda).
  R disc = b * b - a * cc;
  bool neg;
  if constexpr (ring<R>::exact) neg = disc.sign() < 0;
  else neg = disc < 0;
  if (neg) fail(errc::secant_misses_conic, std::string(which) + ": secant misses the conic");
  if (zero(disc))
    fail(errc::secant_misses_conic, std::string(which) + ": secant is tangent to the conic");
  if constexpr (ring<R>::exact) {
    Rat w;
    if (!rational_sqrt(disc, w))
      fail(errc::secant_misses_conic,
           std::string(which) + ": secant meets the conic at irrational points");
    return {(-b + w) / cc, (-b - w) / cc};
  } else {
    double w = std::sqrt(disc);
    return {(-b + w) / cc, (-b - w) / cc};
  }
}

}  // namespace detail

// Two-conic tangent alignment: for each secant through the apex, pick one
// meet per conic by order along the ray from the apex, intersect the two
// tangents, and check all those crossings are aligned.  Parallel tangents
// contribute their meet at infinity rather than being skipped: in the circle
// specialization the near-near alignment lives entirely at infinity.
template <class R>
AlignmentReport<R> check_example1(const Conic<R>& c1, const Conic<R>& c2, const Pt2<R>& apex,
                                  const std::vector<Ln2<R>>& secants, Pairing pairing,
                                  const Tol& tol = Tol()) {
  AlignmentReport<R> report;
  report.secant_count = static_cast<int>(secants.size());
  for (const Ln2<R>& l : secants) {
    if (!incident(apex, l, tol))
      fail(errc::secant_not_through_apex, "secant does not pass through the apex");
    if (l.is_line_at_infinity())
      fail(errc::secant_misses_conic, "the line at infinity cannot serve as a secant");
    LineBasis<R> lb = line_basis(l);
    auto [l1a, l1b] = detail::secant_params(c1, lb, "first conic");
    auto [l2a, l2b] = detail::secant_params(c2, lb, "second conic");

    // Ray orientation: point the parameter axis so circle 1 sits on the
    // positive side of the apex.  An apex inside circle 1, or at infinity,
    // keeps the default orientation.
    bool apex_infinite;
    {
      const auto& ac = apex.coords();
      double hint = std::max({std::abs(ring<R>::dbl(ac[0])), std::abs(ring<R>::dbl(ac[1])),
                              std::abs(ring<R>::dbl(ac[2]))});
      apex_infinite = is_zero(ac[2], tol, hint);
    }
    R apex_lambda(0);
    if (!apex_infinite) {
      auto [alpha, beta] = coords_on_basis(lb.p0, lb.p1, apex, tol);
      apex_lambda = beta / alpha;
    }
    auto delta = [&](const R& lam) { return apex_infinite ? lam : lam - apex_lambda; };
    R d1a = delta(l1a), d1b = delta(l1b), d2a = delta(l2a), d2b = delta(l2b);
    bool flip = false;
    {
      R s = d1a + d1b;
      if constexpr (ring<R>::exact) flip = s.sign() < 0;
      else flip = s < 0;
    }
    // Order each conic's two parameters by signed distance from the apex
    // along the oriented ray; the smaller key is the near meet.
    auto order = [&](R lam_a, R lam_b, R key_a, R key_b) {
      if (flip) { key_a = -key_a; key_b = -key_b; }
      if (key_b < key_a) std::swap(lam_a, lam_b);
      return std::pair<R, R>(lam_a, lam_b);  // (near, far)
    };
    auto [near1, far1] = order(l1a, l1b, d1a, d1b);
    auto [near2, far2] = order(l2a, l2b, d2a, d2b);
    R pick1 = (pairing == Pairing::near_near || pairing == Pairing::near_far) ? near1 : far1;
    R pick2 = (pairing == Pairing::near_near || pairing == Pairing::far_near) ? near2 : far2;
    Pt2<R> P1 = combine(R(1), lb.p0, pick1, lb.p1);
    Pt2<R> P2 = combine(R(1), lb.p0, pick2, lb.p1);
    Ln2<R> t1 = tangent_at(c1, P1, tol);
    Ln2<R> t2 = tangent_at(c2, P2, tol);
    report.meets.push_back(meet(t1, t2));
  }

  for (std::size_t i = 0; i < report.meets.size() && !report.fitted_line; ++i)
    for (std::size_t j = i + 1; j < report.meets.size() && !report.fitted_line; ++j)
      if (!same_point(report.meets[i], report.meets[j], tol))
        report.fitted_line = join(report.meets[i], report.meets[j]);

  report.all_collinear = true;
  if (report.fitted_line) {
    for (const Pt2<R>& m : report.meets)
      if (!incident(m, *report.fitted_line, tol)) report.all_collinear = false;
  }
  if constexpr (!ring<R>::exact) {
    double worst = 0;
    if (report.fitted_line) {
      const auto& lc = report.fitted_line->coords();
      double ln = std::sqrt(lc[0] * lc[0] + lc[1] * lc[1] + lc[2] * lc[2]);
      for (const Pt2<R>& m : report.meets) {
        const auto& x = m.coords();
        double pn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        double r = std::abs(lc[0] * x[0] + lc[1] * x[1] + lc[2] * x[2]) / (ln * pn);
        worst = std::max(worst, r);
      }
    }
    report.max_residual = worst;
  }
  return report;
}

// Four points on four carrier lines: the shadow of a plane section of a
// four-fold sheet.  admissible records that a realizing section was checked.
template <class R>
struct SectionQuadruplet {
  std::array<Pt2<R>, 4> points;
  std::array<Ln2<R>, 4> carriers;
  bool admissible = false;

  SectionQuadruplet(std::array<Pt2<R>, 4> pts, std::array<Ln2<R>, 4> lines,
                    bool assume_admissible = false, const Tol& tol = Tol())
      : points(std::move(pts)), carriers(std::move(lines)), admissible(assume_admissible) {
    for (int i = 0; i < 4; ++i)
      if (!incident(points[i], carriers[i], tol))
        fail(errc::carrier_incidence_violated, "quadruplet point is off its carrier line");
  }
};

namespace detail {

template <class R>
void require_carriers(const std::array<Ln2<R>, 4>& carriers, const SectionQuadruplet<R>& q) {
  for (int i = 0; i < 4; ++i)
    if (!(q.carriers[i] == carriers[i]))
      fail(errc::carrier_incidence_violated, "quadruplet carriers differ from the given ones");
}

}  // namespace detail

// Fourth point of the companion section: A', B', C' on the first three
// carriers pin down the axis (the shadow of the two cutting planes' meet),
// and D' must close the figure on it.
template <class R>
Pt2<R> complete_section(const std::array<Ln2<R>, 4>& carriers, const SectionQuadruplet<R>& first,
                        const Pt2<R>& A2, const Pt2<R>& B2, const Pt2<R>& C2,
                        const Tol& tol = Tol()) {
  detail::require_carriers(carriers, first);
  if (!first.admissible)
    fail(errc::invalid_incidence, "first quadruplet is not verified admissible");
  const Pt2<R>& A = first.points[0];
  const Pt2<R>& B = first.points[1];
  const Pt2<R>& C = first.points[2];
  const Pt2<R>& D = first.points[3];
  if (!incident(A2, carriers[0], tol) || !incident(B2, carriers[1], tol) ||
      !incident(C2, carriers[2], tol))
    fail(errc::carrier_incidence_violated, "a primed point is off its carrier line");
  if (same_point(A, A2, tol) || same_point(B, B2, tol) || same_point(C, C2, tol))
    fail(errc::degenerate_axis, "a primed point repeats its partner; the axis degenerates");

  Ln2<R> ab = join(A, B), a2b2 = join(A2, B2);
  Ln2<R> bc = join(B, C), b2c2 = join(B2, C2);
  if (ab == a2b2 || bc == b2c2)
    fail(errc::degenerate_axis, "corresponding section sides coincide");
  Pt2<R> m1 = meet(ab, a2b2);
  Pt2<R> m2 = meet(bc, b2c2);
  if (same_point(m1, m2, tol))
    fail(errc::degenerate_axis, "the two defining meets coincide");
  Ln2<R> axis = join(m1, m2);

  Ln2<R> cd = join(C, D);
  if (cd == axis) fail(errc::degenerate_axis, "side CD falls on the axis");
  Pt2<R> x = meet(cd, axis);
  if (same_point(x, C2, tol))
    fail(errc::degenerate_axis, "axis meets CD at the primed point C'");
  Ln2<R> c2d2 = join(C2, x);
  if (c2d2 == carriers[3]) fail(errc::degenerate_axis, "completing side falls on carrier D_4");
  return meet(c2d2, carriers[3]);
}

// True when the three stated side pairs cross in aligned points.  A pair
// whose two sides coincide imposes no constraint (the fully repeated
// quadruplet is aligned by convention).
template <class R>
bool check_section_alignment(const std::array<Ln2<R>, 4>& carriers,
                             const SectionQuadruplet<R>& q1, const SectionQuadruplet<R>& q2,
                             const Tol& tol = Tol()) {
  detail::require_carriers(carriers, q1);
  detail::require_carriers(carriers, q2);
  static constexpr int edge[3][2] = {{0, 1}, {1, 2}, {2, 3}};
  std::vector<Pt2<R>> meets;
  for (const auto& e : edge) {
    const Pt2<R>& u1 = q1.points[e[0]];
    const Pt2<R>& v1 = q1.points[e[1]];
    const Pt2<R>& u2 = q2.points[e[0]];
    const Pt2<R>& v2 = q2.points[e[1]];
    if (same_point(u1, v1, tol) || same_point(u2, v2, tol)) continue;
    Ln2<R> s1 = join(u1, v1);
    Ln2<R> s2 = join(u2, v2);
    if (s1 == s2) continue;
    meets.push_back(meet(s1, s2));
  }
  if (meets.size() < 3) return true;
  return collinear(meets[0], meets[1], meets[2], tol);
}

// Independent spatial oracle: lift three of the points to their folds along
// the projecting rays, reconstruct the cutting plane, and ask whether the
// fourth fold's section point projects onto the fourth given point.
template <class R>
bool verify_section_against_lift(const FoldedSheet<R>& sheet, const Projection<R>& pr,
                                 const SectionQuadruplet<R>& q, const Tol& tol = Tol()) {
  if (sheet.folds().size() != 4)
    fail(errc::invalid_sheet, "the section oracle expects exactly four folds");
  for (int i = 0; i < 4; ++i) {
    const Line3<R>& fold = sheet.folds()[i];
    if (contains(fold, pr.eye(), tol))
      fail(errc::ray_misses_fold, "a fold passes through the projection center");
    Ln2<R> carrier = join(project(pr, fold.p()), project(pr, fold.q()));
    if (!incident(q.points[i], carrier, tol))
      fail(errc::carrier_incidence_violated,
           "quadruplet point is off the projected fold line");
  }
  std::array<Pt3<R>, 3> lifted;
  for (int i = 0; i < 3; ++i) {
    Pt3<R> flat = pr.embed(q.points[i]);
    Line3<R> ray(pr.eye(), flat);
    auto hit = lines_meet(ray, sheet.folds()[i], tol);
    if (!hit) fail(errc::ray_misses_fold, "projecting ray misses its fold line");
    lifted[i] = *hit;
  }
  Plane3<R> cut = plane_through(lifted[0], lifted[1], lifted[2]);
  for (const Line3<R>& fold : sheet.folds())
    if (plane_contains_line(cut, fold, tol)) return false;
  Pt3<R> fourth = meet_line_plane(sheet.folds()[3], cut);
  if (fourth == pr.eye()) return false;
  return same_point(project(pr, fourth), q.points[3], tol);
}

}  // namespace epure
