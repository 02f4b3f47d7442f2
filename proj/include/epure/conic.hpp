#pragma once

#include <array>
#include <optional>
#include <utility>

#include "epure/linalg.hpp"
#include "epure/p2.hpp"

namespace epure {

// Conic as a symmetric 3x3 matrix modulo scale; a point p lies on the conic
// exactly when p' M p = 0.  Degenerate conics (line pairs) are legal values;
// they carry det(M) = 0 and are what a pencil's special members look like.
template <class R>
class Conic {
public:
  using Mat = std::array<std::array<R, 3>, 3>;

  explicit Conic(Mat m) : m_(std::move(m)) {
    if (m_[0][1] != m_[1][0] || m_[0][2] != m_[2][0] || m_[1][2] != m_[2][1])
      fail(errc::singular_matrix, "conic matrix must be symmetric");
    std::array<R, 6> c = {m_[0][0], m_[0][1], m_[0][2], m_[1][1], m_[1][2], m_[2][2]};
    bool zero = true;
    for (const R& x : c) {
      if constexpr (ring<R>::exact) zero = zero && x.is_zero();
      else zero = zero && x == 0;
    }
    if (zero) fail(errc::zero_vector, "conic matrix is zero");
    canon_tuple(c);
    m_[0] = {c[0], c[1], c[2]};
    m_[1] = {c[1], c[3], c[4]};
    m_[2] = {c[2], c[4], c[5]};
  }

  const Mat& matrix() const { return m_; }

  R eval(const Pt2<R>& p) const {
    const auto& x = p.coords();
    return x[0] * (m_[0][0] * x[0] + m_[0][1] * x[1] + m_[0][2] * x[2]) +
           x[1] * (m_[1][0] * x[0] + m_[1][1] * x[1] + m_[1][2] * x[2]) +
           x[2] * (m_[2][0] * x[0] + m_[2][1] * x[1] + m_[2][2] * x[2]);
  }

  // Scale hint for the floating zero test of eval.
  double eval_scale(const Pt2<R>& p) const {
    const auto& x = p.coords();
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        s = std::max(s, std::abs(ring<R>::dbl(m_[i][j]) * ring<R>::dbl(x[i]) *
                                 ring<R>::dbl(x[j])));
    return s;
  }

  bool contains(const Pt2<R>& p, const Tol& tol = Tol()) const {
    R v = eval(p);
    if constexpr (ring<R>::exact) return v.is_zero();
    else return is_zero(v, tol, eval_scale(p));
  }

  std::array<R, 3> gradient(const Pt2<R>& p) const {
    const auto& x = p.coords();
    return {m_[0][0] * x[0] + m_[0][1] * x[1] + m_[0][2] * x[2],
            m_[1][0] * x[0] + m_[1][1] * x[1] + m_[1][2] * x[2],
            m_[2][0] * x[0] + m_[2][1] * x[1] + m_[2][2] * x[2]};
  }

  R det() const { return det3(m_[0], m_[1], m_[2]); }

  bool degenerate() const {
    R d = det();
    if constexpr (ring<R>::exact) return d.is_zero();
    else return d == 0;
  }

  friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Conic& a, const Conic& b) { return !(a.m_ == b.m_); }

private:
  Mat m_;
};

template <class R>
Conic<R> conic_from_circle(const Pt2<R>& center, const R& radius) {
  if (center.infinite()) fail(errc::invalid_circle, "circle center must be finite");
  bool bad;
  if constexpr (ring<R>::exact) bad = radius.sign() <= 0;
  else bad = !(radius > 0);
  if (bad) fail(errc::invalid_circle, "circle radius must be positive");
  R cx = center.ax();
  R cy = center.ay();
  typename Conic<R>::Mat m = {{{R(1), R(0), -cx},
                               {R(0), R(1), -cy},
                               {-cx, -cy, cx * cx + cy * cy - radius * radius}}};
  return Conic<R>(m);
}

// Unique conic through five points in general position.  The five incidence
// conditions form a 5x6 system on (a, b, c, d, e, f) for
// a x^2 + b x y + c y^2 + d x z + e y z + f z^2.
template <class R>
Conic<R> conic_through_five(const std::array<Pt2<R>, 5>& pts) {
  std::vector<std::vector<R>> rows;
  for (const Pt2<R>& p : pts) {
    const auto& v = p.coords();
    rows.push_back({v[0] * v[0], v[0] * v[1], v[1] * v[1], v[0] * v[2], v[1] * v[2],
                    v[2] * v[2]});
  }
  auto basis = null_space(rows, 6);
  if (basis.size() != 1)
    fail(errc::no_unique_conic, "five points do not impose independent conditions");
  const auto& s = basis[0];
  R two(2);
  typename Conic<R>::Mat m = {{{s[0], s[1] / two, s[3] / two},
                               {s[1] / two, s[2], s[4] / two},
                               {s[3] / two, s[4] / two, s[5]}}};
  return Conic<R>(m);
}

template <class R>
Ln2<R> polar(const Conic<R>& c, const Pt2<R>& p) {
  auto g = c.gradient(p);
  if (tuple_is_exact_zero(g))
    fail(errc::singular_point, "point lies in the kernel of a degenerate conic");
  return Ln2<R>(g);
}

template <class R>
Ln2<R> tangent_at(const Conic<R>& c, const Pt2<R>& p, const Tol& tol = Tol()) {
  if (!c.contains(p, tol)) fail(errc::point_not_on_conic, "tangency point is off the conic");
  auto g = c.gradient(p);
  if (tuple_is_exact_zero(g))
    fail(errc::singular_point, "tangent undefined at a singular point");
  return Ln2<R>(g);
}

// Affine-flavored basis of a line: p0 a finite anchor (when one exists) and
// p1 the remaining independent representative; P(s, t) = s p0 + t p1.
template <class R>
struct LineBasis {
  Pt2<R> p0, p1;
};

template <class R>
LineBasis<R> line_basis(const Ln2<R>& l) {
  const R& u = l.u();
  const R& v = l.v();
  const R& w = l.w();
  if (l.is_line_at_infinity())
    return {Pt2<R>(R(1), R(0), R(0)), Pt2<R>(R(0), R(1), R(0))};
  bool u_nonzero;
  if constexpr (ring<R>::exact) u_nonzero = !u.is_zero();
  else u_nonzero = std::abs(u) >= std::abs(v);
  Pt2<R> p0 = u_nonzero ? Pt2<R>(-w, R(0), u) : Pt2<R>(R(0), -w, v);
  Pt2<R> p1 = Pt2<R>(v, -u, R(0));
  return {p0, p1};
}

// Restriction of the conic to the line: q(s, t) = a s^2 + 2 b s t + c t^2.
template <class R>
std::array<R, 3> restrict_to_line(const Conic<R>& c, const LineBasis<R>& lb) {
  auto g0 = c.gradient(lb.p0);
  const auto& x0 = lb.p0.coords();
  const auto& x1 = lb.p1.coords();
  R a = x0[0] * g0[0] + x0[1] * g0[1] + x0[2] * g0[2];
  R b = x1[0] * g0[0] + x1[1] * g0[1] + x1[2] * g0[2];
  R cc = c.eval(lb.p1);
  return {a, b, cc};
}

template <class R>
struct MeetResult {
  enum class Kind { two_rational, tangent, no_real_meet, irrational, contained } kind;
  std::optional<std::pair<Pt2<R>, Pt2<R>>> points;
  std::optional<Pt2<R>> touch;
  // Restricted quadratic a s^2 + b s t + c t^2 when the roots are irrational.
  std::array<R, 3> quadratic{R(0), R(0), R(0)};
};

template <class R>
MeetResult<R> line_conic_meet(const Conic<R>& c, const Ln2<R>& l) {
  LineBasis<R> lb = line_basis(l);
  auto q = restrict_to_line(c, lb);
  const R& a = q[0];
  const R& b = q[1];
  const R& cc = q[2];
  auto zero = [](const R& x) {
    if constexpr (ring<R>::exact) return x.is_zero();
    else return x == 0;
  };
  MeetResult<R> out;
  if (zero(a) && zero(b) && zero(cc)) {
    out.kind = MeetResult<R>::Kind::contained;
    return out;
  }
  if (zero(a)) {
    if (zero(b)) {
      // q = c t^2: double root at t = 0.
      out.kind = MeetResult<R>::Kind::tangent;
      out.touch = lb.p0;
      return out;
    }
    out.kind = MeetResult<R>::Kind::two_rational;
    Pt2<R> second = combine(cc, lb.p0, R(-2) * b, lb.p1);
    out.points = {lb.p0, second};
    return out;
  }
  R disc = b * b - a * cc;
  if (zero(disc)) {
    out.kind = MeetResult<R>::Kind::tangent;
    out.touch = combine(-b, lb.p0, a, lb.p1);
    return out;
  }
  bool negative;
  if constexpr (ring<R>::exact) negative = disc.sign() < 0;
  else negative = disc < 0;
  if (negative) {
    out.kind = MeetResult<R>::Kind::no_real_meet;
    return out;
  }
  if constexpr (ring<R>::exact) {
    Rat root;
    if (!rational_sqrt(disc, root)) {
      out.kind = MeetResult<R>::Kind::irrational;
      out.quadratic = {a, R(2) * b, cc};
      return out;
    }
    out.kind = MeetResult<R>::Kind::two_rational;
    out.points = {combine(-b + root, lb.p0, a, lb.p1), combine(-b - root, lb.p0, a, lb.p1)};
    return out;
  } else {
    double root = std::sqrt(disc);
    out.kind = MeetResult<R>::Kind::two_rational;
    out.points = {combine(-b + root, lb.p0, a, lb.p1), combine(-b - root, lb.p0, a, lb.p1)};
    return out;
  }
}

// The other meet of l with the conic, given one rational meet.  Vieta on the
// restricted quadratic keeps everything rational; the tangent at `known`
// returns `known` itself.
template <class R>
Pt2<R> second_intersection(const Conic<R>& c, const Pt2<R>& known, const Ln2<R>& l,
                           const Tol& tol = Tol()) {
  if (!c.contains(known, tol))
    fail(errc::invalid_incidence, "known point does not lie on the conic");
  if (!incident(known, l, tol))
    fail(errc::invalid_incidence, "known point does not lie on the line");
  LineBasis<R> lb = line_basis(l);
  Pt2<R> q = (lb.p0 == known) ? lb.p1 : lb.p0;
  auto g = c.gradient(known);
  const auto& xq = q.coords();
  R b = xq[0] * g[0] + xq[1] * g[1] + xq[2] * g[2];
  R cc = c.eval(q);
  bool b0, c0;
  if constexpr (ring<R>::exact) {
    b0 = b.is_zero();
    c0 = cc.is_zero();
  } else {
    b0 = (b == 0);
    c0 = (cc == 0);
  }
  if (b0 && c0) fail(errc::invalid_incidence, "line lies on the conic");
  if (b0) return known;
  return combine(cc, known, R(-2) * b, q);
}

// Two circles with same-side common tangents; the exact instance factory.
template <class R>
class CirclePair {
public:
  CirclePair(Pt2<R> c1, R r1, Pt2<R> c2, R r2)
      : c1_(std::move(c1)), r1_(std::move(r1)), c2_(std::move(c2)), r2_(std::move(r2)) {
    bool bad1, bad2;
    if constexpr (ring<R>::exact) {
      bad1 = r1_.sign() <= 0;
      bad2 = r2_.sign() <= 0;
    } else {
      bad1 = !(r1_ > 0);
      bad2 = !(r2_ > 0);
    }
    if (bad1 || bad2) fail(errc::invalid_circle, "radii must be positive");
    if (c1_.infinite() || c2_.infinite()) fail(errc::invalid_circle, "centers must be finite");
    R dx = c2_.ax() - c1_.ax();
    R dy = c2_.ay() - c1_.ay();
    R dist2 = dx * dx + dy * dy;
    R gap = r1_ - r2_;
    // One circle inside the other (or concentric) has no same-side tangents.
    if (!(dist2 > gap * gap))
      fail(errc::no_same_side_tangents, "one circle contains the other");
  }

  const Pt2<R>& center1() const { return c1_; }
  const Pt2<R>& center2() const { return c2_; }
  const R& radius1() const { return r1_; }
  const R& radius2() const { return r2_; }

  Conic<R> conic1() const { return conic_from_circle(c1_, r1_); }
  Conic<R> conic2() const { return conic_from_circle(c2_, r2_); }

private:
  Pt2<R> c1_;
  R r1_;
  Pt2<R> c2_;
  R r2_;
};

// External homothety center: where the same-side common tangents cross.
// Equal radii push it to infinity along the center line.
template <class R>
Pt2<R> same_side_tangent_apex(const CirclePair<R>& cp) {
  R dr = cp.radius2() - cp.radius1();
  R dx = cp.center2().ax() - cp.center1().ax();
  R dy = cp.center2().ay() - cp.center1().ay();
  bool equal_radii;
  if constexpr (ring<R>::exact) equal_radii = dr.is_zero();
  else equal_radii = (dr == 0);
  if (equal_radii) return Pt2<R>::at_infinity(dx, dy);
  R ox = (cp.radius2() * cp.center1().ax() - cp.radius1() * cp.center2().ax()) / dr;
  R oy = (cp.radius2() * cp.center1().ay() - cp.radius1() * cp.center2().ay()) / dr;
  return Pt2<R>::affine(ox, oy);
}

// Image of a point of circle 1 under the homothety carrying circle 1 to
// circle 2 (center = same_side_tangent_apex, ratio r2 / r1).  The affine
// form C2 + (r2 / r1)(p - C1) also covers the equal-radius translation.
template <class R>
Pt2<R> homothety_image(const CirclePair<R>& cp, const Pt2<R>& p, const Tol& tol = Tol()) {
  if (!cp.conic1().contains(p, tol))
    fail(errc::point_not_on_conic, "point is not on the first circle");
  R k = cp.radius2() / cp.radius1();
  R x = cp.center2().ax() + k * (p.ax() - cp.center1().ax());
  R y = cp.center2().ay() + k * (p.ay() - cp.center1().ay());
  return Pt2<R>::affine(x, y);
}

// Conic of the image points under a homography: x -> H x carries M to
// adj(H)' M adj(H), a scale of the inverse-transpose conjugation.
template <class R>
Conic<R> apply_homography(const Homography<R>& h, const Conic<R>& c) {
  Homography<R> hinv = h.inverse();
  const auto& a = hinv.matrix();
  const auto& m = c.matrix();
  typename Conic<R>::Mat t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t[i][j] = R(0);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) t[i][j] = t[i][j] + a[k][i] * m[k][l] * a[l][j];
    }
  return Conic<R>(t);
}

}  // namespace epure
