#pragma once

#include <array>
#include <optional>
#include <vector>

#include "epure/linalg.hpp"
#include "epure/perspective.hpp"

namespace epure {

// Projective space over R.  Same conventions as the plane: canonical
// homogeneous tuples, ideal elements handled by the generic formulas.

template <class R>
bool tuple4_is_exact_zero(const std::array<R, 4>& a) {
  for (const R& x : a) {
    if constexpr (ring<R>::exact) {
      if (!x.is_zero()) return false;
    } else {
      if (x != 0) return false;
    }
  }
  return true;
}

template <class R>
class Pt3 {
public:
  Pt3() : c_{R(0), R(0), R(0), R(1)} {}
  Pt3(R x, R y, R z, R w) : c_{std::move(x), std::move(y), std::move(z), std::move(w)} {
    if (tuple4_is_exact_zero(c_)) fail(errc::zero_vector, "point (0 : 0 : 0 : 0)");
    canon_tuple(c_);
  }
  explicit Pt3(const std::array<R, 4>& c) : Pt3(c[0], c[1], c[2], c[3]) {}

  static Pt3 affine(R x, R y, R z) {
    return Pt3(std::move(x), std::move(y), std::move(z), R(1));
  }

  const R& x() const { return c_[0]; }
  const R& y() const { return c_[1]; }
  const R& z() const { return c_[2]; }
  const R& w() const { return c_[3]; }
  const std::array<R, 4>& coords() const { return c_; }

  bool infinite() const {
    if constexpr (ring<R>::exact) return c_[3].is_zero();
    else return c_[3] == 0;
  }

  friend bool operator==(const Pt3& a, const Pt3& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Pt3& a, const Pt3& b) { return !(a.c_ == b.c_); }

private:
  std::array<R, 4> c_;
};

template <class R>
class Plane3 {
public:
  // a x + b y + c z + d w = 0
  Plane3() : c_{R(0), R(0), R(0), R(1)} {}
  Plane3(R a, R b, R c, R d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (tuple4_is_exact_zero(c_)) fail(errc::zero_vector, "plane [0 : 0 : 0 : 0]");
    canon_tuple(c_);
  }
  explicit Plane3(const std::array<R, 4>& c) : Plane3(c[0], c[1], c[2], c[3]) {}

  const std::array<R, 4>& coords() const { return c_; }

  friend bool operator==(const Plane3& a, const Plane3& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Plane3& a, const Plane3& b) { return !(a.c_ == b.c_); }

private:
  std::array<R, 4> c_;
};

template <class R>
R dot4(const Plane3<R>& pl, const Pt3<R>& p) {
  const auto& a = pl.coords();
  const auto& x = p.coords();
  return a[0] * x[0] + a[1] * x[1] + a[2] * x[2] + a[3] * x[3];
}

template <class R>
bool incident(const Pt3<R>& p, const Plane3<R>& pl, const Tol& tol = Tol()) {
  R s = dot4(pl, p);
  if constexpr (ring<R>::exact) {
    return s.is_zero();
  } else {
    const auto& a = pl.coords();
    const auto& x = p.coords();
    double scale = 0;
    for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(a[i] * x[i]));
    return is_zero(s, tol, scale);
  }
}

// Line as two distinct points; representatives are canonical, so a line
// compares equal only representative-wise (use contains for geometry).
template <class R>
class Line3 {
public:
  Line3(Pt3<R> p, Pt3<R> q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == q_) fail(errc::coincident_points, "line through equal points");
  }

  const Pt3<R>& p() const { return p_; }
  const Pt3<R>& q() const { return q_; }

private:
  Pt3<R> p_, q_;
};

template <class R>
R det4(const std::array<R, 4>& a, const std::array<R, 4>& b, const std::array<R, 4>& c,
       const std::array<R, 4>& d) {
  auto minor = [&](int drop) {
    std::array<R, 3> bb, cc, dd;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == drop) continue;
      bb[k] = b[i];
      cc[k] = c[i];
      dd[k] = d[i];
      ++k;
    }
    return det3(bb, cc, dd);
  };
  R s = R(0);
  for (int i = 0; i < 4; ++i) {
    R term = a[i] * minor(i);
    s = (i % 2 == 0) ? s + term : s - term;
  }
  return s;
}

template <class R>
bool contains(const Line3<R>& l, const Pt3<R>& x, const Tol& tol = Tol()) {
  // Rank of [p q x] stays 2 exactly when every 3x3 minor vanishes.
  const auto& p = l.p().coords();
  const auto& q = l.q().coords();
  const auto& v = x.coords();
  for (int drop = 0; drop < 4; ++drop) {
    std::array<R, 3> a, b, c;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == drop) continue;
      a[k] = p[i];
      b[k] = q[i];
      c[k] = v[i];
      ++k;
    }
    R d = det3(a, b, c);
    if constexpr (ring<R>::exact) {
      if (!d.is_zero()) return false;
    } else {
      if (!is_zero(d, tol, det3_scale(a, b, c))) return false;
    }
  }
  return true;
}

template <class R>
bool plane_contains_line(const Plane3<R>& pl, const Line3<R>& l, const Tol& tol = Tol()) {
  return incident(l.p(), pl, tol) && incident(l.q(), pl, tol);
}

template <class R>
Plane3<R> plane_through(const Pt3<R>& p, const Pt3<R>& q, const Pt3<R>& r) {
  const auto& a = p.coords();
  const auto& b = q.coords();
  const auto& c = r.coords();
  std::array<R, 4> coef;
  for (int drop = 0; drop < 4; ++drop) {
    std::array<R, 3> aa, bb, cc;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == drop) continue;
      aa[k] = a[i];
      bb[k] = b[i];
      cc[k] = c[i];
      ++k;
    }
    R m = det3(aa, bb, cc);
    coef[drop] = (drop % 2 == 0) ? m : -m;
  }
  if (tuple4_is_exact_zero(coef))
    fail(errc::collinear_points, "three collinear points span no plane");
  return Plane3<R>(coef);
}

template <class R>
Line3<R> meet_planes(const Plane3<R>& a, const Plane3<R>& b) {
  std::vector<std::vector<R>> rows = {
      {a.coords()[0], a.coords()[1], a.coords()[2], a.coords()[3]},
      {b.coords()[0], b.coords()[1], b.coords()[2], b.coords()[3]}};
  auto basis = null_space(rows, 4);
  if (basis.size() != 2) fail(errc::coincident_planes, "planes coincide");
  Pt3<R> p(std::array<R, 4>{basis[0][0], basis[0][1], basis[0][2], basis[0][3]});
  Pt3<R> q(std::array<R, 4>{basis[1][0], basis[1][1], basis[1][2], basis[1][3]});
  return Line3<R>(p, q);
}

template <class R>
Pt3<R> meet_line_plane(const Line3<R>& l, const Plane3<R>& pl) {
  R s = dot4(pl, l.p());
  R t = dot4(pl, l.q());
  bool s0, t0;
  if constexpr (ring<R>::exact) {
    s0 = s.is_zero();
    t0 = t.is_zero();
  } else {
    s0 = (s == 0);
    t0 = (t == 0);
  }
  if (s0 && t0) fail(errc::line_in_plane, "line lies in the plane");
  const auto& p = l.p().coords();
  const auto& q = l.q().coords();
  return Pt3<R>(t * p[0] - s * q[0], t * p[1] - s * q[1], t * p[2] - s * q[2],
                t * p[3] - s * q[3]);
}

template <class R>
bool coplanar(const Line3<R>& a, const Line3<R>& b, const Tol& tol = Tol()) {
  R d = det4(a.p().coords(), a.q().coords(), b.p().coords(), b.q().coords());
  if constexpr (ring<R>::exact) {
    return d.is_zero();
  } else {
    double scale = 0;
    auto mag = [](const std::array<R, 4>& v) {
      double m = 0;
      for (double x : v) m = std::max(m, std::abs(x));
      return m;
    };
    scale = mag(a.p().coords()) * mag(a.q().coords()) * mag(b.p().coords()) *
            mag(b.q().coords());
    return is_zero(d, tol, scale);
  }
}

// Meet of two coplanar distinct lines; nullopt when the lines are skew.
template <class R>
std::optional<Pt3<R>> lines_meet(const Line3<R>& a, const Line3<R>& b, const Tol& tol = Tol()) {
  if (!coplanar(a, b, tol)) return std::nullopt;
  std::vector<std::vector<R>> rows(4, std::vector<R>(4, R(0)));
  for (int i = 0; i < 4; ++i) {
    rows[i][0] = a.p().coords()[i];
    rows[i][1] = a.q().coords()[i];
    rows[i][2] = -b.p().coords()[i];
    rows[i][3] = -b.q().coords()[i];
  }
  auto basis = null_space(rows, 4);
  if (basis.size() != 1) fail(errc::coincident_lines, "lines coincide");
  const auto& v = basis[0];
  std::array<R, 4> pt;
  for (int i = 0; i < 4; ++i) pt[i] = v[0] * a.p().coords()[i] + v[1] * a.q().coords()[i];
  return Pt3<R>(pt);
}

// Central or parallel projection onto an image plane carrying an affine
// frame.  Frame coordinates: a point M of the plane gets plane coordinates
// (x : y : w) with M ~ x u + y v + w o, where o is the canonical
// representative of origin and u, v are the representative differences
// ex - origin, ey - origin.  For w != 0 this is the affine frame
// origin + (x/w) u + (y/w) v; for w == 0 it is the ideal direction x u + y v.
template <class R>
class Projection {
public:
  enum class Kind { central, orthogonal };

  static Projection central(Pt3<R> eye, Plane3<R> image, Pt3<R> origin, Pt3<R> ex, Pt3<R> ey) {
    return Projection(Kind::central, std::move(eye), std::move(image), std::move(origin),
                      std::move(ex), std::move(ey));
  }

  // direction must be an ideal point; the rays are the parallels through it.
  static Projection orthogonal(Pt3<R> direction, Plane3<R> image, Pt3<R> origin, Pt3<R> ex,
                               Pt3<R> ey) {
    if (!direction.infinite())
      fail(errc::invalid_frame, "projection along a direction needs an ideal point");
    return Projection(Kind::orthogonal, std::move(direction), std::move(image), std::move(origin),
                      std::move(ex), std::move(ey));
  }

  // Vertical projection onto z = 0 with the unit frame; inverse of embedding
  // the plane at height zero.
  static Projection onto_base() {
    return orthogonal(Pt3<R>(R(0), R(0), R(1), R(0)), Plane3<R>(R(0), R(0), R(1), R(0)),
                    Pt3<R>::affine(R(0), R(0), R(0)), Pt3<R>::affine(R(1), R(0), R(0)),
                    Pt3<R>::affine(R(0), R(1), R(0)));
  }

  Kind kind() const { return kind_; }
  const Pt3<R>& eye() const { return eye_; }
  const Plane3<R>& image_plane() const { return image_; }
  const Pt3<R>& origin() const { return origin_; }
  const Pt3<R>& ex() const { return ex_; }
  const Pt3<R>& ey() const { return ey_; }

  // Point of space carrying the given plane coordinates.
  Pt3<R> embed(const Pt2<R>& m) const {
    std::array<R, 4> c;
    for (int i = 0; i < 4; ++i)
      c[i] = m.x() * u_[i] + m.y() * v_[i] + m.z() * origin_.coords()[i];
    return Pt3<R>(c);
  }

  // Plane coordinates of a point of the image plane.
  Pt2<R> plane_coords(const Pt3<R>& m) const {
    std::vector<std::vector<R>> rows(4, std::vector<R>(4, R(0)));
    for (int i = 0; i < 4; ++i) {
      rows[i][0] = u_[i];
      rows[i][1] = v_[i];
      rows[i][2] = origin_.coords()[i];
      rows[i][3] = -m.coords()[i];
    }
    auto basis = null_space(rows, 4);
    if (basis.size() != 1 || is_exact_zero(basis[0][3]))
      fail(errc::invalid_incidence, "point is not on the image plane");
    return Pt2<R>(basis[0][0], basis[0][1], basis[0][2]);
  }

private:
  Projection(Kind k, Pt3<R> eye, Plane3<R> image, Pt3<R> origin, Pt3<R> ex, Pt3<R> ey)
      : kind_(k), eye_(std::move(eye)), image_(std::move(image)), origin_(std::move(origin)),
        ex_(std::move(ex)), ey_(std::move(ey)) {
    if (incident(eye_, image_))
      fail(errc::invalid_frame, "projection center lies on the image plane");
    for (const Pt3<R>* p : {&origin_, &ex_, &ey_})
      if (!incident(*p, image_)) fail(errc::invalid_frame, "frame point is off the image plane");
    for (int i = 0; i < 4; ++i) {
      u_[i] = ex_.coords()[i] - origin_.coords()[i];
      v_[i] = ey_.coords()[i] - origin_.coords()[i];
    }
    std::vector<std::vector<R>> rows(4, std::vector<R>(3, R(0)));
    for (int i = 0; i < 4; ++i) {
      rows[i][0] = u_[i];
      rows[i][1] = v_[i];
      rows[i][2] = origin_.coords()[i];
    }
    if (!null_space(rows, 3).empty())
      fail(errc::invalid_frame, "frame points are collinear or coincide");
  }

  static bool is_exact_zero(const R& x) {
    if constexpr (ring<R>::exact) return x.is_zero();
    else return x == 0;
  }

  Kind kind_;
  Pt3<R> eye_;
  Plane3<R> image_;
  Pt3<R> origin_, ex_, ey_;
  std::array<R, 4> u_, v_;
};

template <class R>
Pt2<R> project(const Projection<R>& pr, const Pt3<R>& p) {
  if (p == pr.eye())
    fail(errc::undefined_projection, "point coincides with the projection center");
  Line3<R> ray(pr.eye(), p);
  Pt3<R> m = meet_line_plane(ray, pr.image_plane());
  return pr.plane_coords(m);
}

// Planar model folded along a chain of creases.  faces[i] and faces[i+1]
// share fold[i]; each face meets only its neighbors through a crease.
template <class R>
class FoldedSheet {
public:
  FoldedSheet(std::vector<Plane3<R>> faces, std::vector<Line3<R>> folds)
      : faces_(std::move(faces)), folds_(std::move(folds)) {
    if (faces_.size() < 2 || folds_.size() + 1 != faces_.size())
      fail(errc::invalid_sheet, "need n + 1 faces for n folds, n >= 1");
    for (std::size_t i = 0; i < folds_.size(); ++i) {
      if (faces_[i] == faces_[i + 1]) fail(errc::invalid_sheet, "consecutive faces coincide");
      if (!plane_contains_line(faces_[i], folds_[i]) ||
          !plane_contains_line(faces_[i + 1], folds_[i]))
        fail(errc::invalid_sheet, "fold is not the crease of its two faces");
    }
  }

  static FoldedSheet from_faces(std::vector<Plane3<R>> faces) {
    if (faces.size() < 2) fail(errc::invalid_sheet, "need at least two faces");
    std::vector<Line3<R>> folds;
    for (std::size_t i = 0; i + 1 < faces.size(); ++i) {
      if (faces[i] == faces[i + 1]) fail(errc::invalid_sheet, "consecutive faces coincide");
      folds.push_back(meet_planes(faces[i], faces[i + 1]));
    }
    return FoldedSheet(std::move(faces), std::move(folds));
  }

  const std::vector<Plane3<R>>& faces() const { return faces_; }
  const std::vector<Line3<R>>& folds() const { return folds_; }

private:
  std::vector<Plane3<R>> faces_;
  std::vector<Line3<R>> folds_;
};

// One point per fold: where the cutting plane crosses each crease.
template <class R>
std::vector<Pt3<R>> section_by_plane(const FoldedSheet<R>& sheet, const Plane3<R>& cut) {
  std::vector<Pt3<R>> pts;
  for (const Line3<R>& fold : sheet.folds()) {
    if (plane_contains_line(cut, fold))
      fail(errc::plane_contains_fold, "cutting plane contains a fold");
    pts.push_back(meet_line_plane(fold, cut));
  }
  return pts;
}

// Spatial witness for a plane Desargues figure: the primed triangle is
// raised into a second plane, an eye is placed over the center, and the
// figure becomes the shadow of a genuine two-plane configuration.
template <class R>
struct DesarguesLift {
  Plane3<R> base_plane;
  Plane3<R> section_plane;
  Projection<R> view;
  std::array<Pt3<R>, 6> points;  // lifted A, B, C, A', B', C'
};

namespace detail {

template <class R>
Pt3<R> embed_at_height_zero(const Pt2<R>& p) {
  return Pt3<R>(p.x(), p.y(), R(0), p.z());
}

}  // namespace detail

// Requires the plane hypothesis (spokes concurrent at the given center).
// The section plane is anchored on the axis, so the lifted side lines meet
// exactly above the plane meets; the eye sits over the center, off both
// planes.
template <class R>
DesarguesLift<R> lift_desargues(const Pt2<R>& A, const Pt2<R>& B, const Pt2<R>& C,
                                const Pt2<R>& A2, const Pt2<R>& B2, const Pt2<R>& C2,
                                const Pt2<R>& center, const Tol& tol = Tol()) {
  PerspectiveFrame<R> f = perspective_frame(A, B, C, A2, B2, C2, tol);
  for (const Ln2<R>& spoke : f.spokes)
    if (!incident(center, spoke, tol))
      fail(errc::hypothesis_fails, "a joining line misses the claimed center");
  if (!f.hypothesis) fail(errc::hypothesis_fails, "the three spokes are not concurrent");
  if (!f.axis) fail(errc::degenerate_axis, "side meets coincide; axis undetermined");

  const Pt2<R>& O = center;
  Pt3<R> eye(O.x(), O.y(), O.z(), O.z());
  // For an ideal center the eye is the ideal point of slope-one rays over it.
  bool ideal;
  if constexpr (ring<R>::exact) ideal = O.z().is_zero();
  else ideal = (O.z() == 0);
  if (ideal) eye = Pt3<R>(O.x(), O.y(), R(1), R(0));

  Pt2<R> g1 = f.meets[0];
  Pt2<R> g2 = f.meets[0] != f.meets[1] ? f.meets[1] : f.meets[2];
  std::array<const Pt2<R>*, 3> primed = {&A2, &B2, &C2};
  const Pt2<R>* seed = nullptr;
  for (const Pt2<R>* p : primed)
    if (!incident(*p, *f.axis, tol)) { seed = p; break; }
  if (!seed) fail(errc::degenerate_triangle, "primed triangle collapses onto the axis");

  Pt3<R> seed_flat = detail::embed_at_height_zero(*seed);
  std::array<R, 4> lifted;
  for (int i = 0; i < 4; ++i) lifted[i] = seed_flat.coords()[i] + eye.coords()[i];
  Pt3<R> seed_lift(lifted);
  Plane3<R> section = plane_through(detail::embed_at_height_zero(g1),
                                    detail::embed_at_height_zero(g2), seed_lift);

  Plane3<R> base(R(0), R(0), R(1), R(0));
  Pt3<R> f0 = Pt3<R>::affine(R(0), R(0), R(0));
  Pt3<R> f1 = Pt3<R>::affine(R(1), R(0), R(0));
  Pt3<R> f2 = Pt3<R>::affine(R(0), R(1), R(0));
  Projection<R> view = ideal ? Projection<R>::orthogonal(eye, base, f0, f1, f2)
                             : Projection<R>::central(eye, base, f0, f1, f2);

  auto lift_primed = [&](const Pt2<R>& p) -> Pt3<R> {
    Pt3<R> flat = detail::embed_at_height_zero(p);
    if (flat == seed_flat) return seed_lift;
    return meet_line_plane(Line3<R>(view.eye(), flat), section);
  };

  DesarguesLift<R> out{Plane3<R>(R(0), R(0), R(1), R(0)), section, view,
                       {detail::embed_at_height_zero(A), detail::embed_at_height_zero(B),
                        detail::embed_at_height_zero(C), lift_primed(A2), lift_primed(B2),
                        lift_primed(C2)}};
  return out;
}

}  // namespace epure
