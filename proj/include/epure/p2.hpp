#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "epure/kernel.hpp"

namespace epure {

// Projective plane over the scalar ring R.  Points and lines are homogeneous
// triples kept in canonical form, so coordinates compare with == and a value
// at infinity is exactly z == 0 (or, for a line, the triple (0 : 0 : 1)).
// Nothing below special-cases infinity: joins, meets, and incidence go
// through the same formulas for finite and ideal elements.

template <class R>
std::array<R, 3> cross3(const std::array<R, 3>& a, const std::array<R, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <class R>
bool tuple_is_exact_zero(const std::array<R, 3>& a) {
  if constexpr (ring<R>::exact)
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
  else
    return a[0] == 0 && a[1] == 0 && a[2] == 0;
}

template <class R>
R det3(const std::array<R, 3>& a, const std::array<R, 3>& b, const std::array<R, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Largest magnitude among the six elementary products of a 3x3 determinant;
// scale hint for the floating backend's zero test.
template <class R>
double det3_scale(const std::array<R, 3>& a, const std::array<R, 3>& b,
                  const std::array<R, 3>& c) {
  auto d = [](const R& x) { return std::abs(ring<R>::dbl(x)); };
  double m = 0;
  m = std::max(m, d(a[0]) * d(b[1]) * d(c[2]));
  m = std::max(m, d(a[0]) * d(b[2]) * d(c[1]));
  m = std::max(m, d(a[1]) * d(b[0]) * d(c[2]));
  m = std::max(m, d(a[1]) * d(b[2]) * d(c[0]));
  m = std::max(m, d(a[2]) * d(b[0]) * d(c[1]));
  m = std::max(m, d(a[2]) * d(b[1]) * d(c[0]));
  return m;
}

template <class R>
class Pt2 {
public:
  Pt2() : c_{R(0), R(0), R(1)} {}
  Pt2(R x, R y, R z) : c_{std::move(x), std::move(y), std::move(z)} {
    if (tuple_is_exact_zero(c_)) fail(errc::zero_vector, "point (0 : 0 : 0)");
    canon_tuple(c_);
  }
  explicit Pt2(const std::array<R, 3>& c) : Pt2(c[0], c[1], c[2]) {}

  static Pt2 affine(R x, R y) { return Pt2(std::move(x), std::move(y), R(1)); }
  static Pt2 at_infinity(R dx, R dy) { return Pt2(std::move(dx), std::move(dy), R(0)); }

  const R& x() const { return c_[0]; }
  const R& y() const { return c_[1]; }
  const R& z() const { return c_[2]; }
  const std::array<R, 3>& coords() const { return c_; }

  bool infinite() const {
    if constexpr (ring<R>::exact) return c_[2].is_zero();
    else return c_[2] == 0;
  }
  R ax() const { return c_[0] / c_[2]; }
  R ay() const { return c_[1] / c_[2]; }

  friend bool operator==(const Pt2& a, const Pt2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Pt2& a, const Pt2& b) { return !(a.c_ == b.c_); }

private:
  std::array<R, 3> c_;
};

template <class R>
class Ln2 {
public:
  // u x + v y + w z = 0
  Ln2() : c_{R(0), R(0), R(1)} {}
  Ln2(R u, R v, R w) : c_{std::move(u), std::move(v), std::move(w)} {
    if (tuple_is_exact_zero(c_)) fail(errc::zero_vector, "line [0 : 0 : 0]");
    canon_tuple(c_);
  }
  explicit Ln2(const std::array<R, 3>& c) : Ln2(c[0], c[1], c[2]) {}

  static Ln2 line_at_infinity() { return Ln2(R(0), R(0), R(1)); }

  const R& u() const { return c_[0]; }
  const R& v() const { return c_[1]; }
  const R& w() const { return c_[2]; }
  const std::array<R, 3>& coords() const { return c_; }

  bool is_line_at_infinity() const {
    if constexpr (ring<R>::exact) return c_[0].is_zero() && c_[1].is_zero();
    else return c_[0] == 0 && c_[1] == 0;
  }

  friend bool operator==(const Ln2& a, const Ln2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Ln2& a, const Ln2& b) { return !(a.c_ == b.c_); }

private:
  std::array<R, 3> c_;
};

template <class R>
Pt2<R> combine(const R& s, const Pt2<R>& p, const R& t, const Pt2<R>& q) {
  return Pt2<R>(s * p.x() + t * q.x(), s * p.y() + t * q.y(), s * p.z() + t * q.z());
}

template <class R>
Ln2<R> join(const Pt2<R>& p, const Pt2<R>& q) {
  auto c = cross3(p.coords(), q.coords());
  if (tuple_is_exact_zero(c)) fail(errc::coincident_points, "join of equal points");
  return Ln2<R>(c);
}

template <class R>
Pt2<R> meet(const Ln2<R>& l, const Ln2<R>& m) {
  auto c = cross3(l.coords(), m.coords());
  if (tuple_is_exact_zero(c)) fail(errc::coincident_lines, "meet of equal lines");
  return Pt2<R>(c);
}

template <class R>
bool incident(const Pt2<R>& p, const Ln2<R>& l, const Tol& tol = Tol()) {
  R s = p.x() * l.u() + p.y() * l.v() + p.z() * l.w();
  if constexpr (ring<R>::exact) {
    return s.is_zero();
  } else {
    double scale = std::max({std::abs(p.x() * l.u()), std::abs(p.y() * l.v()),
                             std::abs(p.z() * l.w())});
    return is_zero(s, tol, scale);
  }
}

template <class R>
bool collinear(const Pt2<R>& a, const Pt2<R>& b, const Pt2<R>& c, const Tol& tol = Tol()) {
  R d = det3(a.coords(), b.coords(), c.coords());
  if constexpr (ring<R>::exact) return d.is_zero();
  else return is_zero(d, tol, det3_scale(a.coords(), b.coords(), c.coords()));
}

template <class R>
bool concurrent(const Ln2<R>& a, const Ln2<R>& b, const Ln2<R>& c, const Tol& tol = Tol()) {
  R d = det3(a.coords(), b.coords(), c.coords());
  if constexpr (ring<R>::exact) return d.is_zero();
  else return is_zero(d, tol, det3_scale(a.coords(), b.coords(), c.coords()));
}

// Coordinates (alpha, beta) of x in the basis (p, q) of the line through p
// and q, solved from the two coordinate rows with the best-conditioned 2x2
// minor of [p q] and verified against the remaining row.
template <class R>
std::pair<R, R> coords_on_basis(const Pt2<R>& p, const Pt2<R>& q, const Pt2<R>& x,
                                const Tol& tol = Tol()) {
  static constexpr int rows[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const auto& P = p.coords();
  const auto& Q = q.coords();
  const auto& X = x.coords();
  int pick = -1;
  if constexpr (ring<R>::exact) {
    for (int k = 0; k < 3 && pick < 0; ++k) {
      R d = P[rows[k][0]] * Q[rows[k][1]] - P[rows[k][1]] * Q[rows[k][0]];
      if (!d.is_zero()) pick = k;
    }
  } else {
    double best = -1;
    for (int k = 0; k < 3; ++k) {
      double d = std::abs(P[rows[k][0]] * Q[rows[k][1]] - P[rows[k][1]] * Q[rows[k][0]]);
      if (d > best) { best = d; pick = k; }
    }
    if (best == 0) pick = -1;
  }
  if (pick < 0) fail(errc::coincident_points, "basis points of a line coincide");
  int i = rows[pick][0];
  int j = rows[pick][1];
  R d = P[i] * Q[j] - P[j] * Q[i];
  R alpha = (X[i] * Q[j] - X[j] * Q[i]) / d;
  R beta = (P[i] * X[j] - P[j] * X[i]) / d;
  int k = 3 - i - j;
  R resid = alpha * P[k] + beta * Q[k] - X[k];
  if constexpr (ring<R>::exact) {
    if (!resid.is_zero()) fail(errc::not_on_line, "point is not on the basis line");
  } else {
    double scale = std::max({std::abs(alpha * P[k]), std::abs(beta * Q[k]), std::abs(X[k]), 1.0});
    if (!is_zero(resid, tol, scale)) fail(errc::not_on_line, "point is not on the basis line");
  }
  return {alpha, beta};
}

template <class R>
class Homography {
public:
  using Mat = std::array<std::array<R, 3>, 3>;

  explicit Homography(Mat m) : m_(std::move(m)) {
    R d = det3(m_[0], m_[1], m_[2]);
    bool zero;
    if constexpr (ring<R>::exact) zero = d.is_zero();
    else zero = (d == 0);
    if (zero) fail(errc::singular_matrix, "homography matrix is singular");
  }

  static Homography identity() {
    return Homography(Mat{{{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}}});
  }

  const Mat& matrix() const { return m_; }

  Pt2<R> operator()(const Pt2<R>& p) const {
    const auto& x = p.coords();
    return Pt2<R>(m_[0][0] * x[0] + m_[0][1] * x[1] + m_[0][2] * x[2],
                  m_[1][0] * x[0] + m_[1][1] * x[1] + m_[1][2] * x[2],
                  m_[2][0] * x[0] + m_[2][1] * x[1] + m_[2][2] * x[2]);
  }

  // Lines transform by the adjugate transpose, so incidence is preserved.
  Ln2<R> operator()(const Ln2<R>& l) const {
    Mat a = adjugate();
    const auto& x = l.coords();
    return Ln2<R>(a[0][0] * x[0] + a[1][0] * x[1] + a[2][0] * x[2],
                  a[0][1] * x[0] + a[1][1] * x[1] + a[2][1] * x[2],
                  a[0][2] * x[0] + a[1][2] * x[1] + a[2][2] * x[2]);
  }

  Homography inverse() const { return Homography(adjugate()); }

  friend Homography operator*(const Homography& a, const Homography& b) {
    Mat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
    return Homography(r);
  }

private:
  Mat adjugate() const {
    Mat a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        // adj(m)[j][i] is the cofactor of m[i][j]
        a[j][i] = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
      }
    return a;
  }

  Mat m_;
};

template <class R>
Pt2<R> apply_homography(const Homography<R>& h, const Pt2<R>& p) {
  return h(p);
}

template <class R>
Ln2<R> apply_homography(const Homography<R>& h, const Ln2<R>& l) {
  return h(l);
}

// Cross-ratio (a, b ; c, d) of four collinear points, via coordinates on a
// basis pair chosen among the inputs.  With affine parameters t on the line
// this evaluates to ((c-a)(d-b)) / ((c-b)(d-a)).
template <class R>
R cross_ratio(const Pt2<R>& a, const Pt2<R>& b, const Pt2<R>& c, const Pt2<R>& d,
              const Tol& tol = Tol()) {
  std::array<const Pt2<R>*, 4> pts = {&a, &b, &c, &d};
  const Pt2<R>* P = nullptr;
  const Pt2<R>* Q = nullptr;
  if constexpr (ring<R>::exact) {
    for (int i = 0; i < 4 && !Q; ++i)
      for (int j = i + 1; j < 4 && !Q; ++j)
        if (*pts[i] != *pts[j]) { P = pts[i]; Q = pts[j]; }
  } else {
    double best = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto cr = cross3(pts[i]->coords(), pts[j]->coords());
        double m = std::max({std::abs(cr[0]), std::abs(cr[1]), std::abs(cr[2])});
        if (m > best) { best = m; P = pts[i]; Q = pts[j]; }
      }
  }
  if (!Q) fail(errc::degenerate_quadruple, "all four points coincide");
  Ln2<R> l = join(*P, *Q);
  for (const Pt2<R>* p : pts)
    if (!incident(*p, l, tol)) fail(errc::not_collinear, "cross-ratio of non-collinear points");
  std::array<std::pair<R, R>, 4> par;
  for (int i = 0; i < 4; ++i) par[i] = coords_on_basis(*P, *Q, *pts[i], tol);
  auto m = [&](int i, int j) {
    return par[i].first * par[j].second - par[j].first * par[i].second;
  };
  R num = m(0, 2) * m(1, 3);
  R den = m(1, 2) * m(0, 3);
  bool den_zero;
  if constexpr (ring<R>::exact) den_zero = den.is_zero();
  else den_zero = (den == 0);
  if (den_zero) fail(errc::degenerate_quadruple, "cross-ratio denominator vanishes");
  return num / den;
}

// Involution on a line, stored as the symmetric bilinear form
//   f(x, y) = A ax ay + B (ax by + bx ay) + C bx by
// on coordinates over a fixed basis (p, q) of the line.  Pairs (x, y) of the
// involution are exactly the zeros of f, and the induced parameter map has
// matrix [[-B, -C], [A, B]], whose square is (B^2 - A C) times the identity:
// the map is an involution by construction.
template <class R>
class Involution {
public:
  Involution(Pt2<R> p, Pt2<R> q, R A, R B, R C)
      : p_(std::move(p)), q_(std::move(q)), A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    if (p_ == q_) fail(errc::coincident_points, "involution basis points coincide");
    std::array<R, 3> f = {A_, B_, C_};
    if (tuple_is_exact_zero(f)) fail(errc::degenerate_pairs, "involution form is zero");
    canon_tuple(f);
    A_ = f[0]; B_ = f[1]; C_ = f[2];
    R disc = B_ * B_ - A_ * C_;
    bool zero;
    if constexpr (ring<R>::exact) zero = disc.is_zero();
    else zero = (disc == 0);
    if (zero) fail(errc::degenerate_pairs, "form is a perfect square; map is not invertible");
  }

  const Pt2<R>& basis_p() const { return p_; }
  const Pt2<R>& basis_q() const { return q_; }
  Ln2<R> axis() const { return join(p_, q_); }
  std::array<R, 3> form() const { return {A_, B_, C_}; }

  // Parameter-space matrix, acting on column vectors (alpha, beta).
  std::array<std::array<R, 2>, 2> matrix() const {
    return {{{-B_, -C_}, {A_, B_}}};
  }

  // f(x, y) on basis coordinates; zero exactly when x and y are mates.
  R pairing_form(const Pt2<R>& x, const Pt2<R>& y, const Tol& tol = Tol()) const {
    auto [ax, bx] = coords_on_basis(p_, q_, x, tol);
    auto [ay, by] = coords_on_basis(p_, q_, y, tol);
    return A_ * ax * ay + B_ * (ax * by + bx * ay) + C_ * bx * by;
  }

private:
  Pt2<R> p_, q_;
  R A_, B_, C_;
};

template <class R>
Involution<R> involution_from_pairs(const std::pair<Pt2<R>, Pt2<R>>& pair1,
                                    const std::pair<Pt2<R>, Pt2<R>>& pair2,
                                    const Tol& tol = Tol()) {
  std::array<const Pt2<R>*, 4> pts = {&pair1.first, &pair1.second, &pair2.first, &pair2.second};
  const Pt2<R>* P = nullptr;
  const Pt2<R>* Q = nullptr;
  for (int i = 0; i < 4 && !Q; ++i)
    for (int j = i + 1; j < 4 && !Q; ++j)
      if (*pts[i] != *pts[j]) { P = pts[i]; Q = pts[j]; }
  if (!Q) fail(errc::degenerate_pairs, "all four points coincide");
  Ln2<R> l = join(*P, *Q);
  for (const Pt2<R>* p : pts)
    if (!incident(*p, l, tol)) fail(errc::not_collinear, "pair points are not collinear");
  auto row = [&](const Pt2<R>& u, const Pt2<R>& v) -> std::array<R, 3> {
    auto [au, bu] = coords_on_basis(*P, *Q, u, tol);
    auto [av, bv] = coords_on_basis(*P, *Q, v, tol);
    return {au * av, au * bv + bu * av, bu * bv};
  };
  auto r1 = row(pair1.first, pair1.second);
  auto r2 = row(pair2.first, pair2.second);
  auto f = cross3(r1, r2);
  if (tuple_is_exact_zero(f))
    fail(errc::degenerate_pairs, "the two pairs do not determine a unique involution");
  return Involution<R>(*P, *Q, f[0], f[1], f[2]);
}

template <class R>
Pt2<R> apply_involution(const Involution<R>& inv, const Pt2<R>& x, const Tol& tol = Tol()) {
  auto [alpha, beta] = coords_on_basis(inv.basis_p(), inv.basis_q(), x, tol);
  auto f = inv.form();
  const R& A = f[0];
  const R& B = f[1];
  const R& C = f[2];
  R a2 = -(B * alpha + C * beta);
  R b2 = A * alpha + B * beta;
  return combine(a2, inv.basis_p(), b2, inv.basis_q());
}

}  // namespace epure
