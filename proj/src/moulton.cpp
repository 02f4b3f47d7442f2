#include "epure/moulton.hpp"

#include <algorithm>
#include <utility>

namespace epure::moulton {

bool m_incident(const MLine& l, const MPoint& p) {
  if (l.kind() == MLine::Kind::vertical) return p.x == l.c();
  return p.y == m_eval(l, p.x);
}

Rat m_eval(const MLine& l, const Rat& x) {
  if (l.kind() == MLine::Kind::vertical)
    fail(errc::evaluation_error, "a vertical line has no height function");
  if (l.m().sign() < 0 && x.sign() > 0) return l.right_slope() * x + l.b();
  return l.m() * x + l.b();
}

MLine m_line_through(const MPoint& p_in, const MPoint& q_in) {
  if (p_in == q_in) fail(errc::coincident_points, "no unique line through a repeated point");
  MPoint p = p_in, q = q_in;
  if (q.x < p.x) std::swap(p, q);
  if (p.x == q.x) return MLine::vertical(p.x);
  Rat dy = q.y - p.y;
  if (dy.is_zero()) return MLine::bent(Rat(0), p.y);
  if (q.x.sign() <= 0) {
    // Both points on the closed left half-plane: the left formula rules.
    Rat s = dy / (q.x - p.x);
    return MLine::bent(s, p.y - s * p.x);
  }
  if (p.x.sign() >= 0) {
    // Both points on the closed right half-plane.
    Rat s = dy / (q.x - p.x);
    if (s.sign() >= 0) return MLine::bent(s, p.y - s * p.x);
    // Descending: the right piece has slope 2m, so the nominal slope halves.
    return MLine::bent(s / Rat(2), p.y - s * p.x);
  }
  // Straddling pair, p strictly left, q strictly right.
  if (dy.sign() > 0) {
    // Ascending lines never bend.
    Rat s = dy / (q.x - p.x);
    return MLine::bent(s, p.y - s * p.x);
  }
  // Descending across the axis: solve y_p = m x_p + b, y_q = 2 m x_q + b.
  Rat m = dy / (Rat(2) * q.x - p.x);
  return MLine::bent(m, p.y - m * p.x);
}

std::vector<MLine> m_lines_through(const MPoint& p_in, const MPoint& q_in) {
  if (p_in == q_in) fail(errc::coincident_points, "no unique line through a repeated point");
  MPoint p = p_in, q = q_in;
  if (q.x < p.x) std::swap(p, q);
  std::vector<MLine> candidates;
  if (p.x == q.x) {
    candidates.push_back(MLine::vertical(p.x));
  } else {
    Rat dx = q.x - p.x;
    Rat dy = q.y - p.y;
    Rat s = dy / dx;
    candidates.push_back(MLine::bent(s, p.y - s * p.x));          // straight
    candidates.push_back(MLine::bent(s / Rat(2), p.y - s * p.x)); // both-right refit
    Rat den = Rat(2) * q.x - p.x;
    if (!den.is_zero()) {
      Rat m = dy / den;  // straddling refraction
      candidates.push_back(MLine::bent(m, p.y - m * p.x));
    }
  }
  std::vector<MLine> valid;
  for (const MLine& l : candidates) {
    if (!m_incident(l, p_in) || !m_incident(l, q_in)) continue;
    if (std::find(valid.begin(), valid.end(), l) == valid.end()) valid.push_back(l);
  }
  return valid;
}

std::vector<MPoint> m_meets_of(const MLine& l1, const MLine& l2) {
  if (l1 == l2) fail(errc::coincident_lines, "meet of a line with itself is not a point");
  std::vector<MPoint> pts;
  auto push = [&](const MPoint& p) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  };
  bool v1 = l1.kind() == MLine::Kind::vertical;
  bool v2 = l2.kind() == MLine::Kind::vertical;
  if (v1 && v2) return pts;  // distinct parallels
  if (v1 || v2) {
    const MLine& vert = v1 ? l1 : l2;
    const MLine& bent = v1 ? l2 : l1;
    push(MPoint{vert.c(), m_eval(bent, vert.c())});
    return pts;
  }
  // Left pieces.
  if (l1.m() != l2.m()) {
    Rat x = (l2.b() - l1.b()) / (l1.m() - l2.m());
    if (x.sign() <= 0) push(MPoint{x, l1.m() * x + l1.b()});
  }
  // Right pieces.
  Rat r1 = l1.right_slope(), r2 = l2.right_slope();
  if (r1 != r2) {
    Rat x = (l2.b() - l1.b()) / (r1 - r2);
    if (x.sign() >= 0) push(MPoint{x, r1 * x + l1.b()});
  }
  return pts;
}

std::optional<MPoint> m_meet(const MLine& l1, const MLine& l2) {
  std::vector<MPoint> pts = m_meets_of(l1, l2);
  if (pts.empty()) return std::nullopt;
  if (pts.size() > 1)
    fail(errc::invalid_incidence, "two distinct lines met in more than one point");
  return pts.front();
}

bool m_collinear(const MPoint& p, const MPoint& q, const MPoint& r) {
  if (p == q || p == r || q == r) return true;
  return m_incident(m_line_through(p, q), r);
}

Pt2<Rat> to_projective(const MPoint& p) { return Pt2<Rat>::affine(p.x, p.y); }

namespace {

Rat euclid_defect(const MPoint& a, const MPoint& b, const MPoint& c) {
  Rat det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  return abs(det);
}

struct SideData {
  MLine line;
  MPoint p, q;
  SideData(const MPoint& p_, const MPoint& q_) : line(m_line_through(p_, q_)), p(p_), q(q_) {}
};

// One side must cross the axis descending -- that is where the plane bends
// and the alignment breaks.
bool has_bent_crossing(const std::array<SideData, 6>& sides) {
  for (const SideData& s : sides) {
    if (s.line.kind() != MLine::Kind::bent || s.line.m().sign() >= 0) continue;
    if ((s.p.x.sign() < 0 && s.q.x.sign() > 0) || (s.p.x.sign() > 0 && s.q.x.sign() < 0))
      return true;
  }
  return false;
}

struct Examined {
  bool ok = false;
  FailureWitness w;
};

Examined examine(const MPoint& A, const MPoint& B, const MPoint& C, const MPoint& A2,
                 const MPoint& B2, const MPoint& C2, const MPoint& O, const Rat& box) {
  Examined out;
  std::array<MPoint, 6> pts = {A, B, C, A2, B2, C2};
  for (const MPoint& p : pts)
    if (abs(p.x) > box || abs(p.y) > box) return out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (pts[i] == pts[j]) return out;
  for (const MPoint& p : pts)
    if (p == O) return out;

  // Perspective hypothesis, exactly.
  MLine sA = m_line_through(A, A2);
  MLine sB = m_line_through(B, B2);
  MLine sC = m_line_through(C, C2);
  if (sA == sB || sB == sC || sA == sC) return out;
  if (!m_incident(sA, O) || !m_incident(sB, O) || !m_incident(sC, O)) return out;

  // Nondegenerate triangles in both geometries.
  if (m_collinear(A, B, C) || m_collinear(A2, B2, C2)) return out;
  if (euclid_defect(A, B, C).is_zero() || euclid_defect(A2, B2, C2).is_zero()) return out;

  std::array<SideData, 6> sides = {SideData(B, C),  SideData(B2, C2), SideData(C, A),
                                   SideData(C2, A2), SideData(A, B),  SideData(A2, B2)};
  for (int i = 0; i < 3; ++i)
    if (sides[2 * i].line == sides[2 * i + 1].line) return out;

  std::array<MPoint, 3> meets;
  for (int i = 0; i < 3; ++i) {
    auto m = m_meet(sides[2 * i].line, sides[2 * i + 1].line);
    if (!m) return out;
    meets[i] = *m;
  }
  if (meets[0] == meets[1] || meets[0] == meets[2] || meets[1] == meets[2]) return out;
  if (m_collinear(meets[0], meets[1], meets[2])) return out;

  // The very same six points obey the alignment when all lines are read as
  // straight lines; the bend alone is to blame.
  std::array<Pt2<Rat>, 3> emeets;
  for (int i = 0; i < 3; ++i) {
    Ln2<Rat> s1 = join(to_projective(sides[2 * i].p), to_projective(sides[2 * i].q));
    Ln2<Rat> s2 = join(to_projective(sides[2 * i + 1].p), to_projective(sides[2 * i + 1].q));
    if (s1 == s2) return out;
    emeets[i] = meet(s1, s2);
  }
  if (!collinear(emeets[0], emeets[1], emeets[2])) return out;

  Rat defect = euclid_defect(meets[0], meets[1], meets[2]);
  if (defect.is_zero()) return out;
  if (!has_bent_crossing(sides)) return out;

  out.ok = true;
  out.w = FailureWitness{pts, O, meets, defect};
  return out;
}

}  // namespace

bool verify_failure(const FailureWitness& w) {
  try {
    Examined e = examine(w.points[0], w.points[1], w.points[2], w.points[3], w.points[4],
                         w.points[5], w.center, Rat(1000000));
    if (!e.ok) return false;
    for (int i = 0; i < 3; ++i)
      if (e.w.side_meets[i] != w.side_meets[i]) return false;
    return e.w.collinearity_defect == w.collinearity_defect;
  } catch (const Error&) {
    return false;
  }
}

FailureWitness find_desargues_failure(const Rat& box, long long budget) {
  // Family: center O = (0, q) on the bending axis.  One spoke ascends with
  // slope pa (straight, carrying A and A' on the left), one descends with
  // slope mb (bent, carrying B and B' on the right piece), one is the axis
  // itself (carrying C and C').  Every incidence of the hypothesis then
  // holds on a single straight piece, so the companion straight-line
  // configuration is perspective from O as well.
  const std::array<Rat, 3> qs = {Rat(3), Rat(2), Rat(4)};
  const std::array<Rat, 4> pas = {Rat(2), Rat(1), Rat(3), Rat(1, 2)};
  const std::array<Rat, 4> mbs = {Rat(-1), Rat(-1, 2), Rat(-3, 2), Rat(-2)};
  const std::array<Rat, 4> ts = {Rat(1), Rat(3, 2), Rat(2), Rat(1, 2)};
  const std::array<Rat, 4> bs = {Rat(1), Rat(2), Rat(3, 2), Rat(3)};
  const std::array<Rat, 4> cs = {Rat(0), Rat(-2), Rat(-1), Rat(1)};

  for (const Rat& q : qs)
    for (const Rat& pa : pas)
      for (const Rat& mb : mbs)
        for (const Rat& a : ts)
          for (const Rat& a2 : ts) {
            if (a == a2) continue;
            for (const Rat& b : bs)
              for (const Rat& b2 : bs) {
                if (b == b2) continue;
                for (const Rat& c : cs)
                  for (const Rat& c2 : cs) {
                    if (c == c2 || c == q || c2 == q) continue;
                    if (budget <= 0)
                      fail(errc::budget_exhausted, "no witness found within the budget");
                    --budget;
                    MPoint O{Rat(0), q};
                    MPoint A{-a, q - pa * a};
                    MPoint A2{-a2, q - pa * a2};
                    MPoint B{b, q + Rat(2) * mb * b};
                    MPoint B2{b2, q + Rat(2) * mb * b2};
                    MPoint C{Rat(0), c};
                    MPoint C2{Rat(0), c2};
                    Examined e = examine(A, B, C, A2, B2, C2, O, box);
                    if (e.ok) return e.w;
                  }
              }
          }
  fail(errc::budget_exhausted, "search grid exhausted without a witness");
}

}  // namespace epure::moulton
