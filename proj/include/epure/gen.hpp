#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "epure/conic.hpp"
#include "epure/moulton.hpp"
#include "epure/p3.hpp"
#include "epure/theorems.hpp"

// Seeded, platform-stable random instance generators.  All draws go through
// Rng::in so the stream depends only on the mt19937_64 sequence, never on
// library distribution internals.

namespace epure::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long long in(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

inline Rat rnd_rat(Rng& r, long long maxnum = 9, long long maxden = 4) {
  return Rat(BigInt(r.in(-maxnum, maxnum)), BigInt(r.in(1, maxden)));
}

inline Rat rnd_nonzero_rat(Rng& r, long long maxnum = 9, long long maxden = 4) {
  for (;;) {
    Rat v = rnd_rat(r, maxnum, maxden);
    if (!v.is_zero()) return v;
  }
}

inline Pt2<Rat> rnd_affine_point(Rng& r, long long range = 9) {
  return Pt2<Rat>::affine(rnd_rat(r, range), rnd_rat(r, range));
}

// ---------------------------------------------------------------------------
// Concurrent-spoke configurations (hypothesis of the forward alignment).

struct PerspectiveConfig {
  std::array<Pt2<Rat>, 6> pts;  // A B C A' B' C'
  Pt2<Rat> center;
  bool forced_infinite_meet = false;
};

inline PerspectiveConfig rnd_perspective(Rng& r, bool force_infinite_meet = false) {
  for (;;) {
    try {
      Pt2<Rat> O = rnd_affine_point(r, 5);
      std::array<std::pair<Rat, Rat>, 3> dirs;
      for (auto& d : dirs) {
        d = {rnd_rat(r, 4), rnd_rat(r, 4)};
        if (d.first.is_zero() && d.second.is_zero()) d.first = Rat(1);
      }
      auto on_spoke = [&](int i, const Rat& t) {
        return Pt2<Rat>::affine(O.ax() + t * dirs[i].first, O.ay() + t * dirs[i].second);
      };
      Rat ta = rnd_nonzero_rat(r, 5), ta2 = rnd_nonzero_rat(r, 5);
      Rat tb = rnd_nonzero_rat(r, 5), tb2 = rnd_nonzero_rat(r, 5);
      Rat tc = rnd_nonzero_rat(r, 5), tc2 = rnd_nonzero_rat(r, 5);
      if (ta == ta2 || tb == tb2 || tc == tc2) continue;
      Pt2<Rat> A = on_spoke(0, ta), A2 = on_spoke(0, ta2);
      Pt2<Rat> B = on_spoke(1, tb), B2 = on_spoke(1, tb2);
      Pt2<Rat> C = on_spoke(2, tc), C2 = on_spoke(2, tc2);
      if (force_infinite_meet) {
        // Rebuild B' as the spoke meet with the parallel through A' to AB,
        // pushing the first side meet onto the line at infinity.
        Rat dx = B.ax() - A.ax(), dy = B.ay() - A.ay();
        Pt2<Rat> ideal = Pt2<Rat>::at_infinity(dx, dy);
        Ln2<Rat> par = join(A2, ideal);
        Ln2<Rat> spoke = join(O, B);
        if (par == spoke) continue;
        B2 = meet(par, spoke);
        if (B2.infinite() || B2 == B || B2 == O) continue;
      }
      PerspectiveFrame<Rat> f = perspective_frame(A, B, C, A2, B2, C2);
      if (!f.hypothesis || !f.axis) continue;
      if (force_infinite_meet && !f.meets[2].infinite()) continue;
      return PerspectiveConfig{{A, B, C, A2, B2, C2}, O, force_infinite_meet};
    } catch (const Error&) {
      continue;
    }
  }
}

// ---------------------------------------------------------------------------
// Aligned-meet configurations (hypothesis of the converse alignment).

struct AxialConfig {
  std::array<Pt2<Rat>, 6> pts;
  Ln2<Rat> axis;
};

inline AxialConfig rnd_axial(Rng& r) {
  for (;;) {
    try {
      Pt2<Rat> u = rnd_affine_point(r, 6), v = rnd_affine_point(r, 6);
      if (u == v) continue;
      Ln2<Rat> L = join(u, v);
      LineBasis<Rat> lb = line_basis(L);
      auto on_axis = [&](const Rat& t) { return combine(Rat(1), lb.p0, t, lb.p1); };
      Rat t1 = rnd_rat(r, 6), t2 = rnd_rat(r, 6), t3 = rnd_rat(r, 6);
      if (t1 == t2 || t1 == t3 || t2 == t3) continue;
      Pt2<Rat> m1 = on_axis(t1), m2 = on_axis(t2), m3 = on_axis(t3);

      auto build_triangle = [&](Pt2<Rat>& X, Pt2<Rat>& Y, Pt2<Rat>& Z) -> bool {
        X = rnd_affine_point(r, 7);
        if (incident(X, L)) return false;
        if (X == m3) return false;
        Ln2<Rat> xy = join(X, m3);
        LineBasis<Rat> xb = line_basis(xy);
        Y = combine(Rat(1), xb.p0, rnd_rat(r, 7), xb.p1);
        if (Y == X || incident(Y, L)) return false;
        Ln2<Rat> yz = join(Y, m1);
        Ln2<Rat> zx = join(X, m2);
        if (yz == zx) return false;
        Z = meet(yz, zx);
        if (Z == X || Z == Y || incident(Z, L)) return false;
        return true;
      };
      Pt2<Rat> A, B, C, A2, B2, C2;
      if (!build_triangle(A, B, C) || !build_triangle(A2, B2, C2)) continue;
      PerspectiveFrame<Rat> f = perspective_frame(A, B, C, A2, B2, C2);
      if (!f.conclusion || !f.axis) continue;
      return AxialConfig{{A, B, C, A2, B2, C2}, L};
    } catch (const Error&) {
      continue;
    }
  }
}

// ---------------------------------------------------------------------------
// Circle pairs, rational circle points, and apex secants.

inline Pt2<Rat> rnd_circle_point(Rng& r, const Pt2<Rat>& center, const Rat& radius) {
  // Rational parametrization of the circle; t sweeps all points but the
  // leftmost one.
  Rat t = rnd_rat(r, 9, 5);
  Rat t2 = t * t;
  Rat den = Rat(1) + t2;
  return Pt2<Rat>::affine(center.ax() + radius * (Rat(1) - t2) / den,
                          center.ay() + radius * Rat(2) * t / den);
}

inline CirclePair<Rat> rnd_circle_pair(Rng& r) {
  for (;;) {
    try {
      Pt2<Rat> c1 = rnd_affine_point(r, 6);
      Pt2<Rat> c2 = rnd_affine_point(r, 6);
      Rat r1 = abs(rnd_nonzero_rat(r, 5, 3));
      Rat r2 = abs(rnd_nonzero_rat(r, 5, 3));
      return CirclePair<Rat>(c1, r1, c2, r2);
    } catch (const Error&) {
      continue;
    }
  }
}

// Secants through the apex hitting both circles in two rational points each.
inline std::vector<Ln2<Rat>> rnd_secants(Rng& r, const CirclePair<Rat>& cp, int count) {
  Pt2<Rat> apex = same_side_tangent_apex(cp);
  Conic<Rat> k1 = cp.conic1();
  std::vector<Ln2<Rat>> out;
  while (static_cast<int>(out.size()) < count) {
    try {
      Pt2<Rat> p = rnd_circle_point(r, cp.center1(), cp.radius1());
      if (p == apex) continue;
      Ln2<Rat> l = join(apex, p);
      MeetResult<Rat> m = line_conic_meet(k1, l);
      if (m.kind != MeetResult<Rat>::Kind::two_rational) continue;  // tangent draw
      bool dup = false;
      for (const Ln2<Rat>& seen : out) dup = dup || (seen == l);
      if (dup) continue;
      out.push_back(l);
    } catch (const Error&) {
      continue;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random invertible maps.

inline Homography<Rat> rnd_affine_map(Rng& r) {
  for (;;) {
    Rat a = rnd_rat(r, 5, 3), b = rnd_rat(r, 5, 3);
    Rat c = rnd_rat(r, 5, 3), d = rnd_rat(r, 5, 3);
    if ((a * d - b * c).is_zero()) continue;
    Rat e = rnd_rat(r, 5, 3), f = rnd_rat(r, 5, 3);
    std::array<std::array<Rat, 3>, 3> m = {{{a, b, e}, {c, d, f}, {Rat(0), Rat(0), Rat(1)}}};
    return Homography<Rat>(m);
  }
}

inline Homography<Rat> rnd_homography(Rng& r) {
  for (;;) {
    try {
      std::array<std::array<Rat, 3>, 3> m;
      for (auto& row : m)
        for (auto& x : row) x = rnd_rat(r, 5, 3);
      return Homography<Rat>(m);
    } catch (const Error&) {
      continue;
    }
  }
}

// ---------------------------------------------------------------------------
// Four-point bases and probe lines for the pencil involution.

struct PencilInstance {
  std::array<Pt2<Rat>, 4> base;
  Ln2<Rat> probe;
};

inline PencilInstance rnd_pencil(Rng& r) {
  for (;;) {
    try {
      std::array<Pt2<Rat>, 4> base;
      for (auto& p : base) p = rnd_affine_point(r, 7);
      bool bad = false;
      for (int i = 0; i < 4 && !bad; ++i)
        for (int j = i + 1; j < 4 && !bad; ++j)
          for (int k = j + 1; k < 4 && !bad; ++k)
            bad = collinear(base[i], base[j], base[k]);
      if (bad) continue;
      Pt2<Rat> u = rnd_affine_point(r, 9), v = rnd_affine_point(r, 9);
      if (u == v) continue;
      Ln2<Rat> probe = join(u, v);
      for (const auto& p : base) bad = bad || incident(p, probe);
      if (bad) continue;
      // The involution needs its first two pairs to determine it.
      std::array<std::pair<Pt2<Rat>, Pt2<Rat>>, 2> pairs;
      static constexpr int splits[2][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}};
      for (int s = 0; s < 2; ++s)
        pairs[s] = {meet(probe, join(base[splits[s][0]], base[splits[s][1]])),
                    meet(probe, join(base[splits[s][2]], base[splits[s][3]]))};
      (void)involution_from_pairs(pairs[0], pairs[1]);
      return PencilInstance{base, probe};
    } catch (const Error&) {
      continue;
    }
  }
}

// ---------------------------------------------------------------------------
// Folded sheets with four folds over distinct finite carriers, plus cutting
// planes, under the vertical drop onto the base plane.

struct SheetInstance {
  FoldedSheet<Rat> sheet;
  Projection<Rat> proj;
  std::array<Ln2<Rat>, 4> carriers;
};

inline Plane3<Rat> graph_plane(const Rat& u, const Rat& v, const Rat& w) {
  // z = u x + v y + w
  return Plane3<Rat>(-u, -v, Rat(1), -w);
}

inline SheetInstance rnd_sheet(Rng& r) {
  Projection<Rat> proj = Projection<Rat>::onto_base();
  for (;;) {
    try {
      std::array<std::array<Rat, 3>, 5> cf;
      for (auto& f : cf) f = {rnd_rat(r, 4, 2), rnd_rat(r, 4, 2), rnd_rat(r, 4, 2)};
      bool bad = false;
      for (int i = 0; i + 1 < 5 && !bad; ++i)
        bad = (cf[i][0] == cf[i + 1][0] && cf[i][1] == cf[i + 1][1]);
      if (bad) continue;
      std::vector<Plane3<Rat>> faces;
      for (const auto& f : cf) faces.push_back(graph_plane(f[0], f[1], f[2]));
      FoldedSheet<Rat> sheet = FoldedSheet<Rat>::from_faces(faces);
      std::array<Ln2<Rat>, 4> carriers;
      for (int i = 0; i < 4; ++i) {
        const Line3<Rat>& fold = sheet.folds()[i];
        carriers[i] = join(project(proj, fold.p()), project(proj, fold.q()));
      }
      for (int i = 0; i < 4 && !bad; ++i)
        for (int j = i + 1; j < 4 && !bad; ++j)
          bad = (carriers[i] == carriers[j]);
      if (bad) continue;
      return SheetInstance{std::move(sheet), proj, carriers};
    } catch (const Error&) {
      continue;
    }
  }
}

// A plane section of the sheet, pushed down to a quadruplet on the carriers.
inline SectionQuadruplet<Rat> rnd_section(Rng& r, const SheetInstance& si) {
  for (;;) {
    try {
      Plane3<Rat> cut = graph_plane(rnd_rat(r, 4, 2), rnd_rat(r, 4, 2), rnd_rat(r, 4, 2));
      bool bad = false;
      for (const Line3<Rat>& fold : si.sheet.folds())
        bad = bad || plane_contains_line(cut, fold);
      if (bad) continue;
      std::vector<Pt3<Rat>> pts = section_by_plane(si.sheet, cut);
      std::array<Pt2<Rat>, 4> flat;
      for (int i = 0; i < 4; ++i) flat[i] = project(si.proj, pts[i]);
      return SectionQuadruplet<Rat>(flat, si.carriers, true);
    } catch (const Error&) {
      continue;
    }
  }
}

// ---------------------------------------------------------------------------
// Random bent-plane points and lines.

inline moulton::MPoint rnd_mpoint(Rng& r) {
  return moulton::MPoint{rnd_rat(r, 8, 3), rnd_rat(r, 8, 3)};
}

inline moulton::MLine rnd_mline(Rng& r) {
  if (r.in(0, 4) == 0) return moulton::MLine::vertical(rnd_rat(r, 8, 3));
  return moulton::MLine::bent(rnd_rat(r, 6, 3), rnd_rat(r, 8, 3));
}

// ---------------------------------------------------------------------------
// Collinear quadruples for the cross-ratio.

struct CollinearQuad {
  std::array<Pt2<Rat>, 4> pts;
  std::array<Rat, 4> params;
};

inline CollinearQuad rnd_collinear_quad(Rng& r) {
  for (;;) {
    Pt2<Rat> u = rnd_affine_point(r, 6), v = rnd_affine_point(r, 6);
    if (u == v) continue;
    LineBasis<Rat> lb = line_basis(join(u, v));
    std::array<Rat, 4> t;
    bool bad = false;
    for (int i = 0; i < 4; ++i) {
      t[i] = rnd_rat(r, 9, 4);
      for (int j = 0; j < i; ++j) bad = bad || (t[i] == t[j]);
    }
    if (bad) continue;
    CollinearQuad q;
    q.params = t;
    for (int i = 0; i < 4; ++i) q.pts[i] = combine(Rat(1), lb.p0, t[i], lb.p1);
    return q;
  }
}

// ---------------------------------------------------------------------------
// Backend conversion helpers.

inline Pt2<double> to_approx(const Pt2<Rat>& p) {
  return Pt2<double>(p.x().to_double(), p.y().to_double(), p.z().to_double());
}

inline Ln2<double> to_approx(const Ln2<Rat>& l) {
  return Ln2<double>(l.u().to_double(), l.v().to_double(), l.w().to_double());
}

inline Conic<double> to_approx(const Conic<Rat>& c) {
  std::array<std::array<double, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = c.matrix()[i][j].to_double();
  return Conic<double>(m);
}

}  // namespace epure::gen
