#pragma once

#include <optional>

#include "epure/p2.hpp"

namespace epure {

// Shared scaffolding for two triangles A B C and A' B' C' joined vertex to
// vertex.  Spokes are the joins A A', B B', C C'; sides are listed opposite
// the vertex (B C, C A, A B); meets pair each side with its primed partner.
template <class R>
struct PerspectiveFrame {
  std::array<Ln2<R>, 3> spokes;
  std::optional<Pt2<R>> center;
  bool hypothesis = false;
  std::array<Ln2<R>, 3> sides;
  std::array<Ln2<R>, 3> sides_primed;
  std::array<Pt2<R>, 3> meets;
  std::optional<Ln2<R>> axis;
  bool conclusion = false;
};

template <class R>
PerspectiveFrame<R> perspective_frame(const Pt2<R>& A, const Pt2<R>& B, const Pt2<R>& C,
                                      const Pt2<R>& A2, const Pt2<R>& B2, const Pt2<R>& C2,
                                      const Tol& tol = Tol()) {
  if (collinear(A, B, C, tol)) fail(errc::degenerate_triangle, "A, B, C are collinear");
  if (collinear(A2, B2, C2, tol)) fail(errc::degenerate_triangle, "A', B', C' are collinear");
  if (A == A2 || B == B2 || C == C2)
    fail(errc::coincident_points, "a vertex coincides with its primed partner");

  PerspectiveFrame<R> f;
  f.spokes = {join(A, A2), join(B, B2), join(C, C2)};
  f.sides = {join(B, C), join(C, A), join(A, B)};
  f.sides_primed = {join(B2, C2), join(C2, A2), join(A2, B2)};
  for (int i = 0; i < 3; ++i)
    if (f.sides[i] == f.sides_primed[i])
      fail(errc::coincident_sides, "a side coincides with its primed partner");

  f.hypothesis = concurrent(f.spokes[0], f.spokes[1], f.spokes[2], tol);
  if (f.hypothesis) {
    // Two spokes are always distinct here: three equal spokes would force
    // all six vertices onto one line, excluded above.
    if (f.spokes[0] != f.spokes[1])
      f.center = meet(f.spokes[0], f.spokes[1]);
    else
      f.center = meet(f.spokes[0], f.spokes[2]);
  }

  for (int i = 0; i < 3; ++i) f.meets[i] = meet(f.sides[i], f.sides_primed[i]);
  f.conclusion = collinear(f.meets[0], f.meets[1], f.meets[2], tol);
  for (int i = 0; i < 3 && !f.axis; ++i)
    for (int j = i + 1; j < 3 && !f.axis; ++j)
      if (f.meets[i] != f.meets[j]) f.axis = join(f.meets[i], f.meets[j]);
  return f;
}

}  // namespace epure
