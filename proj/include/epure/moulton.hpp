#pragma once

#include <array>
#include <optional>
#include <vector>

#include "epure/error.hpp"
#include "epure/p2.hpp"
#include "epure/rational.hpp"

namespace epure::moulton {

// Affine plane with refracted lines: lines of non-negative slope and
// vertical lines are ordinary, lines of negative slope double their slope
// when crossing to the right half-plane.  Incidence is exact over the
// rationals.  The plane satisfies the incidence axioms but not the
// ten-point alignment theorem, and this module exhibits a witness.

struct MPoint {
  Rat x, y;
  bool operator==(const MPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const MPoint& o) const { return !(*this == o); }
};

class MLine {
 public:
  enum class Kind { vertical, bent };

  static MLine vertical(const Rat& c) {
    MLine l;
    l.kind_ = Kind::vertical;
    l.c_ = c;
    return l;
  }
  // y = m x + b on the left half-plane; slope doubles to 2m on the right
  // half-plane when m < 0, otherwise the line is straight everywhere.
  static MLine bent(const Rat& slope, const Rat& intercept) {
    MLine l;
    l.kind_ = Kind::bent;
    l.m_ = slope;
    l.b_ = intercept;
    return l;
  }

  Kind kind() const { return kind_; }
  const Rat& c() const { return c_; }
  const Rat& m() const { return m_; }
  const Rat& b() const { return b_; }
  // Effective slope on the right half-plane.
  Rat right_slope() const { return m_.sign() < 0 ? Rat(2) * m_ : m_; }

  bool operator==(const MLine& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::vertical) return c_ == o.c_;
    return m_ == o.m_ && b_ == o.b_;
  }
  bool operator!=(const MLine& o) const { return !(*this == o); }

 private:
  MLine() = default;
  Kind kind_ = Kind::vertical;
  Rat c_, m_, b_;
};

bool m_incident(const MLine& l, const MPoint& p);

// Height of a bent line over abscissa x (undefined for vertical lines).
Rat m_eval(const MLine& l, const Rat& x);

// The unique line through two distinct points.
MLine m_line_through(const MPoint& p, const MPoint& q);

// Every line of the plane passing through both points (used to audit
// uniqueness); for distinct points this must be a single line.
std::vector<MLine> m_lines_through(const MPoint& p, const MPoint& q);

// Meet of two distinct lines: at most one point, possibly none (parallels).
std::optional<MPoint> m_meet(const MLine& l1, const MLine& l2);

// Every common point of two distinct lines (used to audit the at-most-one
// meet property).
std::vector<MPoint> m_meets_of(const MLine& l1, const MLine& l2);

bool m_collinear(const MPoint& p, const MPoint& q, const MPoint& r);

Pt2<Rat> to_projective(const MPoint& p);

// A ten-point configuration breaking the alignment conclusion: two
// triangles in perspective from a center, with the three side meets not
// lying on any line of the bent plane.  The same six points, read with
// straight lines, do satisfy the alignment (the defect measures how far
// the bent meets are from straight-collinear).
struct FailureWitness {
  std::array<MPoint, 6> points;       // A, B, C, A', B', C'
  MPoint center;
  std::array<MPoint, 3> side_meets;   // BC^B'C', CA^C'A', AB^A'B'
  Rat collinearity_defect;            // |det| of the three meets, affine rows
};

// Recheck every claim of the witness from scratch; false on any failure.
bool verify_failure(const FailureWitness& w);

// Deterministic search over a rational grid inside [-box, box]^2 for the
// six triangle points.  Each examined configuration consumes one unit of
// budget; throws BudgetExhausted when no witness fits.
FailureWitness find_desargues_failure(const Rat& box, long long budget);

}  // namespace epure::moulton
