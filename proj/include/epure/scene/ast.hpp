#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "epure/error.hpp"
#include "epure/rational.hpp"

namespace epure::scene {

// Position of a token in the source text; columns count from 1 and point at
// the first character of the offending region (one past the end of the line
// when the line stops short).
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;
};

// A parse failure pinned to a source position.
class ParseError : public Error {
public:
  ParseError(SourceSpan span, const std::string& expected)
      : Error(errc::parse_error, "line " + std::to_string(span.line) + ", column " +
                                     std::to_string(span.column) + ": " + expected),
        span_(span), expected_(expected) {}

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }

private:
  SourceSpan span_;
  std::string expected_;
};

// An evaluation failure pinned to the statement that raised it.
class EvalError : public Error {
public:
  EvalError(SourceSpan span, const std::string& detail)
      : Error(errc::evaluation_error, "line " + std::to_string(span.line) + ", column " +
                                          std::to_string(span.column) + ": " + detail),
        span_(span) {}

  const SourceSpan& span() const { return span_; }

private:
  SourceSpan span_;
};

// Name reference to an earlier declaration.
struct Ref {
  std::string name;
  SourceSpan span;
  friend bool operator==(const Ref& a, const Ref& b) { return a.name == b.name; }
};

enum class PointRule { coords, homogeneous, meet_lines };

struct PointDecl {
  std::string name;
  PointRule rule = PointRule::coords;
  std::array<Rat, 3> nums{};  // coords: x, y; homogeneous: u, v, w
  Ref a, b;                   // meet_lines: the two line operands
  friend bool operator==(const PointDecl& x, const PointDecl& y) {
    return x.name == y.name && x.rule == y.rule && x.nums == y.nums && x.a == y.a && x.b == y.b;
  }
};

enum class LineRule { join_points, vertical, homogeneous };

struct LineDecl {
  std::string name;
  LineRule rule = LineRule::join_points;
  std::array<Rat, 3> nums{};  // vertical: c; homogeneous: u, v, w
  Ref a, b;                   // join: the two point operands
  friend bool operator==(const LineDecl& x, const LineDecl& y) {
    return x.name == y.name && x.rule == y.rule && x.nums == y.nums && x.a == y.a && x.b == y.b;
  }
};

struct CircleDecl {
  std::string name;
  Rat cx, cy, r;
  friend bool operator==(const CircleDecl& x, const CircleDecl& y) {
    return x.name == y.name && x.cx == y.cx && x.cy == y.cy && x.r == y.r;
  }
};

struct ConicDecl {
  std::string name;
  std::array<Ref, 5> through;
  friend bool operator==(const ConicDecl& x, const ConicDecl& y) {
    return x.name == y.name && x.through == y.through;
  }
};

// complete section carriers=[...] first=[A,B,C,D] second=[A',B',C'] as D'
struct CompleteSectionDecl {
  std::array<Ref, 4> carriers;
  std::array<Ref, 4> first;
  std::array<Ref, 3> second;
  std::string result;
  friend bool operator==(const CompleteSectionDecl& x, const CompleteSectionDecl& y) {
    return x.carriers == y.carriers && x.first == y.first && x.second == y.second &&
           x.result == y.result;
  }
};

enum class CheckKind { desargues, converse, involution, example1, section, moulton_witness };

enum class PairingMode { matched, crossed, near_near, far_far, near_far, far_near };

const char* pairing_mode_name(PairingMode m);

struct CheckStmt {
  CheckKind kind = CheckKind::desargues;
  std::vector<Ref> args;        // desargues/converse: 6 points; involution: 4 points + line
  Ref c1, c2;                   // example1 circles
  PairingMode pairing = PairingMode::crossed;
  std::vector<Ref> secants;     // example1
  std::array<Ref, 4> carriers;  // section
  std::array<Ref, 4> first;
  std::array<Ref, 4> second;
  long long budget = 0;         // moulton witness
  Rat box;
  friend bool operator==(const CheckStmt& x, const CheckStmt& y) {
    return x.kind == y.kind && x.args == y.args && x.c1 == y.c1 && x.c2 == y.c2 &&
           x.pairing == y.pairing && x.secants == y.secants && x.carriers == y.carriers &&
           x.first == y.first && x.second == y.second && x.budget == y.budget && x.box == y.box;
  }
};

struct RenderStmt {
  std::string file;
  std::array<Rat, 4> viewport{};  // xmin, ymin, xmax, ymax
  friend bool operator==(const RenderStmt& x, const RenderStmt& y) {
    return x.file == y.file && x.viewport == y.viewport;
  }
};

struct Stmt {
  SourceSpan span;
  std::variant<PointDecl, LineDecl, CircleDecl, ConicDecl, CompleteSectionDecl, CheckStmt,
               RenderStmt>
      node;
  friend bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }
};

struct Scene {
  std::vector<Stmt> stmts;
  friend bool operator==(const Scene& a, const Scene& b) { return a.stmts == b.stmts; }
};

}  // namespace epure::scene
