#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "epure/conic.hpp"
#include "epure/moulton.hpp"
#include "epure/scene/ast.hpp"
#include "epure/theorems.hpp"

namespace epure::scene {

// Result of one `check` statement, in scene order.
struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// declared: named by the script.  derived: produced by a check or a
// completion.  emphasis: the load-bearing objects of a check (axes, fitted
// lines, aligned meets) that the figure should set apart.
enum class Style { declared, derived, emphasis };

template <class R>
struct DrawPoint {
  Pt2<R> p;
  std::string label;
  Style style = Style::declared;
};

template <class R>
struct DrawLine {
  Ln2<R> l;
  Style style = Style::declared;
};

template <class R>
struct DrawCircle {
  Pt2<R> center;
  R r;
  Style style = Style::declared;
};

template <class R>
struct DrawConic {
  Conic<R> conic;
  Pt2<R> seed;  // a point of the conic anchoring the slope parametrization
  Style style = Style::declared;
};

// Bent-plane lines keep exact coordinates regardless of the scene backend.
struct DrawMoultonLine {
  moulton::MLine l;
  Style style = Style::derived;
};

template <class R>
using DrawItem =
    std::variant<DrawPoint<R>, DrawLine<R>, DrawCircle<R>, DrawConic<R>, DrawMoultonLine>;

template <class R>
struct Evaluated {
  std::vector<CheckOutcome> outcomes;
  std::vector<DrawItem<R>> drawing;
  std::vector<RenderStmt> renders;
};

namespace detail {

template <class R>
struct CircleVal {
  Pt2<R> center;
  R r;
};

template <class R>
struct ConicVal {
  Conic<R> conic;
  std::array<Pt2<R>, 5> through;
};

template <class R>
using Value = std::variant<Pt2<R>, Ln2<R>, CircleVal<R>, ConicVal<R>>;

template <class R>
class Evaluator {
 public:
  explicit Evaluator(const Tol& tol) : tol_(tol) {}

  Evaluated<R> run(const Scene& s) {
    for (const Stmt& st : s.stmts) {
      try {
        std::visit([&](const auto& node) { eval(st, node); }, st.node);
      } catch (const EvalError&) {
        throw;
      } catch (const Error& e) {
        // Surface a construction/check failure at the statement that caused it.
        throw EvalError(st.span, e.what());
      }
    }
    return std::move(out_);
  }

 private:
  Tol tol_;
  std::map<std::string, Value<R>> env_;
  Evaluated<R> out_;

  static R num(const Rat& q) { return ring<R>::from(q); }

  void bind(const std::string& name, Value<R> v) { env_.insert_or_assign(name, std::move(v)); }

  const Value<R>& lookup(const Ref& r) const {
    auto it = env_.find(r.name);
    if (it == env_.end()) throw EvalError(r.span, "undefined name '" + r.name + "'");
    return it->second;
  }

  Pt2<R> point(const Ref& r) const {
    const Value<R>& v = lookup(r);
    if (const auto* p = std::get_if<Pt2<R>>(&v)) return *p;
    throw EvalError(r.span, "'" + r.name + "' is not a point");
  }

  Ln2<R> line(const Ref& r) const {
    const Value<R>& v = lookup(r);
    if (const auto* l = std::get_if<Ln2<R>>(&v)) return *l;
    throw EvalError(r.span, "'" + r.name + "' is not a line");
  }

  CircleVal<R> circle(const Ref& r) const {
    const Value<R>& v = lookup(r);
    if (const auto* c = std::get_if<CircleVal<R>>(&v)) return *c;
    throw EvalError(r.span, "'" + r.name + "' is not a circle");
  }

  template <std::size_t N>
  std::array<Pt2<R>, N> points(const std::array<Ref, N>& rs) const {
    std::array<Pt2<R>, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = point(rs[i]);
    return out;
  }

  template <std::size_t N>
  std::array<Ln2<R>, N> lines(const std::array<Ref, N>& rs) const {
    std::array<Ln2<R>, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = line(rs[i]);
    return out;
  }

  void draw(DrawItem<R> item) { out_.drawing.push_back(std::move(item)); }

  // ---- declarations --------------------------------------------------------

  void eval(const Stmt&, const PointDecl& d) {
    Pt2<R> p = [&] {
      switch (d.rule) {
        case PointRule::coords:
          return Pt2<R>::affine(num(d.nums[0]), num(d.nums[1]));
        case PointRule::homogeneous:
          return Pt2<R>(num(d.nums[0]), num(d.nums[1]), num(d.nums[2]));
        case PointRule::meet_lines:
        default: {
          Ln2<R> la = line(d.a);  // resolve in source order
          Ln2<R> lb = line(d.b);
          return meet(la, lb);
        }
      }
    }();
    bind(d.name, p);
    draw(DrawPoint<R>{p, d.name, Style::declared});
  }

  void eval(const Stmt&, const LineDecl& d) {
    Ln2<R> l = [&] {
      switch (d.rule) {
        case LineRule::join_points: {
          Pt2<R> pa = point(d.a);  // resolve in source order
          Pt2<R> pb = point(d.b);
          return join(pa, pb);
        }
        case LineRule::vertical:
          return Ln2<R>(R(1), R(0), -num(d.nums[0]));
        case LineRule::homogeneous:
        default:
          return Ln2<R>(num(d.nums[0]), num(d.nums[1]), num(d.nums[2]));
      }
    }();
    bind(d.name, l);
    draw(DrawLine<R>{l, Style::declared});
  }

  void eval(const Stmt& st, const CircleDecl& d) {
    R r = num(d.r);
    bool bad;
    if constexpr (ring<R>::exact) bad = r.sign() <= 0;
    else bad = !(r > 0);
    if (bad) throw EvalError(st.span, "circle radius must be positive");
    Pt2<R> c = Pt2<R>::affine(num(d.cx), num(d.cy));
    bind(d.name, CircleVal<R>{c, r});
    draw(DrawCircle<R>{c, r, Style::declared});
  }

  void eval(const Stmt&, const ConicDecl& d) {
    std::array<Pt2<R>, 5> through = points(d.through);
    Conic<R> c = conic_through_five(through);
    bind(d.name, ConicVal<R>{c, through});
    draw(DrawConic<R>{c, through[0], Style::declared});
  }

  void eval(const Stmt&, const CompleteSectionDecl& d) {
    std::array<Ln2<R>, 4> carriers = lines(d.carriers);
    SectionQuadruplet<R> first(points(d.first), carriers, true, tol_);
    std::array<Pt2<R>, 3> primed = points(d.second);
    Pt2<R> done = complete_section(carriers, first, primed[0], primed[1], primed[2], tol_);
    bind(d.result, done);
    draw(DrawPoint<R>{done, d.result, Style::derived});
  }

  // ---- checks --------------------------------------------------------------

  void eval(const Stmt&, const CheckStmt& s) {
    switch (s.kind) {
      case CheckKind::desargues:
      case CheckKind::converse: check_perspective(s); break;
      case CheckKind::involution: check_involution(s); break;
      case CheckKind::example1: check_tangent_alignment(s); break;
      case CheckKind::section: check_section(s); break;
      case CheckKind::moulton_witness: check_moulton(s); break;
    }
  }

  void check_perspective(const CheckStmt& s) {
    std::array<Pt2<R>, 6> p{};
    for (int i = 0; i < 6; ++i) p[i] = point(s.args[i]);
    bool forward = s.kind == CheckKind::desargues;
    DesarguesVerdict<R> v =
        forward ? check_desargues(p[0], p[1], p[2], p[3], p[4], p[5], tol_)
                : check_desargues_converse(p[0], p[1], p[2], p[3], p[4], p[5], tol_);
    CheckOutcome o;
    o.name = forward ? "desargues" : "converse";
    o.passed = v.hypothesis_holds && v.conclusion_holds;
    o.detail = std::string("hypothesis_holds=") + (v.hypothesis_holds ? "true" : "false") +
               ", conclusion_holds=" + (v.conclusion_holds ? "true" : "false");
    out_.outcomes.push_back(std::move(o));

    // Spokes, the six triangle sides, the three side meets, and the axis.
    for (int i = 0; i < 3; ++i) {
      if (p[i] != p[i + 3]) draw(DrawLine<R>{join(p[i], p[i + 3]), Style::derived});
    }
    static constexpr int side[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (const auto& e : side) draw(DrawLine<R>{join(p[e[0]], p[e[1]]), Style::derived});
    for (const auto& e : side) draw(DrawLine<R>{join(p[e[0] + 3], p[e[1] + 3]), Style::derived});
    for (const Pt2<R>& m : v.side_meets) draw(DrawPoint<R>{m, "", Style::emphasis});
    if (v.axis) draw(DrawLine<R>{*v.axis, Style::emphasis});
  }

  void check_involution(const CheckStmt& s) {
    std::array<Pt2<R>, 4> base{};
    for (int i = 0; i < 4; ++i) base[i] = point(s.args[i]);
    Ln2<R> probe = line(s.args[4]);
    bool ok = check_desargues_involution(base, probe, tol_);
    CheckOutcome o;
    o.name = "involution";
    o.passed = ok;
    o.detail = std::string("exchanges_third_pair=") + (ok ? "true" : "false");
    out_.outcomes.push_back(std::move(o));

    // The three degenerate members of the pencil and their cuts on the probe.
    static constexpr int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& sp : splits) {
      Ln2<R> g = join(base[sp[0]], base[sp[1]]);
      Ln2<R> h = join(base[sp[2]], base[sp[3]]);
      draw(DrawLine<R>{g, Style::derived});
      draw(DrawLine<R>{h, Style::derived});
      if (g != probe) draw(DrawPoint<R>{meet(g, probe), "", Style::emphasis});
      if (h != probe) draw(DrawPoint<R>{meet(h, probe), "", Style::emphasis});
    }
  }

  void check_tangent_alignment(const CheckStmt& s) {
    CircleVal<R> a = circle(s.c1);
    CircleVal<R> b = circle(s.c2);
    CirclePair<R> pair(a.center, a.r, b.center, b.r);
    Pt2<R> apex = same_side_tangent_apex(pair);
    std::vector<Ln2<R>> secants;
    secants.reserve(s.secants.size());
    for (const Ref& r : s.secants) secants.push_back(line(r));

    std::vector<Pairing> runs;
    switch (s.pairing) {
      case PairingMode::matched: runs = {Pairing::near_near, Pairing::far_far}; break;
      case PairingMode::crossed: runs = {Pairing::near_far, Pairing::far_near}; break;
      case PairingMode::near_near: runs = {Pairing::near_near}; break;
      case PairingMode::far_far: runs = {Pairing::far_far}; break;
      case PairingMode::near_far: runs = {Pairing::near_far}; break;
      case PairingMode::far_near: runs = {Pairing::far_near}; break;
    }

    CheckOutcome o;
    o.name = "example1";
    o.passed = true;
    draw(DrawPoint<R>{apex, "", Style::emphasis});
    for (std::size_t i = 0; i < runs.size(); ++i) {
      AlignmentReport<R> rep =
          check_example1(pair.conic1(), pair.conic2(), apex, secants, runs[i], tol_);
      o.passed = o.passed && rep.all_collinear;
      if (i) o.detail += "; ";
      o.detail += std::string(pairing_name(runs[i])) +
                  ": all_collinear=" + (rep.all_collinear ? "true" : "false");
      for (const Pt2<R>& m : rep.meets) draw(DrawPoint<R>{m, "", Style::emphasis});
      if (rep.fitted_line) draw(DrawLine<R>{*rep.fitted_line, Style::emphasis});
    }
    out_.outcomes.push_back(std::move(o));
  }

  void check_section(const CheckStmt& s) {
    std::array<Ln2<R>, 4> carriers = lines(s.carriers);
    SectionQuadruplet<R> q1(points(s.first), carriers, true, tol_);
    SectionQuadruplet<R> q2(points(s.second), carriers, true, tol_);
    bool ok = check_section_alignment(carriers, q1, q2, tol_);
    CheckOutcome o;
    o.name = "section";
    o.passed = ok;
    o.detail = std::string("aligned=") + (ok ? "true" : "false");
    out_.outcomes.push_back(std::move(o));

    static constexpr int edge[3][2] = {{0, 1}, {1, 2}, {2, 3}};
    for (const auto& e : edge) {
      Ln2<R> s1 = join(q1.points[e[0]], q1.points[e[1]]);
      Ln2<R> s2 = join(q2.points[e[0]], q2.points[e[1]]);
      draw(DrawLine<R>{s1, Style::derived});
      draw(DrawLine<R>{s2, Style::derived});
      if (s1 != s2) draw(DrawPoint<R>{meet(s1, s2), "", Style::emphasis});
    }
  }

  void check_moulton(const CheckStmt& s) {
    moulton::FailureWitness w = moulton::find_desargues_failure(s.box, s.budget);
    bool ok = moulton::verify_failure(w);
    CheckOutcome o;
    o.name = "moulton";
    o.passed = ok;
    o.detail = std::string("witness_verified=") + (ok ? "true" : "false") +
               ", collinearity_defect=" + w.collinearity_defect.str();
    out_.outcomes.push_back(std::move(o));

    auto lift = [&](const moulton::MPoint& p) {
      return Pt2<R>(num(p.x), num(p.y), R(1));
    };
    static const char* labels[6] = {"A", "B", "C", "A'", "B'", "C'"};
    draw(DrawPoint<R>{lift(w.center), "O", Style::derived});
    for (int i = 0; i < 6; ++i) draw(DrawPoint<R>{lift(w.points[i]), labels[i], Style::derived});
    for (int i = 0; i < 3; ++i)
      draw(DrawMoultonLine{moulton::m_line_through(w.points[i], w.points[i + 3]),
                           Style::derived});
    static constexpr int side[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (const auto& e : side)
      draw(DrawMoultonLine{moulton::m_line_through(w.points[e[0]], w.points[e[1]]),
                           Style::derived});
    for (const auto& e : side)
      draw(DrawMoultonLine{moulton::m_line_through(w.points[e[0] + 3], w.points[e[1] + 3]),
                           Style::derived});
    for (const moulton::MPoint& m : w.side_meets)
      draw(DrawPoint<R>{lift(m), "", Style::emphasis});
  }

  void eval(const Stmt&, const RenderStmt& s) { out_.renders.push_back(s); }
};

}  // namespace detail

// Runs constructions and checks in scene order, collecting the outcome of
// every check, the figure contents in draw order, and the render directives.
template <class R>
Evaluated<R> evaluate_scene(const Scene& s, const Tol& tol = Tol()) {
  return detail::Evaluator<R>(tol).run(s);
}

}  // namespace epure::scene
