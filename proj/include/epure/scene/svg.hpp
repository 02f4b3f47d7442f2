#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epure/scene/eval.hpp"

namespace epure::scene {

namespace svgdet {

template <class R>
int sgn(const R& v) {
  if constexpr (ring<R>::exact) return v.sign();
  else return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Fixed six-decimal formatting; identical input bytes must yield identical
// output bytes, so the exact ring rounds half-up in integer arithmetic and
// the floating ring normalizes the sign of zero.
inline std::string fmt6(const Rat& v) {
  BigInt num = v.numerator() * 2000000 + v.denominator();
  BigInt den = v.denominator() * 2;
  BigInt n = floor_div(num, den);
  bool neg = n < 0;
  BigInt a = neg ? BigInt(-n) : n;
  BigInt ip = a / 1000000;
  long long frac = (a % 1000000).convert_to<long long>();
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%06lld", frac);
  return (neg ? "-" : "") + ip.str() + "." + buf;
}

inline std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline long long round_ll(const Rat& v) {
  return floor_div(v.numerator() * 2 + v.denominator(), v.denominator() * 2)
      .convert_to<long long>();
}

inline long long round_ll(double v) { return std::llround(v); }

inline const char* style_suffix(Style s) {
  switch (s) {
    case Style::declared: return "declared";
    case Style::derived: return "derived";
    case Style::emphasis: return "emphasis";
  }
  return "declared";
}

// Pixel frame: x right, y down, fixed 800-pixel width.
template <class R>
struct Frame {
  R xmin, ymin, xmax, ymax;
  R scale;
  long long height;

  explicit Frame(const RenderStmt& dir) {
    xmin = ring<R>::from(dir.viewport[0]);
    ymin = ring<R>::from(dir.viewport[1]);
    xmax = ring<R>::from(dir.viewport[2]);
    ymax = ring<R>::from(dir.viewport[3]);
    scale = R(800) / (xmax - xmin);
    height = round_ll(scale * (ymax - ymin));
    if (height < 1) height = 1;
  }

  std::string px(const R& x) const { return fmt6((x - xmin) * scale); }
  std::string py(const R& y) const { return fmt6((ymax - y) * scale); }
  std::string px_off(const R& x, int d) const { return fmt6((x - xmin) * scale + R(d)); }
  std::string py_off(const R& y, int d) const { return fmt6((ymax - y) * scale + R(d)); }
};

// Crossings of the straight line u x + v y + w = 0 with the border of
// [x0, x1] x [y0, y1], deduplicated and ordered; two or more means the line
// shows inside the box and the extremes bound the visible segment.
template <class R>
std::vector<std::pair<R, R>> border_cuts(const R& u, const R& v, const R& w, const R& x0,
                                         const R& x1, const R& y0, const R& y1) {
  std::vector<std::pair<R, R>> pts;
  auto push = [&](const R& x, const R& y) {
    for (const auto& q : pts)
      if (q.first == x && q.second == y) return;
    pts.emplace_back(x, y);
  };
  if (sgn(v) != 0) {
    for (const R* X : {&x0, &x1}) {
      R y = -(w + u * *X) / v;
      if (!(y < y0) && !(y > y1)) push(*X, y);
    }
  }
  if (sgn(u) != 0) {
    for (const R* Y : {&y0, &y1}) {
      R x = -(w + v * *Y) / u;
      if (!(x < x0) && !(x > x1)) push(x, *Y);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return pts;
}

template <class R>
class Painter {
 public:
  Painter(std::string& out, const Frame<R>& f) : out_(out), f_(f) {}

  void operator()(const DrawPoint<R>& d) {
    bool inf;
    if constexpr (ring<R>::exact) inf = d.p.infinite();
    else inf = d.p.z() == 0;
    if (inf) {
      ideal_point(d);
      return;
    }
    R x = d.p.ax();
    R y = d.p.ay();
    out_ += "<circle class=\"pt-";
    out_ += style_suffix(d.style);
    out_ += "\" cx=\"" + f_.px(x) + "\" cy=\"" + f_.py(y) + "\" r=\"3\"/>\n";
    if (!d.label.empty()) label(x, y, d.label);
  }

  void operator()(const DrawLine<R>& d) {
    if (is_ideal(d.l)) {
      // The line at infinity surrounds the view: a dashed inner border.
      out_ += "<rect class=\"ln-";
      out_ += style_suffix(d.style);
      out_ += " inf\" x=\"6\" y=\"6\" width=\"788\" height=\"" +
              std::to_string(f_.height - 12) + "\"/>\n";
      return;
    }
    segment_of(d.l.u(), d.l.v(), d.l.w(), f_.xmin, f_.xmax, style_suffix(d.style));
  }

  void operator()(const DrawCircle<R>& d) {
    out_ += "<circle class=\"ln-";
    out_ += style_suffix(d.style);
    out_ += "\" cx=\"" + f_.px(d.center.ax()) + "\" cy=\"" + f_.py(d.center.ay()) +
            "\" r=\"" + fmt6(d.r * f_.scale) + "\"/>\n";
  }

  void operator()(const DrawConic<R>& d) {
    bool inf;
    if constexpr (ring<R>::exact) inf = d.seed.infinite();
    else inf = d.seed.z() == 0;
    if (inf) return;
    // Sixty-four vertices from the pencil of lines through the seed point:
    // slopes t_k = k / (32 - |k|) for k in [-31, 31], plus the vertical line.
    std::vector<std::optional<std::pair<R, R>>> verts;
    verts.reserve(64);
    auto second = [&](const Pt2<R>& dirpt) -> std::optional<std::pair<R, R>> {
      try {
        Ln2<R> l = join(d.seed, dirpt);
        Pt2<R> q = second_intersection(d.conic, d.seed, l);
        bool qinf;
        if constexpr (ring<R>::exact) qinf = q.infinite();
        else qinf = q.z() == 0;
        if (qinf) return std::nullopt;
        return std::make_pair(q.ax(), q.ay());
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    verts.push_back(second(Pt2<R>::at_infinity(R(0), R(1))));
    for (int k = -31; k <= 31; ++k) {
      R t = ring<R>::from_int(k) / ring<R>::from_int(32 - (k < 0 ? -k : k));
      verts.push_back(second(Pt2<R>::at_infinity(R(1), t)));
    }
    std::string path;
    bool open = false;
    bool gap = false;
    for (const auto& v : verts) {
      if (!v) {
        open = false;
        gap = true;
        continue;
      }
      path += open ? " L " : (path.empty() ? "M " : " M ");
      path += f_.px(v->first) + " " + f_.py(v->second);
      open = true;
    }
    if (path.empty()) return;
    if (!gap) path += " Z";
    out_ += "<path class=\"ln-";
    out_ += style_suffix(d.style);
    out_ += "\" clip-path=\"url(#box)\" d=\"" + path + "\"/>\n";
  }

  void operator()(const DrawMoultonLine& d) {
    const moulton::MLine& l = d.l;
    const char* cls = style_suffix(d.style);
    if (l.kind() == moulton::MLine::Kind::vertical) {
      R c = ring<R>::from(l.c());
      if (c < f_.xmin || c > f_.xmax) return;
      out_ += std::string("<line class=\"ln-") + cls + "\" x1=\"" + f_.px(c) + "\" y1=\"" +
              f_.py(f_.ymin) + "\" x2=\"" + f_.px(c) + "\" y2=\"" + f_.py(f_.ymax) + "\"/>\n";
      return;
    }
    // Left piece y = m x + b for x <= 0, right piece with the doubled slope.
    R m = ring<R>::from(l.m());
    R b = ring<R>::from(l.b());
    R mr = ring<R>::from(l.right_slope());
    R zero(0);
    if (sgn(f_.xmin) < 0) {
      R hi = sgn(f_.xmax) < 0 ? f_.xmax : zero;
      segment_of(m, R(-1), b, f_.xmin, hi, cls);
    }
    if (sgn(f_.xmax) > 0) {
      R lo = sgn(f_.xmin) > 0 ? f_.xmin : zero;
      segment_of(mr, R(-1), b, lo, f_.xmax, cls);
    }
  }

 private:
  std::string& out_;
  const Frame<R>& f_;

  bool is_ideal(const Ln2<R>& l) const {
    if constexpr (ring<R>::exact) return l.is_line_at_infinity();
    else return l.u() == 0 && l.v() == 0;
  }

  std::string numstr(const R& v) const {
    if constexpr (ring<R>::exact) return v.str();
    else return fmt6(v);
  }

  void label(const R& x, const R& y, const std::string& text) {
    out_ += "<text class=\"lbl\" x=\"" + f_.px_off(x, 6) + "\" y=\"" + f_.py_off(y, -6) +
            "\">" + text + "</text>\n";
  }

  // Straight line clipped to the viewport band x in [x0, x1].
  void segment_of(const R& u, const R& v, const R& w, const R& x0, const R& x1,
                  const char* cls) {
    auto pts = border_cuts(u, v, w, x0, x1, f_.ymin, f_.ymax);
    if (pts.size() < 2) return;
    const auto& a = pts.front();
    const auto& b = pts.back();
    if (a.first == b.first && a.second == b.second) return;
    out_ += std::string("<line class=\"ln-") + cls + "\" x1=\"" + f_.px(a.first) + "\" y1=\"" +
            f_.py(a.second) + "\" x2=\"" + f_.px(b.first) + "\" y2=\"" + f_.py(b.second) +
            "\"/>\n";
  }

  // A direction with no finite position: an arrow leaving the view through
  // the border, annotated with the direction's coordinates.
  void ideal_point(const DrawPoint<R>& d) {
    R u = d.p.x();
    R v = d.p.y();
    R cx = (f_.xmin + f_.xmax) / R(2);
    R cy = (f_.ymin + f_.ymax) / R(2);
    std::optional<R> t;
    auto consider = [&](const R& num, const R& den) {
      if (sgn(den) == 0) return;
      R cand = num / den;
      if (sgn(cand) <= 0) return;
      if (!t || cand < *t) t = cand;
    };
    consider(f_.xmax - cx, u);
    consider(f_.xmin - cx, u);
    consider(f_.ymax - cy, v);
    consider(f_.ymin - cy, v);
    if (!t) return;
    R ex = cx + *t * u;
    R ey = cy + *t * v;
    R seven_eighths = ring<R>::from_int(7) / ring<R>::from_int(8);
    R tx = cx + seven_eighths * *t * u;
    R ty = cy + seven_eighths * *t * v;
    out_ += "<line class=\"ln-";
    out_ += style_suffix(d.style);
    out_ += "\" marker-end=\"url(#arr)\" x1=\"" + f_.px(tx) + "\" y1=\"" + f_.py(ty) +
            "\" x2=\"" + f_.px(ex) + "\" y2=\"" + f_.py(ey) + "\"/>\n";
    std::string note = d.label.empty() ? "" : d.label + " ";
    note += "(" + numstr(u) + " : " + numstr(v) + " : 0)";
    label(tx, ty, note);
  }
};

}  // namespace svgdet

// One SVG document for one render directive, painted in draw order with a
// fixed prologue; output bytes depend only on the drawing and the directive.
template <class R>
std::string render_svg(const std::vector<DrawItem<R>>& drawing, const RenderStmt& dir) {
  svgdet::Frame<R> f(dir);
  std::string h = std::to_string(f.height);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" + h +
         "\" viewBox=\"0 0 800 " + h + "\">\n";
  out += "<defs>\n";
  out +=
      "<marker id=\"arr\" markerWidth=\"10\" markerHeight=\"8\" refX=\"9\" refY=\"4\" "
      "orient=\"auto\" markerUnits=\"userSpaceOnUse\"><path d=\"M0,0 L10,4 L0,8 Z\" "
      "fill=\"#333333\"/></marker>\n";
  out += "<clipPath id=\"box\"><rect x=\"0\" y=\"0\" width=\"800\" height=\"" + h +
         "\"/></clipPath>\n";
  out += "</defs>\n";
  out += "<style>\n";
  out += ".frame { fill: none; stroke: #999999; stroke-width: 1; }\n";
  out += ".pt-declared { fill: #101010; }\n";
  out += ".pt-derived { fill: #505050; }\n";
  out += ".pt-emphasis { fill: #c21807; }\n";
  out += ".ln-declared { stroke: #101010; stroke-width: 1.2; fill: none; }\n";
  out += ".ln-derived { stroke: #7a7a7a; stroke-width: 1; fill: none; }\n";
  out += ".ln-emphasis { stroke: #c21807; stroke-width: 1.6; fill: none; }\n";
  out += ".lbl { font-family: monospace; font-size: 13px; fill: #101010; }\n";
  out += ".inf { stroke-dasharray: 6 4; }\n";
  out += "</style>\n";
  out += "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"800\" height=\"" + h + "\"/>\n";
  svgdet::Painter<R> paint(out, f);
  for (const DrawItem<R>& item : drawing) std::visit(paint, item);
  out += "</svg>\n";
  return out;
}

// Renders the first directive of an evaluated scene.
template <class R>
std::string render_svg(const Evaluated<R>& ev) {
  if (ev.renders.empty()) fail(errc::no_render_directive, "scene has no render directive");
  return render_svg(ev.drawing, ev.renders.front());
}

}  // namespace epure::scene
