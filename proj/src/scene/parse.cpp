#include "epure/scene/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace epure::scene {

const char* pairing_mode_name(PairingMode m) {
  switch (m) {
    case PairingMode::matched: return "matched";
    case PairingMode::crossed: return "crossed";
    case PairingMode::near_near: return "near_near";
    case PairingMode::far_far: return "far_far";
    case PairingMode::near_far: return "near_far";
    case PairingMode::far_near: return "far_near";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
// One source line under scan.  Columns are 1-based; when input stops short,
// errors point one past the final character.
class Cursor {
public:
  Cursor(const std::string& s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '#') pos_ = s_.size();  // comment to end of line
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  SourceSpan here(int length = 0) {
    skip_ws();
    return SourceSpan{line_, static_cast<int>(pos_) + 1, length};
  }

  [[noreturn]] void err(const std::string& expected) { throw ParseError(here(), expected); }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) err(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident(const std::string& what = "expected a name") {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) err(what);
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // A word the grammar requires literally (e.g. `join`, `viewport`).
  void keyword(const std::string& w) {
    SourceSpan sp = here();
    std::string got;
    try {
      got = ident("expected '" + w + "'");
    } catch (const ParseError&) {
      throw ParseError(sp, "expected '" + w + "'");
    }
    if (got != w) throw ParseError(sp, "expected '" + w + "'");
  }

  Rat number() {
    skip_ws();
    SourceSpan sp = here();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      throw ParseError(sp, "expected a number");
    }
    if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.')) {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == frac) throw ParseError(here(), "expected digits");
    }
    try {
      return Rat::parse(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw ParseError(sp, "expected a number");
    }
  }

  // Bare token up to whitespace (used for file names).
  std::string token(const std::string& what) {
    skip_ws();
    if (pos_ >= s_.size()) err(what);
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '#') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void end_of_line() {
    if (!at_end()) err("expected end of line");
  }

private:
  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Scene run(const std::string& text) {
    Scene scene;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      Cursor c(raw, lineno);
      if (c.at_end()) continue;
      Stmt st;
      st.span = c.here();
      std::string head = c.ident("expected a statement");
      if (head == "point") st.node = parse_point(c);
      else if (head == "line") st.node = parse_line(c);
      else if (head == "circle") st.node = parse_circle(c);
      else if (head == "conic") st.node = parse_conic(c);
      else if (head == "complete") st.node = parse_complete(c);
      else if (head == "check") st.node = parse_check(c);
      else if (head == "moulton") st.node = parse_moulton(c);
      else if (head == "render") st.node = parse_render(c);
      else throw ParseError(st.span, "expected a statement keyword");
      c.end_of_line();
      scene.stmts.push_back(std::move(st));
    }
    return scene;
  }

private:
  std::set<std::string> names_;

  std::string declare(Cursor& c) {
    SourceSpan sp = c.here();
    std::string n = c.ident();
    if (!names_.insert(n).second)
      throw ParseError(sp, "duplicate name '" + n + "'");
    return n;
  }

  Ref ref(Cursor& c) {
    Ref r;
    r.span = c.here();
    r.name = c.ident();
    return r;
  }

  template <std::size_t N>
  std::array<Ref, N> ref_list(Cursor& c, const std::string& key) {
    c.keyword(key);
    c.expect('=');
    c.expect('[');
    std::array<Ref, N> out;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) c.expect(',');
      out[i] = ref(c);
    }
    c.expect(']');
    return out;
  }

  PointDecl parse_point(Cursor& c) {
    PointDecl d;
    d.name = declare(c);
    c.expect('=');
    char k = c.peek();
    if (k == '(') {
      c.expect('(');
      d.rule = PointRule::coords;
      d.nums[0] = c.number();
      c.expect(',');
      d.nums[1] = c.number();
      c.expect(')');
    } else if (k == '[') {
      c.expect('[');
      d.rule = PointRule::homogeneous;
      d.nums[0] = c.number();
      c.expect(':');
      d.nums[1] = c.number();
      c.expect(':');
      d.nums[2] = c.number();
      c.expect(']');
    } else {
      c.keyword("meet");
      d.rule = PointRule::meet_lines;
      c.expect('(');
      d.a = ref(c);
      c.expect(',');
      d.b = ref(c);
      c.expect(')');
    }
    return d;
  }

  LineDecl parse_line(Cursor& c) {
    LineDecl d;
    d.name = declare(c);
    c.expect('=');
    char k = c.peek();
    if (k == '[') {
      c.expect('[');
      d.rule = LineRule::homogeneous;
      d.nums[0] = c.number();
      c.expect(':');
      d.nums[1] = c.number();
      c.expect(':');
      d.nums[2] = c.number();
      c.expect(']');
    } else {
      SourceSpan sp = c.here();
      std::string w = c.ident("expected 'join', 'x', or '[u:v:w]'");
      if (w == "join") {
        d.rule = LineRule::join_points;
        c.expect('(');
        d.a = ref(c);
        c.expect(',');
        d.b = ref(c);
        c.expect(')');
      } else if (w == "x") {
        d.rule = LineRule::vertical;
        c.expect('=');
        d.nums[0] = c.number();
      } else {
        throw ParseError(sp, "expected 'join', 'x', or '[u:v:w]'");
      }
    }
    return d;
  }

  CircleDecl parse_circle(Cursor& c) {
    CircleDecl d;
    d.name = declare(c);
    c.expect('=');
    c.expect('(');
    c.keyword("center");
    c.expect(':');
    c.expect('(');
    d.cx = c.number();
    c.expect(',');
    d.cy = c.number();
    c.expect(')');
    c.expect(',');
    c.keyword("r");
    c.expect(':');
    d.r = c.number();
    c.expect(')');
    return d;
  }

  ConicDecl parse_conic(Cursor& c) {
    ConicDecl d;
    d.name = declare(c);
    c.expect('=');
    c.keyword("through");
    c.expect('(');
    for (int i = 0; i < 5; ++i) {
      if (i) c.expect(',');
      d.through[i] = ref(c);
    }
    c.expect(')');
    return d;
  }

  CompleteSectionDecl parse_complete(Cursor& c) {
    c.keyword("section");
    CompleteSectionDecl d;
    d.carriers = ref_list<4>(c, "carriers");
    d.first = ref_list<4>(c, "first");
    d.second = ref_list<3>(c, "second");
    c.keyword("as");
    d.result = declare(c);
    return d;
  }

  CheckStmt parse_check(Cursor& c) {
    SourceSpan sp = c.here();
    std::string what = c.ident("expected a check name");
    CheckStmt s;
    if (what == "desargues" || what == "converse") {
      s.kind = what == "desargues" ? CheckKind::desargues : CheckKind::converse;
      for (int i = 0; i < 6; ++i) s.args.push_back(ref(c));
    } else if (what == "involution") {
      s.kind = CheckKind::involution;
      for (int i = 0; i < 5; ++i) s.args.push_back(ref(c));
    } else if (what == "example1") {
      s.kind = CheckKind::example1;
      s.c1 = ref(c);
      s.c2 = ref(c);
      c.keyword("pairing");
      c.expect('=');
      SourceSpan psp = c.here();
      std::string mode = c.ident("expected a pairing mode");
      if (mode == "matched") s.pairing = PairingMode::matched;
      else if (mode == "crossed") s.pairing = PairingMode::crossed;
      else if (mode == "near_near") s.pairing = PairingMode::near_near;
      else if (mode == "far_far") s.pairing = PairingMode::far_far;
      else if (mode == "near_far") s.pairing = PairingMode::near_far;
      else if (mode == "far_near") s.pairing = PairingMode::far_near;
      else throw ParseError(psp, "expected a pairing mode");
      c.keyword("secants");
      c.expect('=');
      c.expect('[');
      s.secants.push_back(ref(c));
      while (c.eat(',')) s.secants.push_back(ref(c));
      c.expect(']');
    } else if (what == "section") {
      s.kind = CheckKind::section;
      s.carriers = ref_list<4>(c, "carriers");
      s.first = ref_list<4>(c, "first");
      s.second = ref_list<4>(c, "second");
    } else {
      throw ParseError(sp, "expected a check name");
    }
    return s;
  }

  CheckStmt parse_moulton(Cursor& c) {
    c.keyword("check");
    c.keyword("witness");
    CheckStmt s;
    s.kind = CheckKind::moulton_witness;
    s.budget = 200000;
    s.box = Rat(4);
    while (!c.at_end()) {
      SourceSpan sp = c.here();
      std::string key = c.ident("expected 'budget' or 'box'");
      c.expect('=');
      if (key == "budget") {
        Rat b = c.number();
        if (!b.is_integer() || b.sign() <= 0)
          throw ParseError(sp, "expected a positive integer budget");
        s.budget = b.numerator().convert_to<long long>();
      } else if (key == "box") {
        s.box = c.number();
      } else {
        throw ParseError(sp, "expected 'budget' or 'box'");
      }
    }
    return s;
  }

  RenderStmt parse_render(Cursor& c) {
    RenderStmt s;
    s.file = c.token("expected an output file name");
    c.keyword("viewport");
    c.expect('=');
    c.expect('(');
    SourceSpan sp = c.here();
    for (int i = 0; i < 4; ++i) {
      if (i) c.expect(',');
      s.viewport[i] = c.number();
    }
    c.expect(')');
    if (!(s.viewport[0] < s.viewport[2]) || !(s.viewport[1] < s.viewport[3]))
      throw ParseError(sp, "expected xmin < xmax and ymin < ymax");
    return s;
  }
};

}  // namespace

Scene parse_scene(const std::string& text) { return Parser().run(text); }

namespace {

std::ostream& operator<<(std::ostream& os, const Ref& r) { return os << r.name; }

template <std::size_t N>
void print_refs(std::ostream& os, const std::string& key, const std::array<Ref, N>& rs) {
  os << key << "=[";
  for (std::size_t i = 0; i < N; ++i) os << (i ? ", " : "") << rs[i];
  os << ']';
}

struct Printer {
  std::ostream& os;

  void operator()(const PointDecl& d) {
    os << "point " << d.name << " = ";
    switch (d.rule) {
      case PointRule::coords: os << '(' << d.nums[0] << ", " << d.nums[1] << ')'; break;
      case PointRule::homogeneous:
        os << '[' << d.nums[0] << ':' << d.nums[1] << ':' << d.nums[2] << ']';
        break;
      case PointRule::meet_lines: os << "meet(" << d.a << ", " << d.b << ')'; break;
    }
  }
  void operator()(const LineDecl& d) {
    os << "line " << d.name << " = ";
    switch (d.rule) {
      case LineRule::join_points: os << "join(" << d.a << ", " << d.b << ')'; break;
      case LineRule::vertical: os << "x = " << d.nums[0]; break;
      case LineRule::homogeneous:
        os << '[' << d.nums[0] << ':' << d.nums[1] << ':' << d.nums[2] << ']';
        break;
    }
  }
  void operator()(const CircleDecl& d) {
    os << "circle " << d.name << " = (center: (" << d.cx << ", " << d.cy << "), r: " << d.r
       << ')';
  }
  void operator()(const ConicDecl& d) {
    os << "conic " << d.name << " = through(";
    for (int i = 0; i < 5; ++i) os << (i ? ", " : "") << d.through[i];
    os << ')';
  }
  void operator()(const CompleteSectionDecl& d) {
    os << "complete section ";
    print_refs(os, "carriers", d.carriers);
    os << ' ';
    print_refs(os, "first", d.first);
    os << ' ';
    print_refs(os, "second", d.second);
    os << " as " << d.result;
  }
  void operator()(const CheckStmt& s) {
    switch (s.kind) {
      case CheckKind::desargues:
      case CheckKind::converse:
        os << "check " << (s.kind == CheckKind::desargues ? "desargues" : "converse");
        for (const Ref& r : s.args) os << ' ' << r;
        break;
      case CheckKind::involution:
        os << "check involution";
        for (const Ref& r : s.args) os << ' ' << r;
        break;
      case CheckKind::example1:
        os << "check example1 " << s.c1 << ' ' << s.c2 << " pairing="
           << pairing_mode_name(s.pairing) << " secants=[";
        for (std::size_t i = 0; i < s.secants.size(); ++i)
          os << (i ? ", " : "") << s.secants[i];
        os << ']';
        break;
      case CheckKind::section:
        os << "check section ";
        print_refs(os, "carriers", s.carriers);
        os << ' ';
        print_refs(os, "first", s.first);
        os << ' ';
        print_refs(os, "second", s.second);
        break;
      case CheckKind::moulton_witness:
        os << "moulton check witness budget=" << s.budget << " box=" << s.box;
        break;
    }
  }
  void operator()(const RenderStmt& s) {
    os << "render " << s.file << " viewport=(" << s.viewport[0] << ", " << s.viewport[1]
       << ", " << s.viewport[2] << ", " << s.viewport[3] << ')';
  }
};

}  // namespace

std::string pretty_print(const Scene& s) {
  std::ostringstream os;
  for (const Stmt& st : s.stmts) {
    std::visit(Printer{os}, st.node);
    os << '\n';
  }
  return os.str();
}

}  // namespace epure::scene
