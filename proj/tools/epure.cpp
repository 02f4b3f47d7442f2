// Command-line front end: check and render scene files, run the randomized
// property suites, and search the bent plane for an alignment failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "epure/gen.hpp"
#include "epure/scene/eval.hpp"
#include "epure/scene/parse.hpp"
#include "epure/scene/svg.hpp"

namespace {

using namespace epure;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot write '" + path + "'");
  out << bytes;
  if (!out) fail(errc::io_error, "cannot write '" + path + "'");
}

template <class R>
int do_check(const scene::Scene& s, const Tol& tol) {
  scene::Evaluated<R> ev = scene::evaluate_scene<R>(s, tol);
  bool all = true;
  for (const scene::CheckOutcome& o : ev.outcomes) {
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << o.name << ": " << o.detail << "\n";
  }
  std::cout << "backend=" << ring<R>::name() << " checks=" << ev.outcomes.size() << " "
            << (all ? "all passed" : "FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}

template <class R>
int do_render(const scene::Scene& s, const Tol& tol, const std::string& out_override) {
  scene::Evaluated<R> ev = scene::evaluate_scene<R>(s, tol);
  if (ev.renders.empty()) fail(errc::no_render_directive, "scene has no render directive");
  for (std::size_t i = 0; i < ev.renders.size(); ++i) {
    scene::RenderStmt dir = ev.renders[i];
    if (i == 0 && !out_override.empty()) dir.file = out_override;
    write_file(dir.file, scene::render_svg(ev.drawing, dir));
    std::cout << "wrote " << dir.file << "\n";
  }
  return 0;
}

int do_fuzz(const std::string& prop, std::uint64_t seed, int count) {
  gen::Rng r(seed);
  int failures = 0;
  auto report = [&](const char* name) {
    std::cout << "property " << name << ": " << count << " cases, seed " << seed << ", "
              << (failures == 0 ? "all passed" : std::to_string(failures) + " FAILED") << "\n";
    return failures == 0 ? 0 : 1;
  };

  if (prop == "desargues") {
    for (int i = 0; i < count; ++i) {
      gen::PerspectiveConfig c = gen::rnd_perspective(r, i % 20 == 0);
      auto v = check_desargues(c.pts[0], c.pts[1], c.pts[2], c.pts[3], c.pts[4], c.pts[5]);
      if (!v.hypothesis_holds || !v.conclusion_holds) ++failures;
    }
    return report("desargues");
  }
  if (prop == "converse") {
    for (int i = 0; i < count; ++i) {
      gen::AxialConfig c = gen::rnd_axial(r);
      auto v = check_desargues_converse(c.pts[0], c.pts[1], c.pts[2], c.pts[3], c.pts[4],
                                        c.pts[5]);
      if (!v.hypothesis_holds || !v.conclusion_holds) ++failures;
    }
    return report("converse");
  }
  if (prop == "involution") {
    for (int i = 0; i < count; ++i) {
      gen::PencilInstance p = gen::rnd_pencil(r);
      if (!check_desargues_involution(p.base, p.probe)) ++failures;
    }
    return report("involution");
  }
  if (prop == "example1-circles") {
    int done = 0;
    while (done < count) {
      CirclePair<Rat> cp = gen::rnd_circle_pair(r);
      std::vector<Ln2<Rat>> secants = gen::rnd_secants(r, cp, 5);
      Pt2<Rat> apex = same_side_tangent_apex(cp);
      try {
        for (Pairing p : {Pairing::near_near, Pairing::far_far, Pairing::near_far,
                          Pairing::far_near}) {
          auto rep = check_example1(cp.conic1(), cp.conic2(), apex, secants, p);
          if (!rep.all_collinear) ++failures;
        }
      } catch (const Error&) {
        continue;  // a secant may miss the second circle; redraw
      }
      ++done;
    }
    return report("example1-circles");
  }
  if (prop == "example2-lift") {
    int done = 0;
    while (done < count) {
      gen::SheetInstance si = gen::rnd_sheet(r);
      SectionQuadruplet<Rat> q1 = gen::rnd_section(r, si);
      SectionQuadruplet<Rat> q2 = gen::rnd_section(r, si);
      Pt2<Rat> d2;
      try {
        d2 = complete_section(si.carriers, q1, q2.points[0], q2.points[1], q2.points[2]);
      } catch (const Error&) {
        continue;  // two draws may share a point or a side; redraw
      }
      bool ok = d2 == q2.points[3] && verify_section_against_lift(si.sheet, si.proj, q1) &&
                verify_section_against_lift(si.sheet, si.proj, q2) &&
                check_section_alignment(si.carriers, q1, q2);
      if (!ok) ++failures;
      ++done;
    }
    return report("example2-lift");
  }
  if (prop == "moulton-axioms") {
    for (int i = 0; i < count; ++i) {
      moulton::MPoint p = gen::rnd_mpoint(r);
      moulton::MPoint q = gen::rnd_mpoint(r);
      if (p != q) {
        auto lines = moulton::m_lines_through(p, q);
        bool ok = lines.size() == 1 && moulton::m_incident(lines[0], p) &&
                  moulton::m_incident(lines[0], q);
        if (!ok) ++failures;
      }
      moulton::MLine l1 = gen::rnd_mline(r);
      moulton::MLine l2 = gen::rnd_mline(r);
      if (l1 != l2) {
        auto meets = moulton::m_meets_of(l1, l2);
        auto single = moulton::m_meet(l1, l2);
        bool ok = meets.size() <= 1 &&
                  (meets.empty() ? !single.has_value()
                                 : (single.has_value() && *single == meets[0] &&
                                    moulton::m_incident(l1, meets[0]) &&
                                    moulton::m_incident(l2, meets[0])));
        if (!ok) ++failures;
      }
    }
    return report("moulton-axioms");
  }
  std::cerr << "error: unknown property '" << prop
            << "' (expected desargues, converse, involution, example1-circles, "
               "example2-lift, or moulton-axioms)\n";
  return 2;
}

int do_witness(long long budget, const std::string& box_text, const std::string& out) {
  Rat box = Rat::parse(box_text);
  moulton::FailureWitness w = moulton::find_desargues_failure(box, budget);
  bool ok = moulton::verify_failure(w);

  auto show = [](const moulton::MPoint& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
  };
  static const char* names[6] = {"A", "B", "C", "A'", "B'", "C'"};
  std::cout << "center O = " << show(w.center) << "\n";
  for (int i = 0; i < 6; ++i) std::cout << names[i] << " = " << show(w.points[i]) << "\n";
  std::cout << "side meets: " << show(w.side_meets[0]) << " " << show(w.side_meets[1]) << " "
            << show(w.side_meets[2]) << "\n";
  std::cout << "collinearity defect (straight-line determinant): "
            << w.collinearity_defect.str() << "\n";
  std::cout << "witness " << (ok ? "verified" : "FAILED VERIFICATION") << "\n";

  // Serialized back into the scene language so the figure can be rendered.
  Rat xmin = w.center.x, xmax = w.center.x, ymin = w.center.y, ymax = w.center.y;
  auto widen = [&](const moulton::MPoint& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  };
  for (const auto& p : w.points) widen(p);
  for (const auto& p : w.side_meets) widen(p);
  Rat m(2);
  std::ostringstream scene_text;
  scene_text << "moulton check witness budget=" << budget << " box=" << box.str() << "\n";
  scene_text << "render " << (out.empty() ? std::string("witness.svg") : out) << " viewport=("
             << (xmin - m).str() << ", " << (ymin - m).str() << ", " << (xmax + m).str()
             << ", " << (ymax + m).str() << ")\n";
  std::cout << "scene:\n" << scene_text.str();

  if (!out.empty()) {
    scene::Scene s = scene::parse_scene(scene_text.str());
    scene::Evaluated<Rat> ev = scene::evaluate_scene<Rat>(s);
    write_file(out, scene::render_svg(ev));
    std::cout << "wrote " << out << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective geometry checker and figure compiler"};
  app.require_subcommand(1);

  std::string backend = "exact";
  double eps_abs = 1e-12;
  double eps_rel = 1e-12;
  app.add_option("--backend", backend, "scalar backend: exact | approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--eps-abs", eps_abs, "absolute tolerance (approx backend)");
  app.add_option("--eps-rel", eps_rel, "relative tolerance (approx backend)");

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "evaluate a scene's checks");
  check->add_option("file", check_file, "scene file")->required();

  std::string render_file;
  std::string render_out;
  CLI::App* render = app.add_subcommand("render", "compile a scene to SVG");
  render->add_option("file", render_file, "scene file")->required();
  render->add_option("-o,--output", render_out, "override the first directive's output path");

  std::string fuzz_prop;
  std::uint64_t fuzz_seed = 1;
  int fuzz_count = 100;
  CLI::App* fuzz = app.add_subcommand("fuzz", "run a randomized property suite");
  fuzz->add_option("property", fuzz_prop,
                   "desargues | converse | involution | example1-circles | example2-lift | "
                   "moulton-axioms")
      ->required();
  fuzz->add_option("--seed", fuzz_seed, "RNG seed");
  fuzz->add_option("--count", fuzz_count, "number of cases");

  long long wit_budget = 200000;
  std::string wit_box = "4";
  std::string wit_out;
  CLI::App* witness = app.add_subcommand("witness", "search for an alignment failure");
  std::string wit_target;
  witness->add_option("target", wit_target, "only 'moulton' is available")->required();
  witness->add_option("--budget", wit_budget, "configurations to examine");
  witness->add_option("--box", wit_box, "half-width of the search box (rational)");
  witness->add_option("-o,--output", wit_out, "also render the witness to this SVG file");

  CLI11_PARSE(app, argc, argv);

  try {
    Tol tol(eps_abs, eps_rel);
    bool exact = backend == "exact";
    if (check->parsed()) {
      epure::scene::Scene s = epure::scene::parse_scene(read_file(check_file));
      return exact ? do_check<Rat>(s, tol) : do_check<double>(s, tol);
    }
    if (render->parsed()) {
      epure::scene::Scene s = epure::scene::parse_scene(read_file(render_file));
      return exact ? do_render<Rat>(s, tol, render_out)
                   : do_render<double>(s, tol, render_out);
    }
    if (fuzz->parsed()) return do_fuzz(fuzz_prop, fuzz_seed, fuzz_count);
    if (witness->parsed()) {
      if (wit_target != "moulton") {
        std::cerr << "error: unknown witness target '" << wit_target << "'\n";
        return 2;
      }
      return do_witness(wit_budget, wit_box, wit_out);
    }
  } catch (const epure::scene::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const epure::scene::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const epure::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
