// Command-line front end: wires files to the checkers and pipelines and
// renders deterministic reports.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "catwb/cattribe.hpp"
#include "catwb/factcheck.hpp"
#include "catwb/io.hpp"
#include "catwb/unroll.hpp"
#include "catwb/verify.hpp"
#include "catwb/zoo.hpp"

namespace {

using namespace catwb;

int hom_bound_from_env() {
  if (const char* s = std::getenv("HOM_BOUND")) return std::atoi(s);
  return kDefaultHomBound;
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) fail("IOError", "cannot write '" + p.string() + "'");
  out << text;
}

int emit(const std::string& command, const std::vector<Report>& rs,
         const std::string& format) {
  if (format == "json")
    std::cout << reports_to_json(command, rs);
  else
    std::cout << reports_to_text(command, rs);
  for (const auto& r : rs)
    if (!r.pass) return 1;
  return 0;
}

Report boolean_report(const std::string& name, bool pass,
                      const std::string& why_not) {
  Report r(name);
  if (!pass) r.violation(why_not);
  r.finalize();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category workbench"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string cat_file, functor_file, annotation_file, annotation0_file;
  std::string presentation_file, diagram_file, out_dir = ".";
  bool witness = false;

  auto* check_cat = app.add_subcommand("check-cat", "validate a category file");
  check_cat->add_option("file", cat_file)->required();

  auto* check_functor =
      app.add_subcommand("check-functor", "validate a functor file");
  check_functor->add_option("file", functor_file)->required();

  auto* check_reedy =
      app.add_subcommand("check-reedy", "check generalized Reedy axioms");
  check_reedy->add_option("category", cat_file)->required();
  check_reedy->add_option("annotation", annotation_file)->required();

  auto* check_lifting = app.add_subcommand(
      "check-lifting", "check the presentation lifting condition");
  check_lifting->add_option("presentation", presentation_file)->required();
  check_lifting->add_option("annotation", annotation_file)->required();

  auto* unroll =
      app.add_subcommand("unroll", "materialize the unrolled category");
  unroll->add_option("presentation", presentation_file)->required();
  unroll->add_option("--out-dir", out_dir);

  auto* check_density =
      app.add_subcommand("check-density", "absolute density of a functor");
  check_density->add_option("functor", functor_file)->required();
  check_density->add_flag("--witness", witness,
                          "write failing factorization categories");

  auto* check_cofib =
      app.add_subcommand("check-cofibering", "cofibering of a Reedy functor");
  check_cofib->add_option("functor", functor_file)->required();
  check_cofib->add_option("source-annotation", annotation_file)->required();
  check_cofib->add_option("target-annotation", annotation0_file)->required();

  auto* tribe = app.add_subcommand("tribe", "diagram-level checks");
  tribe->require_subcommand(1);
  auto* tfib = tribe->add_subcommand("check-fibrant",
                                     "p-fibrancy of a diagram over R");
  tfib->add_option("presentation", presentation_file)->required();
  tfib->add_option("diagram", diagram_file)->required();
  auto* tkan = tribe->add_subcommand(
      "kan", "round-trip a diagram through restriction and right Kan "
             "extension and verify the canonical isomorphism");
  tkan->add_option("presentation", presentation_file)->required();
  tkan->add_option("diagram", diagram_file)->required();
  auto* tfac = tribe->add_subcommand(
      "factorize", "factor the map to the terminal diagram into a pointwise "
                   "anodyne map and a p-fibration");
  tfac->add_option("presentation", presentation_file)->required();
  tfac->add_option("diagram", diagram_file)->required();
  tfac->add_option("reedy", annotation_file, "annotation for R")->required();
  tfac->add_option("reedy0", annotation0_file, "annotation for R0")->required();

  auto* zoo = app.add_subcommand("zoo", "write generated example inputs");
  zoo->require_subcommand(1);
  std::string group_name;
  int cube_dim = 2;
  bool symmetries = false, degeneracies = false;
  auto* zgroup = zoo->add_subcommand("group", "a finite group presentation");
  zgroup->add_option("name", group_name)->required()
      ->check(CLI::IsMember({"Z2", "Z3", "S3"}));
  zgroup->add_option("--out-dir", out_dir);
  auto* zcube = zoo->add_subcommand("cube", "a truncated cube category");
  zcube->add_option("--dim", cube_dim)->check(CLI::Range(0, 3));
  zcube->add_flag("--symmetries", symmetries);
  zcube->add_flag("--degeneracies", degeneracies);
  zcube->add_option("--out-dir", out_dir);

  auto* verify =
      app.add_subcommand("verify-paper", "run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cat) {
      FinCat c = parse_category([&] {
        std::ifstream in(cat_file);
        if (!in) fail("IOError", "cannot open '" + cat_file + "'");
        return std::string(std::istreambuf_iterator<char>(in), {});
      }());
      Report r = category_report(c);
      return emit("check-cat", {r}, format);
    }
    if (*check_functor) {
      FinFunctor f = read_functor_file(functor_file);
      Report r = functor_report(f);
      return emit("check-functor", {r}, format);
    }
    if (*check_reedy) {
      ReedyStructure s = apply_annotation(
          read_category_file(cat_file),
          read_reedy_annotation_file(annotation_file));
      return emit("check-reedy", {check_generalized_reedy(s)}, format);
    }
    if (*check_lifting) {
      AmalgamPresentation pres = read_presentation_file(presentation_file);
      ReedyStructure s0 = apply_annotation(
          pres.R0, read_reedy_annotation_file(annotation_file));
      return emit("check-lifting", {check_lifting_condition(pres, s0)}, format);
    }
    if (*unroll) {
      AmalgamPresentation pres = read_presentation_file(presentation_file);
      UnrolledCategory u = build_DR(pres, hom_bound_from_env());
      std::filesystem::create_directories(out_dir);
      std::filesystem::path dir(out_dir);
      write_text_file(dir / "unrolled.cat", write_category(u.category));
      write_text_file(dir / "projection.fun",
                      write_functor(u.projection, "unrolled.cat", "r.cat"));
      write_text_file(dir / "r.cat", write_category(pres.R));
      std::string sidecar;
      for (const auto& o : u.category.objects) {
        const DRObject& d = u.object_data.at(o);
        sidecar += o + " base " + (d.r0_arrow ? *d.r0_arrow : "-") + " iso " +
                   (d.iso_letter ? *d.iso_letter : "-") + "\n";
      }
      write_text_file(dir / "decompositions.txt", sidecar);
      Report r = boolean_report("unroll", true, "");
      r.note("objects " + std::to_string(u.category.objects.size()));
      r.note("arrows " + std::to_string(u.category.arrows.size()));
      return emit("unroll", {r}, format);
    }
    if (*check_density) {
      FinFunctor f = read_functor_file(functor_file);
      Report r = check_absolutely_dense(f);
      if (!r.pass && witness) {
        for (const auto& a : f.target.arrows) {
          FactorizationCategory fc = factorization_category(f, a.id);
          if (fc.cat.objects.empty() || is_connected(fc.cat)) continue;
          write_text_file("witness-" + std::to_string(&a - f.target.arrows.data()) +
                              ".cat",
                          write_category(fc.cat));
        }
      }
      return emit("check-density", {r}, format);
    }
    if (*check_cofib) {
      FinFunctor g = read_functor_file(functor_file);
      ReedyStructure sc = apply_annotation(
          g.source, read_reedy_annotation_file(annotation_file));
      ReedyStructure sd = apply_annotation(
          g.target, read_reedy_annotation_file(annotation0_file));
      return emit("check-cofibering", {check_cofibering(g, sc, sd)}, format);
    }
    if (*tfib) {
      AmalgamPresentation pres = read_presentation_file(presentation_file);
      UnrolledCategory u = build_DR(pres, hom_bound_from_env());
      Diagram x = read_diagram_file(diagram_file);
      bool ok = is_p_fibrant(u, x);
      return emit("tribe check-fibrant",
                  {boolean_report("p-fibrant", ok,
                                  "a relative matching map is not an "
                                  "isofibration")},
                  format);
    }
    if (*tkan) {
      AmalgamPresentation pres = read_presentation_file(presentation_file);
      UnrolledCategory u = build_DR(pres, hom_bound_from_env());
      Diagram x = read_diagram_file(diagram_file);
      Diagram s = restrict_along_p(u, x);
      RanResult ran = ran_along_p(u, s);
      DiagramMap eta = unit_ran_restrict(u, x, ran);
      bool ok = is_diagram_iso(x, ran.diagram, eta);
      return emit("tribe kan",
                  {boolean_report("kan-round-trip", ok,
                                  "unit comparison is not an isomorphism")},
                  format);
    }
    if (*tfac) {
      AmalgamPresentation pres = read_presentation_file(presentation_file);
      UnrolledCategory u = build_DR(pres, hom_bound_from_env());
      ReedyStructure s_r = apply_annotation(
          pres.R, read_reedy_annotation_file(annotation_file));
      ReedyStructure s0 = apply_annotation(
          pres.R0, read_reedy_annotation_file(annotation0_file));
      ReedyStructure induced = induce_DR_structure(u, s_r, s0);
      Diagram x = read_diagram_file(diagram_file);
      Diagram term = terminal_diagram(x.shape);
      TribeFactorization tf =
          tribe_factorize(u, induced, x, term, map_to_terminal(x, term));
      TribeClassReport jc = classify_map(x, tf.middle, tf.j);
      std::vector<Report> rs;
      rs.push_back(boolean_report("first-factor-anodyne", jc.pointwise_anodyne,
                                  "first factor not pointwise anodyne"));
      rs.push_back(boolean_report(
          "second-factor-p-fibration",
          is_p_fibration(u, tf.middle, term, tf.q),
          "second factor not a p-fibration"));
      rs.push_back(boolean_report("middle-p-fibrant",
                                  is_p_fibrant(u, tf.middle),
                                  "middle diagram not p-fibrant"));
      return emit("tribe factorize", rs, format);
    }
    if (*zgroup) {
      GroupZoo z = group_zoo(group_name);
      std::filesystem::create_directories(out_dir);
      std::filesystem::path dir(out_dir);
      write_text_file(dir / (group_name + ".cat"), write_category(z.cat));
      write_text_file(dir / "r0.cat", write_category(z.pres.R0));
      write_text_file(dir / "c.fun",
                      write_functor(z.pres.c, "r0.cat", group_name + ".cat"));
      write_text_file(dir / (group_name + ".pres"),
                      "presentation\nr0 r0.cat\nr " + group_name +
                          ".cat\nc c.fun\nend\n");
      write_text_file(dir / (group_name + ".reedy"),
                      write_reedy_annotation(z.reedy));
      ReedyStructure s0;
      s0.base = z.pres.R0;
      s0.degree = {{"pt", 0}};
      s0.plus = {"id_pt"};
      s0.minus = {"id_pt"};
      write_text_file(dir / "r0.reedy", write_reedy_annotation(s0));
      return emit("zoo group", {boolean_report("zoo-group", true, "")}, format);
    }
    if (*zcube) {
      CubeZoo z = cube_category(CubeSpec{cube_dim, symmetries, degeneracies});
      std::filesystem::create_directories(out_dir);
      std::filesystem::path dir(out_dir);
      write_text_file(dir / "cube.cat", write_category(z.cat));
      write_text_file(dir / "cube.reedy", write_reedy_annotation(z.reedy));
      if (z.pres) {
        write_text_file(dir / "cube0.cat", write_category(z.pres->R0));
        write_text_file(dir / "c.fun",
                        write_functor(z.pres->c, "cube0.cat", "cube.cat"));
        write_text_file(dir / "cube.pres",
                        "presentation\nr0 cube0.cat\nr cube.cat\nc c.fun\nend\n");
        write_text_file(dir / "cube0.reedy", write_reedy_annotation(*z.reedy0));
      }
      return emit("zoo cube", {boolean_report("zoo-cube", true, "")}, format);
    }
    if (*verify) {
      return emit("verify-paper", run_verification_suite(), format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == "ParseError" || e.code() == "IOError") return 2;
    if (e.code() == "InternalError") return 3;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
