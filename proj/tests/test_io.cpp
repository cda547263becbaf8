#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "catwb/io.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

namespace {

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "catwb-io-test";
  std::filesystem::create_directories(d);
  return d;
}

void put(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("categories round-trip through the text format") {
  for (const auto& e : small_catalog()) {
    std::string text = write_category(e.cat);
    FinCat back = parse_category(text);
    CHECK(sorted_copy(e.cat).objects == back.objects);
    CHECK(sorted_copy(e.cat).table == back.table);
    // Canonical: writing again is bit-identical.
    CHECK(write_category(back) == text);
  }
}

TEST_CASE("parsing tolerates comments and odd whitespace") {
  FinCat c = parse_category(
      "category  # the one-object category\n"
      "objects pt\n"
      "arrows\n   id_pt - pt\tpt\n"
      "identities pt id_pt\n"
      "compose id_pt id_pt id_pt\n"
      "end\n");
  CHECK(c.objects == std::vector<std::string>{"pt"});
  CHECK(c.arrows.size() == 1);
}

TEST_CASE("parse errors carry the ParseError code") {
  for (const std::string& bad :
       {std::string("categry\n"), std::string("category\nbogus\n"),
        std::string("category\nobjects a\nidentities a")}) {
    bool threw = false;
    try {
      parse_category(bad);
    } catch (const Error& e) {
      threw = true;
      CHECK((e.code() == "ParseError" || e.code() == "MissingComposite"));
    }
    CHECK(threw);
  }
}

TEST_CASE("invalid tables fail validation on read") {
  bool threw = false;
  try {
    parse_category(
        "category\nobjects x\narrows id_x - x x\nidentities x id_x\n"
        "compose\nend\n");
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == "MissingComposite");
  }
  CHECK(threw);
}

TEST_CASE("functor and presentation files resolve relative paths") {
  auto dir = temp_dir();
  put(dir / "t.cat", write_category(terminal_category()));
  put(dir / "z2.cat", write_category(group_zoo("Z2").cat));
  put(dir / "c.fun",
      "functor\nsource t.cat\ntarget z2.cat\n"
      "objects pt *\narrows id_pt e\nend\n");
  FinFunctor c = read_functor_file(dir / "c.fun");
  CHECK(c.on_object("pt") == "*");
  put(dir / "p.pres", "presentation\nr0 t.cat\nr z2.cat\nc c.fun\nend\n");
  AmalgamPresentation pres = read_presentation_file(dir / "p.pres");
  CHECK(pres.is_c_identity("e"));

  bool threw = false;
  try {
    read_functor_file(dir / "missing.fun");
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == "IOError");
  }
  CHECK(threw);
}

TEST_CASE("diagram files") {
  auto dir = temp_dir();
  put(dir / "shape.cat", write_category(chain_poset(2)));
  put(dir / "wi.cat", write_category(walking_iso()));
  put(dir / "t.cat", write_category(terminal_category()));
  put(dir / "a.fun",
      "functor\nsource wi.cat\ntarget wi.cat\n"
      "objects a a b b\narrows id_a id_a id_b id_b f f finv finv\nend\n");
  put(dir / "b.fun",
      "functor\nsource t.cat\ntarget t.cat\nobjects pt pt\n"
      "arrows id_pt id_pt\nend\n");
  put(dir / "e.fun",
      "functor\nsource t.cat\ntarget wi.cat\nobjects pt a\n"
      "arrows id_pt id_a\nend\n");
  put(dir / "x.diag",
      "diagram\nshape shape.cat\n"
      "value c0 wi.cat c1 t.cat\n"
      "action c0<=c0 a.fun c1<=c1 b.fun c0<=c1 e.fun\nend\n");
  Diagram d = read_diagram_file(dir / "x.diag");
  CHECK(d.at("c0").objects.size() == 2);
  CHECK(d.along("c0<=c1").on_object("pt") == "a");
}

TEST_CASE("reedy annotations round-trip") {
  ReedyAnnotation ann = parse_reedy_annotation(
      "reedy\ndegrees c0 0 c1 1\nplus c0<=c0 c1<=c1 c0<=c1\n"
      "minus c0<=c0 c1<=c1\nend\n");
  ReedyStructure s = apply_annotation(chain_poset(2), ann);
  CHECK(s.degree.at("c1") == 1);
  CHECK(s.plus.count("c0<=c1") == 1);
  ReedyAnnotation back = parse_reedy_annotation(write_reedy_annotation(s));
  CHECK(back.degree == ann.degree);
  CHECK(back.plus == ann.plus);
  CHECK(back.minus == ann.minus);
}

TEST_CASE("report serialization") {
  Report ok("demo");
  ok.note("fine");
  Report bad("other");
  bad.violation("something failed");
  std::string j = reports_to_json("cmd", {ok, bad});
  CHECK(j.find("\"schema\": 1") != std::string::npos);
  CHECK(j.find("\"pass\": false") != std::string::npos);
  std::string t = reports_to_text("cmd", {ok, bad});
  CHECK(t.find("FAIL") != std::string::npos);
  CHECK(report_to_json(ok).find("\"name\": \"demo\"") != std::string::npos);
}
