#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catwb/reedy.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

TEST_CASE("group tables") {
  CHECK_NOTHROW(validate_group(group_table_zn(4)));
  GroupTable s3 = group_table_s3();
  CHECK(s3.elements.size() == 6);
  CHECK_NOTHROW(validate_group(s3));

  GroupTable bad = group_table_zn(2);
  bad.mult[{"g", "g"}] = "g";  // no longer has inverses
  bool threw = false;
  try {
    validate_group(bad);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == "NotAGroup");
  }
  CHECK(threw);
}

TEST_CASE("group categories come with valid presentation data") {
  ReedyStructure s0;
  s0.base = terminal_category();
  s0.degree = {{"pt", 0}};
  s0.plus = {"id_pt"};
  s0.minus = {"id_pt"};
  for (const std::string& name : {"Z2", "Z3", "S3"}) {
    GroupZoo z = group_zoo(name);
    CHECK_NOTHROW(validate_category(z.cat));
    CHECK(z.cat.objects.size() == 1);
    CHECK(check_generalized_reedy(z.reedy).pass);
    CHECK(check_generalized_direct(z.reedy).pass);
    CHECK(check_lifting_condition(z.pres, s0).pass);
  }
  CHECK(group_zoo("S3").cat.arrows.size() == 6);
}

TEST_CASE("cube categories without symmetries are strict Reedy") {
  CubeZoo c = cube_category({2, false, false});
  CHECK_NOTHROW(validate_category(c.cat));
  // Injections with constants: hom([0],[1]) has the two endpoints, and
  // hom([1],[2]) has the four faces.
  CHECK(c.cat.hom("0", "1").size() == 2);
  CHECK(c.cat.hom("1", "2").size() == 4);
  CHECK(c.cat.hom("2", "1").empty());
  CHECK(check_strict(c.reedy).pass);
  CHECK(is_gaunt(c.cat));
}

TEST_CASE("cube categories with symmetries are generalized Reedy") {
  CubeZoo c = cube_category({2, true, false});
  CHECK_NOTHROW(validate_category(c.cat));
  // The swap on the square is a non-identity automorphism.
  int auts = 0;
  for (const auto& a : c.cat.hom("2", "2"))
    if (is_iso(c.cat, a)) ++auts;
  CHECK(auts == 2);
  CHECK_FALSE(is_gaunt(c.cat));
  CHECK(check_generalized_reedy(c.reedy).pass);
  CHECK(check_generalized_direct(c.reedy).pass);
  CHECK_FALSE(check_strict(c.reedy).pass);
  REQUIRE(c.pres.has_value());
  REQUIRE(c.reedy0.has_value());
  CHECK(check_strict(*c.reedy0).pass);
  CHECK(check_lifting_condition(*c.pres, *c.reedy0).pass);
}

TEST_CASE("cubes with degeneracies have a genuine minus class") {
  CubeZoo c = cube_category({2, false, true});
  CHECK_NOTHROW(validate_category(c.cat));
  CHECK(c.cat.hom("1", "0").size() == 1);  // the projection
  CHECK(check_strict(c.reedy).pass);
  bool has_noniso_minus = false;
  for (const auto& a : c.reedy.minus)
    if (!is_iso(c.cat, a)) has_noniso_minus = true;
  CHECK(has_noniso_minus);
}

TEST_CASE("small catalog has the advertised shapes") {
  std::vector<CatalogEntry> cat = small_catalog();
  CHECK(cat.size() >= 10);
  std::set<std::string> names;
  for (const auto& e : cat) {
    CHECK(names.insert(e.name).second);
    CHECK_NOTHROW(validate_category(e.cat));
    CHECK(e.gaunt == is_gaunt(e.cat));
  }
}

TEST_CASE("posets") {
  FinCat d = diamond_poset();
  CHECK(d.objects.size() == 4);
  CHECK(d.hom("bot", "top").size() == 1);
  CHECK(d.hom("left", "right").empty());
  CHECK_NOTHROW(validate_category(d));
  FinCat c3 = chain_poset(3);
  CHECK(c3.arrows.size() == 6);
  CHECK(is_gaunt(c3));
}
