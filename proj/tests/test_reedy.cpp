#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catwb/reedy.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

namespace {

ReedyStructure chain2_structure() {
  ReedyStructure s;
  s.base = chain_poset(2);
  s.degree = {{"c0", 0}, {"c1", 1}};
  s.plus = {"c0<=c0", "c1<=c1", "c0<=c1"};
  s.minus = {"c0<=c0", "c1<=c1"};
  return s;
}

}  // namespace

TEST_CASE("a chain is strict Reedy") {
  ReedyStructure s = chain2_structure();
  CHECK(check_generalized_reedy(s).pass);
  CHECK(check_strict(s).pass);
  CHECK(check_generalized_direct(s).pass);
  CHECK(check_unique_factorization(s).pass);
  auto f = unique_factorization(s, "c0<=c1");
  REQUIRE(f.has_value());
  CHECK(f->first == "c0<=c0");
  CHECK(f->second == "c0<=c1");
}

TEST_CASE("degree violations are caught") {
  ReedyStructure s = chain2_structure();
  s.degree["c1"] = 0;  // the plus arrow no longer raises
  CHECK_FALSE(check_generalized_reedy(s).pass);

  ReedyStructure t = chain2_structure();
  t.plus.erase("c0<=c1");  // now nothing factors the arrow
  CHECK_FALSE(check_generalized_reedy(t).pass);

  ReedyStructure u = chain2_structure();
  u.minus.insert("c0<=c1");  // plus and minus overlap beyond the isos
  CHECK_FALSE(check_generalized_reedy(u).pass);
}

TEST_CASE("groups are generalized but not strict") {
  GroupZoo s3 = group_zoo("S3");
  CHECK(check_generalized_reedy(s3.reedy).pass);
  CHECK_FALSE(check_strict(s3.reedy).pass);
  // Factorizations exist but are only unique up to isomorphism.
  CHECK_FALSE(check_unique_factorization(s3.reedy).pass);
}

TEST_CASE("diamond poset carries an evident strict structure") {
  ReedyStructure s;
  s.base = diamond_poset();
  s.degree = {{"bot", 0}, {"left", 1}, {"right", 1}, {"top", 2}};
  for (const auto& a : s.base.arrows) {
    s.plus.insert(a.id);
    if (s.base.is_identity(a.id)) s.minus.insert(a.id);
  }
  CHECK(check_strict(s).pass);
  for (const auto& a : s.base.arrows) {
    auto f = unique_factorization(s, a.id);
    REQUIRE(f.has_value());
    CHECK(s.base.compose(f->second, f->first) == a.id);
  }
}

TEST_CASE("lifting condition holds for group and cube presentations") {
  ReedyStructure s0;
  s0.base = terminal_category();
  s0.degree = {{"pt", 0}};
  s0.plus = {"id_pt"};
  s0.minus = {"id_pt"};
  CHECK(check_lifting_condition(group_zoo("S3").pres, s0).pass);

  CubeZoo cubes = cube_category({2, true, false});
  CHECK(check_lifting_condition(*cubes.pres, *cubes.reedy0).pass);
}

TEST_CASE("lifting condition fails without enough isomorphisms") {
  // Include the terminal category at 'a' of the parallel pair: the arrows
  // a -> b cannot be straightened by isomorphisms.
  FinCat pp = parallel_pair();
  FinFunctor c;
  c.source = terminal_category();
  c.target = pp;
  c.omap = {{"pt", "a"}};
  c.amap = {{"id_pt", "id_a"}};
  AmalgamPresentation pres = make_presentation(terminal_category(), pp, c);
  ReedyStructure s0;
  s0.base = terminal_category();
  s0.degree = {{"pt", 0}};
  s0.plus = {"id_pt"};
  s0.minus = {"id_pt"};
  Report r = check_lifting_condition(pres, s0);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
}
