#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catwb/unroll.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

namespace {

UnrolledCategory unroll_group(const std::string& name) {
  return build_DR(group_zoo(name).pres);
}

ReedyStructure terminal_structure() {
  ReedyStructure s;
  s.base = terminal_category();
  s.degree = {{"pt", 0}};
  s.plus = {"id_pt"};
  s.minus = {"id_pt"};
  return s;
}

}  // namespace

TEST_CASE("unrolling the order-two group") {
  UnrolledCategory u = unroll_group("Z2");
  // Objects: identity at *, the unit arrow [e] seen through c, and the free
  // iso [g]: three objects up to the normal-form identification [e] = empty.
  CHECK(u.category.objects.size() == 2);
  CHECK(u.category.has_object(dr_object_id(nf_identity(u.pres, "*"))));
  CHECK_NOTHROW(validate_category(u.category));
  CHECK(functor_report(u.projection).pass);
  CHECK(is_gaunt(u.category));

  // Every object records its decomposition.
  for (const auto& o : u.category.objects) {
    const DRObject& d = u.object_data.at(o);
    CHECK(dr_object_id(d.word) == o);
    CHECK(is_normal_form(u.pres, d.word));
  }
}

TEST_CASE("morphisms are twisted-arrow squares") {
  UnrolledCategory u = unroll_group("Z3");
  for (const auto& a : u.category.arrows) {
    if (u.category.is_identity(a.id)) continue;
    const DRMorphism& m = u.morphism_data.at(a.id);
    const NFWord& x = u.object_data.at(m.from).word;
    const NFWord& y = u.object_data.at(m.to).word;
    NFWord composite = nf_compose(u.pres, m.f2, nf_compose(u.pres, x, m.f));
    CHECK(nf_equal(composite, y));
  }
}

TEST_CASE("projection sends a square to its bottom composite") {
  UnrolledCategory u = unroll_group("Z2");
  for (const auto& a : u.category.arrows) {
    if (u.category.is_identity(a.id)) continue;
    const DRMorphism& m = u.morphism_data.at(a.id);
    CHECK(u.projection.on_arrow(a.id) == p0_apply(u.pres, m.f2));
  }
}

TEST_CASE("degrees and the induced strict structure") {
  GroupZoo z = group_zoo("Z2");
  UnrolledCategory u = build_DR(z.pres);
  ReedyStructure s = induce_DR_structure(u, z.reedy, terminal_structure());
  CHECK(check_strict(s).pass);
  std::set<int> degrees;
  for (const auto& o : u.category.objects)
    degrees.insert(degree_DR(u, z.reedy, o));
  CHECK(degrees == std::set<int>{0, 1});

  for (const auto& a : u.category.arrows) {
    auto [mi, pl] = reedy_factor_DR(u, s, a.id);
    CHECK(s.minus.count(mi) == 1);
    CHECK(s.plus.count(pl) == 1);
    CHECK(u.category.compose(pl, mi) == a.id);
  }
}

TEST_CASE("negative degrees are rejected loudly") {
  GroupZoo z = group_zoo("Z2");
  UnrolledCategory u = build_DR(z.pres);
  ReedyStructure skew = z.reedy;
  skew.degree["*"] = 3;  // fine: differences still vanish
  CHECK_NOTHROW(degree_DR(u, skew, u.category.objects.front()));

  // A two-object base where the degree drops along the unrolled word.
  CubeZoo cubes = cube_category({1, true, false});
  REQUIRE(cubes.pres.has_value());
  UnrolledCategory cu = build_DR(*cubes.pres);
  ReedyStructure bad = cubes.reedy;
  bad.degree["0"] = 5;
  bad.degree["1"] = 0;
  bool threw = false;
  for (const auto& o : cu.category.objects) {
    try {
      degree_DR(cu, bad, o);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.code() == "NegativeDegree");
    }
  }
  CHECK(threw);
}

TEST_CASE("component shapes parse back to their parts") {
  CubeZoo cubes = cube_category({2, true, false});
  UnrolledCategory u = build_DR(*cubes.pres);
  for (const auto& o : u.category.objects) {
    const DRObject& d = u.object_data.at(o);
    auto shape = parse_component_shape(u.pres, d.word);
    REQUIRE(shape.has_value());
    CHECK(shape->first == d.r0_arrow);
    CHECK(shape->second == d.iso_letter);
  }
}

TEST_CASE("symmetric square cubes unroll to the expected size") {
  CubeZoo cubes = cube_category({2, true, false});
  UnrolledCategory u = build_DR(*cubes.pres);
  // 3 identities + 10 monotone non-identities + 8 face-then-swap words + the
  // swap itself.
  CHECK(u.category.objects.size() == 22);
  ReedyStructure s =
      induce_DR_structure(u, cubes.reedy, *cubes.reedy0);
  CHECK(check_strict(s).pass);
}
