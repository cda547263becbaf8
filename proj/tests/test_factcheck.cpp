#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catwb/factcheck.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

namespace {

FinFunctor include_point(const FinCat& target, const std::string& obj) {
  FinFunctor f;
  f.source = terminal_category();
  f.target = target;
  f.omap = {{"pt", obj}};
  f.amap = {{"id_pt", target.id_arrow(obj)}};
  return validate_functor(f);
}

ReedyStructure trivial_structure(const FinCat& base) {
  ReedyStructure s;
  s.base = base;
  for (const auto& o : base.objects) s.degree[o] = 0;
  for (const auto& a : base.arrows) {
    s.plus.insert(a.id);
    s.minus.insert(a.id);
  }
  return s;
}

}  // namespace

TEST_CASE("factorization categories of an identity functor") {
  FinCat c2 = chain_poset(2);
  FinFunctor idc = identity_functor(c2);
  FactorizationCategory fc = factorization_category(idc, "c0<=c1");
  // Factorizations through an object: via c0 or via c1.
  CHECK(fc.cat.objects.size() == 2);
  CHECK(is_connected(fc.cat));
  CHECK(check_absolutely_dense(idc).pass);
}

TEST_CASE("a dense but non-surjective inclusion") {
  // Including one endpoint of the walking iso is dense: each hom set is a
  // singleton, so every factorization category is a single point.
  FinFunctor inc = include_point(walking_iso(), "a");
  CHECK(check_absolutely_dense(inc).pass);

  // The point of the walking idempotent is not dense: e does not split, so
  // the idempotent's factorizations through x fall apart into components.
  FinFunctor idem = include_point(walking_idempotent(), "x");
  CHECK_FALSE(check_absolutely_dense(idem).pass);
}

TEST_CASE("discrete inclusion into the walking iso is not dense") {
  FinCat wi = walking_iso();
  FinFunctor f;
  f.source = discrete_category(2);
  f.target = wi;
  f.omap = {{"d0", "a"}, {"d1", "b"}};
  f.amap = {{"id_d0", "id_a"}, {"id_d1", "id_b"}};
  validate_functor(f);
  Report r = check_absolutely_dense(f);
  CHECK_FALSE(r.pass);
  // The identity of a factors through both objects, in incomparable ways.
  FactorizationCategory fc = factorization_category(f, "id_a");
  CHECK(fc.cat.objects.size() > 1);
  CHECK_FALSE(is_connected(fc.cat));
}

TEST_CASE("the empty-or-connected cofibering check") {
  FinCat c2 = chain_poset(2);
  ReedyStructure s = trivial_structure(c2);
  s.degree = {{"c0", 0}, {"c1", 1}};
  s.plus = {"c0<=c0", "c1<=c1", "c0<=c1"};
  s.minus = {"c0<=c0", "c1<=c1"};
  FinFunctor idc = identity_functor(c2);
  CHECK(check_cofibering(idc, s, s).pass);
  CHECK(check_fibering(idc, s, s).pass);
}

TEST_CASE("plus-factorization categories have the expected objects") {
  FinCat c2 = chain_poset(2);
  ReedyStructure s;
  s.base = c2;
  s.degree = {{"c0", 0}, {"c1", 1}};
  s.plus = {"c0<=c0", "c1<=c1", "c0<=c1"};
  s.minus = {"c0<=c0", "c1<=c1"};
  FinFunctor idc = identity_functor(c2);
  FactPlusCategory fp = fact_plus_category(idc, s, s, "c0", "c1", "c0<=c1");
  // sigma = G(nu) o mu with nu in plus: through c0 (nu the whole arrow) or
  // through c1 (nu an identity).
  CHECK(fp.cat.objects.size() == 2);
  CHECK(is_connected(fp.cat));
}

TEST_CASE("identity functors are Grothendieck fibrations, sections are not") {
  FinCat wi = walking_iso();
  CHECK(check_grothendieck_fibration(identity_functor(wi)).pass);

  // Including the point at a: the arrow f^{-1} : b -> a has no lift at all.
  Report r = check_grothendieck_fibration(include_point(wi, "a"));
  CHECK_FALSE(r.pass);
}

TEST_CASE("comma of p over p is generalized Reedy with degree sums") {
  GroupZoo z = group_zoo("Z2");
  UnrolledCategory u = build_DR(z.pres);
  ReedyStructure s0;
  s0.base = terminal_category();
  s0.degree = {{"pt", 0}};
  s0.plus = {"id_pt"};
  s0.minus = {"id_pt"};
  ReedyStructure induced = induce_DR_structure(u, z.reedy, s0);
  CommaOverR c = comma_p_over_p(u, induced);
  CHECK(check_generalized_reedy(c.reedy).pass);
  CHECK(functor_report(c.pi0).pass);
  CHECK(functor_report(c.pi1).pass);
  CHECK(check_grothendieck_fibration(c.pi0).pass);
  CHECK(check_cofibering(c.pi0, c.reedy, induced).pass);

  for (const auto& alpha : u.category.objects) {
    FiberPAlpha fib = fiber_P_alpha(u, z.reedy, induced, c, alpha);
    CHECK_NOTHROW(validate_category(fib.cat));
    CHECK_FALSE(fib.cat.objects.empty());
    for (const auto& [obj, deg] : fib.first_degree)
      CHECK(deg <= fib.base_degree + 1);
  }
}
