#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "catwb/fincat.hpp"
#include "catwb/zoo.hpp"

using namespace catwb;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("category validation catches broken tables") {
  FinCat c;
  c.add_object("x");
  c.add_arrow("id_x", "x", "x");
  c.set_identity("x", "id_x");
  CHECK(code_of([&] { validate_category(c); }) == "MissingComposite");
  c.set_compose("id_x", "id_x", "id_x");
  CHECK_NOTHROW(validate_category(c));

  FinCat bad = walking_idempotent();
  bad.set_compose("id_x", "e", "id_x");
  Report r = category_report(bad);
  CHECK_FALSE(r.pass);
}

TEST_CASE("identity law violations are reported") {
  FinCat c;
  c.add_object("x");
  c.add_arrow("id_x", "x", "x");
  c.add_arrow("e", "x", "x");
  c.set_identity("x", "id_x");
  c.set_compose("id_x", "id_x", "id_x");
  c.set_compose("id_x", "e", "e");
  c.set_compose("e", "id_x", "id_x");  // wrong
  c.set_compose("e", "e", "e");
  CHECK(code_of([&] { validate_category(c); }) == "IdentityLawViolation");
}

TEST_CASE("opposite is an involution") {
  for (const auto& e : small_catalog()) {
    FinCat oo = opposite(opposite(e.cat));
    CHECK(oo.objects == e.cat.objects);
    CHECK(oo.table == e.cat.table);
    CHECK_NOTHROW(validate_category(opposite(e.cat)));
  }
}

TEST_CASE("isomorphism and gauntness predicates") {
  FinCat wi = walking_iso();
  CHECK(is_iso(wi, "f"));
  CHECK(inverse_of(wi, "f") == std::optional<std::string>{"finv"});
  CHECK_FALSE(is_gaunt(wi));
  CHECK(is_gaunt(chain_poset(3)));
  CHECK(is_connected(wi));
  CHECK_FALSE(is_connected(discrete_category(2)));
  CHECK(is_connected(terminal_category()));
}

TEST_CASE("functor validation and composition") {
  FinCat t = terminal_category();
  FinCat wi = walking_iso();
  FinFunctor inc;
  inc.source = t;
  inc.target = wi;
  inc.omap = {{"pt", "a"}};
  inc.amap = {{"id_pt", "id_a"}};
  CHECK_NOTHROW(validate_functor(inc));
  CHECK(is_fully_faithful(inc));
  CHECK(is_essentially_surjective(inc));
  CHECK(is_equivalence(inc));
  CHECK(is_injective_on_objects(inc));
  CHECK_FALSE(is_cat_isomorphism(inc));

  FinFunctor broken = inc;
  broken.amap["id_pt"] = "f";
  CHECK_FALSE(functor_report(broken).pass);

  FinFunctor idw = identity_functor(wi);
  CHECK(is_cat_isomorphism(idw));
  FinFunctor comp = compose_functors(idw, inc);
  CHECK(comp.omap == inc.omap);
}

TEST_CASE("functor enumeration is exhaustive on small categories") {
  // Terminal -> walking iso: one functor per object.
  CHECK(enumerate_functors(terminal_category(), walking_iso()).size() == 2);
  // Walking idempotent -> terminal: exactly one.
  CHECK(enumerate_functors(walking_idempotent(), terminal_category()).size() ==
        1);
  // Chain2 -> chain2: monotone maps on a 2-chain: 3.
  CHECK(enumerate_functors(chain_poset(2), chain_poset(2)).size() == 3);
  for (const auto& f :
       enumerate_functors(parallel_pair(), walking_idempotent()))
    CHECK(functor_report(f).pass);
}

TEST_CASE("limits over discrete and empty shapes") {
  FinCat d2 = discrete_category(2);
  CatDiagram prod;
  prod.index = d2;
  prod.value["d0"] = chain_poset(2);
  prod.value["d1"] = chain_poset(2);
  prod.edge["id_d0"] = identity_functor(chain_poset(2));
  prod.edge["id_d1"] = identity_functor(chain_poset(2));
  LimitResult lim = finite_limit(prod);
  CHECK(lim.cat.objects.size() == 4);
  CHECK_NOTHROW(validate_category(lim.cat));
  CHECK(functor_report(lim.projection.at("d0")).pass);

  CatDiagram empty;
  LimitResult term = finite_limit(empty);
  CHECK(term.cat.objects.size() == 1);
  CHECK(term.cat.arrows.size() == 1);
}

TEST_CASE("equalizer-style limit identifies fixed points") {
  // Parallel pair of functors discrete2 -> discrete2: identity and swap.
  FinCat d2 = discrete_category(2);
  FinFunctor sw;
  sw.source = d2;
  sw.target = d2;
  sw.omap = {{"d0", "d1"}, {"d1", "d0"}};
  sw.amap = {{"id_d0", "id_d1"}, {"id_d1", "id_d0"}};
  CatDiagram d;
  d.index = parallel_pair();
  d.value["a"] = d2;
  d.value["b"] = d2;
  d.edge["id_a"] = identity_functor(d2);
  d.edge["id_b"] = identity_functor(d2);
  d.edge["u"] = identity_functor(d2);
  d.edge["v"] = sw;
  // Families (x, y) with y = x and y = swap(x): none.
  CHECK(finite_limit(d).cat.objects.empty());
}

TEST_CASE("mediating cones into limits") {
  FinCat d2 = discrete_category(2);
  FinCat c2 = chain_poset(2);
  CatDiagram prod;
  prod.index = d2;
  prod.value["d0"] = c2;
  prod.value["d1"] = c2;
  prod.edge["id_d0"] = identity_functor(c2);
  prod.edge["id_d1"] = identity_functor(c2);
  LimitResult lim = finite_limit(prod);
  std::map<std::string, FinFunctor> cone;
  cone["d0"] = identity_functor(c2);
  cone["d1"] = identity_functor(c2);
  auto m = mediate_cone(prod, lim, c2, cone);
  REQUIRE(m.has_value());
  CHECK(functor_report(*m).pass);
  CHECK(check_cone_universal(prod, lim, c2, cone));
  for (const auto& o : prod.index.objects) {
    FinFunctor leg = compose_functors(lim.projection.at(o), *m);
    CHECK(leg.omap == cone.at(o).omap);
  }
}

TEST_CASE("comma categories have the advertised objects and squares") {
  FinCat t = terminal_category();
  FinCat wi = walking_iso();
  FinFunctor at_a, at_b;
  at_a.source = t;
  at_a.target = wi;
  at_a.omap = {{"pt", "a"}};
  at_a.amap = {{"id_pt", "id_a"}};
  at_b = at_a;
  at_b.omap = {{"pt", "b"}};
  at_b.amap = {{"id_pt", "id_b"}};
  CommaResult c = comma_category(at_a, at_b);
  // Objects: arrows a -> b in the walking iso: just f.
  CHECK(c.cat.objects.size() == 1);
  CHECK(c.cat.has_object(comma_object_id("pt", "pt", "f")));
  CHECK_NOTHROW(validate_category(c.cat));
  CHECK(functor_report(c.proj_left).pass);
  CHECK(functor_report(c.proj_right).pass);

  FinFunctor idw = identity_functor(wi);
  CommaResult arrows = comma_category(idw, idw);
  CHECK(arrows.cat.objects.size() == wi.arrows.size());
}
