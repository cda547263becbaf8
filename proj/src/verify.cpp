#include "catwb/verify.hpp"

#include <algorithm>
#include <random>

#include "catwb/cattribe.hpp"
#include "catwb/factcheck.hpp"
#include "catwb/fincat.hpp"
#include "catwb/freecat.hpp"
#include "catwb/reedy.hpp"
#include "catwb/unroll.hpp"
#include "catwb/zoo.hpp"

namespace catwb {

namespace {

// Terminal-base Reedy structure used as the upstream structure for groups.
ReedyStructure terminal_structure(const FinCat& pt) {
  ReedyStructure s;
  s.base = pt;
  for (const auto& o : pt.objects) {
    s.degree[o] = 0;
    s.plus.insert(pt.id_arrow(o));
    s.minus.insert(pt.id_arrow(o));
  }
  return s;
}

struct UnrollFixture {
  AmalgamPresentation pres;
  ReedyStructure s_r;   // on R
  ReedyStructure s0;    // on R0
  UnrolledCategory u;
  ReedyStructure induced;
};

UnrollFixture group_fixture(const std::string& name) {
  UnrollFixture f;
  GroupZoo z = group_zoo(name);
  f.pres = z.pres;
  f.s_r = z.reedy;
  f.s0 = terminal_structure(z.pres.R0);
  f.u = build_DR(f.pres);
  f.induced = induce_DR_structure(f.u, f.s_r, f.s0);
  return f;
}

UnrollFixture cube_fixture() {
  UnrollFixture f;
  CubeZoo z = cube_category(CubeSpec{2, true, false});
  f.pres = *z.pres;
  f.s_r = z.reedy;
  f.s0 = *z.reedy0;
  f.u = build_DR(f.pres);
  f.induced = induce_DR_structure(f.u, f.s_r, f.s0);
  return f;
}

std::vector<std::pair<std::string, UnrollFixture>> all_fixtures() {
  std::vector<std::pair<std::string, UnrollFixture>> out;
  out.emplace_back("Z2", group_fixture("Z2"));
  out.emplace_back("Z3", group_fixture("Z3"));
  out.emplace_back("S3", group_fixture("S3"));
  out.emplace_back("semicube", cube_fixture());
  return out;
}

std::string id_object(const UnrolledCategory& u, const std::string& r_obj) {
  return dr_object_id(nf_identity(u.pres, r_obj));
}

Diagram group_diagram(const FinCat& gcat, const FinCat& value,
                      const std::map<std::string, FinFunctor>& actions) {
  Diagram d;
  d.shape = gcat;
  d.value["*"] = value;
  d.action = actions;
  validate_diagram(d);
  return d;
}

Diagram trivial_group_diagram(const FinCat& gcat, const FinCat& value) {
  std::map<std::string, FinFunctor> actions;
  for (const auto& a : gcat.arrows) actions[a.id] = identity_functor(value);
  return group_diagram(gcat, value, actions);
}

FinFunctor swap_discrete2(const FinCat& d2) {
  FinFunctor f;
  f.source = d2;
  f.target = d2;
  f.omap = {{"d0", "d1"}, {"d1", "d0"}};
  f.amap = {{"id_d0", "id_d1"}, {"id_d1", "id_d0"}};
  return validate_functor(f);
}

FinFunctor rotate_discrete3(const FinCat& d3) {
  FinFunctor f;
  f.source = d3;
  f.target = d3;
  f.omap = {{"d0", "d1"}, {"d1", "d2"}, {"d2", "d0"}};
  f.amap = {{"id_d0", "id_d1"}, {"id_d1", "id_d2"}, {"id_d2", "id_d0"}};
  return validate_functor(f);
}

bool functors_equal(const FinFunctor& a, const FinFunctor& b) {
  return a.omap == b.omap && a.amap == b.amap;
}

}  // namespace

Report verify_unrolled_z2_shape() {
  Report r("criterion-1-unrolled-Z2-shape");
  UnrollFixture f = group_fixture("Z2");
  const FinCat& d = f.u.category;
  if (d.objects.size() != 2)
    r.violation("expected 2 objects, found " +
                std::to_string(d.objects.size()));
  const std::string oid = id_object(f.u, "*");
  std::string og;
  for (const auto& o : d.objects)
    if (o != oid) og = o;
  if (!d.has_object(oid) || og.empty()) {
    r.violation("could not identify the two objects");
    r.finalize();
    return r;
  }
  if (d.hom(oid, og).size() != 2)
    r.violation("expected 2 parallel morphisms from the identity object, found " +
                std::to_string(d.hom(oid, og).size()));
  if (!d.hom(og, oid).empty())
    r.violation("unexpected morphisms back to the identity object");
  auto gg = d.hom(og, og);
  if (gg.size() != 1 || !d.is_identity(gg.front()))
    r.violation("endomorphisms of the loop object are not just the identity");
  r.finalize();
  return r;
}

Report verify_unrolled_two_arrows() {
  Report r("criterion-2-two-arrows-from-identity");
  for (const std::string name : {"Z3", "S3"}) {
    UnrollFixture f = group_fixture(name);
    const FinCat& d = f.u.category;
    const std::string oid = id_object(f.u, "*");
    std::vector<std::string> others;
    for (const auto& o : d.objects)
      if (o != oid) others.push_back(o);
    for (const auto& o : others) {
      if (d.hom(oid, o).size() != 2)
        r.violation(name + ": expected 2 morphisms from identity object to '" +
                    o + "', found " + std::to_string(d.hom(oid, o).size()));
    }
    for (const auto& a : others)
      for (const auto& b : others) {
        if (a == b) continue;
        if (!d.hom(a, b).empty())
          r.violation(name + ": unexpected morphisms '" + a + "' -> '" + b +
                      "'");
      }
  }
  r.finalize();
  return r;
}

Report verify_induced_strict_structure() {
  Report r("criterion-3-induced-strict-structure");
  for (const auto& [name, f] : all_fixtures()) {
    Report strict = check_strict(f.induced);
    if (!strict.pass)
      r.violation(name + ": induced structure not strict: " +
                  strict.witnesses.front());
    Report uniq = check_unique_factorization(f.induced);
    if (!uniq.pass)
      r.violation(name + ": factorization not strictly unique: " +
                  uniq.witnesses.front());
    for (const auto& a : f.u.category.arrows) {
      auto fac = reedy_factor_DR(f.u, f.induced, a.id);
      auto exhaustive = unique_factorization(f.induced, a.id);
      if (!exhaustive || *exhaustive != fac) {
        r.violation(name + ": constructive factorization of '" + a.id +
                    "' disagrees with exhaustive search");
        break;
      }
    }
  }
  r.finalize();
  return r;
}

Report verify_absolute_density() {
  Report r("criterion-4-absolute-density");
  for (const auto& [name, f] : all_fixtures()) {
    Report lift = check_lifting_condition(f.pres, f.s0);
    if (!lift.pass) {
      r.violation(name + ": lifting condition fails: " +
                  lift.witnesses.front());
      continue;
    }
    Report dense = check_absolutely_dense(f.u.projection);
    if (!dense.pass)
      r.violation(name + ": projection not absolutely dense: " +
                  dense.witnesses.front());
  }
  // Non-density fixture: the discrete inclusion into the walking iso.
  FinCat d2 = discrete_category(2);
  FinCat wi = walking_iso();
  FinFunctor inc;
  inc.source = d2;
  inc.target = wi;
  inc.omap = {{"d0", "a"}, {"d1", "b"}};
  inc.amap = {{"id_d0", "id_a"}, {"id_d1", "id_b"}};
  validate_functor(inc);
  Report dense = check_absolutely_dense(inc);
  if (dense.pass)
    r.violation("discrete inclusion into the walking iso reported dense");
  FactorizationCategory fc = factorization_category(inc, "f");
  std::set<std::string> roots;
  {
    std::map<std::string, std::string> parent;
    for (const auto& o : fc.cat.objects) parent[o] = o;
    auto find = [&](std::string x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const auto& a : fc.cat.arrows) parent[find(a.dom)] = find(a.cod);
    for (const auto& o : fc.cat.objects) roots.insert(find(o));
  }
  if (roots.size() != 2)
    r.violation("non-density witness has " + std::to_string(roots.size()) +
                " components, expected 2");
  r.finalize();
  return r;
}

Report verify_comma_projection() {
  Report r("criterion-5-comma-projection");
  for (const std::string name : {"Z2", "Z3"}) {
    UnrollFixture f = group_fixture(name);
    CommaOverR c = comma_p_over_p(f.u, f.induced);
    Report fib = check_grothendieck_fibration(c.pi0);
    if (!fib.pass)
      r.violation(name + ": first projection is not a Grothendieck fibration: " +
                  fib.witnesses.front());
    Report cof = check_cofibering(c.pi0, c.reedy, f.induced);
    if (!cof.pass)
      r.violation(name + ": first projection is not cofibering: " +
                  cof.witnesses.front());
    for (const auto& alpha : f.u.category.objects) {
      FiberPAlpha p = fiber_P_alpha(f.u, f.s_r, f.induced, c, alpha);
      for (const auto& [o, deg] : p.first_degree)
        if (deg > p.base_degree + 1)
          r.violation(name + ": fiber over '" + alpha + "' has object '" + o +
                      "' of degree " + std::to_string(deg) + " > bound " +
                      std::to_string(p.base_degree + 1));
    }
  }
  r.finalize();
  return r;
}

Report verify_matching_binary_product() {
  Report r("criterion-6-matching-binary-product");
  UnrollFixture f = group_fixture("Z2");
  FinCat d2 = discrete_category(2);
  std::map<std::string, FinFunctor> actions;
  actions[f.pres.R.id_arrow("*")] = identity_functor(d2);
  for (const auto& a : f.pres.R.arrows)
    if (!f.pres.R.is_identity(a.id)) actions[a.id] = swap_discrete2(d2);
  Diagram x = group_diagram(f.pres.R, d2, actions);
  Diagram s = restrict_along_p(f.u, x);

  const std::string oid = id_object(f.u, "*");
  std::string og;
  for (const auto& o : f.u.category.objects)
    if (o != oid) og = o;

  MatchingResult m = matching_object(s, og);
  if (m.index.objects.size() != 2)
    r.violation("matching index should have the two arrows from the identity "
                "object, found " +
                std::to_string(m.index.objects.size()));
  for (const auto& a : m.index.arrows)
    if (!m.index.is_identity(a.id))
      r.violation("matching index has a non-identity morphism '" + a.id + "'");

  // The matching map has components the two group actions.
  for (const auto& u_arrow : m.index.objects) {
    FinFunctor leg = compose_functors(m.lim.projection.at(u_arrow), m.map);
    const FinFunctor& expect = x.along(f.u.projection.on_arrow(u_arrow));
    if (!functors_equal(leg, expect))
      r.violation("matching component at '" + u_arrow +
                  "' is not the corresponding action");
  }

  // Witness isomorphism to the binary product built independently.
  CatDiagram prod;
  prod.index = discrete_category(2);
  prod.value["d0"] = d2;
  prod.value["d1"] = d2;
  prod.edge["id_d0"] = identity_functor(d2);
  prod.edge["id_d1"] = identity_functor(d2);
  LimitResult plim = finite_limit(prod);
  std::vector<std::string> idx = m.index.objects;
  std::sort(idx.begin(), idx.end());
  std::map<std::string, FinFunctor> cone;
  cone["d0"] = m.lim.projection.at(idx[0]);
  cone["d1"] = m.lim.projection.at(idx[1]);
  auto iso = mediate_cone(prod, plim, m.lim.cat, cone);
  if (!iso || !is_cat_isomorphism(*iso))
    r.violation("no witness isomorphism onto the binary product");
  r.finalize();
  return r;
}

Report verify_gaunt_criterion() {
  Report r("criterion-7-gaunt-fibrancy");
  UnrollFixture f = group_fixture("Z2");
  std::vector<CatalogEntry> catalog = small_catalog();
  if (catalog.size() < 10)
    r.violation("catalog has fewer than 10 entries");
  for (const auto& e : catalog) {
    if (is_gaunt(e.cat) != e.gaunt)
      r.violation("catalog gauntness flag wrong for '" + e.name + "'");
    Diagram x = trivial_group_diagram(f.pres.R, e.cat);
    const bool fib = is_p_fibrant(f.u, x);
    if (fib != e.gaunt)
      r.violation("'" + e.name + "': fibrant=" + (fib ? "true" : "false") +
                  " but gaunt=" + (e.gaunt ? "true" : "false"));
  }
  r.finalize();
  return r;
}

Report verify_unit_isomorphism() {
  Report r("criterion-8-unit-isomorphism");
  UnrollFixture z2 = group_fixture("Z2");
  UnrollFixture z3 = group_fixture("Z3");

  std::vector<std::pair<std::string, std::pair<const UnrollFixture*, Diagram>>>
      samples;
  FinCat d2 = discrete_category(2);
  {
    std::map<std::string, FinFunctor> act;
    act[z2.pres.R.id_arrow("*")] = identity_functor(d2);
    for (const auto& a : z2.pres.R.arrows)
      if (!z2.pres.R.is_identity(a.id)) act[a.id] = swap_discrete2(d2);
    samples.push_back(
        {"Z2-discrete2-swap", {&z2, group_diagram(z2.pres.R, d2, act)}});
  }
  samples.push_back(
      {"Z2-chain2", {&z2, trivial_group_diagram(z2.pres.R, chain_poset(2))}});
  samples.push_back({"Z2-walking-idempotent",
                     {&z2, trivial_group_diagram(z2.pres.R,
                                                 walking_idempotent())}});
  samples.push_back(
      {"Z2-diamond", {&z2, trivial_group_diagram(z2.pres.R, diamond_poset())}});
  FinCat d3 = discrete_category(3);
  {
    FinFunctor rot = rotate_discrete3(d3);
    FinFunctor rot2 = compose_functors(rot, rot);
    std::map<std::string, FinFunctor> act;
    act["e"] = identity_functor(d3);
    act["g"] = rot;
    act["g2"] = rot2;
    samples.push_back(
        {"Z3-discrete3-rotation", {&z3, group_diagram(z3.pres.R, d3, act)}});
  }
  samples.push_back({"Z3-terminal",
                     {&z3, trivial_group_diagram(z3.pres.R,
                                                 terminal_category())}});

  for (const auto& [name, sample] : samples) {
    const UnrollFixture& f = *sample.first;
    const Diagram& x = sample.second;
    Diagram s = restrict_along_p(f.u, x);
    RanResult ran = ran_along_p(f.u, s);
    DiagramMap eta = unit_ran_restrict(f.u, x, ran);
    if (!is_diagram_iso(x, ran.diagram, eta))
      r.violation(name + ": unit comparison is not an isomorphism");
  }
  r.finalize();
  return r;
}

Report verify_factorization_pipeline() {
  Report r("criterion-9-factorization-pipeline");
  UnrollFixture f = group_fixture("Z2");
  Diagram term = terminal_diagram(f.pres.R);

  struct Case {
    std::string name;
    Diagram x, y;
    DiagramMap m;
  };
  std::vector<Case> cases;
  {
    Diagram x = trivial_group_diagram(f.pres.R, chain_poset(2));
    cases.push_back({"identity-on-chain2", x, x, identity_diagram_map(x)});
  }
  {
    Diagram x = trivial_group_diagram(f.pres.R, diamond_poset());
    cases.push_back({"diamond-to-terminal", x, term, map_to_terminal(x, term)});
  }
  {
    FinCat d2 = discrete_category(2);
    std::map<std::string, FinFunctor> act;
    act[f.pres.R.id_arrow("*")] = identity_functor(d2);
    for (const auto& a : f.pres.R.arrows)
      if (!f.pres.R.is_identity(a.id)) act[a.id] = swap_discrete2(d2);
    Diagram x = group_diagram(f.pres.R, d2, act);
    cases.push_back({"swap-to-terminal", x, term, map_to_terminal(x, term)});
  }

  for (const auto& c : cases) {
    if (!is_p_fibrant(f.u, c.x) || !is_p_fibrant(f.u, c.y)) {
      r.violation(c.name + ": endpoints are not p-fibrant");
      continue;
    }
    try {
      TribeFactorization tf = tribe_factorize(f.u, f.induced, c.x, c.y, c.m);
      TribeClassReport jc = classify_map(c.x, tf.middle, tf.j);
      if (!jc.pointwise_anodyne)
        r.violation(c.name + ": first factor not pointwise anodyne");
      if (!is_p_fibration(f.u, tf.middle, c.y, tf.q))
        r.violation(c.name + ": second factor not a p-fibration");
      if (!diagram_maps_equal(compose_diagram_maps(tf.q, tf.j), c.m))
        r.violation(c.name + ": factors do not compose to the input");
      if (!is_p_fibrant(f.u, tf.middle))
        r.violation(c.name + ": middle diagram not p-fibrant");
    } catch (const Error& e) {
      r.violation(c.name + ": pipeline failed: " + e.what());
    }
  }
  r.finalize();
  return r;
}

Report verify_tribe_axioms() {
  Report r("criterion-10-tribe-axioms");
  std::vector<FinCat> cats = {terminal_category(),   discrete_category(2),
                              chain_poset(2),        parallel_pair(),
                              walking_idempotent(),  walking_iso(),
                              group_zoo("Z2").cat};
  const int n = static_cast<int>(cats.size());

  struct PoolEntry {
    int src, dst;
    FinFunctor f;
  };
  std::vector<PoolEntry> all;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& f : enumerate_functors(cats[i], cats[j]))
        all.push_back(PoolEntry{i, j, std::move(f)});
  std::vector<std::size_t> isofibs, anodynes;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (is_isofibration(all[k].f)) isofibs.push_back(k);
    if (is_anodyne_cat(all[k].f)) anodynes.push_back(k);
  }

  std::mt19937 rng(20260823);
  auto pick = [&](const std::vector<std::size_t>& v) -> const PoolEntry& {
    return all[v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(
        rng)]];
  };
  std::vector<std::size_t> everything(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) everything[k] = k;

  // Factorization classes on 50 random functors.
  for (int k = 0; k < 50; ++k) {
    const FinFunctor& f = pick(everything).f;
    CatFactorization cf = factorize_cat(f);
    if (!is_anodyne_cat(cf.j)) r.violation("factorize: first factor not anodyne");
    if (!is_isofibration(cf.q))
      r.violation("factorize: second factor not an isofibration");
    FinFunctor comp = compose_functors(cf.q, cf.j);
    if (comp.omap != f.omap || comp.amap != f.amap)
      r.violation("factorize: factors do not compose to the input");
  }

  // Every isomorphism of categories is an isofibration.
  for (const auto& e : all)
    if (is_cat_isomorphism(e.f) && !is_isofibration(e.f)) {
      r.violation("an isomorphism of categories failed the isofibration test");
      break;
    }

  // Closure of isofibrations under composition (25 instances).
  int done = 0, guard = 0;
  while (done < 25 && guard++ < 20000) {
    const PoolEntry& f = pick(isofibs);
    const PoolEntry& g = pick(isofibs);
    if (g.src != f.dst) continue;
    if (!is_isofibration(compose_functors(g.f, f.f)))
      r.violation("isofibrations not closed under composition");
    ++done;
  }
  if (done < 25) r.violation("could not sample 25 composable isofibrations");

  // Closure under pullback (25 instances): the projection opposite an
  // isofibration leg is an isofibration.
  done = 0;
  guard = 0;
  while (done < 25 && guard++ < 20000) {
    const PoolEntry& f = pick(isofibs);
    const PoolEntry& g = pick(everything);
    if (g.dst != f.dst) continue;
    PullbackResult p = pullback_cat(f.f, g.f);
    if (!is_isofibration(p.to_right))
      r.violation("isofibrations not closed under pullback");
    ++done;
  }
  if (done < 25) r.violation("could not sample 25 pullback instances");

  // Anodyne maps pull back along isofibrations to anodyne maps.
  done = 0;
  guard = 0;
  while (done < 15 && guard++ < 40000) {
    const PoolEntry& a = pick(anodynes);
    const PoolEntry& q = pick(isofibs);
    if (q.dst != a.dst) continue;
    PullbackResult p = pullback_cat(a.f, q.f);
    if (!is_anodyne_cat(p.to_right))
      r.violation("anodyne maps not stable under pullback along isofibrations");
    ++done;
  }
  if (done < 15) r.violation("could not sample 15 anodyne pullback instances");

  // Lifting: every commuting anodyne/isofibration square within the cap has
  // a filler.
  std::map<std::pair<int, int>, std::vector<const FinFunctor*>> by_ends;
  for (const auto& e : all) by_ends[{e.src, e.dst}].push_back(&e.f);
  int squares = 0;
  for (const auto& ik : anodynes) {
    if (squares >= 40) break;
    const PoolEntry& i = all[ik];
    for (const auto& qk : isofibs) {
      if (squares >= 40) break;
      const PoolEntry& q = all[qk];
      for (const auto* top : by_ends[{i.src, q.src}]) {
        if (squares >= 40) break;
        for (const auto* bottom : by_ends[{i.dst, q.dst}]) {
          FinFunctor left = compose_functors(q.f, *top);
          FinFunctor right = compose_functors(*bottom, i.f);
          if (left.omap != right.omap || left.amap != right.amap) continue;
          ++squares;
          try {
            FinFunctor d = find_lift(i.f, q.f, *top, *bottom);
            FinFunctor t1 = compose_functors(d, i.f);
            FinFunctor t2 = compose_functors(q.f, d);
            if (t1.omap != top->omap || t1.amap != top->amap ||
                t2.omap != bottom->omap || t2.amap != bottom->amap)
              r.violation("lift does not fill its square");
          } catch (const Error& e) {
            if (e.code() != "SizeCapExceeded")
              r.violation(std::string("lift search failed: ") + e.what());
          }
          break;
        }
      }
    }
  }
  if (squares == 0) r.violation("no anodyne/isofibration squares sampled");
  r.finalize();
  return r;
}

Report verify_rewriting_soundness() {
  Report r("criterion-11-rewriting-soundness");
  for (const auto& [name, f] : all_fixtures()) {
    const FinCat& R = f.pres.R;
    std::mt19937 rng(977 + static_cast<unsigned>(name.size()));
    std::map<std::string, std::vector<std::string>> out_of;
    for (const auto& a : R.arrows) out_of[a.dom].push_back(a.id);
    bool bad = false;
    for (int k = 0; k < 1000 && !bad; ++k) {
      const std::string start =
          R.objects[std::uniform_int_distribution<std::size_t>(
              0, R.objects.size() - 1)(rng)];
      const int len = std::uniform_int_distribution<int>(0, 5)(rng);
      std::vector<std::string> letters;
      std::string cur = start;
      for (int i = 0; i < len; ++i) {
        const auto& cands = out_of[cur];
        if (cands.empty()) break;
        const std::string a = cands[std::uniform_int_distribution<std::size_t>(
            0, cands.size() - 1)(rng)];
        letters.push_back(a);
        cur = R.arrow(a).cod;
      }
      NFWord whole = normalize(f.pres, start, letters);
      // Split anywhere and recombine.
      const std::size_t cut = std::uniform_int_distribution<std::size_t>(
          0, letters.size())(rng);
      std::vector<std::string> head(letters.begin(), letters.begin() + cut);
      std::vector<std::string> tail(letters.begin() + cut, letters.end());
      NFWord nh = normalize(f.pres, start, head);
      NFWord nt = normalize(f.pres, nh.tgt, tail);
      if (!nf_equal(nf_compose(f.pres, nt, nh), whole)) {
        r.violation(name + ": split normalization disagrees");
        bad = true;
      }
      // Fold letter by letter.
      NFWord acc = nf_identity(f.pres, start);
      for (const auto& l : letters) {
        NFWord single = normalize(f.pres, R.arrow(l).dom, {l});
        acc = nf_compose(f.pres, single, acc);
      }
      if (!nf_equal(acc, whole)) {
        r.violation(name + ": folded normalization disagrees");
        bad = true;
      }
    }
    // Hom-bound adequacy: rebuilding with a larger bound finds nothing new.
    UnrolledCategory wide = build_DR(f.pres, f.u.hom_bound + 2);
    std::set<std::string> narrow_objs(f.u.category.objects.begin(),
                                      f.u.category.objects.end());
    std::set<std::string> wide_objs(wide.category.objects.begin(),
                                    wide.category.objects.end());
    if (narrow_objs != wide_objs)
      r.violation(name + ": object set changes at a larger hom bound");
    std::set<std::string> na, wa;
    for (const auto& a : f.u.category.arrows) na.insert(a.id);
    for (const auto& a : wide.category.arrows) wa.insert(a.id);
    if (na != wa)
      r.violation(name + ": morphism set changes at a larger hom bound");
  }
  r.finalize();
  return r;
}

std::vector<Report> run_verification_suite() {
  return {verify_unrolled_z2_shape(),
          verify_unrolled_two_arrows(),
          verify_induced_strict_structure(),
          verify_absolute_density(),
          verify_comma_projection(),
          verify_matching_binary_product(),
          verify_gaunt_criterion(),
          verify_unit_isomorphism(),
          verify_factorization_pipeline(),
          verify_tribe_axioms(),
          verify_rewriting_soundness()};
}

}  // namespace catwb
