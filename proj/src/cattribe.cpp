#include "catwb/cattribe.hpp"

#include <algorithm>

namespace catwb {

namespace {

std::string wrap(const std::string& s) { return "{" + s + "}"; }

bool functors_equal(const FinFunctor& a, const FinFunctor& b) {
  return a.omap == b.omap && a.amap == b.amap;
}

FinCat point_category() {
  FinCat c;
  c.add_object("pt");
  c.add_arrow("id_pt", "pt", "pt");
  c.set_identity("pt", "id_pt");
  c.set_compose("id_pt", "id_pt", "id_pt");
  return c;
}

}  // namespace

void validate_diagram(const Diagram& d) {
  validate_category(d.shape);
  for (const auto& o : d.shape.objects) {
    if (!d.value.count(o))
      fail("NonFunctorialDiagram", "no category at shape object '" + o + "'");
    validate_category(d.value.at(o));
  }
  for (const auto& a : d.shape.arrows) {
    auto it = d.action.find(a.id);
    if (it == d.action.end())
      fail("NonFunctorialDiagram", "no action at shape arrow '" + a.id + "'");
    const FinFunctor& f = it->second;
    if (f.source.objects != d.value.at(a.cod).objects ||
        f.target.objects != d.value.at(a.dom).objects)
      fail("NonFunctorialDiagram",
           "action at '" + a.id + "' has the wrong endpoints");
    Report r = functor_report(f);
    if (!r.pass)
      fail("NonFunctorialDiagram",
           "action at '" + a.id + "' is not a functor: " + r.witnesses.front());
  }
  for (const auto& o : d.shape.objects)
    if (!functors_equal(d.along(d.shape.id_arrow(o)),
                        identity_functor(d.at(o))))
      fail("NonFunctorialDiagram", "identity action at '" + o + "' not trivial");
  for (const auto& [gf, v] : d.shape.table) {
    // Contravariance: action(g o f) = action(f) o action(g).
    FinFunctor lhs = compose_functors(d.along(gf.second), d.along(gf.first));
    if (!functors_equal(lhs, d.along(v)))
      fail("NonFunctorialDiagram", "composite action at '" + gf.first +
                                       "' o '" + gf.second + "' not preserved");
  }
}

void validate_diagram_map(const Diagram& x, const Diagram& y,
                          const DiagramMap& m) {
  if (x.shape.objects != y.shape.objects)
    fail("NonNaturalMap", "diagrams have different shapes");
  for (const auto& o : x.shape.objects) {
    auto it = m.component.find(o);
    if (it == m.component.end())
      fail("NonNaturalMap", "no component at '" + o + "'");
    const FinFunctor& f = it->second;
    if (f.source.objects != x.at(o).objects ||
        f.target.objects != y.at(o).objects)
      fail("NonNaturalMap", "component at '" + o + "' has wrong endpoints");
    Report r = functor_report(f);
    if (!r.pass)
      fail("NonNaturalMap",
           "component at '" + o + "' is not a functor: " + r.witnesses.front());
  }
  for (const auto& a : x.shape.arrows) {
    FinFunctor lhs = compose_functors(y.along(a.id), m.component.at(a.cod));
    FinFunctor rhs = compose_functors(m.component.at(a.dom), x.along(a.id));
    if (!functors_equal(lhs, rhs))
      fail("NonNaturalMap", "naturality fails at shape arrow '" + a.id + "'");
  }
}

TribeClassReport classify_map(const Diagram& x, const Diagram& y,
                              const DiagramMap& m) {
  validate_diagram_map(x, y, m);
  TribeClassReport r;
  for (const auto& [o, f] : m.component) {
    r.isofibration[o] = is_isofibration(f);
    r.equivalence[o] = is_equivalence(f);
    r.injective_on_objects[o] = is_injective_on_objects(f);
    r.pointwise_fibration = r.pointwise_fibration && r.isofibration[o];
    r.pointwise_anodyne = r.pointwise_anodyne && r.equivalence[o] &&
                          r.injective_on_objects[o];
  }
  return r;
}

bool is_isofibration(const FinFunctor& f) {
  const FinCat& A = f.source;
  const FinCat& B = f.target;
  for (const auto& a : A.objects) {
    const std::string fa = f.on_object(a);
    for (const auto& b : B.objects)
      for (const auto& phi : B.hom(fa, b)) {
        if (!is_iso(B, phi)) continue;
        bool lifted = false;
        for (const auto& ap : A.objects) {
          for (const auto& psi : A.hom(a, ap))
            if (is_iso(A, psi) && f.on_arrow(psi) == phi) {
              lifted = true;
              break;
            }
          if (lifted) break;
        }
        if (!lifted) return false;
      }
  }
  return true;
}

bool is_anodyne_cat(const FinFunctor& f) {
  return is_injective_on_objects(f) && is_equivalence(f);
}

CatFactorization factorize_cat(const FinFunctor& f) {
  const FinCat& A = f.source;
  const FinCat& B = f.target;
  CatFactorization res;

  struct Obj {
    std::string a, phi, b;
  };
  auto obj_id = [&](const Obj& o) { return "(" + wrap(o.a) + wrap(o.phi) + ")"; };
  std::vector<Obj> objs;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects)
      for (const auto& phi : B.hom(f.on_object(a), b))
        if (is_iso(B, phi)) {
          objs.push_back(Obj{a, phi, b});
          res.middle.add_object(obj_id(objs.back()));
        }

  struct Mor {
    std::string h, k, dom, cod;
  };
  auto arrow_id = [&](const Mor& m) {
    return "(" + wrap(m.h) + wrap(m.k) + "@" + m.dom + "->" + m.cod + ")";
  };
  std::vector<Mor> mors;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& h : A.hom(x.a, y.a))
        for (const auto& k : B.hom(x.b, y.b)) {
          if (B.table.at({k, x.phi}) != B.table.at({y.phi, f.on_arrow(h)}))
            continue;
          Mor m{h, k, obj_id(x), obj_id(y)};
          res.middle.add_arrow(arrow_id(m), m.dom, m.cod);
          mors.push_back(m);
        }
  for (const auto& x : objs) {
    Mor m{A.id_arrow(x.a), B.id_arrow(x.b), obj_id(x), obj_id(x)};
    res.middle.set_identity(m.dom, arrow_id(m));
  }
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.cod != m2.dom) continue;
      Mor m{A.table.at({m2.h, m1.h}), B.table.at({m2.k, m1.k}), m1.dom,
            m2.cod};
      res.middle.set_compose(arrow_id(m2), arrow_id(m1), arrow_id(m));
    }
  validate_category(res.middle);

  res.j.source = A;
  res.j.target = res.middle;
  for (const auto& a : A.objects)
    res.j.omap[a] =
        obj_id(Obj{a, B.id_arrow(f.on_object(a)), f.on_object(a)});
  for (const auto& h : A.arrows) {
    Mor m{h.id, f.on_arrow(h.id), res.j.omap.at(h.dom), res.j.omap.at(h.cod)};
    res.j.amap[h.id] = arrow_id(m);
  }
  validate_functor(res.j);

  res.q.source = res.middle;
  res.q.target = B;
  for (const auto& x : objs) res.q.omap[obj_id(x)] = x.b;
  for (const auto& m : mors) res.q.amap[arrow_id(m)] = m.k;
  validate_functor(res.q);
  return res;
}

FinFunctor find_lift(const FinFunctor& i, const FinFunctor& q,
                     const FinFunctor& top, const FinFunctor& bottom,
                     long long size_cap) {
  const FinCat& A = i.source;
  const FinCat& B = i.target;
  const FinCat& X = q.source;
  const FinCat& Y = q.target;
  if (!functors_equal(compose_functors(q, top), compose_functors(bottom, i)))
    fail("InvalidFunctor", "lifting square does not commute");

  std::map<std::string, std::string> forced_obj, forced_arr;
  for (const auto& a : A.objects) {
    const std::string b = i.on_object(a);
    auto it = forced_obj.find(b);
    if (it != forced_obj.end() && it->second != top.on_object(a))
      fail("NoLift", "left leg collapses objects with different images");
    forced_obj[b] = top.on_object(a);
  }
  for (const auto& h : A.arrows) {
    const std::string b = i.on_arrow(h.id);
    auto it = forced_arr.find(b);
    if (it != forced_arr.end() && it->second != top.on_arrow(h.id))
      fail("NoLift", "left leg collapses arrows with different images");
    forced_arr[b] = top.on_arrow(h.id);
  }

  // Candidates constrained by q o d = bottom.
  std::map<std::string, std::vector<std::string>> obj_cand;
  for (const auto& b : B.objects) {
    auto it = forced_obj.find(b);
    if (it != forced_obj.end()) {
      if (q.on_object(it->second) != bottom.on_object(b))
        fail("NoLift", "forced object image breaks the bottom triangle");
      obj_cand[b] = {it->second};
      continue;
    }
    for (const auto& x : X.objects)
      if (q.on_object(x) == bottom.on_object(b)) obj_cand[b].push_back(x);
  }

  long long space = 1;
  for (const auto& [b, cs] : obj_cand) {
    if (cs.empty()) fail("NoLift", "no object candidate over '" + b + "'");
    space *= static_cast<long long>(cs.size());
    if (space > size_cap) fail("SizeCapExceeded", "lift search space too large");
  }
  std::vector<const Arrow*> free_arrows;
  for (const auto& ar : B.arrows) {
    if (B.is_identity(ar.id) || forced_arr.count(ar.id)) continue;
    free_arrows.push_back(&ar);
    long long per = 0;
    for (const auto& xa : X.arrows)
      if (q.on_arrow(xa.id) == bottom.on_arrow(ar.id)) ++per;
    if (per == 0) fail("NoLift", "no arrow candidate over '" + ar.id + "'");
    space *= per;
    if (space > size_cap) fail("SizeCapExceeded", "lift search space too large");
  }

  FinFunctor d;
  d.source = B;
  d.target = X;
  std::map<std::string, std::string>& omap = d.omap;
  std::map<std::string, std::string>& amap = d.amap;
  bool found = false;

  auto consistent = [&]() {
    for (const auto& [gf, v] : B.table) {
      auto g = amap.find(gf.first);
      auto f = amap.find(gf.second);
      auto c = amap.find(v);
      if (g == amap.end() || f == amap.end() || c == amap.end()) continue;
      if (X.table.at({g->second, f->second}) != c->second) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> arrow_dfs = [&](std::size_t k) {
    if (found) return;
    if (k == free_arrows.size()) {
      found = true;
      return;
    }
    const Arrow& ar = *free_arrows[k];
    for (const auto& cand : X.hom(omap.at(ar.dom), omap.at(ar.cod))) {
      if (q.on_arrow(cand) != bottom.on_arrow(ar.id)) continue;
      amap[ar.id] = cand;
      if (consistent()) arrow_dfs(k + 1);
      if (found) return;
      amap.erase(ar.id);
    }
  };

  std::function<void(std::size_t)> object_dfs = [&](std::size_t k) {
    if (found) return;
    if (k == B.objects.size()) {
      amap.clear();
      for (const auto& b : B.objects)
        amap[B.id_arrow(b)] = X.id_arrow(omap.at(b));
      bool ok = true;
      for (const auto& [ba, xa] : forced_arr) {
        const Arrow& bb = B.arrow(ba);
        if (X.arrow(xa).dom != omap.at(bb.dom) ||
            X.arrow(xa).cod != omap.at(bb.cod)) {
          ok = false;
          break;
        }
        amap[ba] = xa;
      }
      if (ok && consistent()) arrow_dfs(0);
      if (found) return;
      amap.clear();
      return;
    }
    const std::string& b = B.objects[k];
    for (const auto& cand : obj_cand.at(b)) {
      omap[b] = cand;
      object_dfs(k + 1);
      if (found) return;
      omap.erase(b);
    }
  };
  object_dfs(0);
  if (!found) fail("NoLift", "no diagonal filler exists");
  return validate_functor(d);
}

PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g) {
  PullbackResult p;
  FinCat& I = p.diag.index;
  I.add_object("L");
  I.add_object("M");
  I.add_object("R");
  I.add_arrow("idL", "L", "L");
  I.add_arrow("idM", "M", "M");
  I.add_arrow("idR", "R", "R");
  I.add_arrow("l", "L", "M");
  I.add_arrow("r", "R", "M");
  I.set_identity("L", "idL");
  I.set_identity("M", "idM");
  I.set_identity("R", "idR");
  I.set_compose("idL", "idL", "idL");
  I.set_compose("idM", "idM", "idM");
  I.set_compose("idR", "idR", "idR");
  I.set_compose("l", "idL", "l");
  I.set_compose("idM", "l", "l");
  I.set_compose("r", "idR", "r");
  I.set_compose("idM", "r", "r");
  p.diag.value["L"] = f.source;
  p.diag.value["M"] = f.target;
  p.diag.value["R"] = g.source;
  p.diag.edge["idL"] = identity_functor(f.source);
  p.diag.edge["idM"] = identity_functor(f.target);
  p.diag.edge["idR"] = identity_functor(g.source);
  p.diag.edge["l"] = f;
  p.diag.edge["r"] = g;
  p.lim = finite_limit(p.diag);
  p.cat = p.lim.cat;
  p.to_left = p.lim.projection.at("L");
  p.to_right = p.lim.projection.at("R");
  return p;
}

FinFunctor mediate_pullback(const PullbackResult& p, const FinFunctor& u,
                            const FinFunctor& v) {
  std::map<std::string, FinFunctor> cone;
  cone["L"] = u;
  cone["R"] = v;
  cone["M"] = compose_functors(p.diag.along("l"), u);
  auto m = mediate_cone(p.diag, p.lim, u.source, cone);
  if (!m) fail("InvalidFunctor", "pullback cone does not commute");
  return *m;
}

namespace {

// Index, diagram and limit of the matching construction; does not touch the
// diagram's value at z itself, so it is usable mid-induction.
MatchingResult matching_data(const Diagram& x, const std::string& z) {
  MatchingResult res;
  const FinCat& D = x.shape;

  // Index objects: non-identity arrows u into z; an index arrow from u'' to
  // u is a shape arrow v with u'' o v = u (the opposite of triangles over z).
  std::vector<std::string> into;
  for (const auto& a : D.arrows)
    if (a.cod == z && !D.is_identity(a.id)) into.push_back(a.id);
  for (const auto& u : into) res.index.add_object(u);

  struct IMor {
    std::string v, dom, cod;  // dom = u'', cod = u, with u'' o v = u
  };
  auto arrow_id = [&](const IMor& m) {
    return "(" + wrap(m.v) + "@" + m.dom + "->" + m.cod + ")";
  };
  std::vector<IMor> imors;
  for (const auto& upp : into)
    for (const auto& u : into)
      for (const auto& v : D.hom(D.arrow(u).dom, D.arrow(upp).dom)) {
        if (D.table.at({upp, v}) != u) continue;
        IMor m{v, upp, u};
        res.index.add_arrow(arrow_id(m), m.dom, m.cod);
        imors.push_back(m);
      }
  for (const auto& u : into) {
    IMor m{D.id_arrow(D.arrow(u).dom), u, u};
    res.index.set_identity(u, arrow_id(m));
  }
  for (const auto& m1 : imors)
    for (const auto& m2 : imors) {
      if (m1.cod != m2.dom) continue;
      // m1 : u3 -> u2 by v1, m2 : u2 -> u1 by v2; composite by v1 o v2.
      IMor m{D.table.at({m1.v, m2.v}), m1.dom, m2.cod};
      res.index.set_compose(arrow_id(m2), arrow_id(m1), arrow_id(m));
    }
  validate_category(res.index);

  res.diag.index = res.index;
  for (const auto& u : into) res.diag.value[u] = x.at(D.arrow(u).dom);
  for (const auto& m : imors) res.diag.edge[arrow_id(m)] = x.along(m.v);
  res.lim = finite_limit(res.diag);
  return res;
}

}  // namespace

MatchingResult matching_object(const Diagram& x, const std::string& z) {
  MatchingResult res = matching_data(x, z);
  std::map<std::string, FinFunctor> cone;
  for (const auto& u : res.index.objects) cone[u] = x.along(u);
  auto mm = mediate_cone(res.diag, res.lim, x.at(z), cone);
  if (!mm) fail("InvalidFunctor", "matching cone does not commute");
  res.map = *mm;
  return res;
}

RelativeMatching relative_matching_map(const Diagram& x, const Diagram& y,
                                       const DiagramMap& m,
                                       const std::string& z) {
  RelativeMatching res;
  MatchingResult mx = matching_object(x, z);
  MatchingResult my = matching_object(y, z);

  // M_z m : M_z X -> M_z Y, mediated by the componentwise images.
  std::map<std::string, FinFunctor> cone;
  for (const auto& u : my.index.objects)
    cone[u] = compose_functors(m.component.at(x.shape.arrow(u).dom),
                               mx.lim.projection.at(u));
  auto mm = mediate_cone(my.diag, my.lim, mx.lim.cat, cone);
  if (!mm) fail("InvalidFunctor", "matching map cone does not commute");

  res.target = pullback_cat(*mm, my.map);
  res.map = mediate_pullback(res.target, mx.map, m.component.at(z));
  return res;
}

bool is_reedy_fibration(const Diagram& x, const Diagram& y,
                        const DiagramMap& m) {
  validate_diagram_map(x, y, m);
  for (const auto& z : x.shape.objects) {
    RelativeMatching rm = relative_matching_map(x, y, m, z);
    if (!is_isofibration(rm.map)) return false;
  }
  return true;
}

Diagram terminal_diagram(const FinCat& shape) {
  Diagram d;
  d.shape = shape;
  FinCat pt = point_category();
  for (const auto& o : shape.objects) d.value[o] = pt;
  for (const auto& a : shape.arrows) d.action[a.id] = identity_functor(pt);
  return d;
}

DiagramMap map_to_terminal(const Diagram& x, const Diagram& term) {
  DiagramMap m;
  for (const auto& o : x.shape.objects) {
    FinFunctor f;
    f.source = x.at(o);
    f.target = term.at(o);
    for (const auto& ob : f.source.objects) f.omap[ob] = "pt";
    for (const auto& a : f.source.arrows) f.amap[a.id] = "id_pt";
    m.component[o] = std::move(f);
  }
  return m;
}

DiagramMap identity_diagram_map(const Diagram& x) {
  DiagramMap m;
  for (const auto& o : x.shape.objects)
    m.component[o] = identity_functor(x.at(o));
  return m;
}

bool is_reedy_fibrant(const Diagram& x) {
  Diagram t = terminal_diagram(x.shape);
  return is_reedy_fibration(x, t, map_to_terminal(x, t));
}

Diagram restrict_along_p(const UnrolledCategory& u, const Diagram& x) {
  Diagram d;
  d.shape = u.category;
  for (const auto& o : u.category.objects)
    d.value[o] = x.at(u.projection.on_object(o));
  for (const auto& a : u.category.arrows)
    d.action[a.id] = x.along(u.projection.on_arrow(a.id));
  return d;
}

DiagramMap restrict_along_p_map(const UnrolledCategory& u,
                                const DiagramMap& m) {
  DiagramMap r;
  for (const auto& o : u.category.objects)
    r.component[o] = m.component.at(u.projection.on_object(o));
  return r;
}

RanResult ran_along_p(const UnrolledCategory& u, const Diagram& s) {
  RanResult res;
  res.diagram.shape = u.pres.R;
  const FinCat& R = u.pres.R;
  FinCat pt = point_category();

  for (const auto& r : R.objects) {
    FinFunctor sel;
    sel.source = pt;
    sel.target = R;
    sel.omap["pt"] = r;
    sel.amap["id_pt"] = R.id_arrow(r);
    CommaResult comma = comma_category(u.projection, sel);

    CatDiagram diag;
    diag.index = opposite(comma.cat);
    for (const auto& o : comma.cat.objects)
      diag.value[o] = s.at(comma.proj_left.on_object(o));
    for (const auto& a : comma.cat.arrows)
      diag.edge[a.id] = s.along(comma.proj_left.on_arrow(a.id));

    res.lim[r] = finite_limit(diag);
    res.diagram.value[r] = res.lim[r].cat;
    res.comma[r] = std::move(comma);
    res.diag[r] = std::move(diag);
  }

  for (const auto& f : R.arrows) {
    // action(f : r -> r') : lim(r') -> lim(r), reindexing (Z, phi) along
    // (Z, f o phi).
    const std::string& r = f.dom;
    const std::string& rp = f.cod;
    std::map<std::string, FinFunctor> cone;
    for (const auto& o : res.comma.at(r).cat.objects) {
      const std::string z = res.comma.at(r).proj_left.on_object(o);
      // Recover the t-component of the comma object by matching its id.
      std::string t;
      for (const auto& cand : R.hom(u.projection.on_object(z), r))
        if (comma_object_id(z, "pt", cand) == o) {
          t = cand;
          break;
        }
      const std::string reidx =
          comma_object_id(z, "pt", R.table.at({f.id, t}));
      cone[o] = res.lim.at(rp).projection.at(reidx);
    }
    auto act = mediate_cone(res.diag.at(r), res.lim.at(r),
                            res.lim.at(rp).cat, cone);
    if (!act)
      fail("InvalidFunctor", "Kan extension action cone does not commute");
    res.diagram.action[f.id] = *act;
  }
  validate_diagram(res.diagram);
  return res;
}

DiagramMap ran_along_p_map(const UnrolledCategory& u, const RanResult& rs,
                           const RanResult& rt, const DiagramMap& m) {
  DiagramMap out;
  for (const auto& r : rs.diagram.shape.objects) {
    std::map<std::string, FinFunctor> cone;
    for (const auto& o : rs.comma.at(r).cat.objects) {
      const std::string z = rs.comma.at(r).proj_left.on_object(o);
      cone[o] = compose_functors(m.component.at(z),
                                 rs.lim.at(r).projection.at(o));
    }
    auto c = mediate_cone(rt.diag.at(r), rt.lim.at(r), rs.lim.at(r).cat, cone);
    if (!c) fail("InvalidFunctor", "Kan extension of map does not mediate");
    out.component[r] = *c;
  }
  return out;
}

DiagramMap unit_ran_restrict(const UnrolledCategory& u, const Diagram& x,
                             const RanResult& r) {
  DiagramMap out;
  const FinCat& R = u.pres.R;
  for (const auto& robj : R.objects) {
    std::map<std::string, FinFunctor> cone;
    for (const auto& o : r.comma.at(robj).cat.objects) {
      const std::string z = r.comma.at(robj).proj_left.on_object(o);
      std::string phi;
      for (const auto& cand : R.hom(u.projection.on_object(z), robj))
        if (comma_object_id(z, "pt", cand) == o) {
          phi = cand;
          break;
        }
      cone[o] = x.along(phi);
    }
    auto c = mediate_cone(r.diag.at(robj), r.lim.at(robj), x.at(robj), cone);
    if (!c) fail("InvalidFunctor", "unit cone does not commute");
    out.component[robj] = *c;
  }
  return out;
}

bool is_diagram_iso(const Diagram& x, const Diagram& y, const DiagramMap& m) {
  validate_diagram_map(x, y, m);
  for (const auto& [o, f] : m.component)
    if (!is_cat_isomorphism(f)) return false;
  return true;
}

DiagramMap invert_diagram_map(const Diagram& x, const Diagram& y,
                              const DiagramMap& m) {
  if (!is_diagram_iso(x, y, m))
    fail("InvalidFunctor", "cannot invert a non-isomorphism of diagrams");
  DiagramMap inv;
  for (const auto& [o, f] : m.component) {
    FinFunctor g;
    g.source = f.target;
    g.target = f.source;
    for (const auto& [a, b] : f.omap) g.omap[b] = a;
    for (const auto& [a, b] : f.amap) g.amap[b] = a;
    inv.component[o] = validate_functor(g);
  }
  return inv;
}

DiagramMap compose_diagram_maps(const DiagramMap& g, const DiagramMap& f) {
  DiagramMap out;
  for (const auto& [o, fc] : f.component)
    out.component[o] = compose_functors(g.component.at(o), fc);
  return out;
}

bool diagram_maps_equal(const DiagramMap& a, const DiagramMap& b) {
  if (a.component.size() != b.component.size()) return false;
  for (const auto& [o, f] : a.component) {
    auto it = b.component.find(o);
    if (it == b.component.end() || !functors_equal(f, it->second)) return false;
  }
  return true;
}

bool is_p_fibration(const UnrolledCategory& u, const Diagram& x,
                    const Diagram& y, const DiagramMap& m) {
  return is_reedy_fibration(restrict_along_p(u, x), restrict_along_p(u, y),
                            restrict_along_p_map(u, m));
}

bool is_p_fibrant(const UnrolledCategory& u, const Diagram& x) {
  return is_reedy_fibrant(restrict_along_p(u, x));
}

ReedyFactorization reedy_factorize(const Diagram& x, const Diagram& y,
                                   const DiagramMap& m,
                                   const ReedyStructure& shape_structure) {
  validate_diagram_map(x, y, m);
  const FinCat& D = x.shape;

  std::vector<std::string> order = D.objects;
  std::sort(order.begin(), order.end(),
            [&](const std::string& a, const std::string& b) {
              const int da = shape_structure.degree.at(a);
              const int db = shape_structure.degree.at(b);
              if (da != db) return da < db;
              return a < b;
            });

  ReedyFactorization res;
  res.middle.shape = D;
  Diagram& W = res.middle;

  for (const auto& z : order) {
    MatchingResult mw = matching_data(W, z);
    MatchingResult my = matching_object(y, z);

    // M_z q : M_z W -> M_z Y.
    std::map<std::string, FinFunctor> qcone;
    for (const auto& u : my.index.objects)
      qcone[u] = compose_functors(res.q.component.at(D.arrow(u).dom),
                                  mw.lim.projection.at(u));
    auto mq = mediate_cone(my.diag, my.lim, mw.lim.cat, qcone);
    if (!mq) fail("InvalidFunctor", "inductive matching cone does not commute");

    PullbackResult pz = pullback_cat(*mq, my.map);

    // X(z) -> M_z W via the legs j_{Z'} o X(u).
    std::map<std::string, FinFunctor> jcone;
    for (const auto& u : mw.index.objects)
      jcone[u] = compose_functors(res.j.component.at(D.arrow(u).dom),
                                  x.along(u));
    auto to_mw = mediate_cone(mw.diag, mw.lim, x.at(z), jcone);
    if (!to_mw) fail("InvalidFunctor", "inductive comparison does not mediate");

    FinFunctor to_pz = mediate_pullback(pz, *to_mw, m.component.at(z));
    CatFactorization cf = factorize_cat(to_pz);

    W.value[z] = cf.middle;
    W.action[D.id_arrow(z)] = identity_functor(cf.middle);
    FinFunctor w_to_pz = cf.q;
    FinFunctor w_to_mw = compose_functors(pz.to_left, w_to_pz);
    for (const auto& u : mw.index.objects)
      W.action[u] = compose_functors(mw.lim.projection.at(u), w_to_mw);
    res.j.component[z] = cf.j;
    res.q.component[z] = compose_functors(pz.to_right, w_to_pz);
  }

  validate_diagram(W);
  validate_diagram_map(x, W, res.j);
  validate_diagram_map(W, y, res.q);
  if (!diagram_maps_equal(compose_diagram_maps(res.q, res.j), m))
    fail("InternalError", "factorization does not compose to the input");
  TribeClassReport jc = classify_map(x, W, res.j);
  if (!jc.pointwise_anodyne)
    fail("InternalError", "first factor is not pointwise anodyne");
  if (!is_reedy_fibration(W, y, res.q))
    fail("InternalError", "second factor is not a Reedy fibration");
  return res;
}

TribeFactorization tribe_factorize(const UnrolledCategory& u,
                                   const ReedyStructure& induced,
                                   const Diagram& x, const Diagram& y,
                                   const DiagramMap& m) {
  Diagram S = restrict_along_p(u, x);
  Diagram T = restrict_along_p(u, y);
  DiagramMap pm = restrict_along_p_map(u, m);

  ReedyFactorization rf = reedy_factorize(S, T, pm, induced);

  RanResult rs = ran_along_p(u, S);
  RanResult rw = ran_along_p(u, rf.middle);
  RanResult rt = ran_along_p(u, T);

  DiagramMap pj = ran_along_p_map(u, rs, rw, rf.j);
  DiagramMap pq = ran_along_p_map(u, rw, rt, rf.q);

  DiagramMap eta_x = unit_ran_restrict(u, x, rs);
  DiagramMap eta_y = unit_ran_restrict(u, y, rt);
  DiagramMap eta_y_inv = invert_diagram_map(y, rt.diagram, eta_y);

  TribeFactorization out;
  out.middle = rw.diagram;
  out.j = compose_diagram_maps(pj, eta_x);
  out.q = compose_diagram_maps(eta_y_inv, pq);

  validate_diagram_map(x, out.middle, out.j);
  validate_diagram_map(out.middle, y, out.q);
  if (!diagram_maps_equal(compose_diagram_maps(out.q, out.j), m))
    fail("InternalError", "tribe factorization does not compose to the input");
  TribeClassReport jc = classify_map(x, out.middle, out.j);
  if (!jc.pointwise_anodyne)
    fail("InternalError", "tribe factorization first factor not anodyne");
  if (!is_p_fibration(u, out.middle, y, out.q))
    fail("InternalError", "tribe factorization second factor not a p-fibration");
  if (!is_p_fibrant(u, out.middle))
    fail("InternalError", "tribe factorization middle not p-fibrant");
  return out;
}

}  // namespace catwb
