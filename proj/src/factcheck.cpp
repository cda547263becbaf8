#include "catwb/factcheck.hpp"

namespace catwb {

namespace {

std::string wrap(const std::string& s) { return "{" + s + "}"; }

int component_count(const FinCat& c) {
  std::map<std::string, std::string> parent;
  for (const auto& o : c.objects) parent[o] = o;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& a : c.arrows) parent[find(a.dom)] = find(a.cod);
  std::set<std::string> roots;
  for (const auto& o : c.objects) roots.insert(find(o));
  return static_cast<int>(roots.size());
}

}  // namespace

FactorizationCategory factorization_category(const FinFunctor& F,
                                             const std::string& arrow) {
  const FinCat& A = F.source;
  const FinCat& B = F.target;
  const Arrow& f = B.arrow(arrow);

  FactorizationCategory res;
  res.arrow = arrow;

  struct Obj {
    std::string a, u, v;
  };
  auto obj_id = [&](const Obj& o) {
    return "(" + wrap(o.a) + wrap(o.u) + wrap(o.v) + ")";
  };
  std::vector<Obj> objs;
  for (const auto& a : A.objects) {
    const std::string fa = F.on_object(a);
    for (const auto& u : B.hom(f.dom, fa))
      for (const auto& v : B.hom(fa, f.cod)) {
        if (B.table.at({v, u}) != arrow) continue;
        objs.push_back(Obj{a, u, v});
        res.cat.add_object(obj_id(objs.back()));
      }
  }

  struct Mor {
    std::string h, dom, cod;
  };
  auto arrow_id = [&](const Mor& m) {
    return "(" + wrap(m.h) + "@" + m.dom + "->" + m.cod + ")";
  };
  std::vector<Mor> mors;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& h : A.hom(x.a, y.a)) {
        const std::string fh = F.on_arrow(h);
        if (B.table.at({fh, x.u}) != y.u) continue;
        if (B.table.at({y.v, fh}) != x.v) continue;
        Mor m{h, obj_id(x), obj_id(y)};
        res.cat.add_arrow(arrow_id(m), m.dom, m.cod);
        mors.push_back(m);
      }
  for (const auto& x : objs) {
    Mor m{A.id_arrow(x.a), obj_id(x), obj_id(x)};
    res.cat.set_identity(m.dom, arrow_id(m));
  }
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.cod != m2.dom) continue;
      Mor m{A.table.at({m2.h, m1.h}), m1.dom, m2.cod};
      res.cat.set_compose(arrow_id(m2), arrow_id(m1), arrow_id(m));
    }
  validate_category(res.cat);
  return res;
}

Report check_absolutely_dense(const FinFunctor& F) {
  Report r("absolutely-dense");
  for (const auto& f : F.target.arrows) {
    FactorizationCategory fc = factorization_category(F, f.id);
    if (fc.cat.objects.empty()) {
      r.violation("arrow '" + f.id + "': no factorization through the image");
      continue;
    }
    const int n = component_count(fc.cat);
    if (n != 1)
      r.violation("arrow '" + f.id + "': factorization category has " +
                  std::to_string(n) + " components");
  }
  r.finalize();
  return r;
}

FactPlusCategory fact_plus_category(const FinFunctor& G,
                                    const ReedyStructure& sc,
                                    const ReedyStructure& sd,
                                    const std::string& alpha,
                                    const std::string& beta,
                                    const std::string& sigma) {
  const FinCat& C = G.source;
  const FinCat& D = G.target;
  const Arrow& s = D.arrow(sigma);
  if (s.dom != alpha || s.cod != G.on_object(beta))
    fail("InvalidFunctor", "sigma must run alpha -> G(beta)");
  if (!sd.plus.count(sigma))
    fail("InvalidFunctor", "sigma must lie in the plus class downstairs");

  FactPlusCategory res;
  res.alpha = alpha;
  res.beta = beta;
  res.sigma = sigma;

  struct Obj {
    std::string gamma, mu, nu;
  };
  auto obj_id = [&](const Obj& o) {
    return "(" + wrap(o.gamma) + wrap(o.mu) + wrap(o.nu) + ")";
  };
  std::vector<Obj> objs;
  for (const auto& gamma : C.objects)
    for (const auto& nu : C.hom(gamma, beta)) {
      if (!sc.plus.count(nu)) continue;
      for (const auto& mu : D.hom(alpha, G.on_object(gamma))) {
        if (D.table.at({G.on_arrow(nu), mu}) != sigma) continue;
        objs.push_back(Obj{gamma, mu, nu});
        res.cat.add_object(obj_id(objs.back()));
      }
    }

  struct Mor {
    std::string tau, dom, cod;
  };
  auto arrow_id = [&](const Mor& m) {
    return "(" + wrap(m.tau) + "@" + m.dom + "->" + m.cod + ")";
  };
  std::vector<Mor> mors;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& tau : C.hom(x.gamma, y.gamma)) {
        if (C.table.at({y.nu, tau}) != x.nu) continue;
        if (D.table.at({G.on_arrow(tau), x.mu}) != y.mu) continue;
        Mor m{tau, obj_id(x), obj_id(y)};
        res.cat.add_arrow(arrow_id(m), m.dom, m.cod);
        mors.push_back(m);
      }
  for (const auto& x : objs) {
    Mor m{C.id_arrow(x.gamma), obj_id(x), obj_id(x)};
    res.cat.set_identity(m.dom, arrow_id(m));
  }
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.cod != m2.dom) continue;
      Mor m{C.table.at({m2.tau, m1.tau}), m1.dom, m2.cod};
      res.cat.set_compose(arrow_id(m2), arrow_id(m1), arrow_id(m));
    }
  validate_category(res.cat);
  return res;
}

Report check_cofibering(const FinFunctor& G, const ReedyStructure& sc,
                        const ReedyStructure& sd) {
  Report r("cofibering");
  for (const auto& sigma : sd.plus) {
    const Arrow& s = G.target.arrow(sigma);
    for (const auto& beta : G.source.objects) {
      if (G.on_object(beta) != s.cod) continue;
      FactPlusCategory fp =
          fact_plus_category(G, sc, sd, s.dom, beta, sigma);
      if (fp.cat.objects.empty()) continue;
      const int n = component_count(fp.cat);
      if (n != 1)
        r.violation("sigma '" + sigma + "' at beta '" + beta +
                    "': factorization category has " + std::to_string(n) +
                    " components");
    }
  }
  r.finalize();
  return r;
}

Report check_fibering(const FinFunctor& G, const ReedyStructure& sc,
                      const ReedyStructure& sd) {
  ReedyStructure sc_op{opposite(sc.base), sc.degree, sc.minus, sc.plus};
  ReedyStructure sd_op{opposite(sd.base), sd.degree, sd.minus, sd.plus};
  Report r = check_cofibering(opposite_functor(G), sc_op, sd_op);
  r.name = "fibering";
  return r;
}

Report check_grothendieck_fibration(const FinFunctor& G) {
  Report r("grothendieck-fibration");
  const FinCat& E = G.source;
  const FinCat& B = G.target;
  for (const auto& e : E.objects) {
    const std::string ge = G.on_object(e);
    for (const auto& b : B.objects)
      for (const auto& f : B.hom(b, ge)) {
        // A cartesian lift phi : e' -> e of f: for every psi : e'' -> e and
        // g : G(e'') -> b with f o g = G(psi), a unique chi : e'' -> e' with
        // phi o chi = psi and G(chi) = g.
        bool found = false;
        for (const auto& ep : E.objects) {
          if (G.on_object(ep) != b) continue;
          for (const auto& phi : E.hom(ep, e)) {
            if (G.on_arrow(phi) != f) continue;
            bool cartesian = true;
            for (const auto& epp : E.objects) {
              for (const auto& psi : E.hom(epp, e)) {
                for (const auto& g : B.hom(G.on_object(epp), b)) {
                  if (B.table.at({f, g}) != G.on_arrow(psi)) continue;
                  int count = 0;
                  for (const auto& chi : E.hom(epp, ep))
                    if (E.table.at({phi, chi}) == psi && G.on_arrow(chi) == g)
                      ++count;
                  if (count != 1) {
                    cartesian = false;
                    break;
                  }
                }
                if (!cartesian) break;
              }
              if (!cartesian) break;
            }
            if (cartesian) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found)
          r.violation("arrow '" + f + "' into the image of '" + e +
                      "' has no cartesian lift");
      }
  }
  r.finalize();
  return r;
}

CommaOverR comma_p_over_p(const UnrolledCategory& u,
                          const ReedyStructure& induced) {
  CommaOverR res;
  res.comma = comma_category(u.projection, u.projection);
  res.pi0 = res.comma.proj_left;
  res.pi1 = res.comma.proj_right;

  res.reedy.base = res.comma.cat;
  for (const auto& o : res.comma.cat.objects)
    res.reedy.degree[o] = induced.degree.at(res.pi0.on_object(o)) +
                          induced.degree.at(res.pi1.on_object(o));
  for (const auto& a : res.comma.cat.arrows) {
    const std::string& h = res.pi0.on_arrow(a.id);
    const std::string& k = res.pi1.on_arrow(a.id);
    if (induced.plus.count(h) && induced.plus.count(k))
      res.reedy.plus.insert(a.id);
    if (induced.minus.count(h) && induced.minus.count(k))
      res.reedy.minus.insert(a.id);
  }
  Report check = check_generalized_reedy(res.reedy);
  if (!check.pass)
    fail("StructureViolation",
         "comma category structure fails the Reedy axioms: " +
             check.witnesses.front());
  return res;
}

FiberPAlpha fiber_P_alpha(const UnrolledCategory& u, const ReedyStructure& s_r,
                          const ReedyStructure& induced, const CommaOverR& c,
                          const std::string& alpha) {
  FiberPAlpha res;
  res.alpha = alpha;
  res.base_degree = s_r.degree.at(u.projection.on_object(alpha));

  const FinCat& cc = c.comma.cat;
  const std::string id_alpha = u.category.id_arrow(alpha);
  std::set<std::string> keep;
  for (const auto& o : cc.objects)
    if (c.pi1.on_object(o) == alpha) {
      keep.insert(o);
      res.cat.add_object(o);
      res.first_degree[o] = induced.degree.at(c.pi0.on_object(o));
    }
  std::vector<std::string> arrs;
  for (const auto& a : cc.arrows)
    if (keep.count(a.dom) && keep.count(a.cod) &&
        c.pi1.on_arrow(a.id) == id_alpha) {
      res.cat.add_arrow(a.id, a.dom, a.cod);
      arrs.push_back(a.id);
    }
  for (const auto& o : keep) res.cat.set_identity(o, cc.id_arrow(o));
  for (const auto& f : arrs)
    for (const auto& g : arrs) {
      if (cc.arrow(f).cod != cc.arrow(g).dom) continue;
      res.cat.set_compose(g, f, cc.table.at({g, f}));
    }
  validate_category(res.cat);
  return res;
}

}  // namespace catwb
