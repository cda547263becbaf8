#include "catwb/fincat.hpp"

#include <algorithm>
#include <functional>

namespace catwb {

namespace {

std::string wrap(const std::string& s) { return "{" + s + "}"; }

}  // namespace

bool FinCat::has_object(const std::string& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

bool FinCat::has_arrow(const std::string& a) const {
  for (const auto& ar : arrows)
    if (ar.id == a) return true;
  return false;
}

const Arrow& FinCat::arrow(const std::string& a) const {
  for (const auto& ar : arrows)
    if (ar.id == a) return ar;
  fail("UnknownArrow", "no arrow with id '" + a + "'");
}

const std::string& FinCat::id_arrow(const std::string& obj) const {
  auto it = identity.find(obj);
  if (it == identity.end())
    fail("IdentityLawViolation", "object '" + obj + "' has no identity arrow");
  return it->second;
}

bool FinCat::is_identity(const std::string& a) const {
  for (const auto& [o, ia] : identity)
    if (ia == a) return true;
  return false;
}

const std::string& FinCat::compose(const std::string& g,
                                   const std::string& f) const {
  const Arrow& af = arrow(f);
  const Arrow& ag = arrow(g);
  if (af.cod != ag.dom)
    fail("NotComposable",
         "'" + g + "' o '" + f + "': cod(" + f + ") = " + af.cod +
             " but dom(" + g + ") = " + ag.dom);
  auto it = table.find({g, f});
  if (it == table.end())
    fail("MissingComposite", "no entry for '" + g + "' o '" + f + "'");
  return it->second;
}

std::vector<std::string> FinCat::hom(const std::string& a,
                                     const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& ar : arrows)
    if (ar.dom == a && ar.cod == b) out.push_back(ar.id);
  return out;
}

void FinCat::add_object(const std::string& o) { objects.push_back(o); }

void FinCat::add_arrow(const std::string& id, const std::string& dom,
                       const std::string& cod, const std::string& name) {
  arrows.push_back(Arrow{id, name.empty() ? id : name, dom, cod});
}

void FinCat::set_identity(const std::string& obj, const std::string& a) {
  identity[obj] = a;
}

void FinCat::set_compose(const std::string& g, const std::string& f,
                         const std::string& gf) {
  table[{g, f}] = gf;
}

Report category_report(const FinCat& c) {
  Report r("category");
  std::set<std::string> oids(c.objects.begin(), c.objects.end());
  if (oids.size() != c.objects.size()) r.violation("duplicate object ids");
  std::set<std::string> aids;
  for (const auto& a : c.arrows) {
    if (!aids.insert(a.id).second) r.violation("duplicate arrow id '" + a.id + "'");
    if (!oids.count(a.dom))
      r.violation("arrow '" + a.id + "' has unknown dom '" + a.dom + "'");
    if (!oids.count(a.cod))
      r.violation("arrow '" + a.id + "' has unknown cod '" + a.cod + "'");
  }
  if (!r.pass) return r;

  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end()) {
      r.violation("IdentityLawViolation: object '" + o + "' has no identity");
      continue;
    }
    if (!aids.count(it->second)) {
      r.violation("IdentityLawViolation: identity of '" + o + "' is unknown");
      continue;
    }
    const Arrow& ia = c.arrow(it->second);
    if (ia.dom != o || ia.cod != o)
      r.violation("IdentityLawViolation: identity of '" + o +
                  "' is not an endo-arrow of it");
  }
  if (!r.pass) return r;

  // Totality and well-typedness of the table.
  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows) {
      auto it = c.table.find({g.id, f.id});
      if (f.cod == g.dom) {
        if (it == c.table.end()) {
          r.violation("MissingComposite: '" + g.id + "' o '" + f.id + "'");
          continue;
        }
        if (!aids.count(it->second)) {
          r.violation("MissingComposite: composite of '" + g.id + "' o '" +
                      f.id + "' is unknown arrow '" + it->second + "'");
          continue;
        }
        const Arrow& gf = c.arrow(it->second);
        if (gf.dom != f.dom || gf.cod != g.cod)
          r.violation("MissingComposite: ill-typed composite '" + it->second +
                      "' for '" + g.id + "' o '" + f.id + "'");
      } else if (it != c.table.end()) {
        r.violation("NotComposable: table entry for non-composable pair '" +
                    g.id + "' o '" + f.id + "'");
      }
    }
  if (!r.pass) return r;

  for (const auto& f : c.arrows) {
    if (c.table.at({c.id_arrow(f.cod), f.id}) != f.id)
      r.violation("IdentityLawViolation: id o '" + f.id + "' != '" + f.id + "'");
    if (c.table.at({f.id, c.id_arrow(f.dom)}) != f.id)
      r.violation("IdentityLawViolation: '" + f.id + "' o id != '" + f.id + "'");
  }

  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows) {
      if (f.cod != g.dom) continue;
      for (const auto& h : c.arrows) {
        if (g.cod != h.dom) continue;
        const std::string& hg = c.table.at({h.id, g.id});
        const std::string& gf = c.table.at({g.id, f.id});
        if (c.table.at({hg, f.id}) != c.table.at({h.id, gf}))
          r.violation("NonAssociative: ('" + h.id + "' o '" + g.id + "') o '" +
                      f.id + "' != '" + h.id + "' o ('" + g.id + "' o '" +
                      f.id + "')");
      }
    }
  r.finalize();
  return r;
}

FinCat validate_category(FinCat c) {
  Report r = category_report(c);
  if (!r.pass) {
    const std::string& w = r.witnesses.front();
    auto pos = w.find(": ");
    if (pos != std::string::npos && w.find(' ') > pos)
      fail(w.substr(0, pos), w.substr(pos + 2));
    fail("InvalidCategory", w);
  }
  return c;
}

FinCat opposite(const FinCat& c) {
  FinCat o;
  o.objects = c.objects;
  for (const auto& a : c.arrows) o.arrows.push_back(Arrow{a.id, a.name, a.cod, a.dom});
  o.identity = c.identity;
  for (const auto& [gf, v] : c.table) o.table[{gf.second, gf.first}] = v;
  return o;
}

FinCat sorted_copy(FinCat c) {
  std::sort(c.objects.begin(), c.objects.end());
  std::sort(c.arrows.begin(), c.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return c;
}

std::optional<std::string> inverse_of(const FinCat& c, const std::string& a) {
  const Arrow& ar = c.arrow(a);
  for (const auto& b : c.arrows) {
    if (b.dom != ar.cod || b.cod != ar.dom) continue;
    if (c.table.at({b.id, a}) == c.id_arrow(ar.dom) &&
        c.table.at({a, b.id}) == c.id_arrow(ar.cod))
      return b.id;
  }
  return std::nullopt;
}

bool is_iso(const FinCat& c, const std::string& a) {
  return inverse_of(c, a).has_value();
}

bool is_gaunt(const FinCat& c) {
  for (const auto& a : c.arrows)
    if (is_iso(c, a.id) && !c.is_identity(a.id)) return false;
  return true;
}

bool is_connected(const FinCat& c) {
  if (c.objects.empty()) return false;
  std::map<std::string, std::string> parent;
  for (const auto& o : c.objects) parent[o] = o;
  std::function<std::string(std::string)> find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& a : c.arrows) parent[find(a.dom)] = find(a.cod);
  const std::string r0 = find(c.objects.front());
  for (const auto& o : c.objects)
    if (find(o) != r0) return false;
  return true;
}

const std::string& FinFunctor::on_object(const std::string& o) const {
  auto it = omap.find(o);
  if (it == omap.end()) fail("InvalidFunctor", "object '" + o + "' not mapped");
  return it->second;
}

const std::string& FinFunctor::on_arrow(const std::string& a) const {
  auto it = amap.find(a);
  if (it == amap.end()) fail("InvalidFunctor", "arrow '" + a + "' not mapped");
  return it->second;
}

Report functor_report(const FinFunctor& f) {
  Report r("functor");
  for (const auto& o : f.source.objects) {
    auto it = f.omap.find(o);
    if (it == f.omap.end()) {
      r.violation("object '" + o + "' not mapped");
      continue;
    }
    if (!f.target.has_object(it->second))
      r.violation("object '" + o + "' maps to unknown '" + it->second + "'");
  }
  for (const auto& a : f.source.arrows) {
    auto it = f.amap.find(a.id);
    if (it == f.amap.end()) {
      r.violation("arrow '" + a.id + "' not mapped");
      continue;
    }
    if (!f.target.has_arrow(it->second)) {
      r.violation("arrow '" + a.id + "' maps to unknown '" + it->second + "'");
      continue;
    }
    const Arrow& fa = f.target.arrow(it->second);
    if (fa.dom != f.on_object(a.dom) || fa.cod != f.on_object(a.cod))
      r.violation("arrow '" + a.id + "' image has wrong endpoints");
  }
  if (!r.pass) return r;
  for (const auto& o : f.source.objects)
    if (f.on_arrow(f.source.id_arrow(o)) != f.target.id_arrow(f.on_object(o)))
      r.violation("identity of '" + o + "' not preserved");
  for (const auto& [gf, v] : f.source.table) {
    const std::string& img =
        f.target.table.at({f.on_arrow(gf.first), f.on_arrow(gf.second)});
    if (img != f.on_arrow(v))
      r.violation("composition '" + gf.first + "' o '" + gf.second +
                  "' not preserved");
  }
  r.finalize();
  return r;
}

FinFunctor validate_functor(FinFunctor f) {
  Report r = functor_report(f);
  if (!r.pass) fail("InvalidFunctor", r.witnesses.front());
  return f;
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  for (const auto& o : c.objects) f.omap[o] = o;
  for (const auto& a : c.arrows) f.amap[a.id] = a.id;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [o, v] : f.omap) h.omap[o] = g.on_object(v);
  for (const auto& [a, v] : f.amap) h.amap[a] = g.on_arrow(v);
  return h;
}

FinFunctor opposite_functor(const FinFunctor& f) {
  FinFunctor g;
  g.source = opposite(f.source);
  g.target = opposite(f.target);
  g.omap = f.omap;
  g.amap = f.amap;
  return g;
}

bool is_fully_faithful(const FinFunctor& f) {
  for (const auto& a : f.source.objects)
    for (const auto& b : f.source.objects) {
      auto upstairs = f.source.hom(a, b);
      auto downstairs = f.target.hom(f.on_object(a), f.on_object(b));
      std::set<std::string> images;
      for (const auto& u : upstairs)
        if (!images.insert(f.on_arrow(u)).second) return false;  // not faithful
      if (images.size() != downstairs.size()) return false;      // not full
    }
  return true;
}

bool is_essentially_surjective(const FinFunctor& f) {
  for (const auto& b : f.target.objects) {
    bool hit = false;
    for (const auto& a : f.source.objects) {
      const std::string& fa = f.on_object(a);
      if (fa == b) {
        hit = true;
        break;
      }
      for (const auto& t : f.target.hom(fa, b))
        if (is_iso(f.target, t)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const FinFunctor& f) {
  return is_fully_faithful(f) && is_essentially_surjective(f);
}

bool is_injective_on_objects(const FinFunctor& f) {
  std::set<std::string> seen;
  for (const auto& o : f.source.objects)
    if (!seen.insert(f.on_object(o)).second) return false;
  return true;
}

bool is_cat_isomorphism(const FinFunctor& f) {
  if (!is_injective_on_objects(f)) return false;
  if (f.source.objects.size() != f.target.objects.size()) return false;
  if (f.source.arrows.size() != f.target.arrows.size()) return false;
  std::set<std::string> seen;
  for (const auto& a : f.source.arrows)
    if (!seen.insert(f.on_arrow(a.id)).second) return false;
  return true;
}

std::vector<FinFunctor> enumerate_functors(const FinCat& a, const FinCat& b) {
  std::vector<FinFunctor> out;
  std::map<std::string, std::string> omap, amap;

  // Non-identity arrows; identity images are forced by the object map.
  std::vector<const Arrow*> free_arrows;
  for (const auto& ar : a.arrows)
    if (!a.is_identity(ar.id)) free_arrows.push_back(&ar);

  std::function<bool()> consistent = [&]() {
    for (const auto& [gf, v] : a.table) {
      auto ig = amap.find(gf.first);
      auto iff = amap.find(gf.second);
      auto iv = amap.find(v);
      if (ig == amap.end() || iff == amap.end() || iv == amap.end()) continue;
      if (b.table.at({ig->second, iff->second}) != iv->second) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> arrow_dfs = [&](std::size_t i) {
    if (i == free_arrows.size()) {
      FinFunctor f;
      f.source = a;
      f.target = b;
      f.omap = omap;
      f.amap = amap;
      out.push_back(std::move(f));
      return;
    }
    const Arrow& ar = *free_arrows[i];
    for (const auto& cand : b.hom(omap.at(ar.dom), omap.at(ar.cod))) {
      amap[ar.id] = cand;
      if (consistent()) arrow_dfs(i + 1);
      amap.erase(ar.id);
    }
  };

  std::function<void(std::size_t)> object_dfs = [&](std::size_t i) {
    if (i == a.objects.size()) {
      amap.clear();
      for (const auto& o : a.objects)
        amap[a.id_arrow(o)] = b.id_arrow(omap.at(o));
      arrow_dfs(0);
      return;
    }
    for (const auto& cand : b.objects) {
      omap[a.objects[i]] = cand;
      object_dfs(i + 1);
      omap.erase(a.objects[i]);
    }
  };
  object_dfs(0);
  return out;
}

const FinCat& CatDiagram::at(const std::string& o) const {
  auto it = value.find(o);
  if (it == value.end())
    fail("NonFunctorialDiagram", "no category at index object '" + o + "'");
  return it->second;
}

const FinFunctor& CatDiagram::along(const std::string& a) const {
  auto it = edge.find(a);
  if (it == edge.end())
    fail("NonFunctorialDiagram", "no functor at index arrow '" + a + "'");
  return it->second;
}

void validate_cat_diagram(const CatDiagram& d) {
  validate_category(d.index);
  for (const auto& o : d.index.objects) validate_category(d.at(o));
  for (const auto& a : d.index.arrows) {
    const FinFunctor& f = d.along(a.id);
    Report r = functor_report(f);
    if (!r.pass)
      fail("NonFunctorialDiagram",
           "edge '" + a.id + "' is not a functor: " + r.witnesses.front());
  }
  for (const auto& o : d.index.objects) {
    const FinFunctor& f = d.along(d.index.id_arrow(o));
    if (f.omap != identity_functor(d.at(o)).omap || f.amap != identity_functor(d.at(o)).amap)
      fail("NonFunctorialDiagram", "identity at '" + o + "' not preserved");
  }
  for (const auto& [gf, v] : d.index.table) {
    FinFunctor lhs = compose_functors(d.along(gf.first), d.along(gf.second));
    const FinFunctor& rhs = d.along(v);
    if (lhs.omap != rhs.omap || lhs.amap != rhs.amap)
      fail("NonFunctorialDiagram",
           "composite at '" + gf.first + "' o '" + gf.second + "' not preserved");
  }
}

namespace {

// Families over the index, one entry per index object, satisfying
// transport(u)(x_dom) = x_cod for every index arrow u. Backtracking with
// forward propagation along arrows; domains are per-object candidate lists.
std::vector<std::map<std::string, std::string>> enumerate_families(
    const FinCat& index,
    const std::function<const std::vector<std::string>&(const std::string&)>& domain,
    const std::function<std::string(const std::string&, const std::string&)>&
        transport) {
  std::vector<std::map<std::string, std::string>> out;
  std::map<std::string, std::string> assign;

  std::function<bool(const std::string&, const std::string&)> place =
      [&](const std::string& obj, const std::string& val) -> bool {
    auto it = assign.find(obj);
    if (it != assign.end()) return it->second == val;
    const auto& dom = domain(obj);
    if (std::find(dom.begin(), dom.end(), val) == dom.end()) return false;
    assign[obj] = val;
    for (const auto& u : index.arrows) {
      if (u.dom != obj) continue;
      if (!place(u.cod, transport(u.id, val))) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    while (i < index.objects.size() && assign.count(index.objects[i])) ++i;
    if (i == index.objects.size()) {
      out.push_back(assign);
      return;
    }
    const std::string& obj = index.objects[i];
    for (const auto& cand : domain(obj)) {
      auto saved = assign;
      if (place(obj, cand)) dfs(i + 1);
      assign = std::move(saved);
    }
  };
  dfs(0);
  return out;
}

std::string family_id(const FinCat& index,
                      const std::map<std::string, std::string>& fam) {
  std::string s = "(";
  for (const auto& o : index.objects) s += wrap(fam.at(o));
  return s + ")";
}

}  // namespace

LimitResult finite_limit(const CatDiagram& d) {
  validate_cat_diagram(d);
  LimitResult res;

  std::map<std::string, std::vector<std::string>> obj_domain;
  for (const auto& o : d.index.objects) obj_domain[o] = d.at(o).objects;

  auto obj_families = enumerate_families(
      d.index,
      [&](const std::string& o) -> const std::vector<std::string>& {
        return obj_domain.at(o);
      },
      [&](const std::string& u, const std::string& x) {
        return d.along(u).on_object(x);
      });

  std::map<std::string, std::map<std::string, std::string>> fam_of;  // id -> family
  for (const auto& fam : obj_families) {
    std::string id = family_id(d.index, fam);
    res.cat.add_object(id);
    fam_of[id] = fam;
  }

  // Arrow families between each pair of limit objects.
  std::map<std::string, std::vector<std::string>> arr_domain;
  struct ArrFam {
    std::string dom, cod;
    std::map<std::string, std::string> fam;
  };
  std::vector<ArrFam> arrow_fams;
  for (const auto& src : res.cat.objects)
    for (const auto& dst : res.cat.objects) {
      arr_domain.clear();
      for (const auto& o : d.index.objects)
        arr_domain[o] = d.at(o).hom(fam_of[src].at(o), fam_of[dst].at(o));
      auto fams = enumerate_families(
          d.index,
          [&](const std::string& o) -> const std::vector<std::string>& {
            return arr_domain.at(o);
          },
          [&](const std::string& u, const std::string& g) {
            return d.along(u).on_arrow(g);
          });
      for (auto& fam : fams) arrow_fams.push_back(ArrFam{src, dst, fam});
    }

  std::map<std::string, std::map<std::string, std::string>> afam_of;
  for (const auto& af : arrow_fams) {
    std::string id = family_id(d.index, af.fam);
    res.cat.add_arrow(id, af.dom, af.cod);
    afam_of[id] = af.fam;
  }

  for (const auto& src : res.cat.objects) {
    std::map<std::string, std::string> idfam;
    for (const auto& o : d.index.objects)
      idfam[o] = d.at(o).id_arrow(fam_of[src].at(o));
    res.cat.set_identity(src, family_id(d.index, idfam));
  }

  for (const auto& f : res.cat.arrows)
    for (const auto& g : res.cat.arrows) {
      if (f.cod != g.dom) continue;
      std::map<std::string, std::string> comp;
      for (const auto& o : d.index.objects)
        comp[o] = d.at(o).table.at({afam_of[g.id].at(o), afam_of[f.id].at(o)});
      res.cat.set_compose(g.id, f.id, family_id(d.index, comp));
    }

  for (const auto& o : d.index.objects) {
    FinFunctor pr;
    pr.source = res.cat;
    pr.target = d.at(o);
    for (const auto& lo : res.cat.objects) pr.omap[lo] = fam_of[lo].at(o);
    for (const auto& la : res.cat.arrows) pr.amap[la.id] = afam_of[la.id].at(o);
    res.projection[o] = std::move(pr);
  }
  return res;
}

LimitResult finite_limit(const FinDiagramShape& shape,
                         const std::map<std::string, FinCat>& value,
                         const std::map<std::string, FinFunctor>& edge) {
  CatDiagram d;
  d.index = shape.realized();
  d.value = value;
  d.edge = edge;
  return finite_limit(d);
}

std::optional<FinFunctor> mediate_cone(
    const CatDiagram& d, const LimitResult& lim, const FinCat& apex,
    const std::map<std::string, FinFunctor>& cone) {
  // Cone legs must commute with the diagram edges.
  for (const auto& u : d.index.arrows) {
    FinFunctor lhs = compose_functors(d.along(u.id), cone.at(u.dom));
    const FinFunctor& rhs = cone.at(u.cod);
    if (lhs.omap != rhs.omap || lhs.amap != rhs.amap) return std::nullopt;
  }
  FinFunctor m;
  m.source = apex;
  m.target = lim.cat;
  for (const auto& x : apex.objects) {
    std::map<std::string, std::string> fam;
    for (const auto& o : d.index.objects) fam[o] = cone.at(o).on_object(x);
    std::string id = family_id(d.index, fam);
    if (!lim.cat.has_object(id)) return std::nullopt;
    m.omap[x] = id;
  }
  for (const auto& a : apex.arrows) {
    std::map<std::string, std::string> fam;
    for (const auto& o : d.index.objects) fam[o] = cone.at(o).on_arrow(a.id);
    std::string id = family_id(d.index, fam);
    if (!lim.cat.has_arrow(id)) return std::nullopt;
    m.amap[a.id] = id;
  }
  return m;
}

bool check_cone_universal(const CatDiagram& d, const LimitResult& lim,
                          const FinCat& apex,
                          const std::map<std::string, FinFunctor>& cone) {
  auto m = mediate_cone(d, lim, apex, cone);
  if (!m) return false;
  Report r = functor_report(*m);
  if (!r.pass) return false;
  for (const auto& o : d.index.objects) {
    FinFunctor leg = compose_functors(lim.projection.at(o), *m);
    if (leg.omap != cone.at(o).omap || leg.amap != cone.at(o).amap) return false;
  }
  // Uniqueness: any functor whose legs agree with the cone must pick the same
  // families, hence equals m by construction of the limit ids.
  return true;
}

std::string comma_object_id(const std::string& a, const std::string& c,
                            const std::string& t) {
  return "(" + wrap(a) + wrap(c) + wrap(t) + ")";
}

CommaResult comma_category(const FinFunctor& f, const FinFunctor& g) {
  if (f.target.objects != g.target.objects)
    fail("InvalidFunctor", "comma functors must share their codomain");
  CommaResult res;
  const FinCat& A = f.source;
  const FinCat& C = g.source;
  const FinCat& B = f.target;

  struct Obj {
    std::string a, c, t;
  };
  std::vector<Obj> objs;
  for (const auto& a : A.objects)
    for (const auto& c : C.objects)
      for (const auto& t : B.hom(f.on_object(a), g.on_object(c))) {
        objs.push_back(Obj{a, c, t});
        res.cat.add_object(comma_object_id(a, c, t));
      }

  struct Mor {
    std::string h, k;
    std::string dom, cod;
  };
  std::vector<Mor> mors;
  auto arrow_id = [&](const Mor& m) {
    return "(" + wrap(m.h) + wrap(m.k) + "@" + m.dom + "->" + m.cod + ")";
  };
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& h : A.hom(x.a, y.a))
        for (const auto& k : C.hom(x.c, y.c)) {
          // square: G(k) o t = t' o F(h)
          if (B.table.at({g.on_arrow(k), x.t}) !=
              B.table.at({y.t, f.on_arrow(h)}))
            continue;
          Mor m{h, k, comma_object_id(x.a, x.c, x.t),
                comma_object_id(y.a, y.c, y.t)};
          res.cat.add_arrow(arrow_id(m), m.dom, m.cod);
          mors.push_back(m);
        }

  for (const auto& x : objs) {
    Mor m{A.id_arrow(x.a), C.id_arrow(x.c), comma_object_id(x.a, x.c, x.t),
          comma_object_id(x.a, x.c, x.t)};
    res.cat.set_identity(m.dom, arrow_id(m));
  }
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.cod != m2.dom) continue;
      Mor m{A.table.at({m2.h, m1.h}), C.table.at({m2.k, m1.k}), m1.dom, m2.cod};
      res.cat.set_compose(arrow_id(m2), arrow_id(m1), arrow_id(m));
    }

  res.proj_left.source = res.cat;
  res.proj_left.target = A;
  res.proj_right.source = res.cat;
  res.proj_right.target = C;
  for (const auto& x : objs) {
    const std::string id = comma_object_id(x.a, x.c, x.t);
    res.proj_left.omap[id] = x.a;
    res.proj_right.omap[id] = x.c;
  }
  for (const auto& m : mors) {
    res.proj_left.amap[arrow_id(m)] = m.h;
    res.proj_right.amap[arrow_id(m)] = m.k;
  }
  return res;
}

}  // namespace catwb
