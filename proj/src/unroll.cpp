#include "catwb/unroll.hpp"

#include <algorithm>

namespace catwb {

std::string dr_object_id(const NFWord& word) { return nf_key(word); }

std::string dr_morphism_id(const std::string& from, const std::string& to,
                           const NFWord& f, const NFWord& f2) {
  return "F[" + from + "=>" + to + ";" + nf_key(f) + ";" + nf_key(f2) + "]";
}

std::optional<std::pair<std::optional<std::string>, std::optional<std::string>>>
parse_component_shape(const AmalgamPresentation& pres, const NFWord& w) {
  using Shape = std::pair<std::optional<std::string>, std::optional<std::string>>;
  if (w.letters.empty()) return Shape{std::nullopt, std::nullopt};
  if (w.letters.size() == 1) {
    const std::string& l = w.letters.front();
    if (pres.is_c_image(l)) return Shape{pres.preimage(l), std::nullopt};
    if (is_iso(pres.R, l)) return Shape{std::nullopt, l};
    return std::nullopt;
  }
  if (w.letters.size() == 2) {
    const std::string& first = w.letters[0];
    const std::string& second = w.letters[1];
    if (pres.is_c_image(first) && !pres.is_c_image(second) &&
        is_iso(pres.R, second))
      return Shape{pres.preimage(first), second};
    return std::nullopt;
  }
  return std::nullopt;
}

UnrolledCategory build_DR(const AmalgamPresentation& pres, int hom_bound) {
  UnrolledCategory u;
  u.pres = pres;
  u.hom_bound = hom_bound;

  // Candidate realizations: identities, single R0-letters, single free
  // isomorphisms, and iso-after-R0 pairs. Deduplicated by normal form.
  std::vector<std::vector<std::string>> letter_seqs;
  std::vector<std::string> seq_src;
  for (const auto& o : pres.R.objects) {
    letter_seqs.push_back({});
    seq_src.push_back(o);
  }
  std::vector<std::string> isos;
  for (const auto& a : pres.R.arrows)
    if (!pres.R.is_identity(a.id) && is_iso(pres.R, a.id)) isos.push_back(a.id);
  for (const auto& k : pres.R0.arrows) {
    if (pres.R0.is_identity(k.id)) continue;
    const std::string ck = pres.c.on_arrow(k.id);
    letter_seqs.push_back({ck});
    seq_src.push_back(pres.R.arrow(ck).dom);
    for (const auto& w : isos)
      if (pres.R.arrow(w).dom == pres.R.arrow(ck).cod) {
        letter_seqs.push_back({ck, w});
        seq_src.push_back(pres.R.arrow(ck).dom);
      }
  }
  for (const auto& w : isos) {
    letter_seqs.push_back({w});
    seq_src.push_back(pres.R.arrow(w).dom);
  }

  std::map<std::string, DRObject> found;
  for (std::size_t i = 0; i < letter_seqs.size(); ++i) {
    NFWord w = normalize(pres, seq_src[i], letter_seqs[i]);
    auto shape = parse_component_shape(pres, w);
    if (!shape) continue;  // iso letter merged into a non-admissible form
    DRObject obj{w, shape->first, shape->second};
    found.emplace(dr_object_id(w), std::move(obj));
  }

  std::vector<std::string> ids;
  for (const auto& [id, obj] : found) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    const auto la = found.at(a).word.letters.size();
    const auto lb = found.at(b).word.letters.size();
    if (la != lb) return la < lb;
    return a < b;
  });
  for (const auto& id : ids) {
    u.category.add_object(id);
    u.object_data[id] = found.at(id);
  }

  // Full subcategory: every bounded pair (f, f2) with f2 o X o f = Y. The
  // composite determines the target object, so enumerate components against
  // the endpoint objects of R and look the result up.
  for (const auto& xid : u.category.objects) {
    const DRObject& X = u.object_data.at(xid);
    for (const auto& s : pres.R.objects)
      for (const auto& f : nf_hom_enum(pres, s, X.word.src, hom_bound)) {
        NFWord xf = nf_compose(pres, X.word, f);
        for (const auto& t : pres.R.objects)
          for (const auto& f2 : nf_hom_enum(pres, X.word.tgt, t, hom_bound)) {
            NFWord yw = nf_compose(pres, f2, xf);
            const std::string yid = dr_object_id(yw);
            if (!u.category.has_object(yid)) continue;
            const std::string aid = dr_morphism_id(xid, yid, f, f2);
            u.category.add_arrow(aid, xid, yid);
            u.morphism_data[aid] = DRMorphism{xid, yid, f, f2};
          }
      }
  }

  for (const auto& oid : u.category.objects) {
    const DRObject& X = u.object_data.at(oid);
    u.category.set_identity(
        oid, dr_morphism_id(oid, oid, nf_identity(pres, X.word.src),
                            nf_identity(pres, X.word.tgt)));
  }

  for (const auto& fa : u.category.arrows)
    for (const auto& ga : u.category.arrows) {
      if (fa.cod != ga.dom) continue;
      const DRMorphism& F = u.morphism_data.at(fa.id);
      const DRMorphism& G = u.morphism_data.at(ga.id);
      NFWord top = nf_compose(pres, F.f, G.f);
      NFWord bottom = nf_compose(pres, G.f2, F.f2);
      const std::string cid = dr_morphism_id(F.from, G.to, top, bottom);
      if (!u.category.has_arrow(cid))
        fail("BoundExceeded",
             "composite of '" + fa.id + "' and '" + ga.id +
                 "' has components beyond the hom bound; raise HOM_BOUND");
      u.category.set_compose(ga.id, fa.id, cid);
    }

  validate_category(u.category);

  u.projection.source = u.category;
  u.projection.target = pres.R;
  for (const auto& oid : u.category.objects)
    u.projection.omap[oid] = u.object_data.at(oid).word.tgt;
  for (const auto& a : u.category.arrows)
    u.projection.amap[a.id] = p0_apply(pres, u.morphism_data.at(a.id).f2);
  validate_functor(u.projection);
  return u;
}

const FinFunctor& projection_p(const UnrolledCategory& u) {
  return u.projection;
}

int degree_DR(const UnrolledCategory& u, const ReedyStructure& s_r,
              const std::string& object_id) {
  const DRObject& X = u.object_data.at(object_id);
  const int k = X.iso_letter ? 1 : 0;
  const int d = s_r.degree.at(X.word.tgt) - s_r.degree.at(X.word.src) + k;
  if (d < 0)
    fail("NegativeDegree", "object '" + object_id + "' has degree " +
                               std::to_string(d) +
                               "; R is not generalized direct here");
  return d;
}

namespace {

// Component shape w o c(k) with the R0 part confined to a class.
bool component_in_class(const AmalgamPresentation& pres, const NFWord& w,
                        const std::set<std::string>& r0_class) {
  auto shape = parse_component_shape(pres, w);
  if (!shape) return false;
  if (shape->first && !r0_class.count(*shape->first)) return false;
  return true;
}

}  // namespace

ReedyStructure induce_DR_structure(const UnrolledCategory& u,
                                   const ReedyStructure& s_r,
                                   const ReedyStructure& s0) {
  ReedyStructure s;
  s.base = u.category;
  for (const auto& o : u.category.objects) s.degree[o] = degree_DR(u, s_r, o);

  for (const auto& a : u.category.arrows) {
    if (u.category.is_identity(a.id)) {
      s.plus.insert(a.id);
      s.minus.insert(a.id);
      continue;
    }
    const DRMorphism& F = u.morphism_data.at(a.id);
    const int dd = s.degree.at(a.cod) - s.degree.at(a.dom);
    if (dd > 0 && component_in_class(u.pres, F.f, s0.plus) &&
        component_in_class(u.pres, F.f2, s0.plus))
      s.plus.insert(a.id);
    if (dd < 0 && component_in_class(u.pres, F.f, s0.minus) &&
        component_in_class(u.pres, F.f2, s0.minus))
      s.minus.insert(a.id);
  }

  Report r = check_strict(s);
  if (!r.pass)
    fail("StructureViolation", "induced structure on D_R is not strict Reedy: " +
                                   r.witnesses.front());
  return s;
}

std::pair<std::string, std::string> reedy_factor_DR(
    const UnrolledCategory& u, const ReedyStructure& induced,
    const std::string& arrow_id) {
  const Arrow& a = u.category.arrow(arrow_id);
  if (u.category.is_identity(arrow_id)) return {arrow_id, arrow_id};
  if (induced.plus.count(arrow_id))
    return {u.category.id_arrow(a.dom), arrow_id};
  if (induced.minus.count(arrow_id))
    return {arrow_id, u.category.id_arrow(a.cod)};
  auto f = unique_factorization(induced, arrow_id);
  if (!f)
    fail("StructureViolation",
         "morphism '" + arrow_id + "' has no unique (minus, plus) factorization");
  return *f;
}

}  // namespace catwb
