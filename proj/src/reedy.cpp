#include "catwb/reedy.hpp"

namespace catwb {

namespace {

bool closed_subcategory(const FinCat& c, const std::set<std::string>& cls,
                        Report& r, const std::string& label) {
  bool ok = true;
  for (const auto& [o, ia] : c.identity)
    if (!cls.count(ia)) {
      r.violation(label + " misses identity of '" + o + "'");
      ok = false;
    }
  for (const auto& f : cls)
    for (const auto& g : cls) {
      auto it = c.table.find({g, f});
      if (it == c.table.end()) continue;
      if (!cls.count(it->second)) {
        r.violation(label + " not closed under composition: '" + g + "' o '" +
                    f + "' = '" + it->second + "'");
        ok = false;
      }
    }
  return ok;
}

}  // namespace

Report check_generalized_reedy(const ReedyStructure& s) {
  Report r("generalized-reedy");
  const FinCat& c = s.base;

  for (const auto& o : c.objects) {
    auto it = s.degree.find(o);
    if (it == s.degree.end())
      r.violation("object '" + o + "' has no degree");
    else if (it->second < 0)
      r.violation("object '" + o + "' has negative degree");
  }
  for (const auto& a : s.plus)
    if (!c.has_arrow(a)) r.violation("plus names unknown arrow '" + a + "'");
  for (const auto& a : s.minus)
    if (!c.has_arrow(a)) r.violation("minus names unknown arrow '" + a + "'");
  if (!r.pass) {
    r.finalize();
    return r;
  }

  closed_subcategory(c, s.plus, r, "plus");
  closed_subcategory(c, s.minus, r, "minus");

  for (const auto& a : c.arrows) {
    const bool iso = is_iso(c, a.id);
    const bool in_both = s.plus.count(a.id) && s.minus.count(a.id);
    if (iso && !in_both)
      r.violation("isomorphism '" + a.id + "' not in plus and minus");
    if (!iso && in_both)
      r.violation("non-isomorphism '" + a.id + "' in both plus and minus");
    const int dd = s.degree.at(a.cod) - s.degree.at(a.dom);
    if (iso && dd != 0)
      r.violation("isomorphism '" + a.id + "' changes degree");
    if (!iso && s.plus.count(a.id) && dd <= 0)
      r.violation("plus arrow '" + a.id + "' does not raise degree");
    if (!iso && s.minus.count(a.id) && dd >= 0)
      r.violation("minus arrow '" + a.id + "' does not lower degree");
  }

  // Factorization, existence and uniqueness up to isomorphism.
  for (const auto& a : c.arrows) {
    std::vector<std::pair<std::string, std::string>> facts;
    for (const auto& m : s.minus)
      for (const auto& p : s.plus) {
        auto it = c.table.find({p, m});
        if (it != c.table.end() && it->second == a.id) facts.push_back({m, p});
      }
    if (facts.empty()) {
      r.violation("arrow '" + a.id + "' has no (minus, plus) factorization");
      continue;
    }
    auto related = [&](const std::pair<std::string, std::string>& x,
                       const std::pair<std::string, std::string>& y) {
      const std::string zx = c.arrow(x.first).cod;
      const std::string zy = c.arrow(y.first).cod;
      for (const auto& t : c.hom(zx, zy)) {
        if (!is_iso(c, t)) continue;
        if (c.table.at({t, x.first}) == y.first &&
            c.table.at({y.second, t}) == x.second)
          return true;
      }
      return false;
    };
    for (std::size_t i = 1; i < facts.size(); ++i)
      if (!related(facts[0], facts[i]) || !related(facts[i], facts[0])) {
        r.violation("arrow '" + a.id +
                    "' has non-isomorphic factorizations ('" + facts[0].first +
                    "','" + facts[0].second + "') vs ('" + facts[i].first +
                    "','" + facts[i].second + "')");
        break;
      }
  }

  // An iso fixing a minus arrow by postcomposition is an identity.
  for (const auto& m : s.minus) {
    const std::string z = s.base.arrow(m).cod;
    for (const auto& t : c.hom(z, z)) {
      if (!is_iso(c, t)) continue;
      if (c.table.at({t, m}) == m && !c.is_identity(t))
        r.violation("isomorphism '" + t + "' fixes minus arrow '" + m +
                    "' but is not an identity");
    }
  }

  r.finalize();
  return r;
}

Report check_strict(const ReedyStructure& s) {
  Report r("strict-reedy");
  r.absorb(check_generalized_reedy(s));
  for (const auto& a : s.base.arrows)
    if (is_iso(s.base, a.id) && !s.base.is_identity(a.id))
      r.violation("non-identity isomorphism '" + a.id + "'");
  Report u = check_unique_factorization(s);
  if (!u.pass) r.absorb(u);
  r.finalize();
  return r;
}

Report check_generalized_direct(const ReedyStructure& s) {
  Report r("generalized-direct");
  r.absorb(check_generalized_reedy(s));
  for (const auto& m : s.minus)
    if (!is_iso(s.base, m))
      r.violation("minus arrow '" + m + "' is not an isomorphism");
  r.finalize();
  return r;
}

Report check_unique_factorization(const ReedyStructure& s) {
  Report r("unique-factorization");
  for (const auto& a : s.base.arrows) {
    int count = 0;
    std::string first;
    for (const auto& m : s.minus)
      for (const auto& p : s.plus) {
        auto it = s.base.table.find({p, m});
        if (it != s.base.table.end() && it->second == a.id) {
          ++count;
          if (count == 1) first = "('" + m + "','" + p + "')";
          if (count == 2)
            r.violation("arrow '" + a.id + "' factors as " + first +
                        " and as ('" + m + "','" + p + "')");
        }
      }
    if (count == 0)
      r.violation("arrow '" + a.id + "' has no (minus, plus) factorization");
  }
  r.finalize();
  return r;
}

std::optional<std::pair<std::string, std::string>> unique_factorization(
    const ReedyStructure& s, const std::string& arrow) {
  std::optional<std::pair<std::string, std::string>> found;
  for (const auto& m : s.minus)
    for (const auto& p : s.plus) {
      auto it = s.base.table.find({p, m});
      if (it != s.base.table.end() && it->second == arrow) {
        if (found) return std::nullopt;
        found = {{m, p}};
      }
    }
  return found;
}

Report check_lifting_condition(const AmalgamPresentation& pres,
                               const ReedyStructure& s0) {
  Report r("lifting-condition");
  if (s0.base.objects != pres.R0.objects)
    r.violation("Reedy structure is not on R0");
  const FinCat& R = pres.R;
  for (const auto& f : R.arrows) {
    bool lifts = false;
    for (const auto& k : pres.R0.arrows) {
      const std::string cx = pres.c.on_object(pres.R0.arrow(k.id).dom);
      const std::string cy = pres.c.on_object(pres.R0.arrow(k.id).cod);
      const std::string ck = pres.c.on_arrow(k.id);
      for (const auto& w : R.hom(f.dom, cx)) {
        if (!is_iso(R, w)) continue;
        for (const auto& wp : R.hom(f.cod, cy)) {
          if (!is_iso(R, wp)) continue;
          if (R.table.at({ck, w}) == R.table.at({wp, f.id})) {
            lifts = true;
            break;
          }
        }
        if (lifts) break;
      }
      if (lifts) break;
    }
    if (!lifts) r.violation("arrow '" + f.id + "' does not lift to R0");
  }
  r.finalize();
  return r;
}

}  // namespace catwb
