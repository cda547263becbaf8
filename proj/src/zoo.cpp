#include "catwb/zoo.hpp"

#include <algorithm>
#include <array>

namespace catwb {

void validate_group(const GroupTable& t) {
  std::set<std::string> elems(t.elements.begin(), t.elements.end());
  if (elems.size() != t.elements.size()) fail("NotAGroup", "duplicate elements");
  if (!elems.count(t.unit)) fail("NotAGroup", "unit is not an element");
  for (const auto& a : t.elements)
    for (const auto& b : t.elements) {
      auto it = t.mult.find({a, b});
      if (it == t.mult.end() || !elems.count(it->second))
        fail("NotAGroup", "multiplication not total at (" + a + ", " + b + ")");
    }
  for (const auto& a : t.elements) {
    if (t.mult.at({t.unit, a}) != a || t.mult.at({a, t.unit}) != a)
      fail("NotAGroup", "unit law fails at " + a);
    bool inv = false;
    for (const auto& b : t.elements)
      if (t.mult.at({a, b}) == t.unit && t.mult.at({b, a}) == t.unit) inv = true;
    if (!inv) fail("NotAGroup", "no inverse for " + a);
  }
  for (const auto& a : t.elements)
    for (const auto& b : t.elements)
      for (const auto& c : t.elements)
        if (t.mult.at({t.mult.at({a, b}), c}) != t.mult.at({a, t.mult.at({b, c})}))
          fail("NotAGroup", "associativity fails at (" + a + ", " + b + ", " + c + ")");
}

GroupTable group_table_zn(int n) {
  GroupTable t;
  for (int i = 0; i < n; ++i)
    t.elements.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  t.unit = "e";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.mult[{t.elements[i], t.elements[j]}] = t.elements[(i + j) % n];
  return t;
}

GroupTable group_table_s3() {
  // Permutations of {0,1,2}; name by one-line notation.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto name = [](const std::array<int, 3>& q) {
    if (q == std::array<int, 3>{0, 1, 2}) return std::string("e");
    return "p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]);
  };
  GroupTable t;
  for (const auto& q : perms) t.elements.push_back(name(q));
  t.unit = "e";
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = a[b[i]];  // a after b
      t.mult[{name(a), name(b)}] = name(ab);
    }
  return t;
}

GroupZoo group_category(const GroupTable& t) {
  validate_group(t);
  GroupZoo z;
  z.cat.add_object("*");
  for (const auto& e : t.elements) z.cat.add_arrow(e, "*", "*");
  z.cat.set_identity("*", t.unit);
  for (const auto& [ab, v] : t.mult) z.cat.set_compose(ab.first, ab.second, v);
  z.cat = validate_category(z.cat);

  FinCat pt = terminal_category();
  FinFunctor c;
  c.source = pt;
  c.target = z.cat;
  c.omap["pt"] = "*";
  c.amap["id_pt"] = t.unit;
  z.pres = make_presentation(pt, z.cat, c);

  z.reedy.base = z.cat;
  z.reedy.degree["*"] = 0;
  for (const auto& e : t.elements) {
    z.reedy.plus.insert(e);
    z.reedy.minus.insert(e);
  }
  return z;
}

GroupZoo group_zoo(const std::string& name) {
  if (name == "Z2") return group_category(group_table_zn(2));
  if (name == "Z3") return group_category(group_table_zn(3));
  if (name == "S3") return group_category(group_table_s3());
  fail("UnknownGroup", "expected Z2, Z3 or S3, got '" + name + "'");
}

namespace {

// A cube morphism [m] -> [n]: per output coordinate, -2 = constant 0,
// -1 = constant 1, j >= 0 = input coordinate j.
struct CubeMor {
  int m = 0, n = 0;
  std::vector<int> out;
};

std::string cube_mor_id(const CubeMor& c) {
  std::string s = "c" + std::to_string(c.m) + "to" + std::to_string(c.n) + ":";
  for (int v : c.out) s += (v == -2) ? '0' : (v == -1) ? '1' : char('a' + v);
  return s;
}

bool cube_mor_ok(const CubeMor& c, const CubeSpec& spec) {
  std::vector<int> used(c.m, 0);
  int last = -1;
  for (int v : c.out)
    if (v >= 0) {
      if (++used[v] > 1) return false;  // no diagonals
      if (!spec.symmetries) {
        if (v < last) return false;  // monotone input order
        last = v;
      }
    }
  if (!spec.degeneracies)
    for (int u : used)
      if (u == 0) return false;  // every input used
  return true;
}

std::vector<CubeMor> cube_homs(int m, int n, const CubeSpec& spec) {
  std::vector<CubeMor> out;
  CubeMor cur{m, n, {}};
  std::function<void()> dfs = [&]() {
    if (static_cast<int>(cur.out.size()) == n) {
      if (cube_mor_ok(cur, spec)) out.push_back(cur);
      return;
    }
    for (int v = -2; v < m; ++v) {
      cur.out.push_back(v);
      bool prune = false;
      if (v >= 0) {
        int c = 0;
        for (int w : cur.out)
          if (w == v) ++c;
        if (c > 1) prune = true;
      }
      if (!prune) dfs();
      cur.out.pop_back();
    }
  };
  dfs();
  return out;
}

CubeMor cube_compose(const CubeMor& g, const CubeMor& f) {
  // g o f, f applied first.
  CubeMor h{f.m, g.n, {}};
  for (int v : g.out) h.out.push_back(v >= 0 ? f.out[v] : v);
  return h;
}

}  // namespace

CubeZoo cube_category(const CubeSpec& spec) {
  if (spec.max_dim < 0 || spec.max_dim > 3)
    fail("InvalidCubeSpec", "max_dim must be between 0 and 3");
  CubeZoo z;
  std::vector<CubeMor> mors;
  for (int d = 0; d <= spec.max_dim; ++d) z.cat.add_object(std::to_string(d));
  for (int m = 0; m <= spec.max_dim; ++m)
    for (int n = 0; n <= spec.max_dim; ++n)
      for (const auto& c : cube_homs(m, n, spec)) {
        z.cat.add_arrow(cube_mor_id(c), std::to_string(m), std::to_string(n));
        mors.push_back(c);
      }
  for (int d = 0; d <= spec.max_dim; ++d) {
    CubeMor idm{d, d, {}};
    for (int i = 0; i < d; ++i) idm.out.push_back(i);
    z.cat.set_identity(std::to_string(d), cube_mor_id(idm));
  }
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (f.n != g.m) continue;
      z.cat.set_compose(cube_mor_id(g), cube_mor_id(f),
                        cube_mor_id(cube_compose(g, f)));
    }
  z.cat = validate_category(z.cat);

  z.reedy.base = z.cat;
  for (int d = 0; d <= spec.max_dim; ++d) z.reedy.degree[std::to_string(d)] = d;
  for (const auto& c : mors) {
    std::vector<int> used(c.m, 0);
    bool constants = false;
    for (int v : c.out) {
      if (v >= 0)
        ++used[v];
      else
        constants = true;
    }
    bool dropped = false;
    for (int u : used)
      if (u == 0) dropped = true;
    if (!dropped) z.reedy.plus.insert(cube_mor_id(c));   // face-type o iso
    if (!constants) z.reedy.minus.insert(cube_mor_id(c));  // degeneracy-type o iso
  }

  if (spec.symmetries) {
    CubeSpec mono = spec;
    mono.symmetries = false;
    CubeZoo sub = cube_category(mono);
    FinFunctor c;
    c.source = sub.cat;
    c.target = z.cat;
    for (const auto& o : sub.cat.objects) c.omap[o] = o;
    for (const auto& a : sub.cat.arrows) c.amap[a.id] = a.id;
    z.pres = make_presentation(sub.cat, z.cat, c);
    z.reedy0 = sub.reedy;
  }
  return z;
}

FinCat terminal_category() {
  FinCat c;
  c.add_object("pt");
  c.add_arrow("id_pt", "pt", "pt");
  c.set_identity("pt", "id_pt");
  c.set_compose("id_pt", "id_pt", "id_pt");
  return validate_category(c);
}

FinCat discrete_category(int n) {
  FinCat c;
  for (int i = 0; i < n; ++i) {
    std::string o = "d" + std::to_string(i);
    c.add_object(o);
    c.add_arrow("id_" + o, o, o);
    c.set_identity(o, "id_" + o);
    c.set_compose("id_" + o, "id_" + o, "id_" + o);
  }
  return validate_category(c);
}

FinCat walking_iso() {
  FinCat c;
  c.add_object("a");
  c.add_object("b");
  c.add_arrow("id_a", "a", "a");
  c.add_arrow("id_b", "b", "b");
  c.add_arrow("f", "a", "b");
  c.add_arrow("finv", "b", "a");
  c.set_identity("a", "id_a");
  c.set_identity("b", "id_b");
  c.set_compose("id_a", "id_a", "id_a");
  c.set_compose("id_b", "id_b", "id_b");
  c.set_compose("f", "id_a", "f");
  c.set_compose("id_b", "f", "f");
  c.set_compose("finv", "id_b", "finv");
  c.set_compose("id_a", "finv", "finv");
  c.set_compose("finv", "f", "id_a");
  c.set_compose("f", "finv", "id_b");
  return validate_category(c);
}

FinCat walking_idempotent() {
  FinCat c;
  c.add_object("x");
  c.add_arrow("id_x", "x", "x");
  c.add_arrow("e", "x", "x");
  c.set_identity("x", "id_x");
  c.set_compose("id_x", "id_x", "id_x");
  c.set_compose("id_x", "e", "e");
  c.set_compose("e", "id_x", "e");
  c.set_compose("e", "e", "e");
  return validate_category(c);
}

FinCat parallel_pair() {
  FinCat c;
  c.add_object("a");
  c.add_object("b");
  c.add_arrow("id_a", "a", "a");
  c.add_arrow("id_b", "b", "b");
  c.add_arrow("u", "a", "b");
  c.add_arrow("v", "a", "b");
  c.set_identity("a", "id_a");
  c.set_identity("b", "id_b");
  c.set_compose("id_a", "id_a", "id_a");
  c.set_compose("id_b", "id_b", "id_b");
  c.set_compose("u", "id_a", "u");
  c.set_compose("id_b", "u", "u");
  c.set_compose("v", "id_a", "v");
  c.set_compose("id_b", "v", "v");
  return validate_category(c);
}

FinCat poset_category(const std::vector<std::string>& objects,
                      const std::function<bool(const std::string&,
                                               const std::string&)>& leq) {
  FinCat c;
  auto aid = [](const std::string& a, const std::string& b) {
    return a + "<=" + b;
  };
  for (const auto& o : objects) c.add_object(o);
  for (const auto& a : objects)
    for (const auto& b : objects)
      if (leq(a, b)) c.add_arrow(aid(a, b), a, b);
  for (const auto& o : objects) c.set_identity(o, aid(o, o));
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& d : objects)
        if (leq(a, b) && leq(b, d))
          c.set_compose(aid(b, d), aid(a, b), aid(a, d));
  return validate_category(c);
}

FinCat chain_poset(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back("c" + std::to_string(i));
  return poset_category(objs, [](const std::string& a, const std::string& b) {
    return a <= b;  // c0 < c1 < ... lexicographic on the suffix works for n <= 10
  });
}

FinCat diamond_poset() {
  return poset_category(
      {"bot", "left", "right", "top"},
      [](const std::string& a, const std::string& b) {
        if (a == b) return true;
        if (a == "bot") return true;
        if (b == "top") return true;
        return false;
      });
}

std::vector<CatalogEntry> small_catalog() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"terminal", terminal_category(), true});
  cat.push_back({"discrete2", discrete_category(2), true});
  cat.push_back({"discrete3", discrete_category(3), true});
  cat.push_back({"chain2", chain_poset(2), true});
  cat.push_back({"chain3", chain_poset(3), true});
  cat.push_back({"diamond", diamond_poset(), true});
  cat.push_back({"parallel-pair", parallel_pair(), true});
  cat.push_back({"walking-idempotent", walking_idempotent(), true});
  cat.push_back({"walking-iso", walking_iso(), false});
  cat.push_back({"Z2", group_category(group_table_zn(2)).cat, false});
  cat.push_back({"Z3", group_category(group_table_zn(3)).cat, false});
  return cat;
}

}  // namespace catwb
