#include "catwb/freecat.hpp"

#include <algorithm>
#include <functional>

namespace catwb {

namespace {

std::string path_id(const std::string& node,
                    const std::vector<std::string>& edges) {
  if (edges.empty()) return "id:" + node;
  std::string s = "p:";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ".";
    s += edges[i];
  }
  return s;
}

}  // namespace

FinCat free_category(const Quiver& q, int max_len) {
  if (max_len < 0) fail("BoundExceeded", "max_len must be >= 0");
  FinCat c;
  for (const auto& n : q.nodes) c.add_object(n);

  struct Path {
    std::string src, dst;
    std::vector<std::string> edges;
  };
  std::vector<Path> paths;
  for (const auto& n : q.nodes) paths.push_back(Path{n, n, {}});
  std::size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t hi = paths.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (const auto& e : q.edges)
        if (e.src == paths[i].dst) {
          Path p = paths[i];
          p.dst = e.dst;
          p.edges.push_back(e.id);
          paths.push_back(p);
        }
    lo = hi;
    if (hi == paths.size()) break;
  }

  for (const auto& p : paths) {
    const std::string id = path_id(p.src, p.edges);
    c.add_arrow(id, p.src, p.dst);
    if (p.edges.empty()) c.set_identity(p.src, id);
  }
  for (const auto& f : paths)
    for (const auto& g : paths) {
      if (f.dst != g.src) continue;
      if (static_cast<int>(f.edges.size() + g.edges.size()) > max_len) continue;
      std::vector<std::string> cat = f.edges;
      cat.insert(cat.end(), g.edges.begin(), g.edges.end());
      c.set_compose(path_id(g.src, g.edges), path_id(f.src, f.edges),
                    path_id(f.src, cat));
    }
  return c;
}

const std::string& free_category_compose(const FinCat& c, const std::string& g,
                                         const std::string& f) {
  if (c.arrow(f).cod != c.arrow(g).dom)
    fail("NotComposable", "'" + g + "' o '" + f + "'");
  auto it = c.table.find({g, f});
  if (it == c.table.end())
    fail("BoundExceeded", "composite of '" + g + "' o '" + f +
                              "' leaves the truncation bound");
  return it->second;
}

AmalgamPresentation make_presentation(FinCat R0, FinCat R, FinFunctor c) {
  AmalgamPresentation p;
  try {
    p.R0 = validate_category(std::move(R0));
    p.R = validate_category(std::move(R));
    p.c = validate_functor(std::move(c));
  } catch (const Error& e) {
    fail("PresentationInvalid", e.what());
  }
  if (p.c.source.objects != p.R0.objects || p.c.target.objects != p.R.objects)
    fail("PresentationInvalid", "c must be a functor R0 -> R");
  for (const auto& [o, v] : p.c.omap)
    if (!p.obj_preimage.emplace(v, o).second)
      fail("PresentationInvalid", "c is not injective on objects at '" + v + "'");
  for (const auto& [a, v] : p.c.amap)
    if (!p.arrow_preimage.emplace(v, a).second)
      fail("PresentationInvalid", "c is not injective on arrows at '" + v + "'");
  return p;
}

bool nf_equal(const NFWord& a, const NFWord& b) {
  return a.src == b.src && a.tgt == b.tgt && a.letters == b.letters;
}

bool is_normal_form(const AmalgamPresentation& pres, const NFWord& w) {
  if (w.letters.empty()) return w.src == w.tgt;
  std::string cur = w.src;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Arrow& a = pres.R.arrow(w.letters[i]);
    if (a.dom != cur) return false;
    cur = a.cod;
    if (pres.is_c_identity(w.letters[i])) return false;
    if (i && pres.is_c_image(w.letters[i - 1]) && pres.is_c_image(w.letters[i]))
      return false;
  }
  return cur == w.tgt;
}

NFWord nf_identity(const AmalgamPresentation& pres, const std::string& obj) {
  if (!pres.R.has_object(obj)) fail("UnknownObject", obj);
  return NFWord{obj, obj, {}};
}

NFWord normalize(const AmalgamPresentation& pres, const std::string& src,
                 const std::vector<std::string>& letters) {
  std::string cur = src;
  std::vector<std::string> stack;
  for (const auto& l : letters) {
    const Arrow& a = pres.R.arrow(l);
    if (a.dom != cur)
      fail("NotComposable", "letter '" + l + "' does not start at '" + cur + "'");
    cur = a.cod;
    if (pres.is_c_identity(l)) continue;
    stack.push_back(l);
    while (stack.size() >= 2) {
      const std::string& first = stack[stack.size() - 2];  // applied first
      const std::string& second = stack[stack.size() - 1];
      if (!pres.is_c_image(first) || !pres.is_c_image(second)) break;
      const std::string comp =
          pres.R0.compose(pres.preimage(second), pres.preimage(first));
      const std::string merged = pres.c.on_arrow(comp);
      stack.pop_back();
      stack.pop_back();
      if (!pres.is_c_identity(merged)) stack.push_back(merged);
    }
  }
  return NFWord{src, cur, stack};
}

NFWord nf_compose(const AmalgamPresentation& pres, const NFWord& a,
                  const NFWord& b) {
  if (b.tgt != a.src)
    fail("NotComposable",
         "target of second word '" + b.tgt + "' != source of first '" + a.src + "'");
  std::vector<std::string> letters = b.letters;
  letters.insert(letters.end(), a.letters.begin(), a.letters.end());
  return normalize(pres, b.src, letters);
}

std::vector<NFWord> nf_hom_enum(const AmalgamPresentation& pres,
                                const std::string& src, const std::string& tgt,
                                int max_len) {
  std::vector<NFWord> out;
  NFWord w{src, src, {}};
  std::function<void()> dfs = [&]() {
    if (w.tgt == tgt) out.push_back(w);
    if (static_cast<int>(w.letters.size()) >= max_len) return;
    for (const auto& a : pres.R.arrows) {
      if (a.dom != w.tgt) continue;
      if (pres.is_c_identity(a.id)) continue;
      if (!w.letters.empty() && pres.is_c_image(w.letters.back()) &&
          pres.is_c_image(a.id))
        continue;
      w.letters.push_back(a.id);
      std::string saved = w.tgt;
      w.tgt = a.cod;
      dfs();
      w.tgt = saved;
      w.letters.pop_back();
    }
  };
  if (max_len >= 0) dfs();
  std::sort(out.begin(), out.end(), [](const NFWord& a, const NFWord& b) {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  });
  return out;
}

std::string p0_apply(const AmalgamPresentation& pres, const NFWord& w) {
  if (w.letters.empty()) return pres.R.id_arrow(w.src);
  std::string acc = w.letters.front();
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    acc = pres.R.compose(w.letters[i], acc);
  return acc;
}

std::string nf_key(const NFWord& w) {
  if (w.letters.empty()) return "id:" + w.src;
  std::string s = "w:";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ".";
    s += w.letters[i];
  }
  return s;
}

}  // namespace catwb
