#include "catwb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace catwb {

namespace {

using json = nlohmann::json;

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(const std::string& text) : toks_(tokenize(text)) {}

  bool done() const { return i_ >= toks_.size(); }
  const std::string& peek() const {
    if (done()) fail("ParseError", "unexpected end of input");
    return toks_[i_];
  }
  std::string next() {
    std::string t = peek();
    ++i_;
    return t;
  }
  void expect(const std::string& kw) {
    if (next() != kw) fail("ParseError", "expected '" + kw + "'");
  }
  int next_int() {
    try {
      return std::stoi(next());
    } catch (const std::exception&) {
      fail("ParseError", "expected an integer");
    }
  }

 private:
  std::vector<std::string> toks_;
  std::size_t i_ = 0;
};

const std::set<std::string> kSectionWords = {
    "objects", "arrows", "identities", "compose", "end",    "degrees",
    "plus",    "minus",  "source",     "target",  "shape",  "value",
    "action",  "r0",     "r",          "c"};

bool at_section(const TokenStream& ts) {
  return ts.done() || kSectionWords.count(ts.peek()) != 0;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) fail("IOError", "cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return p;
  return base.parent_path() / p;
}

}  // namespace

FinCat parse_category(const std::string& text) {
  TokenStream ts(text);
  ts.expect("category");
  FinCat c;
  while (!ts.done()) {
    std::string section = ts.next();
    if (section == "end") break;
    if (section == "objects") {
      while (!at_section(ts)) c.add_object(ts.next());
    } else if (section == "arrows") {
      while (!at_section(ts)) {
        std::string id = ts.next();
        std::string name = ts.next();
        std::string dom = ts.next();
        std::string cod = ts.next();
        c.add_arrow(id, dom, cod, name == "-" ? "" : name);
      }
    } else if (section == "identities") {
      while (!at_section(ts)) {
        std::string obj = ts.next();
        c.set_identity(obj, ts.next());
      }
    } else if (section == "compose") {
      while (!at_section(ts)) {
        std::string g = ts.next();
        std::string f = ts.next();
        c.set_compose(g, f, ts.next());
      }
    } else {
      fail("ParseError", "unknown category section '" + section + "'");
    }
  }
  return validate_category(c);
}

std::string write_category(const FinCat& c) {
  FinCat s = sorted_copy(c);
  std::ostringstream out;
  out << "category\n";
  out << "objects\n";
  for (const auto& o : s.objects) out << "  " << o << "\n";
  out << "arrows\n";
  for (const auto& a : s.arrows)
    out << "  " << a.id << " " << (a.name.empty() ? "-" : a.name) << " "
        << a.dom << " " << a.cod << "\n";
  out << "identities\n";
  for (const auto& [o, a] : s.identity) out << "  " << o << " " << a << "\n";
  out << "compose\n";
  for (const auto& [gf, v] : s.table)
    out << "  " << gf.first << " " << gf.second << " " << v << "\n";
  out << "end\n";
  return out.str();
}

FinCat read_category_file(const std::filesystem::path& p) {
  return parse_category(read_file(p));
}

FinFunctor read_functor_file(const std::filesystem::path& p) {
  TokenStream ts(read_file(p));
  ts.expect("functor");
  FinFunctor f;
  while (!ts.done()) {
    std::string section = ts.next();
    if (section == "end") break;
    if (section == "source") {
      f.source = read_category_file(resolve(p, ts.next()));
    } else if (section == "target") {
      f.target = read_category_file(resolve(p, ts.next()));
    } else if (section == "objects") {
      while (!at_section(ts)) {
        std::string a = ts.next();
        f.omap[a] = ts.next();
      }
    } else if (section == "arrows") {
      while (!at_section(ts)) {
        std::string a = ts.next();
        f.amap[a] = ts.next();
      }
    } else {
      fail("ParseError", "unknown functor section '" + section + "'");
    }
  }
  return validate_functor(f);
}

AmalgamPresentation read_presentation_file(const std::filesystem::path& p) {
  TokenStream ts(read_file(p));
  ts.expect("presentation");
  std::optional<FinCat> r0, r;
  std::optional<FinFunctor> c;
  while (!ts.done()) {
    std::string section = ts.next();
    if (section == "end") break;
    if (section == "r0")
      r0 = read_category_file(resolve(p, ts.next()));
    else if (section == "r")
      r = read_category_file(resolve(p, ts.next()));
    else if (section == "c")
      c = read_functor_file(resolve(p, ts.next()));
    else
      fail("ParseError", "unknown presentation section '" + section + "'");
  }
  if (!r0 || !r || !c)
    fail("ParseError", "presentation needs r0, r and c sections");
  return make_presentation(*r0, *r, *c);
}

Diagram read_diagram_file(const std::filesystem::path& p) {
  TokenStream ts(read_file(p));
  ts.expect("diagram");
  Diagram d;
  while (!ts.done()) {
    std::string section = ts.next();
    if (section == "end") break;
    if (section == "shape") {
      d.shape = read_category_file(resolve(p, ts.next()));
    } else if (section == "value") {
      while (!at_section(ts)) {
        std::string o = ts.next();
        d.value[o] = read_category_file(resolve(p, ts.next()));
      }
    } else if (section == "action") {
      while (!at_section(ts)) {
        std::string a = ts.next();
        d.action[a] = read_functor_file(resolve(p, ts.next()));
      }
    } else {
      fail("ParseError", "unknown diagram section '" + section + "'");
    }
  }
  validate_diagram(d);
  return d;
}

ReedyAnnotation parse_reedy_annotation(const std::string& text) {
  TokenStream ts(text);
  ts.expect("reedy");
  ReedyAnnotation ann;
  while (!ts.done()) {
    std::string section = ts.next();
    if (section == "end") break;
    if (section == "degrees") {
      while (!at_section(ts)) {
        std::string o = ts.next();
        ann.degree[o] = ts.next_int();
      }
    } else if (section == "plus") {
      while (!at_section(ts)) ann.plus.insert(ts.next());
    } else if (section == "minus") {
      while (!at_section(ts)) ann.minus.insert(ts.next());
    } else {
      fail("ParseError", "unknown annotation section '" + section + "'");
    }
  }
  return ann;
}

ReedyAnnotation read_reedy_annotation_file(const std::filesystem::path& p) {
  return parse_reedy_annotation(read_file(p));
}

ReedyStructure apply_annotation(FinCat base, const ReedyAnnotation& ann) {
  ReedyStructure s;
  s.base = std::move(base);
  s.degree = ann.degree;
  s.plus = ann.plus;
  s.minus = ann.minus;
  return s;
}

std::string write_functor(const FinFunctor& f, const std::string& source_ref,
                          const std::string& target_ref) {
  std::ostringstream out;
  out << "functor\n";
  out << "source " << source_ref << "\n";
  out << "target " << target_ref << "\n";
  out << "objects\n";
  for (const auto& [a, b] : f.omap) out << "  " << a << " " << b << "\n";
  out << "arrows\n";
  for (const auto& [a, b] : f.amap) out << "  " << a << " " << b << "\n";
  out << "end\n";
  return out.str();
}

std::string write_reedy_annotation(const ReedyStructure& s) {
  std::ostringstream out;
  out << "reedy\n";
  out << "degrees\n";
  for (const auto& [o, n] : s.degree) out << "  " << o << " " << n << "\n";
  out << "plus\n";
  for (const auto& a : s.plus) out << "  " << a << "\n";
  out << "minus\n";
  for (const auto& a : s.minus) out << "  " << a << "\n";
  out << "end\n";
  return out.str();
}

std::string report_to_text(const Report& r) { return r.summary() + "\n"; }

std::string report_to_json(const Report& r) {
  json j;
  j["schema"] = 1;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["witnesses"] = r.witnesses;
  return j.dump(2) + "\n";
}

std::string reports_to_json(const std::string& command,
                            const std::vector<Report>& rs) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  bool all = true;
  j["checks"] = json::array();
  for (const auto& r : rs) {
    all = all && r.pass;
    j["checks"].push_back(
        {{"name", r.name}, {"pass", r.pass}, {"witnesses", r.witnesses}});
  }
  j["pass"] = all;
  return j.dump(2) + "\n";
}

std::string reports_to_text(const std::string& command,
                            const std::vector<Report>& rs) {
  std::ostringstream out;
  out << command << "\n";
  bool all = true;
  for (const auto& r : rs) {
    all = all && r.pass;
    out << r.summary() << "\n";
  }
  out << (all ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace catwb
