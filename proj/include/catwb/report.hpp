#ifndef CATWB_REPORT_HPP
#define CATWB_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace catwb {

// Outcome of a checker. Witnesses are kept sorted so reports are
// bit-identical across runs.
struct Report {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;

  explicit Report(std::string n = "") : name(std::move(n)) {}

  void violation(const std::string& w) {
    pass = false;
    witnesses.push_back(w);
  }

  void note(const std::string& w) { witnesses.push_back(w); }

  void absorb(const Report& other) {
    pass = pass && other.pass;
    for (const auto& w : other.witnesses)
      witnesses.push_back(other.name.empty() ? w : other.name + ": " + w);
  }

  void finalize() { std::sort(witnesses.begin(), witnesses.end()); }

  std::string summary() const {
    std::string s = name + ": " + (pass ? "pass" : "FAIL");
    for (const auto& w : witnesses) s += "\n  " + w;
    return s;
  }
};

}  // namespace catwb

#endif
