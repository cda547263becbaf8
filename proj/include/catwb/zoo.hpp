#ifndef CATWB_ZOO_HPP
#define CATWB_ZOO_HPP

#include <functional>

#include "catwb/freecat.hpp"
#include "catwb/reedy.hpp"

namespace catwb {

struct GroupTable {
  std::vector<std::string> elements;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> mult;
};

// Throws NotAGroup.
void validate_group(const GroupTable& t);

GroupTable group_table_zn(int n);  // cyclic, elements e, g, g2, ...
GroupTable group_table_s3();       // symmetric group on three letters

struct GroupZoo {
  FinCat cat;                  // one object, arrows = elements
  AmalgamPresentation pres;    // c : terminal -> G
  ReedyStructure reedy;        // degree 0, plus = minus = all arrows
};

GroupZoo group_category(const GroupTable& t);
GroupZoo group_zoo(const std::string& name);  // "Z2" | "Z3" | "S3"

struct CubeSpec {
  int max_dim = 2;
  bool symmetries = false;
  bool degeneracies = false;
};

struct CubeZoo {
  FinCat cat;
  ReedyStructure reedy;  // degree = dimension
  // Present when symmetries are on: the monotone subcategory and its
  // inclusion, plus the strict Reedy structure on it.
  std::optional<AmalgamPresentation> pres;
  std::optional<ReedyStructure> reedy0;
};

// Cube morphisms [m] -> [n] are coordinate assignments: each output is a
// constant 0/1 or a distinct input, every input used exactly once when
// degeneracies are off, monotone input order when symmetries are off.
CubeZoo cube_category(const CubeSpec& spec);

// Small fixed categories used across tests and the CLI.
FinCat terminal_category();
FinCat discrete_category(int n);
FinCat walking_iso();
FinCat walking_idempotent();
FinCat parallel_pair();
FinCat chain_poset(int n);     // linear order on n objects
FinCat diamond_poset();        // bottom, two middles, top
FinCat poset_category(const std::vector<std::string>& objects,
                      const std::function<bool(const std::string&,
                                               const std::string&)>& leq);

struct CatalogEntry {
  std::string name;
  FinCat cat;
  bool gaunt;
};

// At least ten small categories with known gauntness.
std::vector<CatalogEntry> small_catalog();

}  // namespace catwb

#endif
