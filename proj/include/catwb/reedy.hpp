#ifndef CATWB_REEDY_HPP
#define CATWB_REEDY_HPP

#include <optional>
#include <set>

#include "catwb/fincat.hpp"
#include "catwb/freecat.hpp"

namespace catwb {

// Degree function plus the distinguished raising / lowering subcategories.
// Strictness is a checked property, not a separate representation.
struct ReedyStructure {
  FinCat base;
  std::map<std::string, int> degree;
  std::set<std::string> plus;   // arrow ids
  std::set<std::string> minus;  // arrow ids
};

using StrictReedyStructure = ReedyStructure;

// Generalized Reedy axioms, checked exhaustively:
//  - plus and minus are wide subcategories (identities, composition);
//  - plus intersect minus = the isomorphisms;
//  - non-invertible plus arrows strictly raise degree, non-invertible minus
//    arrows strictly lower it, isomorphisms preserve it;
//  - every arrow factors as plus o minus, uniquely up to isomorphism;
//  - an isomorphism fixing a minus arrow by postcomposition is an identity.
Report check_generalized_reedy(const ReedyStructure& s);

// Generalized + only identity isomorphisms + strictly unique factorization.
Report check_strict(const ReedyStructure& s);

// Generalized + the minus class contains only isomorphisms.
Report check_generalized_direct(const ReedyStructure& s);

// For every arrow, enumerates all (minus, plus) pairs composing to it and
// asserts there is exactly one.
Report check_unique_factorization(const ReedyStructure& s);

// The unique (minus, plus) factorization of an arrow, when it is unique.
std::optional<std::pair<std::string, std::string>> unique_factorization(
    const ReedyStructure& s, const std::string& arrow);

// Every arrow f : a -> b of R lifts to an arrow k of R0 up to isomorphism:
// there are isos w : a -> c(x), w' : b -> c(y) with c(k) o w = w' o f.
Report check_lifting_condition(const AmalgamPresentation& pres,
                               const ReedyStructure& s0);

}  // namespace catwb

#endif
