#ifndef CATWB_UNROLL_HPP
#define CATWB_UNROLL_HPP

#include <optional>

#include "catwb/freecat.hpp"
#include "catwb/reedy.hpp"

namespace catwb {

// An object of D_R: an arrow x -> z -> y of the pushout category where
// x -> z comes from R0 and z -> y is a free isomorphism letter or absent.
struct DRObject {
  NFWord word;
  std::optional<std::string> r0_arrow;    // R0 arrow id behind x -> z
  std::optional<std::string> iso_letter;  // free R-iso letter behind z -> y
};

// A twisted-arrow square F : X -> Y, with f : src(Y) -> src(X) and
// f2 : tgt(X) -> tgt(Y) satisfying f2 o X o f = Y.
struct DRMorphism {
  std::string from, to;  // D_R object ids
  NFWord f, f2;
};

struct UnrolledCategory {
  AmalgamPresentation pres;
  FinCat category;
  std::map<std::string, DRObject> object_data;      // by object id
  std::map<std::string, DRMorphism> morphism_data;  // by arrow id
  FinFunctor projection;                            // p : D_R -> R
  int hom_bound = 2;
};

// Default per-component length bound for morphism enumeration; adequacy is
// validated empirically (rebuilding at bound + 2 finds nothing new).
constexpr int kDefaultHomBound = 2;

// Materializes D_R as the full subcategory of the twisted arrow category of
// the pushout spanned by the admissible arrows. Throws PresentationInvalid.
UnrolledCategory build_DR(const AmalgamPresentation& pres,
                          int hom_bound = kDefaultHomBound);

std::string dr_object_id(const NFWord& word);
std::string dr_morphism_id(const std::string& from, const std::string& to,
                           const NFWord& f, const NFWord& f2);

// p : D_R -> R, codomain projection followed by the pushout cocone map.
const FinFunctor& projection_p(const UnrolledCategory& u);

// deg(y) - deg(x) + k, with k = 1 exactly when the iso component is present.
// Throws NegativeDegree when the formula goes below zero.
int degree_DR(const UnrolledCategory& u, const ReedyStructure& s_r,
              const std::string& object_id);

// The strict Reedy structure D_R inherits, given structures on R and R0.
// Validated with check_strict before being returned; throws StructureViolation
// with a witness otherwise.
ReedyStructure induce_DR_structure(const UnrolledCategory& u,
                                   const ReedyStructure& s_r,
                                   const ReedyStructure& s0);

// The (minus, plus) factorization of a D_R morphism under the induced
// structure; returns the two arrow ids.
std::pair<std::string, std::string> reedy_factor_DR(
    const UnrolledCategory& u, const ReedyStructure& induced,
    const std::string& arrow_id);

// Component shape w o f_s: an optional c-image letter followed by an optional
// free isomorphism letter. Returns (r0 part, iso part) or nullopt.
std::optional<std::pair<std::optional<std::string>, std::optional<std::string>>>
parse_component_shape(const AmalgamPresentation& pres, const NFWord& w);

}  // namespace catwb

#endif
