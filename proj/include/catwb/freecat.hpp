#ifndef CATWB_FREECAT_HPP
#define CATWB_FREECAT_HPP

#include <string>
#include <vector>

#include "catwb/fincat.hpp"

namespace catwb {

struct QuiverEdge {
  std::string id, src, dst;
};

struct Quiver {
  std::vector<std::string> nodes;
  std::vector<QuiverEdge> edges;
};

// Truncated materialization of the free category on a quiver. Arrows are the
// paths of length <= max_len; the composition table is partial (entries exist
// only where the composite stays within the bound). Test-only scaffold.
FinCat free_category(const Quiver& q, int max_len);

// Composite lookup on a free_category output; throws BoundExceeded where the
// table is partial.
const std::string& free_category_compose(const FinCat& c, const std::string& g,
                                         const std::string& f);

// The pushout data: c : R0 -> R with R0 a strict Reedy category upstream.
// c must be injective on objects and on arrows.
struct AmalgamPresentation {
  FinCat R;
  FinCat R0;
  FinFunctor c;  // R0 -> R

  // Inverses of c, filled in by make_presentation.
  std::map<std::string, std::string> obj_preimage;
  std::map<std::string, std::string> arrow_preimage;

  bool is_c_image(const std::string& r_arrow) const {
    return arrow_preimage.count(r_arrow) != 0;
  }
  // True when the letter is the c-image of an identity of R0.
  bool is_c_identity(const std::string& r_arrow) const {
    auto it = arrow_preimage.find(r_arrow);
    return it != arrow_preimage.end() && R0.is_identity(it->second);
  }
  const std::string& preimage(const std::string& r_arrow) const {
    return arrow_preimage.at(r_arrow);
  }
};

// Validates everything and fills the inverse maps. Throws PresentationInvalid.
AmalgamPresentation make_presentation(FinCat R0, FinCat R, FinFunctor c);

// A morphism of the pushout category in normal form: a composable sequence of
// R-arrows in application order (first applied first), containing no c-image
// of an R0-identity and no two adjacent c-image letters.
struct NFWord {
  std::string src, tgt;
  std::vector<std::string> letters;
};

bool nf_equal(const NFWord& a, const NFWord& b);
bool is_normal_form(const AmalgamPresentation& pres, const NFWord& w);

NFWord nf_identity(const AmalgamPresentation& pres, const std::string& obj);

// Rewrites a composable letter sequence to its normal form: deletes c-images
// of R0-identities and merges adjacent c-image letters through R0.
NFWord normalize(const AmalgamPresentation& pres, const std::string& src,
                 const std::vector<std::string>& letters);

// a after b (target of b = source of a).
NFWord nf_compose(const AmalgamPresentation& pres, const NFWord& a,
                  const NFWord& b);

// All normal-form words src -> tgt of length <= max_len, ordered by length
// then letters.
std::vector<NFWord> nf_hom_enum(const AmalgamPresentation& pres,
                                const std::string& src, const std::string& tgt,
                                int max_len);

// Composes the letters in R; the empty word maps to the R-identity.
std::string p0_apply(const AmalgamPresentation& pres, const NFWord& w);

// Stable serialization, usable as a map key / object id.
std::string nf_key(const NFWord& w);

}  // namespace catwb

#endif
