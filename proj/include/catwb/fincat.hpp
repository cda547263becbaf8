#ifndef CATWB_FINCAT_HPP
#define CATWB_FINCAT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catwb/error.hpp"
#include "catwb/report.hpp"

namespace catwb {

struct Arrow {
  std::string id;
  std::string name;
  std::string dom;
  std::string cod;
};

// A finite category given by a total composition table. Identifiers are
// opaque strings; equality is identifier equality.
struct FinCat {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> identity;  // object id -> arrow id
  // (g, f) -> g o f, defined exactly when cod(f) = dom(g)
  std::map<std::pair<std::string, std::string>, std::string> table;

  bool has_object(const std::string& o) const;
  bool has_arrow(const std::string& a) const;
  const Arrow& arrow(const std::string& a) const;
  const std::string& id_arrow(const std::string& obj) const;
  bool is_identity(const std::string& a) const;

  // g o f; throws NotComposable / MissingComposite.
  const std::string& compose(const std::string& g, const std::string& f) const;

  // Arrow ids a -> b, in table order.
  std::vector<std::string> hom(const std::string& a, const std::string& b) const;

  void add_object(const std::string& o);
  void add_arrow(const std::string& id, const std::string& dom,
                 const std::string& cod, const std::string& name = "");
  void set_identity(const std::string& obj, const std::string& a);
  void set_compose(const std::string& g, const std::string& f,
                   const std::string& gf);
};

// Checks totality of composition on composable pairs, identity laws and
// associativity. Throws MissingComposite / NonAssociative /
// IdentityLawViolation naming the offending arrows; returns its argument.
FinCat validate_category(FinCat c);

// Same checks, collected into a report instead of thrown.
Report category_report(const FinCat& c);

FinCat opposite(const FinCat& c);

// Sorts objects and arrows by id; composition entries follow. Used by the
// canonical writer.
FinCat sorted_copy(FinCat c);

std::optional<std::string> inverse_of(const FinCat& c, const std::string& a);
bool is_iso(const FinCat& c, const std::string& a);
bool is_gaunt(const FinCat& c);
bool is_connected(const FinCat& c);

struct FinFunctor {
  FinCat source;
  FinCat target;
  std::map<std::string, std::string> omap;
  std::map<std::string, std::string> amap;

  const std::string& on_object(const std::string& o) const;
  const std::string& on_arrow(const std::string& a) const;
};

FinFunctor validate_functor(FinFunctor f);
Report functor_report(const FinFunctor& f);

FinFunctor identity_functor(const FinCat& c);
// G o F
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
FinFunctor opposite_functor(const FinFunctor& f);

bool is_fully_faithful(const FinFunctor& f);
bool is_essentially_surjective(const FinFunctor& f);
bool is_equivalence(const FinFunctor& f);
bool is_injective_on_objects(const FinFunctor& f);
// Isomorphism of categories: bijective on objects and arrows.
bool is_cat_isomorphism(const FinFunctor& f);

// All functors A -> B (exhaustive, deterministic order). Intended for small
// categories; used by lifting search and the test oracles.
std::vector<FinFunctor> enumerate_functors(const FinCat& a, const FinCat& b);

// A finite shape with an interpretation flag; `opposite` means all dom/cod
// and composition order are read reversed.
struct FinDiagramShape {
  FinCat cat;
  bool opposite = false;

  FinCat realized() const { return opposite ? catwb::opposite(cat) : cat; }
};

// A covariant diagram of categories over a finite index category.
struct CatDiagram {
  FinCat index;
  std::map<std::string, FinCat> value;      // index object -> category
  std::map<std::string, FinFunctor> edge;   // index arrow -> functor

  const FinCat& at(const std::string& o) const;
  const FinFunctor& along(const std::string& a) const;
};

// Throws NonFunctorialDiagram.
void validate_cat_diagram(const CatDiagram& d);

struct LimitResult {
  FinCat cat;
  std::map<std::string, FinFunctor> projection;  // per index object
};

// Componentwise limit: objects are compatible families of objects, arrows
// compatible families of arrows. Families are ordered lexicographically by
// the index's object order, so the result is a fixed representative.
LimitResult finite_limit(const CatDiagram& d);

// Convenience: limit of a diagram over a shape read through its flag.
LimitResult finite_limit(const FinDiagramShape& shape,
                         const std::map<std::string, FinCat>& value,
                         const std::map<std::string, FinFunctor>& edge);

// The unique functor apex -> limit induced by a cone, or nullopt when the
// cone does not commute with the diagram.
std::optional<FinFunctor> mediate_cone(const CatDiagram& d, const LimitResult& lim,
                                       const FinCat& apex,
                                       const std::map<std::string, FinFunctor>& cone);

// Universal-property oracle: every cone with the given apex factors uniquely.
bool check_cone_universal(const CatDiagram& d, const LimitResult& lim,
                          const FinCat& apex,
                          const std::map<std::string, FinFunctor>& cone);

struct CommaResult {
  FinCat cat;
  FinFunctor proj_left;   // (a, b, t) -> a
  FinFunctor proj_right;  // (a, b, t) -> b
};

// Comma category F down G for functors F : A -> B, G : C -> B. Objects are
// (a, c, t : F(a) -> G(c)); morphisms are pairs making the square commute.
CommaResult comma_category(const FinFunctor& f, const FinFunctor& g);

std::string comma_object_id(const std::string& a, const std::string& c,
                            const std::string& t);

}  // namespace catwb

#endif
