#ifndef CATWB_CATTRIBE_HPP
#define CATWB_CATTRIBE_HPP

#include "catwb/reedy.hpp"
#include "catwb/unroll.hpp"

namespace catwb {

// A diagram of categories over a finite shape, used contravariantly: the
// action along a shape arrow a : x -> y is a functor value(y) -> value(x).
struct Diagram {
  FinCat shape;
  std::map<std::string, FinCat> value;       // per shape object
  std::map<std::string, FinFunctor> action;  // per shape arrow

  const FinCat& at(const std::string& o) const { return value.at(o); }
  const FinFunctor& along(const std::string& a) const { return action.at(a); }
};

// Throws NonFunctorialDiagram: identities to identities, composites reversed.
void validate_diagram(const Diagram& d);

// Componentwise map of diagrams; naturality checked exhaustively.
struct DiagramMap {
  std::map<std::string, FinFunctor> component;  // per shape object
};

// Throws NonNaturalMap.
void validate_diagram_map(const Diagram& x, const Diagram& y,
                          const DiagramMap& m);

struct TribeClassReport {
  std::map<std::string, bool> isofibration;
  std::map<std::string, bool> equivalence;
  std::map<std::string, bool> injective_on_objects;
  bool pointwise_fibration = true;
  bool pointwise_anodyne = true;
};

TribeClassReport classify_map(const Diagram& x, const Diagram& y,
                              const DiagramMap& m);

// Fibrations of the tribe of categories: every isomorphism downstairs with a
// lifted domain endpoint lifts to an isomorphism upstairs.
bool is_isofibration(const FinFunctor& f);

// Anodyne maps of the tribe of categories: injective-on-objects equivalences.
bool is_anodyne_cat(const FinFunctor& f);

// Mapping path category factorization F = q o j with j anodyne and q an
// isofibration: E has objects (a, phi : F(a) ~ b), j(a) = (a, id),
// q(a, phi) = b.
struct CatFactorization {
  FinCat middle;
  FinFunctor j;  // anodyne
  FinFunctor q;  // isofibration
};

CatFactorization factorize_cat(const FinFunctor& f);

// Default cap on the lift search space (number of candidate object maps
// times candidate arrow maps).
constexpr long long kDefaultLiftCap = 50'000'000;

// A filler for the square q o top = bottom o i, with i anodyne and q an
// isofibration: d with d o i = top and q o d = bottom. Throws SizeCapExceeded
// when the exhaustive search is too large and NoLift when no filler exists.
FinFunctor find_lift(const FinFunctor& i, const FinFunctor& q,
                     const FinFunctor& top, const FinFunctor& bottom,
                     long long size_cap = kDefaultLiftCap);

// Pullback of a cospan f : A -> C <- B : g, computed as a finite limit.
struct PullbackResult {
  FinCat cat;
  FinFunctor to_left;   // -> A
  FinFunctor to_right;  // -> B
  CatDiagram diag;      // the cospan, for mediating cones
  LimitResult lim;
};

PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g);

// The mediating functor T -> P for u : T -> A, v : T -> B with f u = g v.
FinFunctor mediate_pullback(const PullbackResult& p, const FinFunctor& u,
                            const FinFunctor& v);

// Matching object of a diagram at a shape object: the limit over non-identity
// shape arrows into z (with commuting triangles as morphisms) of the values
// at their sources, together with the matching map value(z) -> limit.
struct MatchingResult {
  FinCat index;  // the (opposite) category of non-identity arrows into z
  CatDiagram diag;
  LimitResult lim;
  FinFunctor map;  // value(z) -> matching object
};

MatchingResult matching_object(const Diagram& x, const std::string& z);

// Relative matching map of m : X -> Y at z, as a functor into the pullback
// M_z X x_{M_z Y} Y(z).
struct RelativeMatching {
  PullbackResult target;
  FinFunctor map;  // X(z) -> target
};

RelativeMatching relative_matching_map(const Diagram& x, const Diagram& y,
                                       const DiagramMap& m,
                                       const std::string& z);

// Reedy fibrations over a (strictly direct) shape: every relative matching
// map is an isofibration. Fibrant: fibration to the terminal diagram.
bool is_reedy_fibration(const Diagram& x, const Diagram& y,
                        const DiagramMap& m);
bool is_reedy_fibrant(const Diagram& x);

Diagram terminal_diagram(const FinCat& shape);
DiagramMap map_to_terminal(const Diagram& x, const Diagram& term);
DiagramMap identity_diagram_map(const Diagram& x);

// p^* : restriction of a diagram over R along the projection p : D_R -> R.
Diagram restrict_along_p(const UnrolledCategory& u, const Diagram& x);
DiagramMap restrict_along_p_map(const UnrolledCategory& u,
                                const DiagramMap& m);

// p_* : right Kan extension, computed pointwise as limits over the comma
// categories of pairs (Z, phi : p(Z) -> r).
struct RanResult {
  Diagram diagram;  // over R
  // Per R-object, the comma index and limit used at that object; object ids
  // of the comma category are reused by the map-level operation.
  std::map<std::string, CommaResult> comma;     // p down r
  std::map<std::string, CatDiagram> diag;
  std::map<std::string, LimitResult> lim;
};

RanResult ran_along_p(const UnrolledCategory& u, const Diagram& s);
DiagramMap ran_along_p_map(const UnrolledCategory& u, const RanResult& rs,
                           const RanResult& rt, const DiagramMap& m);

// The canonical map X -> p_* p^* X, mediated by the cone with legs the
// X-actions of the comma maps; an isomorphism pointwise.
DiagramMap unit_ran_restrict(const UnrolledCategory& u, const Diagram& x,
                             const RanResult& r);

bool is_diagram_iso(const Diagram& x, const Diagram& y, const DiagramMap& m);
DiagramMap invert_diagram_map(const Diagram& x, const Diagram& y,
                              const DiagramMap& m);
DiagramMap compose_diagram_maps(const DiagramMap& g, const DiagramMap& f);
bool diagram_maps_equal(const DiagramMap& a, const DiagramMap& b);

// p-fibrations over R: maps whose restriction along p is a Reedy fibration.
bool is_p_fibration(const UnrolledCategory& u, const Diagram& x,
                    const Diagram& y, const DiagramMap& m);
bool is_p_fibrant(const UnrolledCategory& u, const Diagram& x);

// Factorization of a diagram map over a strictly direct shape into a
// pointwise anodyne map followed by a Reedy fibration, by induction on
// degree; classes verified post hoc.
struct ReedyFactorization {
  Diagram middle;
  DiagramMap j;  // pointwise anodyne
  DiagramMap q;  // Reedy fibration
};

ReedyFactorization reedy_factorize(const Diagram& x, const Diagram& y,
                                   const DiagramMap& m,
                                   const ReedyStructure& shape_structure);

// The main factorization pipeline over R: restrict along p, Reedy-factorize
// over D_R, push forward with p_*, and correct endpoints along the canonical
// isomorphisms. First factor pointwise anodyne, second a p-fibration,
// composite equal to the input.
struct TribeFactorization {
  Diagram middle;
  DiagramMap j;  // pointwise anodyne
  DiagramMap q;  // p-fibration
};

TribeFactorization tribe_factorize(const UnrolledCategory& u,
                                   const ReedyStructure& induced,
                                   const Diagram& x, const Diagram& y,
                                   const DiagramMap& m);

}  // namespace catwb

#endif
