#ifndef CATWB_FACTCHECK_HPP
#define CATWB_FACTCHECK_HPP

#include "catwb/fincat.hpp"
#include "catwb/reedy.hpp"
#include "catwb/unroll.hpp"

namespace catwb {

// For a functor F : A -> B and arrow f : b -> b' of B: objects are triples
// (a, u : b -> F(a), v : F(a) -> b') with v o u = f; morphisms are arrows
// h : a -> a' with F(h) o u = u' and v' o F(h) = v.
struct FactorizationCategory {
  std::string arrow;  // f, in B
  FinCat cat;
};

FactorizationCategory factorization_category(const FinFunctor& F,
                                             const std::string& arrow);

// Absolute density criterion: every factorization category is non-empty and
// connected. Witnesses name the failing arrows.
Report check_absolutely_dense(const FinFunctor& F);

// For a Reedy functor G : C -> D, alpha in D, beta in C and sigma : alpha ->
// G(beta) in D_+: objects are factorizations sigma = G(nu) o mu with
// mu : alpha -> G(gamma) and nu : gamma -> beta in C_+; morphisms are arrows
// tau : gamma -> gamma' with nu' o tau = nu and G(tau) o mu = mu'.
struct FactPlusCategory {
  std::string alpha, beta, sigma;
  FinCat cat;
};

FactPlusCategory fact_plus_category(const FinFunctor& G,
                                    const ReedyStructure& sc,
                                    const ReedyStructure& sd,
                                    const std::string& alpha,
                                    const std::string& beta,
                                    const std::string& sigma);

// Cofibering: every Fact_{C_+}(alpha, sigma) is empty or connected.
Report check_cofibering(const FinFunctor& G, const ReedyStructure& sc,
                        const ReedyStructure& sd);

// Fibering: the opposite functor is cofibering.
Report check_fibering(const FinFunctor& G, const ReedyStructure& sc,
                      const ReedyStructure& sd);

// Grothendieck fibration: every arrow f : d -> G(e) has a cartesian lift,
// found by exhaustive universal-property checking.
Report check_grothendieck_fibration(const FinFunctor& G);

// The comma category p down p with its two projections and the Reedy
// structure with degree(Z, Z', t) = deg(Z) + deg(Z') and componentwise
// classes, validated against the generalized Reedy axioms.
struct CommaOverR {
  CommaResult comma;        // p down p
  ReedyStructure reedy;     // on the comma category
  FinFunctor pi0;           // (Z, Z', t) -> Z
  FinFunctor pi1;           // (Z, Z', t) -> Z'
};

CommaOverR comma_p_over_p(const UnrolledCategory& u,
                          const ReedyStructure& induced);

// The fiber P_alpha of pi1 over a D_R object alpha: objects of p down p
// whose second component is alpha, morphisms over the identity of alpha.
// first_degree records the D_R-degree of each object's first component;
// these are bounded by deg_R(p(alpha)) + 1.
struct FiberPAlpha {
  std::string alpha;
  FinCat cat;
  std::map<std::string, int> first_degree;
  int base_degree = 0;  // deg_R(p(alpha))
};

FiberPAlpha fiber_P_alpha(const UnrolledCategory& u, const ReedyStructure& s_r,
                          const ReedyStructure& induced, const CommaOverR& c,
                          const std::string& alpha);

}  // namespace catwb

#endif
