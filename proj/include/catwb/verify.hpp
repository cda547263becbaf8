#ifndef CATWB_VERIFY_HPP
#define CATWB_VERIFY_HPP

#include <vector>

#include "catwb/report.hpp"

namespace catwb {

// The acceptance suite: each entry checks one headline property of the
// unrolling construction and its tribe-theoretic consequences, end to end on
// generated inputs. All checks are deterministic and run in seconds.
Report verify_unrolled_z2_shape();          // criterion 1
Report verify_unrolled_two_arrows();        // criterion 2
Report verify_induced_strict_structure();   // criterion 3
Report verify_absolute_density();           // criterion 4
Report verify_comma_projection();           // criterion 5
Report verify_matching_binary_product();    // criterion 6
Report verify_gaunt_criterion();            // criterion 7
Report verify_unit_isomorphism();           // criterion 8
Report verify_factorization_pipeline();     // criterion 9
Report verify_tribe_axioms();               // criterion 10
Report verify_rewriting_soundness();        // criterion 11

// All criteria in order.
std::vector<Report> run_verification_suite();

}  // namespace catwb

#endif
