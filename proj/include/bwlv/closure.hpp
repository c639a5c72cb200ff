#pragma once

#include <span>
#include <string>
#include <vector>

#include "bwlv/types.hpp"

namespace bwlv {

/// Mass-action pair densities: n_pp = N_p^2, n_dd = N_d^2, n_pd = N_p N_d.
pair_counts pair_counts_mass_action(const population_state& state);

/// Cross-pair count eliminated through the prey-side lattice relation:
///   n_dp = (xi_p/lambda1) n_pp - (gamma/lambda1) n_p.
/// Requires lambda1 != 0.
double n_dp_from_prey(double n_p, double n_pp, const interaction_params& params);

/// Predator-pair count eliminated through both lattice relations, exactly as
/// the source algebra states it:
///   n_dd = (gamma/xi_d) n_t - (gamma/xi_d)(1 + lambda2 nu / lambda1) n_p
///          - (lambda2 nu xi_p)/(lambda1 xi_d) n_pp.
/// Requires lambda1 != 0 and xi_d != 0. Note: substituting this back into the
/// predator-side relation does NOT close exactly; the residual is
/// -2 gamma (lambda2 nu / lambda1) n_p (see tests), a documented property of
/// the printed closure.
double n_dd_from_prey(double n_p, double n_pp, double n_t, const interaction_params& params);

/// The three grouped coefficients of the prey-form total rate:
///   psi = p_t * n_t + p_p * n_p + p_pp * n_pp.
struct prey_form_coefficients {
    double p_t, p_p, p_pp;
};
prey_form_coefficients prey_coefficients(const interaction_params& params);

/// The three grouped coefficients of the predator-form total rate (uses
/// beta_d):  psi = q_t * n_t + q_d * n_d + q_dd * n_dd.
struct predator_form_coefficients {
    double q_t, q_d, q_dd;
};
predator_form_coefficients predator_coefficients(const interaction_params& params);

/// Total-population rate written in terms of preys and prey pairs.
/// Requires the prey form admissible (lambda1 != 0, xi_d != 0).
double psi_prey_form(double n_p, double n_pp, double n_t, const interaction_params& params);

/// Total-population rate written in terms of predators and predator pairs.
/// Requires the predator form admissible (lambda2*nu != 0, xi_p != 0).
double psi_predator_form(double n_d, double n_dd, double n_t, const interaction_params& params);

/// Convenience overloads with mass-action pair counts derived from the state.
double psi_prey_form(const population_state& state, const interaction_params& params);
double psi_predator_form(const population_state& state, const interaction_params& params);

/// Agreement report between the two expanded forms on one state. Pair counts
/// come from mass action; n_dd is resolved through the prey-side closure, the
/// same path the two forms' shared derivation uses. Disagreement is reported,
/// never corrected; the prey form is the canonical one downstream.
struct consistency_row {
    double n_p, n_d;
    double psi_prey, psi_pred;
    double abs_diff, rel_diff;  // rel_diff relative to max(|psi_prey|, |psi_pred|)
};
consistency_row form_consistency_report(const population_state& state,
                                        const interaction_params& params);

/// CSV with header n_p,n_d,psi_prey,psi_pred,abs_diff,rel_diff.
std::string consistency_table_to_csv(std::span<const consistency_row> rows);

}  // namespace bwlv
