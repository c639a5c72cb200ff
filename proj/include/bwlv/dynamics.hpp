#pragma once

#include <span>
#include <vector>

#include "bwlv/types.hpp"

namespace bwlv {

/// Sampled solution of a rate-equation system.
struct trajectory {
    std::vector<double> times;                 ///< months, strictly increasing
    std::vector<std::vector<double>> states;   ///< one population vector per time
    std::size_t species_count() const { return states.empty() ? 0 : states.front().size(); }
};

/// Generalized rate equation:
///   rate_i = eps_i * N_i + (1/beta_i) * sum_j alpha[j][i] * N_j * N_i
/// with the sum truncated to the system's kappa nearest-neighbor species
/// (kappa == count gives the full, untruncated sum).
std::vector<double> lv_rhs(std::span<const double> populations, const species_set& sys);

/// Expanded two-role total-population rate:
///   eps_p N_p + eps_d N_d + (1/beta_p)(alpha_pp N_p^2 + alpha_dd N_d^2
///                                      - 2 alpha_pd N_p N_d).
/// The same-role and cross terms use mass-action pair counts; no coordination
/// prefactor multiplies the linear terms.
double total_population_rate(const population_state& state, const interaction_params& params);

/// Fixed-step classical fourth-order integration, sampled at t_k = k*step for
/// every k with t_k <= t_end. Populations are never clamped: a non-finite
/// component raises nonfinite_state, a component below -1e-12 raises
/// negative_population, both naming the sample time.
trajectory integrate(const species_set& sys, std::vector<double> initial, double t_end,
                     double step);

/// First integral of the classic two-species system
///   dx/dt = x (e0 - (g/b0) y),   dy/dt = y (-e1' + (g/b1) x)
/// namely V = (g/b1) x - e1' ln x + (g/b0) y - e0 ln y, constant along exact
/// orbits. Used as an integrator-accuracy oracle. Requires a 2-species set in
/// the classic shape (eps[0] > 0 > eps[1], antisymmetric cross coefficients,
/// zero diagonal) and strictly positive populations.
double conserved_quantity(std::span<const double> state, const species_set& sys);

/// Trajectory CSV: header t,N_1,...,N_k (or t,N_p,N_d,N_T for two species),
/// one row per sample, 12 significant digits.
std::string trajectory_to_csv(const trajectory& tr);

}  // namespace bwlv
