#pragma once

#include <span>
#include <vector>

#include "bwlv/types.hpp"

namespace bwlv {

/// Effective interaction field felt by one species: sum over its kappa
/// nearest neighbors of alpha[j][i] * N_j. For the two-role system this is
/// t_eff_p = alpha_dp N_d + alpha_pp N_p and t_eff_d = alpha_pd N_p +
/// alpha_dd N_d.
double t_eff(std::size_t species_index, std::span<const double> populations,
             const species_set& sys);

/// All mean-field quantities at one instant. omega carries the same numbers
/// as t_eff (the truncated field goes by both names in different derivation
/// contexts); t_cm_i = eps_i + t_eff_i / beta_i holds exactly by
/// construction.
struct mean_field_summary {
    std::vector<double> t_eff;
    std::vector<double> t_cm;
    std::vector<double> omega;
    double omega_total = 0.0;  ///< sum of the per-species fields
};
mean_field_summary summarize_fields(std::span<const double> populations, const species_set& sys);

/// Mean-field rates: rate_i = t_cm_i * N_i. Identical (to rounding) to lv_rhs
/// when kappa == count — the field is exact for instantaneous rates.
std::vector<double> mean_field_rate(std::span<const double> populations, const species_set& sys);

/// Population under a field frozen over [0, t]: N(t) = N(0) exp[(eps+omega) t].
double frozen_field_solution(double initial, double eps, double omega, double t);
std::vector<double> frozen_field_solution(std::span<const double> initial,
                                          std::span<const double> eps,
                                          std::span<const double> omega, double t);

/// One interval of the field estimator.
struct omega_interval {
    double t_start, t_end;
    double omega_hat;
};

struct omega_estimate {
    std::vector<omega_interval> intervals;
    double mean = 0.0;
};

/// Recovers the effective field from a logged series:
///   omega_hat = [ln N(t_{k+1}) - ln N(t_k)] / (t_{k+1} - t_k) - eps.
/// Exact (to rounding) on frozen-field exponentials; per-interval values are
/// returned so non-stationarity stays visible. Counts must be strictly
/// positive and the series needs at least two samples.
omega_estimate estimate_omega(std::span<const double> times, std::span<const double> counts,
                              double eps);

/// Default association-level growth rate for estimating on a total-population
/// column: the population-weighted mean of eps_p and eps_d at the initial
/// state. A stated convention, overridable by passing an explicit eps.
double default_eps_total(const interaction_params& params, const population_state& initial);

/// CSV with header t_start,t_end,omega_hat.
std::string omega_estimate_to_csv(const omega_estimate& est);

}  // namespace bwlv
