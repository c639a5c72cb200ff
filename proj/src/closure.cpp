#include "bwlv/closure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bwlv/errors.hpp"

namespace bwlv {

namespace {

void require_prey_form(const interaction_params& p) {
    std::string zeros;
    if (p.lambda1 == 0.0) zeros = "lambda1";
    if (p.xi_d == 0.0) zeros += zeros.empty() ? "xi_d" : ", xi_d";
    if (!zeros.empty()) throw singular_form("prey", zeros);
}

void require_predator_form(const interaction_params& p) {
    std::string zeros;
    if (p.lambda2 * p.nu == 0.0) zeros = "lambda2*nu";
    if (p.xi_p == 0.0) zeros += zeros.empty() ? "xi_p" : ", xi_p";
    if (!zeros.empty()) throw singular_form("predator", zeros);
}

}  // namespace

pair_counts pair_counts_mass_action(const population_state& state) {
    check_state(state);
    return pair_counts{state.n_p * state.n_p, state.n_d * state.n_d, state.n_p * state.n_d};
}

double n_dp_from_prey(double n_p, double n_pp, const interaction_params& params) {
    if (params.lambda1 == 0.0) throw singular_form("prey", "lambda1");
    const double g = static_cast<double>(params.gamma);
    return (params.xi_p / params.lambda1) * n_pp - (g / params.lambda1) * n_p;
}

double n_dd_from_prey(double n_p, double n_pp, double n_t, const interaction_params& params) {
    require_prey_form(params);
    const double g = static_cast<double>(params.gamma);
    const double l2nu = params.lambda2 * params.nu;
    return (g / params.xi_d) * n_t - (g / params.xi_d) * (1.0 + l2nu / params.lambda1) * n_p -
           (l2nu * params.xi_p) / (params.lambda1 * params.xi_d) * n_pp;
}

prey_form_coefficients prey_coefficients(const interaction_params& p) {
    require_prey_form(p);
    const double g = static_cast<double>(p.gamma);
    const double l2nu = p.lambda2 * p.nu;
    prey_form_coefficients c;
    c.p_t = p.eps_d + g * p.alpha_dd / (p.beta_p * p.xi_d);
    c.p_p = (p.eps_p - p.eps_d) +
            (g / p.beta_p) *
                (2.0 * p.alpha_pd / p.lambda1 - (p.alpha_dd / p.xi_d) * (1.0 - l2nu / p.lambda1));
    c.p_pp = -((p.xi_p / (p.beta_p * p.lambda1)) * (2.0 * p.alpha_pd + p.alpha_dd * l2nu / p.xi_d) -
               p.alpha_pp / p.beta_p);
    return c;
}

predator_form_coefficients predator_coefficients(const interaction_params& p) {
    require_predator_form(p);
    const double g = static_cast<double>(p.gamma);
    const double l2nu = p.lambda2 * p.nu;
    predator_form_coefficients c;
    c.q_t = p.eps_p + g * p.alpha_pp / (p.beta_d * p.xi_p);
    c.q_d = (p.eps_d - p.eps_p) +
            (g / p.beta_d) * ((p.alpha_pp / p.xi_p) * (p.lambda1 / l2nu - 1.0) -
                              2.0 * p.alpha_pd / l2nu);
    c.q_dd = (p.alpha_dd + (p.xi_d / l2nu) * (2.0 * p.alpha_pd - p.alpha_pp * p.lambda1 / p.xi_p)) /
             p.beta_d;
    return c;
}

double psi_prey_form(double n_p, double n_pp, double n_t, const interaction_params& params) {
    const auto c = prey_coefficients(params);
    return c.p_t * n_t + c.p_p * n_p + c.p_pp * n_pp;
}

double psi_predator_form(double n_d, double n_dd, double n_t, const interaction_params& params) {
    const auto c = predator_coefficients(params);
    return c.q_t * n_t + c.q_d * n_d + c.q_dd * n_dd;
}

double psi_prey_form(const population_state& state, const interaction_params& params) {
    const auto pc = pair_counts_mass_action(state);
    return psi_prey_form(state.n_p, pc.n_pp, state.n_t(), params);
}

double psi_predator_form(const population_state& state, const interaction_params& params) {
    const auto pc = pair_counts_mass_action(state);
    return psi_predator_form(state.n_d, pc.n_dd, state.n_t(), params);
}

consistency_row form_consistency_report(const population_state& state,
                                        const interaction_params& params) {
    require_prey_form(params);
    require_predator_form(params);
    const auto pc = pair_counts_mass_action(state);
    const double n_t = state.n_t();
    const double n_dd = n_dd_from_prey(state.n_p, pc.n_pp, n_t, params);

    consistency_row row;
    row.n_p = state.n_p;
    row.n_d = state.n_d;
    row.psi_prey = psi_prey_form(state.n_p, pc.n_pp, n_t, params);
    row.psi_pred = psi_predator_form(state.n_d, n_dd, n_t, params);
    row.abs_diff = std::abs(row.psi_prey - row.psi_pred);
    const double scale = std::max(std::abs(row.psi_prey), std::abs(row.psi_pred));
    row.rel_diff = scale == 0.0 ? 0.0 : row.abs_diff / scale;
    return row;
}

std::string consistency_table_to_csv(std::span<const consistency_row> rows) {
    std::string out = "n_p,n_d,psi_prey,psi_pred,abs_diff,rel_diff\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.n_p, r.n_d,
                      r.psi_prey, r.psi_pred, r.abs_diff, r.rel_diff);
        out += buf;
    }
    return out;
}

}  // namespace bwlv
