#include "bwlv/types.hpp"

#include <cmath>
#include <string>

#include "bwlv/errors.hpp"

namespace bwlv {

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) throw range_violation(field, "not finite");
}

void require_unit_interval(double v, const char* field) {
    require_finite(v, field);
    if (v < 0.0 || v > 1.0) throw range_violation(field, "must be in [0,1]");
}

}  // namespace

form_admissibility classify_forms(const interaction_params& p) {
    form_admissibility f;
    f.prey = p.lambda1 != 0.0 && p.xi_d != 0.0;
    f.predator = p.lambda2 * p.nu != 0.0 && p.xi_p != 0.0;
    return f;
}

validated_params validate_params(const interaction_params& raw) {
    if (raw.gamma < 1) throw range_violation("gamma", "must be >= 1");

    require_finite(raw.alpha_pp, "alpha_pp");
    require_finite(raw.alpha_dd, "alpha_dd");
    require_finite(raw.alpha_pd, "alpha_pd");
    if (raw.alpha_pp < 0.0) throw range_violation("alpha_pp", "must be >= 0");
    if (raw.alpha_dd < 0.0) throw range_violation("alpha_dd", "must be >= 0");

    require_finite(raw.beta_p, "beta_p");
    require_finite(raw.beta_d, "beta_d");
    if (raw.beta_p <= 0.0) throw range_violation("beta_p", "must be > 0");
    if (raw.beta_d <= 0.0) throw range_violation("beta_d", "must be > 0");

    require_unit_interval(raw.lambda1, "lambda1");
    require_unit_interval(raw.lambda2, "lambda2");
    require_unit_interval(raw.xi_p, "xi_p");
    require_unit_interval(raw.xi_d, "xi_d");
    require_unit_interval(raw.nu, "nu");
    require_unit_interval(raw.phi, "phi");

    require_finite(raw.eps_p, "eps_p");
    require_finite(raw.eps_d, "eps_d");

    return validated_params{raw, classify_forms(raw)};
}

void check_state(const population_state& s) {
    if (!std::isfinite(s.n_p) || s.n_p < 0.0) throw range_violation("n_p", "must be >= 0");
    if (!std::isfinite(s.n_d) || s.n_d < 0.0) throw range_violation("n_d", "must be >= 0");
}

species_set species_set::make(std::vector<double> eps, std::vector<double> beta,
                              std::vector<std::vector<double>> alpha, std::size_t kappa) {
    const std::size_t n = eps.size();
    if (beta.size() != n) throw dimension_mismatch(n, beta.size());
    if (alpha.size() != n) throw dimension_mismatch(n, alpha.size());
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i].size() != n) throw dimension_mismatch(n, alpha[i].size());

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(beta[i]) || beta[i] <= 0.0)
            throw range_violation("beta[" + std::to_string(i) + "]", "must be > 0");
        if (!std::isfinite(eps[i])) throw range_violation("eps[" + std::to_string(i) + "]");
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha[i][j] != -alpha[j][i])
                throw antisymmetry_violation("alpha[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "]");
    }
    return make_raw(std::move(eps), std::move(beta), std::move(alpha), kappa);
}

species_set species_set::make_raw(std::vector<double> eps, std::vector<double> beta,
                                  std::vector<std::vector<double>> alpha, std::size_t kappa) {
    const std::size_t n = eps.size();
    if (n == 0) throw range_violation("count", "system needs at least one species");
    if (beta.size() != n) throw dimension_mismatch(n, beta.size());
    if (alpha.size() != n) throw dimension_mismatch(n, alpha.size());

    species_set s;
    s.count_ = n;
    s.kappa_ = kappa == 0 ? n : kappa;
    if (s.kappa_ < 1 || s.kappa_ > n) throw range_violation("kappa", "must be in [1, count]");
    s.eps_ = std::move(eps);
    s.beta_ = std::move(beta);
    s.alpha_.resize(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        if (alpha[j].size() != n) throw dimension_mismatch(n, alpha[j].size());
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(alpha[j][i]))
                throw range_violation("alpha", "entries must be finite");
            s.alpha_[j * n + i] = alpha[j][i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (s.beta_[i] == 0.0 || !std::isfinite(s.beta_[i]))
            throw range_violation("beta[" + std::to_string(i) + "]", "must be nonzero");
    return s;
}

std::vector<std::size_t> species_set::neighbors(std::size_t i) const {
    if (i >= count_) throw index_out_of_range(i, count_);
    std::vector<std::size_t> picked;
    picked.reserve(kappa_);
    picked.push_back(i);
    for (std::size_t d = 1; picked.size() < kappa_; ++d) {
        if (i >= d) picked.push_back(i - d);
        if (picked.size() < kappa_ && i + d < count_) picked.push_back(i + d);
        if (i < d && i + d >= count_) break;  // exhausted both sides
    }
    return picked;
}

species_set two_role_system(const interaction_params& p) {
    // Diagonal same-role terms make the matrix non-antisymmetric by design.
    return species_set::make_raw({p.eps_p, p.eps_d}, {p.beta_p, p.beta_d},
                                 {{p.alpha_pp, p.alpha_pd}, {p.alpha_dp(), p.alpha_dd}});
}

order_parameter order_parameter::theoretical(double l) {
    if (!std::isfinite(l) || l < -1.0 || l > 1.0)
        throw range_violation("L", "theoretical domain is [-1,1]");
    return order_parameter{l, order_domain::theoretical};
}

order_parameter order_parameter::extended(double l) {
    if (!std::isfinite(l)) throw range_violation("L", "must be finite");
    return order_parameter{l, order_domain::extended};
}

}  // namespace bwlv
