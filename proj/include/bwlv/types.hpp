#pragma once

#include <cstddef>
#include <vector>

namespace bwlv {

/// Full ecological parameter set of the two-role (prey/predator) association.
///
/// The cross-role coefficient is stored once; alpha_dp is always read as
/// -alpha_pd. Same-role coefficients alpha_pp/alpha_dd sit outside the
/// antisymmetry constraint and may be any non-negative value.
struct interaction_params {
    int gamma = 1;          ///< ecological coordination number (biological proximity), >= 1
    double alpha_pp = 0.0;  ///< prey-prey encounter rate, 1/(individual*month)
    double alpha_dd = 0.0;  ///< predator-predator encounter rate
    double alpha_pd = 0.0;  ///< cross-role encounter rate; alpha_dp stored implicitly
    double beta_p = 1.0;    ///< Volterra numbers, > 0
    double beta_d = 1.0;
    double lambda1 = 1.0;   ///< hunting efficiency / escape ability factors, in [0,1]
    double lambda2 = 1.0;
    double xi_p = 0.0;      ///< same-role encounter factors, in [0,1]
    double xi_d = 0.0;
    double nu = 0.0;        ///< prey-to-predator conversion factor, in [0,1]
    double phi = 0.0;       ///< non-ideal-encounter fraction, in [0,1]; informational
    double eps_p = 0.0;     ///< growth rates, 1/month
    double eps_d = 0.0;

    double alpha_dp() const { return -alpha_pd; }
};

/// Which expanded total-rate forms a parameter set admits. A singular form is
/// an annotation, not a validation failure: the parameters stay usable for
/// everything that does not divide by the vanishing factor.
struct form_admissibility {
    bool prey = false;      ///< needs lambda1 != 0 and xi_d != 0
    bool predator = false;  ///< needs lambda2*nu != 0 and xi_p != 0
};

struct validated_params {
    interaction_params values;
    form_admissibility forms;
};

/// Annotates form admissibility without validating ranges.
form_admissibility classify_forms(const interaction_params& p);

/// Checks every range and consistency invariant; returns the same values
/// annotated with form admissibility. Throws range_violation naming the first
/// offending field. Idempotent.
validated_params validate_params(const interaction_params& raw);

/// Prey/predator densities, individuals per km^2. The total is derived so the
/// identity n_t = n_p + n_d can never be violated.
struct population_state {
    double n_p = 0.0;
    double n_d = 0.0;
    double n_t() const { return n_p + n_d; }
};

/// Throws range_violation if a density is negative or non-finite.
void check_state(const population_state& s);

/// Same-role and cross-role pair densities, pairs per km^2.
struct pair_counts {
    double n_pp = 0.0;
    double n_dd = 0.0;
    double n_pd = 0.0;
};

/// Generalized multi-species system: growth rates, Volterra numbers and the
/// encounter-coefficient matrix, plus the neighbor-truncation count kappa used
/// by the mean-field sums (kappa == count -> no truncation).
class species_set {
public:
    /// Validated construction: beta strictly positive, off-diagonal entries
    /// exactly antisymmetric. Diagonal entries are free (same-role
    /// self-interaction). kappa == 0 means "use count".
    static species_set make(std::vector<double> eps, std::vector<double> beta,
                            std::vector<std::vector<double>> alpha, std::size_t kappa = 0);

    /// Unvalidated matrix construction (finiteness and nonzero beta only).
    /// Escape hatch for rate bookkeeping that breaks pure antisymmetry, e.g.
    /// total-population accounting where both roles lose per encounter.
    static species_set make_raw(std::vector<double> eps, std::vector<double> beta,
                                std::vector<std::vector<double>> alpha, std::size_t kappa = 0);

    std::size_t count() const { return count_; }
    std::size_t kappa() const { return kappa_; }
    const std::vector<double>& eps() const { return eps_; }
    const std::vector<double>& beta() const { return beta_; }

    /// Coefficient of the effect of species j on species i's rate.
    double alpha(std::size_t j, std::size_t i) const { return alpha_[j * count_ + i]; }

    /// The kappa species nearest to i by index distance, self included at
    /// distance 0, ties resolved toward the smaller index.
    std::vector<std::size_t> neighbors(std::size_t i) const;

private:
    species_set() = default;
    std::size_t count_ = 0;
    std::size_t kappa_ = 0;
    std::vector<double> eps_;
    std::vector<double> beta_;
    std::vector<double> alpha_;  // row-major [j * count + i]
};

/// Two-role embedding of interaction_params: species 0 = prey, 1 = predator.
/// Diagonal carries the same-role coefficients; the cross pair is
/// antisymmetric (alpha_dp = -alpha_pd).
species_set two_role_system(const interaction_params& p);

/// Per-capita quadratic rate coefficients: psi(L) = n_t * (a L^2 + b L + c).
struct quadratic_form {
    double a = 0.0;  ///< 1/month
    double b = 0.0;
    double c = 0.0;
};

/// Single-point evaluation, Horner form. Every grid kernel must produce
/// bit-identical results to this function.
inline double psi_point(const quadratic_form& q, double n_t, double l) {
    return n_t * ((q.a * l + q.b) * l + q.c);
}

/// Long-range order parameter domain. The lattice derivation restricts L (and
/// the short-range order it implies) to [-1,1]; the parameter-sweep plots in
/// the reproduced figures range far beyond that, so an extended domain is
/// supported and recorded explicitly.
enum class order_domain { theoretical, extended };

struct order_parameter {
    double l = 0.0;
    order_domain domain = order_domain::theoretical;

    /// Enforces -1 <= l <= 1.
    static order_parameter theoretical(double l);
    /// Any finite l; records that the theoretical domain may be exceeded.
    static order_parameter extended(double l);

    /// Short-range order implied by L: identical to L here, by the
    /// no-independent-short-range-order assumption baked into the model.
    double sigma() const { return l; }
};

}  // namespace bwlv
