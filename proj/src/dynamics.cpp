#include "bwlv/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "bwlv/errors.hpp"

namespace bwlv {

std::vector<double> lv_rhs(std::span<const double> populations, const species_set& sys) {
    const std::size_t n = sys.count();
    if (populations.size() != n) throw dimension_mismatch(n, populations.size());
    for (double v : populations)
        if (!std::isfinite(v)) throw range_violation("populations", "must be finite");

    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        double interaction = 0.0;
        for (std::size_t j : sys.neighbors(i))
            interaction += sys.alpha(j, i) * populations[j] * populations[i];
        rates[i] = sys.eps()[i] * populations[i] + interaction / sys.beta()[i];
    }
    return rates;
}

double total_population_rate(const population_state& state, const interaction_params& params) {
    check_state(state);
    const double np = state.n_p, nd = state.n_d;
    return params.eps_p * np + params.eps_d * nd +
           (params.alpha_pp * np * np + params.alpha_dd * nd * nd -
            2.0 * params.alpha_pd * np * nd) /
               params.beta_p;
}

namespace {

void check_sample(const std::vector<double>& y, double t) {
    constexpr double kNegativeTolerance = 1e-12;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!std::isfinite(y[i])) throw nonfinite_state(t);
        if (y[i] < -kNegativeTolerance) throw negative_population(t, i);
    }
}

}  // namespace

trajectory integrate(const species_set& sys, std::vector<double> initial, double t_end,
                     double step) {
    if (!(step > 0.0)) throw range_violation("step", "must be > 0");
    if (!(t_end > 0.0)) throw range_violation("t_end", "must be > 0");
    if (initial.size() != sys.count()) throw dimension_mismatch(sys.count(), initial.size());
    for (double v : initial)
        if (!std::isfinite(v) || v < 0.0) throw range_violation("initial", "must be >= 0");

    const auto n_steps = static_cast<std::size_t>(std::floor(t_end / step + 1e-9));
    const std::size_t n = sys.count();

    trajectory tr;
    tr.times.reserve(n_steps + 1);
    tr.states.reserve(n_steps + 1);
    tr.times.push_back(0.0);
    tr.states.push_back(initial);

    std::vector<double> y = std::move(initial);
    std::vector<double> stage(n);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const auto k1 = lv_rhs(y, sys);
        for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.5 * step * k1[i];
        const auto k2 = lv_rhs(stage, sys);
        for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.5 * step * k2[i];
        const auto k3 = lv_rhs(stage, sys);
        for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + step * k3[i];
        const auto k4 = lv_rhs(stage, sys);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += step * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]) / 6.0;

        const double t = static_cast<double>(k) * step;
        check_sample(y, t);
        tr.times.push_back(t);
        tr.states.push_back(y);
    }
    return tr;
}

double conserved_quantity(std::span<const double> state, const species_set& sys) {
    if (sys.count() != 2) throw dimension_mismatch(2, sys.count());
    if (state.size() != 2) throw dimension_mismatch(2, state.size());
    const double cross = sys.alpha(0, 1);
    if (!(sys.eps()[0] > 0.0) || !(sys.eps()[1] < 0.0) || sys.alpha(1, 0) != -cross ||
        cross <= 0.0 || sys.alpha(0, 0) != 0.0 || sys.alpha(1, 1) != 0.0)
        throw range_violation("system", "not the classic two-species form");
    if (!(state[0] > 0.0) || !(state[1] > 0.0)) throw nonpositive_population();

    const double growth = sys.eps()[0];          // prey growth rate
    const double decay = -sys.eps()[1];          // predator death rate
    const double prey_loss = cross / sys.beta()[0];
    const double pred_gain = cross / sys.beta()[1];
    return pred_gain * state[0] - decay * std::log(state[0]) + prey_loss * state[1] -
           growth * std::log(state[1]);
}

std::string trajectory_to_csv(const trajectory& tr) {
    const std::size_t n = tr.species_count();
    std::string out;
    if (n == 2) {
        out = "t,N_p,N_d,N_T\n";
    } else {
        out = "t";
        for (std::size_t i = 1; i <= n; ++i) out += ",N_" + std::to_string(i);
        out += "\n";
    }
    char buf[32];
    auto append = [&](double v, char lead) {
        std::snprintf(buf, sizeof buf, "%c%.12g", lead, v);
        out += buf;
    };
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.12g", tr.times[k]);
        out += buf;
        for (double v : tr.states[k]) append(v, ',');
        if (n == 2) append(tr.states[k][0] + tr.states[k][1], ',');
        out += '\n';
    }
    return out;
}

}  // namespace bwlv
