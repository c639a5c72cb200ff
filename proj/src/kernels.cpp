#include "bwlv/kernels.hpp"

#include <cmath>

#include "bwlv/errors.hpp"

namespace bwlv::kernels {

namespace detail {
// Defined in the per-ISA translation units.
void psi_grid_avx2(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out);
void psi_grid_neon(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out);
bool avx2_supported();
bool neon_supported();
}  // namespace detail

namespace {

void psi_grid_scalar(const quadratic_form& q, double n_t, std::span<const double> l,
                     std::span<double> out) {
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = psi_point(q, n_t, l[i]);
}

}  // namespace

const char* backend_name(backend be) {
    switch (be) {
        case backend::scalar: return "scalar";
        case backend::avx2: return "avx2";
        case backend::neon: return "neon";
    }
    return "?";
}

bool backend_available(backend be) {
    switch (be) {
        case backend::scalar: return true;
        case backend::avx2: return detail::avx2_supported();
        case backend::neon: return detail::neon_supported();
    }
    return false;
}

backend preferred_backend() {
    static const backend best = [] {
        if (detail::avx2_supported()) return backend::avx2;
        if (detail::neon_supported()) return backend::neon;
        return backend::scalar;
    }();
    return best;
}

std::vector<backend> available_backends() {
    std::vector<backend> out{backend::scalar};
    if (detail::avx2_supported()) out.push_back(backend::avx2);
    if (detail::neon_supported()) out.push_back(backend::neon);
    return out;
}

void psi_grid_with(backend be, const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out) {
    if (out.size() != l.size()) throw dimension_mismatch(l.size(), out.size());
    switch (be) {
        case backend::scalar: psi_grid_scalar(q, n_t, l, out); return;
        case backend::avx2:
            if (!detail::avx2_supported()) throw range_violation("backend", "avx2 unavailable");
            detail::psi_grid_avx2(q, n_t, l, out);
            return;
        case backend::neon:
            if (!detail::neon_supported()) throw range_violation("backend", "neon unavailable");
            detail::psi_grid_neon(q, n_t, l, out);
            return;
    }
}

void psi_grid(const quadratic_form& q, double n_t, std::span<const double> l,
              std::span<double> out) {
    psi_grid_with(preferred_backend(), q, n_t, l, out);
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw range_violation("step", "must be > 0");
    if (!(start < stop)) throw range_violation("L-range", "start must be < stop");
    std::vector<double> grid;
    const double limit = stop + 1e-9 * step;
    for (std::size_t k = 0;; ++k) {
        const double x = start + static_cast<double>(k) * step;
        if (x > limit) break;
        grid.push_back(x);
    }
    return grid;
}

}  // namespace bwlv::kernels
