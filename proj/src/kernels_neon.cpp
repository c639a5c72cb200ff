// NEON variant of the quadratic grid kernel. NEON is baseline on AArch64;
// the lane arithmetic mirrors psi_point exactly (vmulq/vaddq, no FMA).

#include <span>

#include "bwlv/types.hpp"

#if defined(__aarch64__)
#define BWLV_AARCH64 1
#include <arm_neon.h>
#else
#define BWLV_AARCH64 0
#endif

namespace bwlv::kernels::detail {

bool neon_supported() {
#if BWLV_AARCH64
    return true;
#else
    return false;
#endif
}

#if BWLV_AARCH64

void psi_grid_neon(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out) {
    const float64x2_t va = vdupq_n_f64(q.a);
    const float64x2_t vb = vdupq_n_f64(q.b);
    const float64x2_t vc = vdupq_n_f64(q.c);
    const float64x2_t vn = vdupq_n_f64(n_t);

    std::size_t i = 0;
    const std::size_t n2 = l.size() & ~std::size_t{1};
    for (; i < n2; i += 2) {
        const float64x2_t vl = vld1q_f64(l.data() + i);
        float64x2_t acc = vmulq_f64(va, vl);
        acc = vaddq_f64(acc, vb);
        acc = vmulq_f64(acc, vl);
        acc = vaddq_f64(acc, vc);
        acc = vmulq_f64(acc, vn);
        vst1q_f64(out.data() + i, acc);
    }
    for (; i < l.size(); ++i) out[i] = psi_point(q, n_t, l[i]);
}

#else

void psi_grid_neon(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out) {
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = psi_point(q, n_t, l[i]);
}

#endif

}  // namespace bwlv::kernels::detail
