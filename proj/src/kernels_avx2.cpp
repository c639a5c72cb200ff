// AVX2 variant of the quadratic grid kernel. Compiled with -mavx2 (see
// CMakeLists); every entry point is runtime-guarded so the binary stays usable
// on machines without AVX2.
//
// The lane arithmetic mirrors psi_point exactly: mul, add, mul, add, mul.
// No FMA, so results are bit-identical to the scalar reference.

#include <span>

#include "bwlv/types.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BWLV_X86_64 1
#include <immintrin.h>
#else
#define BWLV_X86_64 0
#endif

namespace bwlv::kernels::detail {

bool avx2_supported() {
#if BWLV_X86_64 && defined(__AVX2__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

#if BWLV_X86_64 && defined(__AVX2__)

void psi_grid_avx2(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out) {
    const __m256d va = _mm256_set1_pd(q.a);
    const __m256d vb = _mm256_set1_pd(q.b);
    const __m256d vc = _mm256_set1_pd(q.c);
    const __m256d vn = _mm256_set1_pd(n_t);

    std::size_t i = 0;
    const std::size_t n4 = l.size() & ~std::size_t{3};
    for (; i < n4; i += 4) {
        const __m256d vl = _mm256_loadu_pd(l.data() + i);
        __m256d acc = _mm256_mul_pd(va, vl);
        acc = _mm256_add_pd(acc, vb);
        acc = _mm256_mul_pd(acc, vl);
        acc = _mm256_add_pd(acc, vc);
        acc = _mm256_mul_pd(acc, vn);
        _mm256_storeu_pd(out.data() + i, acc);
    }
    for (; i < l.size(); ++i) out[i] = psi_point(q, n_t, l[i]);
}

#else

void psi_grid_avx2(const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out) {
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = psi_point(q, n_t, l[i]);
}

#endif

}  // namespace bwlv::kernels::detail
