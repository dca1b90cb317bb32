#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "redistsim/kernels.hpp"

// AVX2 kernels. Two 4-lane accumulators hold stripes 0..3 and 4..7; lane j of
// register r is stripe 4r+j, so the accumulation order matches the scalar
// reference exactly. No FMA: mul and add stay separate operations.

namespace redistsim::kernels {
namespace {

inline double combine8(const double* s) {
    return ((s[0] + s[1]) + (s[2] + s[3])) + ((s[4] + s[5]) + (s[6] + s[7]));
}

inline void spill(__m256d lo, __m256d hi, double* s) {
    _mm256_storeu_pd(s, lo);
    _mm256_storeu_pd(s + 4, hi);
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc_lo = _mm256_add_pd(acc_lo, _mm256_loadu_pd(x + i));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_loadu_pd(x + i + 4));
    }
    double s[8];
    spill(acc_lo, acc_hi, s);
    for (; i < n; ++i) s[i & 7] += x[i];
    return combine8(s);
}

double grow_store_sum_avx2(const double* y, const double* eta, double* h, std::size_t n) {
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d h_lo = _mm256_mul_pd(_mm256_loadu_pd(eta + i), _mm256_loadu_pd(y + i));
        const __m256d h_hi =
            _mm256_mul_pd(_mm256_loadu_pd(eta + i + 4), _mm256_loadu_pd(y + i + 4));
        _mm256_storeu_pd(h + i, h_lo);
        _mm256_storeu_pd(h + i + 4, h_hi);
        acc_lo = _mm256_add_pd(acc_lo, h_lo);
        acc_hi = _mm256_add_pd(acc_hi, h_hi);
    }
    double s[8];
    spill(acc_lo, acc_hi, s);
    for (; i < n; ++i) {
        const double hi = eta[i] * y[i];
        h[i] = hi;
        s[i & 7] += hi;
    }
    return combine8(s);
}

double tax_total_proportional_avx2(const double* y, std::size_t n, double rate) {
    const __m256d r = _mm256_set1_pd(rate);
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc_lo = _mm256_add_pd(acc_lo, _mm256_mul_pd(r, _mm256_loadu_pd(y + i)));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_mul_pd(r, _mm256_loadu_pd(y + i + 4)));
    }
    double s[8];
    spill(acc_lo, acc_hi, s);
    for (; i < n; ++i) s[i & 7] += tax_proportional(y[i], rate);
    return combine8(s);
}

double tax_total_fee_avx2(const double* y, std::size_t n, double fee) {
    const __m256d f = _mm256_set1_pd(fee);
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc_lo = _mm256_add_pd(acc_lo, _mm256_min_pd(_mm256_loadu_pd(y + i), f));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_min_pd(_mm256_loadu_pd(y + i + 4), f));
    }
    double s[8];
    spill(acc_lo, acc_hi, s);
    for (; i < n; ++i) s[i & 7] += tax_fee(y[i], fee);
    return combine8(s);
}

double tax_total_cap_avx2(const double* y, std::size_t n, double cap) {
    const __m256d c = _mm256_set1_pd(cap);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc_lo = _mm256_add_pd(
            acc_lo, _mm256_max_pd(_mm256_sub_pd(_mm256_loadu_pd(y + i), c), zero));
        acc_hi = _mm256_add_pd(
            acc_hi, _mm256_max_pd(_mm256_sub_pd(_mm256_loadu_pd(y + i + 4), c), zero));
    }
    double s[8];
    spill(acc_lo, acc_hi, s);
    for (; i < n; ++i) s[i & 7] += tax_cap(y[i], cap);
    return combine8(s);
}

void net_income_proportional_avx2(const double* y, double* out, std::size_t n, double rate,
                                  double refund) {
    const __m256d r = _mm256_set1_pd(rate);
    const __m256d ref = _mm256_set1_pd(refund);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(out + i,
                         _mm256_add_pd(_mm256_sub_pd(v, _mm256_mul_pd(r, v)), ref));
    }
    for (; i < n; ++i) out[i] = (y[i] - tax_proportional(y[i], rate)) + refund;
}

void net_income_fee_avx2(const double* y, double* out, std::size_t n, double fee,
                         double refund) {
    const __m256d f = _mm256_set1_pd(fee);
    const __m256d ref = _mm256_set1_pd(refund);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(out + i,
                         _mm256_add_pd(_mm256_sub_pd(v, _mm256_min_pd(v, f)), ref));
    }
    for (; i < n; ++i) out[i] = (y[i] - tax_fee(y[i], fee)) + refund;
}

void net_income_cap_avx2(const double* y, double* out, std::size_t n, double cap,
                         double refund) {
    const __m256d c = _mm256_set1_pd(cap);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d ref = _mm256_set1_pd(refund);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(y + i);
        const __m256d tax = _mm256_max_pd(_mm256_sub_pd(v, c), zero);
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_sub_pd(v, tax), ref));
    }
    for (; i < n; ++i) out[i] = (y[i] - tax_cap(y[i], cap)) + refund;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",
        sum_avx2,
        grow_store_sum_avx2,
        tax_total_proportional_avx2,
        tax_total_fee_avx2,
        tax_total_cap_avx2,
        net_income_proportional_avx2,
        net_income_fee_avx2,
        net_income_cap_avx2,
    };
    return ops;
}

}  // namespace redistsim::kernels

#endif  // x86_64
