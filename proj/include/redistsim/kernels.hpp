#pragma once

#include <cstddef>

namespace redistsim::kernels {

// Per-agent tax formulas shared by the kernels and the scalar assessment
// path. The branchless min/max forms mirror the SIMD min/max instructions
// so every variant produces identical bits.
inline double tax_proportional(double income, double rate) { return rate * income; }
inline double tax_fee(double income, double fee) { return income < fee ? income : fee; }
inline double tax_cap(double income, double cap) {
    const double excess = income - cap;
    return excess > 0.0 ? excess : 0.0;
}

// Reductions use a fixed 8-stripe accumulation: element i is added into
// stripe (i mod 8) in index order, and stripes are combined pairwise
// ((s0+s1)+(s2+s3)) + ((s4+s5)+(s6+s7)). Every variant implements exactly
// this order, so scalar and SIMD results are bit-identical. The project is
// built with -ffp-contract=off to keep mul/add sequences uncontracted.
struct Ops {
    const char* name;

    // Stripe-wise sum of x[0..n).
    double (*sum)(const double* x, std::size_t n);
    // h[i] = eta[i] * y[i]; returns the stripe-wise sum of h.
    double (*grow_store_sum)(const double* y, const double* eta, double* h, std::size_t n);
    // Stripe-wise totals of the per-agent tax formulas.
    double (*tax_total_proportional)(const double* y, std::size_t n, double rate);
    double (*tax_total_fee)(const double* y, std::size_t n, double fee);
    double (*tax_total_cap)(const double* y, std::size_t n, double cap);
    // out[i] = (y[i] - tax(y[i])) + refund
    void (*net_income_proportional)(const double* y, double* out, std::size_t n, double rate,
                                    double refund);
    void (*net_income_fee)(const double* y, double* out, std::size_t n, double fee,
                           double refund);
    void (*net_income_cap)(const double* y, double* out, std::size_t n, double cap,
                           double refund);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

// Best variant the CPU supports, overridable with REDISTSIM_KERNELS=scalar|avx2|neon.
// Resolved once per process.
const Ops& active_ops();

// Test hook; returns the previously active set.
const Ops& set_active_ops(const Ops& ops);

}  // namespace redistsim::kernels
