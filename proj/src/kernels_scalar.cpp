#include "redistsim/kernels.hpp"

// Reference kernels. Plain C++, no intrinsics; the 8-stripe accumulators
// match the SIMD register layout so results agree bit for bit.

namespace redistsim::kernels {
namespace {

inline double combine8(const double* s) {
    return ((s[0] + s[1]) + (s[2] + s[3])) + ((s[4] + s[5]) + (s[6] + s[7]));
}

double sum_scalar(const double* x, std::size_t n) {
    double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) s[i & 7] += x[i];
    return combine8(s);
}

double grow_store_sum_scalar(const double* y, const double* eta, double* h, std::size_t n) {
    double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = eta[i] * y[i];
        h[i] = hi;
        s[i & 7] += hi;
    }
    return combine8(s);
}

double tax_total_proportional_scalar(const double* y, std::size_t n, double rate) {
    double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) s[i & 7] += tax_proportional(y[i], rate);
    return combine8(s);
}

double tax_total_fee_scalar(const double* y, std::size_t n, double fee) {
    double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) s[i & 7] += tax_fee(y[i], fee);
    return combine8(s);
}

double tax_total_cap_scalar(const double* y, std::size_t n, double cap) {
    double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) s[i & 7] += tax_cap(y[i], cap);
    return combine8(s);
}

void net_income_proportional_scalar(const double* y, double* out, std::size_t n, double rate,
                                    double refund) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (y[i] - tax_proportional(y[i], rate)) + refund;
}

void net_income_fee_scalar(const double* y, double* out, std::size_t n, double fee,
                           double refund) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (y[i] - tax_fee(y[i], fee)) + refund;
}

void net_income_cap_scalar(const double* y, double* out, std::size_t n, double cap,
                           double refund) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (y[i] - tax_cap(y[i], cap)) + refund;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",
        sum_scalar,
        grow_store_sum_scalar,
        tax_total_proportional_scalar,
        tax_total_fee_scalar,
        tax_total_cap_scalar,
        net_income_proportional_scalar,
        net_income_fee_scalar,
        net_income_cap_scalar,
    };
    return ops;
}

}  // namespace redistsim::kernels
