#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace redistsim::rng {

// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11).
// One block = 128 random bits, a pure function of (counter, key); any draw
// of any sweep cell is reconstructible in isolation from its indices.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// First 64 bits of the block keyed by `key` at counter (hi, lo).
std::uint64_t random_bits(std::uint64_t key, std::uint64_t ctr_hi, std::uint64_t ctr_lo);

// Maps 64 random bits to the open interval (0, 1), symmetric around 0.5.
double uniform_open(std::uint64_t bits);

// Inverse standard normal CDF, |error| < 1e-14 over (0,1).
double normal_inverse_cdf(double p);

// Standard normal CDF via erfc.
double normal_cdf(double x);

// z ~ N(0,1) at counter (hi, lo) under `key`.
double standard_normal(std::uint64_t key, std::uint64_t ctr_hi, std::uint64_t ctr_lo);

// Splittable seed derivation: children are pure functions of (parent, label),
// independent of derivation order. Used as stream(base_seed, tag, indices...).
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed);

    SeedStream child(std::uint64_t index) const;
    SeedStream child(std::string_view tag) const;

    std::uint64_t key() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace redistsim::rng
