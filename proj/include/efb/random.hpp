#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "efb/linalg.hpp"
#include "efb/scalar.hpp"
#include "efb/vectors.hpp"

namespace efb {

// FNV-1a over the master seed bytes followed by the name.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

// Deterministic sampler. Integer mapping is done here rather than through
// std distributions so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);
    long range(long lo, long hi);  // inclusive
    bool coin() { return (next() >> 63) != 0; }

    // p/q with |p| <= height, 1 <= q <= height
    Scalar rational(long height = 100);
    Scalar nonzero_rational(long height = 100);
    // in Qi mode both parts are random
    Scalar scalar(Field f, long height = 100);
    Scalar nonzero_scalar(Field f, long height = 100);

private:
    std::mt19937_64 eng_;
};

WittVector random_vector(Rng& rng, int m, Field f = Field::Q);
WittVector random_null_vector(Rng& rng, int m, Field f = Field::Q);   // nonzero, v² = 0
WittVector random_unit_vector(Rng& rng, int m, Field f = Field::Q);   // v² = 1
WittVector random_nonnull_vector(Rng& rng, int m, Field f = Field::Q);
// basis of a random maximal totally null plane
std::vector<WittVector> random_lagrangian(Rng& rng, int m, Field f = Field::Q);
// k independent vectors spanning a random totally null plane
std::vector<WittVector> random_tnp(Rng& rng, int m, int k, Field f = Field::Q);
ExactMatrix random_invertible(Rng& rng, std::size_t n, Field f = Field::Q);
ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field f = Field::Q);

}  // namespace efb
