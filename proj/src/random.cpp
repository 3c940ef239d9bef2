#include "efb/random.hpp"

#include "efb/errors.hpp"

namespace efb {

std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(master >> (8 * i)));
    for (char c : name) mix(static_cast<unsigned char>(c));
    return h;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw RangeError("empty sampling range");
    // rejection keeps the mapping exactly uniform
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar Rng::rational(long height) { return Scalar(range(-height, height), range(1, height)); }

Scalar Rng::nonzero_rational(long height) {
    long p = 0;
    while (p == 0) p = range(-height, height);
    return Scalar(p, range(1, height));
}

Scalar Rng::scalar(Field f, long height) {
    if (f == Field::Q) return rational(height);
    Scalar re = rational(height);
    Scalar im = rational(height);
    return Scalar(re.re(), im.re());
}

Scalar Rng::nonzero_scalar(Field f, long height) {
    Scalar s;
    while (s.is_zero()) s = scalar(f, height);
    return s;
}

WittVector random_vector(Rng& rng, int m, Field f) {
    WittVector v(m);
    for (int i = 0; i < m; ++i) {
        v.alpha[static_cast<std::size_t>(i)] = rng.scalar(f);
        v.beta[static_cast<std::size_t>(i)] = rng.scalar(f);
    }
    return v;
}

namespace {

// random vector with v² = target; the solved coordinate sits at a random site
WittVector vector_with_square(Rng& rng, int m, Field f, const Scalar& target) {
    WittVector v = random_vector(rng, m, f);
    const auto s = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
    if (m == 1 && target.is_zero()) {
        if (rng.coin()) {
            v.alpha[0] = rng.nonzero_scalar(f);
            v.beta[0] = 0;
        } else {
            v.alpha[0] = 0;
            v.beta[0] = rng.nonzero_scalar(f);
        }
        return v;
    }
    v.alpha[s] = rng.nonzero_scalar(f);
    Scalar rest;
    for (std::size_t i = 0; i < v.alpha.size(); ++i)
        if (i != s) rest.add_product(v.alpha[i], v.beta[i]);
    v.beta[s] = (target - rest) / v.alpha[s];
    return v;
}

}  // namespace

WittVector random_null_vector(Rng& rng, int m, Field f) { return vector_with_square(rng, m, f, Scalar(0)); }

WittVector random_unit_vector(Rng& rng, int m, Field f) { return vector_with_square(rng, m, f, Scalar(1)); }

WittVector random_nonnull_vector(Rng& rng, int m, Field f) {
    for (;;) {
        WittVector v = random_vector(rng, m, f);
        if (!is_null(v)) return v;
    }
}

ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field f) {
    ExactMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = rng.scalar(f);
    return a;
}

ExactMatrix random_invertible(Rng& rng, std::size_t n, Field f) {
    for (;;) {
        ExactMatrix a = random_matrix(rng, n, n, f);
        if (!det(a).is_zero()) return a;
    }
}

std::vector<WittVector> random_lagrangian(Rng& rng, int m, Field f) {
    const auto n = static_cast<std::size_t>(m);
    // graph {α = Aβ} of a skew matrix A
    ExactMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = rng.scalar(f);
            a(j, i) = -a(i, j);
        }
    std::vector<WittVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
        WittVector v(m);
        v.beta[j] = 1;
        for (std::size_t i = 0; i < n; ++i) v.alpha[i] = a(i, j);
        basis.push_back(std::move(v));
    }
    // exchanging p_i and q_i preserves the form
    for (std::size_t i = 0; i < n; ++i) {
        if (!rng.coin()) continue;
        for (auto& v : basis) std::swap(v.alpha[i], v.beta[i]);
    }
    ExactMatrix g = random_invertible(rng, n, f);
    std::vector<WittVector> mixed;
    for (std::size_t r = 0; r < n; ++r) {
        WittVector v(m);
        for (std::size_t c = 0; c < n; ++c)
            if (!g(r, c).is_zero()) v += basis[c].scaled(g(r, c));
        mixed.push_back(std::move(v));
    }
    return mixed;
}

std::vector<WittVector> random_tnp(Rng& rng, int m, int k, Field f) {
    if (k < 0 || k > m) throw RangeError("plane dimension out of range");
    auto l = random_lagrangian(rng, m, f);
    l.resize(static_cast<std::size_t>(k));
    return l;
}

}  // namespace efb
