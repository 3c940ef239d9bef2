#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efb/errors.hpp"
#include "efb/matrix_rep.hpp"
#include "efb/vectors.hpp"
#include "support.hpp"

using namespace efb;
using efb::test::monomial;
using efb::test::random_element;

namespace {

ExactMatrix unit(std::size_t n, std::size_t r, std::size_t c) {
    ExactMatrix m(n, n);
    m(r, c) = 1;
    return m;
}

}  // namespace

TEST_CASE("raw m=1 null generators are matrix units") {
    const RepContext& rep = rep_context(1);
    ExactMatrix g1 = rep.tensor_generator(1).dense(), g2 = rep.tensor_generator(2).dense();
    CHECK((g1 + g2).scaled(Scalar(1, 2)) == unit(2, 0, 1));
    CHECK((g1 - g2).scaled(Scalar(1, 2)) == unit(2, 1, 0));
}

TEST_CASE("generator relations") {
    for (int m = 1; m <= 6; ++m) {
        const RepContext& rep = rep_context(m);
        const ExactMatrix id = ExactMatrix::identity(rep.dim());
        for (int i = 1; i <= 2 * m; ++i) {
            const MonomialMatrix& g = rep.generator(i);
            CHECK((g * g).dense() == (i % 2 ? id : id.scaled(Scalar(-1))));
            const MonomialMatrix& t = rep.tensor_generator(i);
            CHECK((t * t).dense() == (i % 2 ? id : id.scaled(Scalar(-1))));
        }
    }
    const RepContext& rep = rep_context(2);
    ExactMatrix a = rep.generator_matrix(1), b = rep.generator_matrix(3);
    CHECK((a * b + b * a).is_zero());
    CHECK_THROWS_AS(RepContext(0), RangeError);
}

TEST_CASE("to_matrix of monomials and generators") {
    for (int m = 1; m <= 3; ++m) {
        const RepContext& rep = rep_context(m);
        const std::size_t n = rep.dim();
        CHECK(rep.to_matrix(monomial(m, 0, 0)) == unit(n, 0, 0));
        CHECK(rep.to_matrix(AlgebraElement::identity(m)) == ExactMatrix::identity(n));
        for (int i = 1; i <= 2 * m; ++i) CHECK(rep.to_matrix(gamma_element(m, i)) == rep.generator_matrix(i));
        for (int i = 1; i <= m; ++i) {
            CHECK(rep.to_matrix(embed(WittVector::p(m, i))) == rep.p_matrix(i));
            CHECK(rep.to_matrix(embed(WittVector::q(m, i))) == rep.q_matrix(i));
        }
        // every monomial, multiplied out letter by letter from the generator matrices
        for (Mask a = 0; a < n; ++a)
            for (Mask b = 0; b < n; ++b) {
                ExactMatrix w = ExactMatrix::identity(n);
                const EFBWord word = word_of_index({a, b}, m);
                for (int s = 1; s <= m; ++s) {
                    ExactMatrix p = rep.p_matrix(s), q = rep.q_matrix(s);
                    switch (word[static_cast<std::size_t>(s - 1)]) {
                        case Letter::QP: w = w * q * p; break;
                        case Letter::PQ: w = w * p * q; break;
                        case Letter::Q: w = w * q; break;
                        case Letter::P: w = w * p; break;
                    }
                }
                CHECK(w == unit(n, a, b).scaled(Scalar(rep.sigma(a, b))));
                CHECK(rep.to_matrix(monomial(m, a, b)) == w);
            }
    }
}

TEST_CASE("homomorphism exhaustive for m <= 2") {
    for (int m = 1; m <= 2; ++m) {
        const RepContext& rep = rep_context(m);
        const Mask n = Mask{1} << m;
        for (std::uint32_t k1 = 0; k1 < n * n; ++k1)
            for (std::uint32_t k2 = 0; k2 < n * n; ++k2) {
                AlgebraElement x = AlgebraElement::monomial(m, key_index(k1, m));
                AlgebraElement y = AlgebraElement::monomial(m, key_index(k2, m));
                CHECK(rep.to_matrix(x * y) == rep.to_matrix(x) * rep.to_matrix(y));
            }
    }
}

TEST_CASE("homomorphism, trace and bijectivity on random elements") {
    Rng rng(31);
    for (int m = 1; m <= 5; ++m) {
        const RepContext& rep = rep_context(m);
        for (int t = 0; t < (m <= 3 ? 30 : 6); ++t) {
            AlgebraElement x = random_element(rng, m, 20), y = random_element(rng, m, 20);
            ExactMatrix mx = rep.to_matrix(x);
            CHECK(rep.to_matrix(x * y) == mx * rep.to_matrix(y));
            CHECK(rep.from_matrix(mx) == x);
            Scalar tr;
            for (std::size_t i = 0; i < rep.dim(); ++i) tr += mx(i, i);
            CHECK(tr == trace(x));
        }
    }
}

TEST_CASE("volume element is diagonal") {
    for (int m = 1; m <= 4; ++m) {
        const RepContext& rep = rep_context(m);
        ExactMatrix g = rep.to_matrix(AlgebraElement::volume_gamma(m));
        for (std::size_t r = 0; r < rep.dim(); ++r)
            for (std::size_t c = 0; c < rep.dim(); ++c) {
                if (r == c)
                    CHECK((g(r, c) == Scalar(1) || g(r, c) == Scalar(-1)));
                else
                    CHECK(g(r, c).is_zero());
            }
    }
}

TEST_CASE("monomial kron") {
    MonomialMatrix a = MonomialMatrix::from_dense(ExactMatrix(2, 2, {0, 1, -1, 0}));
    MonomialMatrix b = MonomialMatrix::from_dense(ExactMatrix(2, 2, {1, 0, 0, -1}));
    CHECK(kron(a, b).dense() == kron(a.dense(), b.dense()));
    CHECK_THROWS_AS(MonomialMatrix::from_dense(ExactMatrix(2, 2, {1, 1, 0, 1})), InconsistencyError);
}
