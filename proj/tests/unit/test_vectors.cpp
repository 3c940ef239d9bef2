#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efb/errors.hpp"
#include "efb/vectors.hpp"
#include "support.hpp"

using namespace efb;
using efb::test::random_element;

TEST_CASE("Witt relations") {
    for (int m = 1; m <= 4; ++m) {
        const AlgebraElement id = AlgebraElement::identity(m);
        for (int i = 1; i <= m; ++i) {
            AlgebraElement p = embed(WittVector::p(m, i));
            CHECK((p * p).is_zero());
            CHECK(p.size() == (std::size_t{1} << (m - 1)));
            for (int j = 1; j <= m; ++j) {
                AlgebraElement q = embed(WittVector::q(m, j));
                CHECK(anticommutator(p, q) == (i == j ? id : AlgebraElement(m)));
            }
        }
        for (int i = 1; i <= 2 * m; ++i) {
            AlgebraElement g = gamma_element(m, i);
            CHECK(g * g == (i % 2 ? id : -id));
        }
    }
}

TEST_CASE("anticommutator form") {
    CHECK(square(WittVector::p(3, 1)).is_zero());
    CHECK(square(WittVector::gamma(3, 3)) == Scalar(1));
    CHECK(square(WittVector::gamma(3, 4)) == Scalar(-1));
    CHECK(square(WittVector::p(2, 1) + WittVector::q(2, 2)).is_zero());
    Rng rng(41);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 20; ++t) {
            Field f = t % 2 ? Field::Qi : Field::Q;
            WittVector v = random_vector(rng, m, f), u = random_vector(rng, m, f);
            CHECK(anticommutator(embed(v, f), embed(u, f)) ==
                  AlgebraElement::scalar(m, anticommutator_form(v, u), f));
            CHECK(embed(v, f) * embed(v, f) == AlgebraElement::scalar(m, square(v), f));
        }
    CHECK_THROWS_AS(anticommutator_form(WittVector(2), WittVector(3)), DimensionError);
}

TEST_CASE("classification") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(classify(WittVector::p(3, i)) == VectorClass::V0);
        CHECK(classify(WittVector::q(3, i)) == VectorClass::V0);
    }
    for (int i = 1; i <= 6; ++i) CHECK(classify(WittVector::gamma(3, i)) == VectorClass::V1);
    CHECK(classify(WittVector(3)) == VectorClass::V0);
    Rng rng(42);
    for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < 50; ++t) {
            WittVector v = random_null_vector(rng, m);
            REQUIRE(!v.is_zero());
            REQUIRE(is_null(v));
            CHECK(classify(v + conj_vector(v)) == VectorClass::V1);
            // real mode signs
            CHECK(sgn(square(v + conj_vector(v)).re()) > 0);
            CHECK(sgn(square(v - conj_vector(v)).re()) < 0);
            WittVector w = random_null_vector(rng, m, Field::Qi);
            Scalar s = square(w + conj_vector(w));
            CHECK(s.is_real());
            CHECK(sgn(s.re()) > 0);
        }
}

TEST_CASE("vector conjugation") {
    CHECK(conj_vector(WittVector::p(3, 2)) == WittVector::q(3, 2));
    Rng rng(43);
    for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < 30; ++t) {
            WittVector v = random_vector(rng, m);
            CHECK(conj_vector(conj_vector(v)) == v);
            CHECK(square(conj_vector(v)) == square(v));
            WittVector w = random_vector(rng, m, Field::Qi);
            CHECK(conj_vector(conj_vector(w)) == w);
            CHECK(square(conj_vector(w)) == square(w).star());
        }
}

TEST_CASE("C conjugation") {
    CHECK(C_element(1) == gamma_element(1, 1));
    CHECK(C_inverse(1) == gamma_element(1, 1));
    for (int m = 1; m <= 6; ++m) {
        const AlgebraElement id = AlgebraElement::identity(m);
        for (int sign : {1, -1}) {
            AlgebraElement d = delta_element(m, sign);
            const long e = sign > 0 ? m * (m - 1) / 2 : m * (m + 1) / 2;
            CHECK(d * d == id.scaled(Scalar(e % 2 ? -1 : 1)));
        }
        CHECK(C_element(m) * C_inverse(m) == id);
        for (int i = 1; i <= m; ++i)
            CHECK(C_element(m) * embed(WittVector::p(m, i)) * C_inverse(m) == embed(WittVector::q(m, i)));
    }
}

TEST_CASE("element conjugation") {
    Rng rng(44);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 10; ++t) {
            WittVector v = random_vector(rng, m);
            CHECK(conj_element(embed(v)) == embed(conj_vector(v)));
            WittVector w = random_vector(rng, m, Field::Qi);
            CHECK(conj_element(embed(w, Field::Qi)) == embed(conj_vector(w), Field::Qi));
            AlgebraElement x = random_element(rng, m, 12, Field::Qi);
            CHECK(conj_element(conj_element(x)) == x);
            AlgebraElement y = random_element(rng, m, 12);
            CHECK(conj_element(conj_element(y)) == y);
            WittVector n = random_null_vector(rng, m);
            CHECK(is_null(conj_vector(n)));
            WittVector nn = random_nonnull_vector(rng, m);
            CHECK_FALSE(is_null(conj_vector(nn)));
        }
}

TEST_CASE("totally null planes") {
    const int m = 4;
    std::vector<WittVector> qs, mixed{WittVector::p(m, 1)};
    for (int i = 1; i <= m; ++i) qs.push_back(WittVector::q(m, i));
    for (int i = 2; i <= m; ++i) mixed.push_back(WittVector::q(m, i));
    auto t = is_tnp(qs);
    REQUIRE(t);
    CHECK(t->dim() == static_cast<std::size_t>(m));
    CHECK(is_tnp(mixed)->dim() == static_cast<std::size_t>(m));
    CHECK_FALSE(is_tnp({WittVector::p(m, 1), WittVector::q(m, 1)}));
    try {
        require_tnp({WittVector::q(m, 2), WittVector::p(m, 1), WittVector::q(m, 1)});
        FAIL("expected rejection");
    } catch (const NotTotallyNullError& e) {
        CHECK(e.first == 1);
        CHECK(e.second == 2);
    }
    std::vector<WittVector> with_zero = qs;
    with_zero.push_back(WittVector(m));
    with_zero.push_back(qs[0].scaled(Scalar(3)));
    CHECK(is_tnp(with_zero)->dim() == static_cast<std::size_t>(m));
    CHECK_THROWS_AS(normalize_tnp(with_zero), DependentVectorsError);
}

TEST_CASE("normalize_tnp gives a Witt frame") {
    Rng rng(45);
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= m; ++k)
            for (Field f : {Field::Q, Field::Qi}) {
                auto vs = random_tnp(rng, m, k, f);
                TNPFrame fr = normalize_tnp(vs);
                REQUIRE(fr.qs.size() == static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        CHECK(anticommutator_form(fr.qs[i], fr.ps[j]) == Scalar(i == j ? 1 : 0));
                        CHECK(anticommutator_form(fr.qs[i], fr.qs[j]).is_zero());
                        CHECK(anticommutator_form(fr.ps[i], fr.ps[j]).is_zero());
                    }
                std::vector<Vector> a, b;
                for (auto& v : vs) a.push_back(v.coords());
                for (auto& v : fr.qs) b.push_back(v.coords());
                CHECK(intersection_dimension(2 * m, a, b) == static_cast<std::size_t>(k));
            }
}

TEST_CASE("completion of a plane") {
    Rng rng(46);
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k <= m; ++k) {
            TNPBasis t{m, {}};
            if (k > 0) t = require_tnp(random_tnp(rng, m, k));
            TNPBasis c = complete_tnp(t);
            CHECK(c.dim() == static_cast<std::size_t>(m));
            std::vector<Vector> a, b;
            for (auto& v : t.vectors) a.push_back(v.coords());
            for (auto& v : c.vectors) b.push_back(v.coords());
            CHECK(intersection_dimension(2 * m, a, b) == static_cast<std::size_t>(k));
        }
}
