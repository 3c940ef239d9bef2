#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efb/bilinear.hpp"
#include "efb/errors.hpp"
#include "support.hpp"

using namespace efb;
using efb::test::random_element;

TEST_CASE("B for m=1") {
    CHECK(b_form(1).matrix == ExactMatrix(2, 2, {0, 1, 1, 0}));
}

TEST_CASE("B intertwines, has the right symmetry and is invertible") {
    for (int m = 1; m <= 6; ++m) {
        const RepContext& rep = rep_context(m);
        const BForm& b = b_form(m);
        for (int i = 1; i <= 2 * m; ++i) {
            ExactMatrix g = rep.generator_matrix(i);
            CHECK(g.transpose() * b.matrix == b.matrix * g);
        }
        const int sym = (m * (m - 1) / 2) % 2 ? -1 : 1;
        CHECK(b.matrix.transpose() == b.matrix.scaled(Scalar(sym)));
        CHECK(rank(b.matrix) == rep.dim());
    }
}

TEST_CASE("inner product") {
    Rng rng(61);
    for (int m = 1; m <= 5; ++m) {
        const Mask all = full_mask(m);
        const Spinor vac = Spinor::basis(m, 0);
        for (Mask a = 0; a <= all; ++a) {
            if (a == all)
                CHECK_FALSE(inner(vac, Spinor::basis(m, a)).is_zero());
            else
                CHECK(inner(vac, Spinor::basis(m, a)).is_zero());
        }
        const int sym = (m * (m - 1) / 2) % 2 ? -1 : 1;
        for (int t = 0; t < 10; ++t) {
            Spinor w = random_spinor(rng, m), phi = random_spinor(rng, m);
            CHECK(inner(w, phi) == inner(phi, w) * Scalar(sym));
            WittVector v = random_unit_vector(rng, m);
            CHECK(inner(act_vector(v, w), act_vector(v, phi)) == inner(w, phi));
            Spinor psi = random_spinor(rng, m);
            Scalar c = rng.rational();
            CHECK(inner(w + psi.scaled(c), phi) == inner(w, phi) + c * inner(psi, phi));
        }
    }
}

TEST_CASE("endomorphism of a pair") {
    Rng rng(62);
    for (int m = 1; m <= 4; ++m) {
        const Spinor vac = Spinor::basis(m, 0);
        AlgebraElement e0 = endo_from_pair(vac, vac);
        for (Mask a = 0; a < full_mask(m); ++a) CHECK(act(e0, Spinor::basis(m, a)).is_zero());
        // ω ⊗ ω* for the Fock vacuum is a multiple of q1···qm
        REQUIRE(e0.size() == 1);
        CHECK(key_index(e0.terms()[0].first, m) == EFBIndex{0, full_mask(m)});
        for (int t = 0; t < 8; ++t) {
            Spinor w = random_spinor(rng, m), phi = random_spinor(rng, m), x = random_spinor(rng, m);
            AlgebraElement e = endo_from_pair(w, phi);
            CHECK(act(e, x) == w.scaled(inner(phi, x)));
            CHECK(trace(e) == inner(phi, w));
        }
    }
}

TEST_CASE("gamma expansion") {
    for (int m = 1; m <= 3; ++m) {
        GammaExpansion id = expand_gamma(AlgebraElement::identity(m));
        REQUIRE(id.coeffs.size() == 1);
        CHECK(id.coeffs.begin()->first == 0);
        CHECK(id.coeffs.begin()->second == Scalar(1));
        GammaExpansion g1 = expand_gamma(gamma_element(m, 1));
        REQUIRE(g1.coeffs.size() == 1);
        CHECK(g1.coeffs.begin()->first == 1);
        CHECK(g1.coeffs.begin()->second == Scalar(1));
        GammaExpansion g2 = expand_gamma(gamma_element(m, 2));
        CHECK(g2.coeffs.at(2) == Scalar(1));
    }
    CHECK(gamma_word(0) == "1");
    CHECK(gamma_word(0b101) == "g1^g3");
    Rng rng(63);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 10; ++t) {
            AlgebraElement mu = random_element(rng, m, 25);
            GammaExpansion e = expand_gamma(mu);
            CHECK(reconstruct_gamma(e) == mu);
            // linearity
            AlgebraElement nu = random_element(rng, m, 10);
            GammaExpansion s = expand_gamma(mu + nu), en = expand_gamma(nu);
            for (auto& [k, v] : en.coeffs) e.coeffs[k] += v;
            std::erase_if(e.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
            CHECK(s.coeffs == e.coeffs);
        }
}

TEST_CASE("gamma coefficients of rank-one elements are bilinear values") {
    Rng rng(64);
    for (int m = 1; m <= 3; ++m)
        for (int t = 0; t < 4; ++t) {
            Spinor w = random_spinor(rng, m), phi = random_spinor(rng, m);
            GammaExpansion e = expand_gamma(endo_from_pair(w, phi));
            const Scalar scale(1, 1L << m);
            for (std::uint32_t s = 0; s < (std::uint32_t{1} << (2 * m)); ++s) {
                Scalar expect = inner(phi, apply_dual_gammas(s, w)) * scale;
                auto it = e.coeffs.find(s);
                CHECK((it == e.coeffs.end() ? Scalar(0) : it->second) == expect);
            }
        }
}

TEST_CASE("Witt expansion") {
    for (int m = 1; m <= 4; ++m) {
        WittExpansion id = expand_witt(AlgebraElement::identity(m));
        CHECK(id.coeffs.size() == (std::size_t{1} << m));
        for (auto& [k, v] : id.coeffs) {
            CHECK(v == Scalar(1));
            CHECK(witt_singles(key_index(k, m), m) == 0);
        }
        AlgebraElement qs = AlgebraElement::identity(m);
        for (int i = 1; i <= m; ++i) qs = qs * embed(WittVector::q(m, i));
        WittExpansion e = expand_witt(qs);
        REQUIRE(e.coeffs.size() == 1);
        CHECK(witt_word(key_index(e.coeffs.begin()->first, m), m) == witt_word({0, full_mask(m)}, m));
    }
    CHECK(witt_word({0b10, 0b11}, 2) == "q1.p2q2");
    Rng rng(65);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 8; ++t) {
            AlgebraElement mu = random_element(rng, m, 30);
            WittExpansion w = expand_witt(mu);
            CHECK(reconstruct_witt(w) == mu);
            CHECK(witt_from_gamma(expand_gamma(mu)).coeffs == w.coeffs);
            for (auto& [k, v] : w.coeffs) {
                const EFBIndex x = key_index(k, m);
                const int l = witt_singles(x, m), r = m - l, grade = witt_grade(x, m);
                CHECK(l + 2 * r == grade);
                CHECK(grade % 2 <= l);
                CHECK(l <= std::min(grade, 2 * m - grade));
                CHECK(std::max(0, grade - m) <= r);
                CHECK(r <= grade / 2);
            }
        }
}

TEST_CASE("Witt words as products of embedded letters") {
    for (int m = 1; m <= 3; ++m)
        for (Mask a = 0; a <= full_mask(m); ++a)
            for (Mask b = 0; b <= full_mask(m); ++b) {
                const EFBWord w = word_of_index({a, b}, m);
                AlgebraElement prod = AlgebraElement::identity(m);
                for (int i = 1; i <= m; ++i) {
                    AlgebraElement p = embed(WittVector::p(m, i)), q = embed(WittVector::q(m, i));
                    switch (w[static_cast<std::size_t>(i - 1)]) {
                        case Letter::QP: prod = prod * q * p; break;
                        case Letter::PQ: prod = prod * p * q; break;
                        case Letter::Q: prod = prod * q; break;
                        case Letter::P: prod = prod * p; break;
                    }
                }
                CHECK(prod == AlgebraElement::monomial(m, {a, b}));
            }
}
