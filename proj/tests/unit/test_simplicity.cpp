#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efb/errors.hpp"
#include "efb/simplicity.hpp"
#include "support.hpp"

using namespace efb;

namespace {

Spinor simple_sample(Rng& rng, int m) { return generic_spinor_sample(random_tnp(rng, m, m), rng, m); }

// random Weyl spinor with dense support on one chirality
Spinor weyl_sample(Rng& rng, int m, int chirality) {
    Spinor w(m);
    for (Mask a = 0; a <= full_mask(m); ++a)
        if (parity_sign(a) == chirality) w[a] = rng.nonzero_rational();
    return w;
}

std::uint64_t binomial_oracle(int n, int k) {
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

TNPBasis plane_of(const std::vector<WittVector>& vs) { return *is_tnp(vs); }

}  // namespace

TEST_CASE("constraint counts") {
    CHECK(constraint_count(10) == 10);
    CHECK(constraint_count(12) == 66);
    CHECK(constraint_count(16) == 1821);
    for (int n = 2; n <= 60; n += 2) {
        std::uint64_t want = 0;
        for (int k = 0; k < n / 2; ++k)
            if ((n / 2 - k) % 4 == 0) want += binomial_oracle(n, k);
        CHECK(constraint_count(n) == want);
    }
    CHECK_THROWS_AS(constraint_count(11), DimensionError);
    CHECK_THROWS_AS(constraint_count(0), DimensionError);
    CHECK_THROWS_AS(constraint_count(62), RangeError);
    for (int m = 1; m <= 7; ++m) CHECK(constraint_subsets(m).size() == constraint_count(2 * m));
}

TEST_CASE("adapted frame conjugates q'_i to q_i") {
    Rng rng(81);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 4; ++t) {
            const TNPBasis T = plane_of(random_tnp(rng, m, m));
            const WittFrame f(T);
            for (int i = 1; i <= m; ++i) {
                const auto& fr = f.frame();
                CHECK(f.U_inverse() * vector_operator(fr.qs[static_cast<std::size_t>(i - 1)], Field::Q) * f.U() ==
                      vector_operator(WittVector::q(m, i), Field::Q));
                CHECK(f.U_inverse() * vector_operator(fr.ps[static_cast<std::size_t>(i - 1)], Field::Q) * f.U() ==
                      vector_operator(WittVector::p(m, i), Field::Q));
            }
            Vector vac = f.rotate(f.vacuum());
            for (Mask a = 1; a < vac.size(); ++a) CHECK(vac[a].is_zero());
            CHECK(vac[0] == Scalar(1));
        }
}

TEST_CASE("simple spinors pass every test") {
    Rng rng(82);
    for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < (m <= 3 ? 6 : 2); ++t) {
            const Spinor w = simple_sample(rng, m);
            const SimplicityReport r = report(w);
            CHECK(r.direct);
            CHECK(r.weyl);
            CHECK(r.cartan_chevalley);
            CHECK(r.generalized);
            CHECK(r.shortcut);
            CHECK(r.constraints_violated == 0);
            for (std::size_t c = 0; c < r.generalized_detail.k_m.size(); ++c)
                CHECK(r.generalized_detail.min_grade[c] >= r.generalized_detail.k_m[c]);
        }
}

TEST_CASE("fast and full routes agree") {
    Rng rng(83);
    for (int m = 1; m <= 3; ++m)
        for (int t = 0; t < 5; ++t) {
            for (const Spinor& w : {simple_sample(rng, m), random_spinor(rng, m, Field::Q, true), weyl_sample(rng, m, 1)}) {
                const TNPBasis mw = annihilator(w);
                const TNPBasis cand = mw.dim() == static_cast<std::size_t>(m) ? mw : complete_tnp(mw);
                const auto fast = generalized_test(w, cand);
                const auto full = generalized_test_full(w, cand);
                CHECK(fast.verdict == full.verdict);
                CHECK(fast.k_m == full.k_m);
                CHECK(fast.min_grade == full.min_grade);
                CHECK(fast.verdict == is_simple_direct(w));
            }
        }
}

TEST_CASE("restricting to phi = omega reproduces the Cartan-Chevalley verdict") {
    Rng rng(84);
    for (int m = 2; m <= 4; ++m)
        for (int t = 0; t < 4; ++t)
            for (const Spinor& w : {simple_sample(rng, m), weyl_sample(rng, m, -1), weyl_sample(rng, m, 1)}) {
                const TNPBasis mw = annihilator(w);
                const TNPBasis cand = mw.dim() == static_cast<std::size_t>(m) ? mw : complete_tnp(mw);
                CHECK(generalized_test_single(w, w, cand) == cartan_chevalley_test(w, cand));
            }
}

TEST_CASE("small m grid") {
    // every nonzero ξ in {-1,0,1}^4
    int simple = 0, weyl = 0;
    for (int code = 1; code < 81; ++code) {
        Spinor w(2);
        int x = code;
        for (Mask a = 0; a < 4; ++a, x /= 3) w[a] = x % 3 - 1;
        if (w.is_zero()) continue;
        const SimplicityReport r = report(w);
        CHECK(r.weyl == r.direct);
        simple += r.direct;
        weyl += r.weyl;
    }
    // 8 nonzero Weyl vectors per chirality
    CHECK(weyl == 16);
    CHECK(simple == 16);
}

TEST_CASE("Weyl spinors are simple up to m = 3") {
    Rng rng(85);
    for (int m = 1; m <= 3; ++m)
        for (int t = 0; t < 5; ++t)
            for (int ch : {1, -1}) CHECK(report(weyl_sample(rng, m, ch)).direct);
}

TEST_CASE("non-simple spinors") {
    Rng rng(86);
    for (int m = 2; m <= 5; ++m)
        for (int t = 0; t < 3; ++t) {
            const Spinor w = random_spinor(rng, m, Field::Q, true);
            const SimplicityReport r = report(w);
            CHECK_FALSE(r.direct);
            CHECK_FALSE(r.weyl);
            CHECK_FALSE(r.cartan_chevalley);
        }
    for (int m = 4; m <= 5; ++m)
        for (int t = 0; t < 3; ++t) {
            const SimplicityReport r = report(weyl_sample(rng, m, 1));
            CHECK_FALSE(r.direct);
            CHECK(r.constraints_violated >= 1);
        }
}

TEST_CASE("near-simple: simple plus a small opposite-chirality term") {
    Rng rng(87);
    for (int m = 2; m <= 4; ++m)
        for (int t = 0; t < 3; ++t) {
            Spinor w = simple_sample(rng, m);
            Mask a = 0;
            while (w[a].is_zero()) ++a;
            w[a ^ 1U] += Scalar::parse("1/1000");
            const SimplicityReport r = report(w);
            CHECK_FALSE(r.direct);
            CHECK_FALSE(r.generalized);
        }
}

TEST_CASE("complex field") {
    Rng rng(88);
    for (int m = 2; m <= 4; ++m) {
        const Spinor w = generic_spinor_sample(random_tnp(rng, m, m, Field::Qi), rng, m, Field::Qi);
        const SimplicityReport r = report(w);
        CHECK(r.direct);
        CHECK(r.generalized);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(report(Spinor(3)), ZeroSpinorError);
    const Spinor w = Spinor::basis(3, 0);
    TNPBasis small{3, {WittVector::q(3, 1)}};
    CHECK_THROWS_AS(cartan_chevalley_test(w, small), DimensionError);
    TNPBasis bad{3, {WittVector::q(3, 1), WittVector::p(3, 1), WittVector::q(3, 2)}};
    CHECK_THROWS_AS(generalized_test(w, bad), NotTotallyNullError);
}
