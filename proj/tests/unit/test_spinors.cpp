#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efb/errors.hpp"
#include "efb/spinors.hpp"
#include "support.hpp"

using namespace efb;
using efb::test::random_element;

namespace {

Spinor psi(int m, std::vector<int> a) { return Spinor::basis(m, signature_from_values(a)); }

std::vector<WittVector> fock_plane(int m) {
    std::vector<WittVector> qs;
    for (int i = 1; i <= m; ++i) qs.push_back(WittVector::q(m, i));
    return qs;
}

}  // namespace

TEST_CASE("action on Fock spinors") {
    for (int m = 1; m <= 4; ++m) {
        const Spinor vac = Spinor::basis(m, 0);
        CHECK(act(embed(WittVector::q(m, 1)), vac).is_zero());
        CHECK(act(embed(WittVector::p(m, 1)), vac) == Spinor::basis(m, 1));
        CHECK(act(AlgebraElement::identity(m), vac) == vac);
    }
    Rng rng(51);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 10; ++t) {
            Spinor w = random_spinor(rng, m);
            AlgebraElement x = random_element(rng, m, 20);
            CHECK(act(x, w).element() == x * w.element());
            WittVector v = random_vector(rng, m);
            CHECK(act_vector(v, w) == act(embed(v), w));
            CHECK(element_from_operator(fock_operator(x), m) == x);
        }
}

TEST_CASE("operator of a product is the product of operators") {
    Rng rng(52);
    for (int m = 1; m <= 3; ++m)
        for (int t = 0; t < 10; ++t) {
            AlgebraElement x = random_element(rng, m, 15), y = random_element(rng, m, 15);
            CHECK(fock_operator(x * y) == fock_operator(x) * fock_operator(y));
        }
    CHECK_THROWS_AS(Spinor::from_element(AlgebraElement::identity(2)), DimensionError);
}

TEST_CASE("kernel witness for p1 + q2") {
    const WittVector v = WittVector::p(2, 1) + WittVector::q(2, 2);
    CHECK(is_null(v));
    const Spinor d = Spinor::basis(2, 0) - Spinor::basis(2, 3);
    CHECK(act_vector(v, d).is_zero());
    auto k = kernel_basis(vector_operator(v));
    SpinorSubspace s{2, k};
    CHECK(s.contains(d));
    SpinorSubspace sv = annihilated_subspace({v});
    CHECK(sv.contains(d));
    // Ψ0 and Ψ3 are both outside S_v while their difference is inside
    CHECK_FALSE(sv.contains(Spinor::basis(2, 0)));
    CHECK_FALSE(sv.contains(Spinor::basis(2, 3)));
}

TEST_CASE("annihilator examples") {
    for (int m = 1; m <= 5; ++m) {
        std::vector<int> a(static_cast<std::size_t>(m), 1);
        a[0] = -1;
        std::vector<WittVector> expect{WittVector::p(m, 1)};
        for (int i = 2; i <= m; ++i) expect.push_back(WittVector::q(m, i));
        CHECK(annihilator(psi(m, a)).vectors == expect);
        CHECK(annihilator(Spinor::basis(m, 0)).vectors == fock_plane(m));
    }
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        Scalar x1 = rng.nonzero_rational(), x3 = rng.nonzero_rational();
        Spinor w(2);
        w[1] = x1;
        w[3] = x3;
        CHECK(annihilator(w).vectors == std::vector<WittVector>{WittVector::p(2, 1)});
        Spinor w1(2), w3(2);
        w1[3] = x3;
        w3[1] = x1;
        CHECK(annihilator(w1).vectors == std::vector<WittVector>{WittVector::p(2, 1), WittVector::p(2, 2)});
        CHECK(annihilator(w3).vectors == std::vector<WittVector>{WittVector::p(2, 1), WittVector::q(2, 2)});
    }
    CHECK_THROWS_AS(annihilator(Spinor(3)), ZeroSpinorError);
}

TEST_CASE("annihilated subspace dimensions") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(annihilated_subspace({WittVector::q(m, 1)}).dim() == (std::size_t{1} << (m - 1)));
        SpinorSubspace s = annihilated_subspace(fock_plane(m));
        CHECK(s.dim() == 1);
        CHECK(s.contains(Spinor::basis(m, 0)));
    }
    Rng rng(54);
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m; ++k)
            for (int t = 0; t < 3; ++t) {
                auto vs = random_tnp(rng, m, k);
                SpinorSubspace s = annihilated_subspace(vs);
                CHECK(s.dim() == (std::size_t{1} << (m - k)));
                Spinor g = generic_spinor_sample(vs, rng, m);
                CHECK(s.contains(g));
            }
    CHECK_THROWS_AS(annihilated_subspace({WittVector::p(2, 1), WittVector::q(2, 1)}), NotTotallyNullError);
}

TEST_CASE("generic spinors") {
    Rng rng(55);
    for (int m = 1; m <= 4; ++m) {
        Spinor g = generic_spinor_sample(fock_plane(m), rng, m);
        CHECK(g.support_size() == 1);
        CHECK(!g[0].is_zero());
    }
    for (int m = 3; m <= 5; ++m) {
        Spinor phi = generic_spinor_sample({}, rng, m);
        CHECK(phi.support_size() == phi.dim());
        CHECK(nullity(phi) == 0);
    }
}

TEST_CASE("null and non-null vector actions") {
    Rng rng(56);
    for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < 10; ++t) {
            WittVector v = random_null_vector(rng, m);
            auto kv = kernel_basis(vector_operator(v));
            CHECK(kv.size() == (std::size_t{1} << (m - 1)));
            WittVector u = random_nonnull_vector(rng, m);
            CHECK(kernel_basis(vector_operator(u)).empty());
        }
}

TEST_CASE("conjugate vectors do not annihilate the same spinor") {
    Rng rng(57);
    for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < 10; ++t) {
            WittVector v = random_null_vector(rng, m);
            Spinor w = generic_spinor_sample({v}, rng, m);
            CHECK(act_vector(v, w).is_zero());
            CHECK_FALSE(act_vector(conj_vector(v), w).is_zero());
            AlgebraElement wb = conj_element(w.element());
            CHECK_FALSE((embed(v) * wb).is_zero());
            CHECK_FALSE((embed(v) * C_element(m) * w.star().element()).is_zero());
        }
    // both can be nonzero
    const int m = 3;
    Spinor w = Spinor::basis(m, 0) + Spinor::basis(m, 1);
    CHECK_FALSE(act_vector(WittVector::p(m, 1), w).is_zero());
    CHECK_FALSE(act_vector(WittVector::q(m, 1), w).is_zero());
}

TEST_CASE("S_v and its conjugate split S") {
    Rng rng(58);
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t < 5; ++t) {
            WittVector v = random_null_vector(rng, m);
            SpinorSubspace a = annihilated_subspace({v});
            SpinorSubspace b = annihilated_subspace({conj_vector(v)});
            const std::size_t half = std::size_t{1} << (m - 1);
            CHECK(a.dim() == half);
            CHECK(b.dim() == half);
            CHECK(intersection_dimension(2 * half, a.basis, b.basis) == 0);
            Spinor w = generic_spinor_sample({v}, rng, m);
            Spinor twin = act_vector(conj_vector(v), w);
            CHECK(!twin.is_zero());
            CHECK(b.contains(twin));
            CHECK(span_dimension(w.dim(), {w.xi(), twin.xi()}) == 2);
        }
}

TEST_CASE("determinant scaling") {
    Rng rng(59);
    auto qs = fock_plane(3);
    CHECK(tnp_change_of_basis_scale(qs, ExactMatrix::identity(3)) == Scalar(1));
    ExactMatrix swap = ExactMatrix::from_rows(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(tnp_change_of_basis_scale(qs, swap) == Scalar(-1));
    for (int t = 0; t < 5; ++t) {
        ExactMatrix a = random_matrix(rng, 3, 3);
        if (det(a).is_zero()) continue;
        CHECK(tnp_change_of_basis_scale(qs, a) == det(a));
    }
    ExactMatrix sing = ExactMatrix::from_rows(3, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(tnp_change_of_basis_scale(qs, sing), SingularTransformError);
    for (int m = 2; m <= 4; ++m) {
        auto vs = random_tnp(rng, m, 2);
        ExactMatrix a = random_invertible(rng, 2);
        CHECK(tnp_change_of_basis_scale(vs, a) == det(a));
    }
}

TEST_CASE("spinor space switch") {
    Rng rng(60);
    for (int m = 1; m <= 4; ++m) {
        AlgebraElement x = random_element(rng, m, 10);
        CHECK(spinor_space_switch(x, {}) == x);
        for (Mask a = 0; a <= full_mask(m); ++a) {
            AlgebraElement w = AlgebraElement::monomial(m, {a, full_mask(m)});
            for (int i = 1; i <= m; ++i) {
                AlgebraElement s = spinor_space_switch(w, {i});
                REQUIRE(s.size() == 1);
                EFBIndex ix = key_index(s.terms()[0].first, m);
                CHECK(ix.a == a);
                CHECK((ix.b ^ full_mask(m)) == (Mask{1} << (i - 1)));
                CHECK(global_parity(ix) == -global_parity({a, full_mask(m)}));
            }
        }
        Spinor w = random_spinor(rng, m);
        const AlgebraElement g = AlgebraElement::volume_gamma(m);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> sites;
            for (int i = 1; i <= m; ++i)
                if (rng.coin()) sites.push_back(i);
            // a Weyl spinor keeps its chirality
            Spinor weyl(m);
            for (Mask a = 0; a <= full_mask(m); ++a)
                if (parity_sign(a) > 0) weyl[a] = w[a];
            AlgebraElement s = spinor_space_switch(weyl.element(), sites);
            CHECK(g * s == s);
        }
    }
}
