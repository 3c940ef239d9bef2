#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "efb/efb.hpp"
#include "efb/scalar.hpp"

namespace efb {

// Sparse element of Cl(m,m) in the Extended Fock Basis: a sorted list of
// (key, coefficient) with key = (a << m) | b and no zero coefficients.
class AlgebraElement {
public:
    using Term = std::pair<std::uint32_t, Scalar>;

    explicit AlgebraElement(int m, Field field = Field::Q);

    static AlgebraElement monomial(int m, EFBIndex x, Scalar c = Scalar(1), Field field = Field::Q);
    // Duplicate indices are summed.
    static AlgebraElement from_terms(int m, Field field, std::vector<Term> terms);
    static AlgebraElement scalar(int m, const Scalar& c, Field field = Field::Q);
    static AlgebraElement identity(int m, Field field = Field::Q);
    static AlgebraElement volume_gamma(int m, Field field = Field::Q);

    int m() const { return m_; }
    Field field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(EFBIndex x) const;

    // Same element viewed over Q(i). Throws FieldError when narrowing a
    // non-real element to Q.
    AlgebraElement with_field(Field f) const;
    AlgebraElement scaled(const Scalar& c) const;
    // Complex conjugation of every coefficient.
    AlgebraElement star() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator-() const;
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.m_ == y.m_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

private:
    void check_compatible(const AlgebraElement& o) const;
    void check_scalar(const Scalar& c) const;

    int m_;
    Field field_;
    std::vector<Term> terms_;
};

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return x * y - y * x;
}
inline AlgebraElement anticommutator(const AlgebraElement& x, const AlgebraElement& y) {
    return x * y + y * x;
}

// Sum of diagonal coefficients; tr of the identity is 2^m.
Scalar trace(const AlgebraElement& x);

// γ_i -> -γ_i: scales Ψ_ab by its global parity ∏ g_i.
AlgebraElement main_automorphism(const AlgebraElement& x);

// ∏ a_i, the eigenvalue of Γ acting from the left on Ψ_ab.
inline int chirality(EFBIndex x) { return parity_sign(x.a); }
// ∏ g_i.
inline int global_parity(EFBIndex x) { return parity_sign(x.a ^ x.b); }

}  // namespace efb
