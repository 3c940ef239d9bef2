#pragma once

#include <optional>
#include <vector>

#include "efb/algebra.hpp"
#include "efb/linalg.hpp"

namespace efb {

// v = Σ α_i p_i + β_i q_i
struct WittVector {
    std::vector<Scalar> alpha;
    std::vector<Scalar> beta;

    WittVector() = default;
    explicit WittVector(int m) : alpha(static_cast<std::size_t>(m)), beta(static_cast<std::size_t>(m)) {}
    WittVector(std::vector<Scalar> a, std::vector<Scalar> b);

    static WittVector p(int m, int i);
    static WittVector q(int m, int i);
    // γ_{2j-1} = p_j + q_j, γ_{2j} = p_j - q_j
    static WittVector gamma(int m, int i);

    int m() const { return static_cast<int>(alpha.size()); }
    bool is_zero() const;
    bool is_real() const;
    // coordinates (α_1..α_m, β_1..β_m)
    Vector coords() const;
    static WittVector from_coords(const Vector& c);

    WittVector& operator+=(const WittVector& o);
    WittVector& operator-=(const WittVector& o);
    WittVector scaled(const Scalar& c) const;
    friend WittVector operator+(WittVector x, const WittVector& y) { return x += y; }
    friend WittVector operator-(WittVector x, const WittVector& y) { return x -= y; }
    friend bool operator==(const WittVector&, const WittVector&) = default;
};

AlgebraElement embed(const WittVector& v, Field field = Field::Q);
AlgebraElement gamma_element(int m, int i, Field field = Field::Q);

// Σ(α_i δ_i + β_i γ_i) for u = Σ γ_i p_i + δ_i q_i; {v, u} equals this
// scalar times the identity.
Scalar anticommutator_form(const WittVector& v, const WittVector& u);
Scalar square(const WittVector& v);

enum class VectorClass { V0, V1 };
bool is_null(const WittVector& v);
VectorClass classify(const WittVector& v);

// v̄ = Σ β*_i p_i + α*_i q_i
WittVector conj_vector(const WittVector& v);

// {x, ȳ} = Σ α_x α*_y + β_x β*_y, positive definite
Scalar hermitian_form(const WittVector& x, const WittVector& y);

// C = Δ+ for m odd, Δ- for m even, Δ± = (p1 ± q1)···(pm ± qm)
const AlgebraElement& C_element(int m);
const AlgebraElement& C_inverse(int m);
AlgebraElement delta_element(int m, int sign);

// ω̄ = C ω* C⁻¹
AlgebraElement conj_element(const AlgebraElement& x);

struct TNPBasis {
    int m = 0;
    std::vector<WittVector> vectors;
    std::size_t dim() const { return vectors.size(); }
};

// Totally null check; the result is the canonical echelon basis of the span.
std::optional<TNPBasis> is_tnp(const std::vector<WittVector>& vs);
// As is_tnp but throws NotTotallyNullError naming the first offending pair.
TNPBasis require_tnp(const std::vector<WittVector>& vs);

// Witt frame of a totally null plane: q'_i spans the plane, p'_i spans its
// conjugate, with {q'_i, p'_j} = δ_ij and all other pairings zero.
struct TNPFrame {
    std::vector<WittVector> qs;
    std::vector<WittVector> ps;
};
// Gram-Schmidt in input order against the form {x, ȳ}; each q'_i is scaled
// so its first nonzero coordinate is 1. Throws DependentVectorsError.
TNPFrame normalize_tnp(const std::vector<WittVector>& vs);

// (T⊥ ∩ Q) + T, a maximal totally null plane containing T.
TNPBasis complete_tnp(const TNPBasis& t);

}  // namespace efb
