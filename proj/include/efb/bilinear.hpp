#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "efb/matrix_rep.hpp"
#include "efb/spinors.hpp"

namespace efb {

// γ_i^t B = B γ_i in the signature-labelled basis, scaled so the first
// nonzero entry in row-major order is 1.
struct BForm {
    int m = 0;
    ExactMatrix matrix;
    MonomialMatrix monomial;  // B is a signed permutation in this basis
};

BForm build_B(const RepContext& ctx);
const BForm& b_form(int m);

// coordinates of ω as a column of the matrix representation
Vector rep_vector(const Spinor& w);
Spinor spinor_from_rep_vector(const Vector& v, int m, Field field = Field::Q);

// B(ω, φ) = <Bω, φ> = φ^t B ω
Scalar inner(const Spinor& w, const Spinor& phi);

// ω ⊗ φ*: the element acting as φ' ↦ <Bφ, φ'> ω
AlgebraElement endo_from_pair(const Spinor& w, const Spinor& phi);

// γ^{ik}···γ^{i1} ω for the index set encoded in bits 0..2m-1 (bit i-1 for γ_i)
Spinor apply_dual_gammas(std::uint32_t subset, const Spinor& w);

// keyed by subset mask, zero coefficients omitted
struct GammaExpansion {
    int m = 0;
    std::map<std::uint32_t, Scalar> coeffs;
};

std::string gamma_word(std::uint32_t subset);
int subset_grade(std::uint32_t subset);

// ξ_I = 2^{-m} tr(γ^{ik}···γ^{i1} μ)
GammaExpansion expand_gamma(const AlgebraElement& mu);
AlgebraElement reconstruct_gamma(const GammaExpansion& e, Field field = Field::Q);

// Witt words are the EFB words ψ1···ψm read as singles (p_i, q_i) and
// couples (q_i p_i, p_i q_i); keyed by EFB index key.
struct WittExpansion {
    int m = 0;
    std::map<std::uint32_t, Scalar> coeffs;
};

std::string witt_word(EFBIndex x, int m);
int witt_singles(EFBIndex x, int m);
// l + 2r
int witt_grade(EFBIndex x, int m);

// coefficient of word w = tr(probe_w μ) / tr(probe_w w), with probe
// x̄_{il}···x̄_{i1} y_{jr}···y_{j1}
WittExpansion expand_witt(const AlgebraElement& mu);
AlgebraElement reconstruct_witt(const WittExpansion& e, Field field = Field::Q);
// per-site substitution γ_{2j-1} = p+q, γ_{2j} = p-q, γ_{2j-1}γ_{2j} = qp-pq, 1 = qp+pq
WittExpansion witt_from_gamma(const GammaExpansion& e);

}  // namespace efb
