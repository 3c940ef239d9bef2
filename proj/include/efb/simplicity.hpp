#pragma once

#include <cstdint>
#include <vector>

#include "efb/bilinear.hpp"
#include "efb/spinors.hpp"
#include "efb/vectors.hpp"

namespace efb {

// Basis of S adapted to a maximal totally null plane T: with the frame
// q'_i (spanning T) and p'_i from normalize_tnp and the vacuum ω'_0 killed by
// every q'_i, column a of U is f_a = τ_a (∏_{i∈A} p'_i) ω'_0, where
// Ψ_a = τ_a (∏_{i∈A} p_i) Ψ_e. Conjugating by U maps q'_i to q_i.
class WittFrame {
public:
    WittFrame(const TNPBasis& candidate, Field field = Field::Q);

    int m() const { return m_; }
    const TNPFrame& frame() const { return frame_; }
    const Spinor& vacuum() const { return vacuum_; }
    const ExactMatrix& U() const { return u_; }
    const ExactMatrix& U_inverse() const { return u_inv_; }

    // coordinates of ω in the adapted basis
    Vector rotate(const Spinor& w) const;
    // the element acting on S as U⁻¹ op(μ) U
    AlgebraElement to_standard(const AlgebraElement& mu) const;

private:
    int m_;
    Field field_;
    TNPFrame frame_;
    Spinor vacuum_;
    ExactMatrix u_;
    ExactMatrix u_inv_;
};

bool is_simple_direct(const Spinor& w);

bool is_weyl(const Spinor& w);

// ω is a Γ-eigenvector and the Witt expansion of ω ⊗ ω*, in the frame of the
// candidate, is the single word q1···qm.
bool cartan_chevalley_test(const Spinor& w, const TNPBasis& candidate);

struct GeneralizedResult {
    bool verdict = false;
    // per Fock φ = Ψ_c: dim M(ω) ∩ M(φ) and the least number of single
    // letters over the nonzero words (-1 when ω ⊗ φ* has none)
    std::vector<int> k_m;
    std::vector<int> min_grade;
};

// For every Fock φ the rotated ω ⊗ φ* uses only the letters q_i and q_i p_i,
// with at least k_m single letters in each word.
GeneralizedResult generalized_test(const Spinor& w, const TNPBasis& candidate);
// Same verdict, computed by expanding every rotated ω ⊗ φ* in full.
GeneralizedResult generalized_test_full(const Spinor& w, const TNPBasis& candidate);
// Only φ = given spinor.
bool generalized_test_single(const Spinor& w, const Spinor& phi, const TNPBasis& candidate);
// <Bφ, q'_i ω> = 0 for all Fock φ and every frame vector q'_i.
bool generalized_shortcut(const Spinor& w, const TNPBasis& candidate);

// Σ C(2m, k) over k < m with m - k ≡ 0 (mod 4). Total dimension must be
// even and at most 60.
std::uint64_t constraint_count(int total_dimension);
std::vector<std::uint32_t> constraint_subsets(int m);

struct ConstraintValue {
    std::uint32_t subset;
    Scalar value;  // B(ω, γ^{ik}···γ^{i1} ω)
};
std::vector<ConstraintValue> evaluate_constraints(const Spinor& w);

struct SimplicityReport {
    std::size_t nullity = 0;
    bool weyl = false;
    bool direct = false;
    bool cartan_chevalley = false;
    bool generalized = false;
    bool shortcut = false;
    TNPBasis candidate;
    GeneralizedResult generalized_detail;
    std::uint64_t constraints_generated = 0;
    std::uint64_t constraints_violated = 0;
};

// Runs every test against M(ω), or against a completion of it when ω is not
// simple. Throws InconsistencyError if the verdicts disagree.
SimplicityReport report(const Spinor& w);

// M(Ψ_c) for every Fock spinor, cached per m.
const std::vector<TNPBasis>& fock_annihilators(int m);

}  // namespace efb
