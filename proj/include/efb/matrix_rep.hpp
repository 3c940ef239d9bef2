#pragma once

#include <cstdint>
#include <vector>

#include "efb/algebra.hpp"
#include "efb/linalg.hpp"

namespace efb {

// Signed permutation matrix: column c is sign[c] * e_{row[c]}.
struct MonomialMatrix {
    std::vector<std::uint32_t> row;
    std::vector<std::int8_t> sign;

    std::size_t size() const { return row.size(); }
    static MonomialMatrix identity(std::size_t n);
    static MonomialMatrix from_dense(const ExactMatrix& m);
    ExactMatrix dense() const;
    MonomialMatrix operator*(const MonomialMatrix& o) const;
    MonomialMatrix operator-() const;
    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);

// Real representation of Cl(m,m) on F^(2^m) built as a tensor product of
// Cl(1,1) blocks. Rows and columns are labelled by signature masks, so that
// Ψ_ab maps to ±E(a, b).
class RepContext {
public:
    explicit RepContext(int m);

    int m() const { return m_; }
    std::size_t dim() const { return std::size_t{1} << m_; }

    // γ_i, 1 <= i <= 2m, in the raw tensor-product basis.
    const MonomialMatrix& tensor_generator(int i) const;
    // γ_i in the signature-labelled basis.
    const MonomialMatrix& generator(int i) const;
    ExactMatrix generator_matrix(int i) const;
    // matrices of p_i and q_i in the signature-labelled basis
    ExactMatrix p_matrix(int i) const;
    ExactMatrix q_matrix(int i) const;

    // to_matrix(Ψ_ab) = sigma(a,b) E(a,b)
    int sigma(Mask a, Mask b) const { return sigma_[(std::size_t{a} << m_) | b]; }

    ExactMatrix to_matrix(const AlgebraElement& x) const;
    AlgebraElement from_matrix(const ExactMatrix& mat, Field field = Field::Q) const;

private:
    // image of basis vector c under p_i or q_i: 0 or ±e_row
    struct NullImage {
        std::uint32_t row;
        int sign;  // 0 when the image vanishes
    };
    NullImage apply_null(bool is_p, int site, std::uint32_t c) const;

    int m_;
    std::vector<MonomialMatrix> tensor_;
    std::vector<MonomialMatrix> gens_;
    std::vector<std::int8_t> sigma_;
};

// Shared context per m, built on first use.
const RepContext& rep_context(int m);

}  // namespace efb
