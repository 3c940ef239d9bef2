#pragma once

#include <vector>

#include "efb/algebra.hpp"
#include "efb/linalg.hpp"
#include "efb/random.hpp"
#include "efb/vectors.hpp"

namespace efb {

// Element of the column S = S_{-e}: ω = Σ_a ξ_a Ψ_{a,-e}, ξ indexed by mask a.
class Spinor {
public:
    explicit Spinor(int m, Field field = Field::Q);
    Spinor(int m, Field field, Vector xi);

    static Spinor basis(int m, Mask a, Field field = Field::Q);
    // Throws DimensionError if x has a term outside the column b = -e.
    static Spinor from_element(const AlgebraElement& x);

    int m() const { return m_; }
    Field field() const { return field_; }
    std::size_t dim() const { return xi_.size(); }
    const Vector& xi() const { return xi_; }
    const Scalar& operator[](Mask a) const { return xi_[a]; }
    Scalar& operator[](Mask a) { return xi_[a]; }
    bool is_zero() const { return is_zero_vector(xi_); }
    std::size_t support_size() const;

    AlgebraElement element() const;
    Spinor star() const;
    Spinor scaled(const Scalar& c) const;
    Spinor& operator+=(const Spinor& o);
    Spinor& operator-=(const Spinor& o);
    friend Spinor operator+(Spinor x, const Spinor& y) { return x += y; }
    friend Spinor operator-(Spinor x, const Spinor& y) { return x -= y; }
    friend bool operator==(const Spinor& x, const Spinor& y) { return x.m_ == y.m_ && x.xi_ == y.xi_; }
    friend bool operator!=(const Spinor& x, const Spinor& y) { return !(x == y); }

private:
    int m_;
    Field field_;
    Vector xi_;
};

// x ω
Spinor act(const AlgebraElement& x, const Spinor& w);
// v ω without building the element of v
Spinor act_vector(const WittVector& v, const Spinor& w);
// Matrix of ω ↦ v ω in the Fock basis.
ExactMatrix vector_operator(const WittVector& v, Field field = Field::Q);

// Matrix of the left action of x on S in the Fock basis, and its inverse.
ExactMatrix fock_operator(const AlgebraElement& x);
AlgebraElement element_from_operator(const ExactMatrix& op, int m, Field field = Field::Q);

// M(ω) = {v : v ω = 0}. Throws ZeroSpinorError.
TNPBasis annihilator(const Spinor& w);
std::size_t nullity(const Spinor& w);

struct SpinorSubspace {
    int m = 0;
    std::vector<Vector> basis;  // canonical echelon form over the 2^m coordinates
    std::size_t dim() const { return basis.size(); }
    bool contains(const Spinor& w) const;
    friend bool operator==(const SpinorSubspace&, const SpinorSubspace&) = default;
};

// S_{v1..vk}: spinors annihilated by every v_i. Computed as a joint kernel
// and as the image of v1···vk; the two are checked to agree.
SpinorSubspace annihilated_subspace(const std::vector<WittVector>& vs, Field field = Field::Q);

// Matrix of ω ↦ v1···vk ω.
ExactMatrix product_operator(const std::vector<WittVector>& vs, Field field = Field::Q);

// v1···vk Φ for random Φ, redrawn until nonzero. With no vectors Φ itself,
// every coordinate nonzero.
Spinor generic_spinor_sample(const std::vector<WittVector>& vs, Rng& rng, int m, Field field = Field::Q);
Spinor random_spinor(Rng& rng, int m, Field field = Field::Q, bool all_nonzero = false);

// Checks (A v)_1···(A v)_k = det(A) v1···vk as maps on S and returns det(A).
// A singular A throws SingularTransformError once the zero map is confirmed.
Scalar tnp_change_of_basis_scale(const std::vector<WittVector>& vs, const ExactMatrix& a,
                                 Field field = Field::Q);

// x (p_{i1}+q_{i1})···(p_{ik}+q_{ik}), sites ascending.
AlgebraElement spinor_space_switch(const AlgebraElement& x, const std::vector<int>& sites);

}  // namespace efb
