#include "efb/spinors.hpp"

#include <algorithm>

#include "efb/errors.hpp"

namespace efb {

Spinor::Spinor(int m, Field field) : m_(m), field_(field) {
    check_m(m);
    xi_.resize(std::size_t{1} << m);
}

Spinor::Spinor(int m, Field field, Vector xi) : m_(m), field_(field), xi_(std::move(xi)) {
    check_m(m);
    if (xi_.size() != (std::size_t{1} << m)) throw DimensionError("spinor coordinate count is not 2^m");
    if (field == Field::Q)
        for (const auto& x : xi_)
            if (!x.is_real()) throw FieldError("complex coordinate in a real spinor");
}

Spinor Spinor::basis(int m, Mask a, Field field) {
    Spinor s(m, field);
    if (a > full_mask(m)) throw RangeError("signature has bits beyond m");
    s.xi_[a] = 1;
    return s;
}

Spinor Spinor::from_element(const AlgebraElement& x) {
    Spinor s(x.m(), x.field());
    const Mask col = full_mask(x.m());
    for (const auto& [key, c] : x.terms()) {
        const EFBIndex ix = key_index(key, x.m());
        if (ix.b != col) throw DimensionError("element does not lie in the spinor column");
        s.xi_[ix.a] = c;
    }
    return s;
}

std::size_t Spinor::support_size() const {
    return static_cast<std::size_t>(std::count_if(xi_.begin(), xi_.end(), [](const Scalar& x) { return !x.is_zero(); }));
}

AlgebraElement Spinor::element() const {
    std::vector<AlgebraElement::Term> terms;
    const Mask col = full_mask(m_);
    for (Mask a = 0; a < dim(); ++a)
        if (!xi_[a].is_zero()) terms.emplace_back(index_key({a, col}, m_), xi_[a]);
    return AlgebraElement::from_terms(m_, field_, std::move(terms));
}

Spinor Spinor::star() const {
    Spinor s(*this);
    for (auto& x : s.xi_) x = x.star();
    return s;
}

Spinor Spinor::scaled(const Scalar& c) const {
    if (field_ == Field::Q && !c.is_real()) throw FieldError("complex scale of a real spinor");
    Spinor s(*this);
    for (auto& x : s.xi_) x *= c;
    return s;
}

Spinor& Spinor::operator+=(const Spinor& o) {
    if (m_ != o.m_) throw DimensionError("spinors of different m");
    if (field_ != o.field_) throw FieldError("spinors over different fields");
    for (std::size_t i = 0; i < xi_.size(); ++i) xi_[i] += o.xi_[i];
    return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
    if (m_ != o.m_) throw DimensionError("spinors of different m");
    if (field_ != o.field_) throw FieldError("spinors over different fields");
    for (std::size_t i = 0; i < xi_.size(); ++i) xi_[i] -= o.xi_[i];
    return *this;
}

Spinor act(const AlgebraElement& x, const Spinor& w) {
    if (x.m() != w.m()) throw DimensionError("element and spinor differ in m");
    if (x.field() != w.field()) throw FieldError("element and spinor over different fields");
    const int m = w.m();
    const Mask col = full_mask(m);
    Spinor out(m, w.field());
    for (const auto& [key, c] : x.terms()) {
        const EFBIndex ix = key_index(key, m);
        const Scalar& wb = w[ix.b];
        if (wb.is_zero()) continue;
        if (sign_s(ix.a, ix.b, col, m) > 0)
            out[ix.a].add_product(c, wb);
        else
            out[ix.a].sub_product(c, wb);
    }
    return out;
}

namespace {

// p_i Ψ_c is nonzero only when c_i = +1, q_i Ψ_c only when c_i = -1; both
// flip site i.
void add_null_action(bool is_p, int site, const Scalar& coef, const Spinor& w, Spinor& out) {
    if (coef.is_zero()) return;
    const int m = w.m();
    const Mask bit = Mask{1} << (site - 1);
    const Mask col = full_mask(m);
    for (Mask c = 0; c < w.dim(); ++c) {
        if (((c & bit) != 0) == is_p || w[c].is_zero()) continue;
        const Mask t = c ^ bit;
        if (sign_s(t, c, col, m) > 0)
            out[t].add_product(coef, w[c]);
        else
            out[t].sub_product(coef, w[c]);
    }
}

}  // namespace

Spinor act_vector(const WittVector& v, const Spinor& w) {
    if (v.m() != w.m()) throw DimensionError("vector and spinor differ in m");
    Spinor out(w.m(), w.field());
    for (int i = 1; i <= w.m(); ++i) {
        add_null_action(true, i, v.alpha[static_cast<std::size_t>(i - 1)], w, out);
        add_null_action(false, i, v.beta[static_cast<std::size_t>(i - 1)], w, out);
    }
    return out;
}

ExactMatrix vector_operator(const WittVector& v, Field field) {
    const int m = v.m();
    const std::size_t n = std::size_t{1} << m;
    ExactMatrix op(n, n);
    for (Mask c = 0; c < n; ++c) {
        Spinor img = act_vector(v, Spinor::basis(m, c, field));
        for (Mask r = 0; r < n; ++r) op(r, c) = img[r];
    }
    return op;
}

ExactMatrix fock_operator(const AlgebraElement& x) {
    const int m = x.m();
    const std::size_t n = std::size_t{1} << m;
    const Mask col = full_mask(m);
    ExactMatrix op(n, n);
    for (const auto& [key, c] : x.terms()) {
        const EFBIndex ix = key_index(key, m);
        op(ix.a, ix.b) = sign_s(ix.a, ix.b, col, m) > 0 ? c : -c;
    }
    return op;
}

AlgebraElement element_from_operator(const ExactMatrix& op, int m, Field field) {
    const std::size_t n = std::size_t{1} << m;
    if (op.rows() != n || op.cols() != n) throw DimensionError("operator size is not 2^m");
    const Mask col = full_mask(m);
    std::vector<AlgebraElement::Term> terms;
    for (Mask a = 0; a < n; ++a)
        for (Mask b = 0; b < n; ++b) {
            const Scalar& v = op(a, b);
            if (!v.is_zero()) terms.emplace_back(index_key({a, b}, m), sign_s(a, b, col, m) > 0 ? v : -v);
        }
    return AlgebraElement::from_terms(m, field, std::move(terms));
}

TNPBasis annihilator(const Spinor& w) {
    if (w.is_zero()) throw ZeroSpinorError("the zero spinor is annihilated by every vector");
    const int m = w.m();
    ExactMatrix sys(w.dim(), static_cast<std::size_t>(2 * m));
    for (int j = 0; j < 2 * m; ++j) {
        const int site = j % m + 1;
        Spinor img(m, w.field());
        add_null_action(j < m, site, Scalar(1), w, img);
        for (Mask r = 0; r < w.dim(); ++r) sys(r, static_cast<std::size_t>(j)) = img[r];
    }
    TNPBasis t{m, {}};
    for (auto& c : kernel_basis(sys)) t.vectors.push_back(WittVector::from_coords(c));
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i; j < t.dim(); ++j)
            if (!anticommutator_form(t.vectors[i], t.vectors[j]).is_zero())
                throw InconsistencyError("annihilator is not totally null");
    return t;
}

std::size_t nullity(const Spinor& w) { return annihilator(w).dim(); }

bool SpinorSubspace::contains(const Spinor& w) const {
    std::vector<Vector> both = basis;
    both.push_back(w.xi());
    return span_dimension(w.dim(), both) == dim();
}

ExactMatrix product_operator(const std::vector<WittVector>& vs, Field field) {
    if (vs.empty()) throw DimensionError("empty vector product");
    const int m = vs.front().m();
    const std::size_t n = std::size_t{1} << m;
    ExactMatrix op(n, n);
    for (Mask c = 0; c < n; ++c) {
        Spinor w = Spinor::basis(m, c, field);
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) w = act_vector(*it, w);
        for (Mask r = 0; r < n; ++r) op(r, c) = w[r];
    }
    return op;
}

SpinorSubspace annihilated_subspace(const std::vector<WittVector>& vs, Field field) {
    if (vs.empty()) throw DimensionError("annihilated subspace needs at least one vector");
    require_tnp(vs);
    const int m = vs.front().m();
    const std::size_t n = std::size_t{1} << m;

    ExactMatrix stacked(n * vs.size(), n);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        ExactMatrix op = vector_operator(vs[k], field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(k * n + r, c) = op(r, c);
    }
    SpinorSubspace kernel{m, kernel_basis(stacked)};

    ExactMatrix prod = product_operator(vs, field);
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(prod.column(c));
    SpinorSubspace image{m, canonical_basis(n, cols)};

    if (kernel != image) throw InconsistencyError("joint kernel and product image differ");
    return kernel;
}

Spinor random_spinor(Rng& rng, int m, Field field, bool all_nonzero) {
    Spinor s(m, field);
    for (Mask a = 0; a < s.dim(); ++a) s[a] = all_nonzero ? rng.nonzero_scalar(field) : rng.scalar(field);
    return s;
}

Spinor generic_spinor_sample(const std::vector<WittVector>& vs, Rng& rng, int m, Field field) {
    for (;;) {
        Spinor w = random_spinor(rng, m, field, true);
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) w = act_vector(*it, w);
        if (!w.is_zero()) return w;
    }
}

Scalar tnp_change_of_basis_scale(const std::vector<WittVector>& vs, const ExactMatrix& a, Field field) {
    require_tnp(vs);
    if (!a.is_square() || a.rows() != vs.size()) throw DimensionError("transform size does not match the plane");
    const int m = vs.front().m();
    std::vector<WittVector> moved;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        WittVector v(m);
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero()) v += vs[c].scaled(a(r, c));
        moved.push_back(std::move(v));
    }
    const Scalar d = det(a);
    ExactMatrix lhs = product_operator(moved, field);
    if (d.is_zero()) {
        if (!lhs.is_zero()) throw InconsistencyError("singular transform gave a nonzero product");
        throw SingularTransformError("transform is singular; the product map vanishes");
    }
    if (lhs != product_operator(vs, field).scaled(d))
        throw InconsistencyError("product does not scale by the determinant");
    return d;
}

AlgebraElement spinor_space_switch(const AlgebraElement& x, const std::vector<int>& sites) {
    std::vector<int> s = sites;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw RangeError("repeated site");
    AlgebraElement out = x;
    for (int i : s) out = out * embed(WittVector::gamma(x.m(), 2 * i - 1), x.field());
    return out;
}

}  // namespace efb
