#include "efb/matrix_rep.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "efb/errors.hpp"

namespace efb {

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
    MonomialMatrix id;
    id.row.resize(n);
    id.sign.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) id.row[i] = static_cast<std::uint32_t>(i);
    return id;
}

MonomialMatrix MonomialMatrix::from_dense(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("monomial matrix must be square");
    MonomialMatrix out;
    out.row.assign(m.cols(), 0);
    out.sign.assign(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Scalar& v = m(r, c);
            if (v.is_zero()) continue;
            if (out.sign[c] != 0 || !(v == Scalar(1) || v == Scalar(-1)))
                throw InconsistencyError("matrix is not a signed permutation");
            out.row[c] = static_cast<std::uint32_t>(r);
            out.sign[c] = v == Scalar(1) ? 1 : -1;
        }
        if (out.sign[c] == 0) throw InconsistencyError("matrix is not a signed permutation");
    }
    return out;
}

ExactMatrix MonomialMatrix::dense() const {
    ExactMatrix d(size(), size());
    for (std::size_t c = 0; c < size(); ++c) d(row[c], c) = sign[c];
    return d;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
    if (size() != o.size()) throw DimensionError("monomial product size mismatch");
    MonomialMatrix p;
    p.row.resize(size());
    p.sign.resize(size());
    for (std::size_t c = 0; c < size(); ++c) {
        p.row[c] = row[o.row[c]];
        p.sign[c] = static_cast<std::int8_t>(sign[o.row[c]] * o.sign[c]);
    }
    return p;
}

MonomialMatrix MonomialMatrix::operator-() const {
    MonomialMatrix n(*this);
    for (auto& s : n.sign) s = static_cast<std::int8_t>(-s);
    return n;
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix k;
    const std::size_t nb = b.size();
    k.row.resize(a.size() * nb);
    k.sign.resize(a.size() * nb);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            k.row[i * nb + j] = static_cast<std::uint32_t>(a.row[i] * nb + b.row[j]);
            k.sign[i * nb + j] = static_cast<std::int8_t>(a.sign[i] * b.sign[j]);
        }
    return k;
}

namespace {

MonomialMatrix block(std::array<int, 4> rowmajor) {
    ExactMatrix m(2, 2, {rowmajor[0], rowmajor[1], rowmajor[2], rowmajor[3]});
    return MonomialMatrix::from_dense(m);
}

// tensor index -> signature mask: site i is tensor bit m-i, complemented
std::uint32_t relabel(std::uint32_t t, int m) {
    std::uint32_t mask = 0;
    for (int i = 1; i <= m; ++i)
        if (!((t >> (m - i)) & 1U)) mask |= 1U << (i - 1);
    return mask;
}

}  // namespace

RepContext::RepContext(int m) : m_(m) {
    check_m(m);
    const MonomialMatrix g1 = block({0, 1, 1, 0});
    const MonomialMatrix g2 = block({0, 1, -1, 0});
    const MonomialMatrix k = g1 * g2;
    const MonomialMatrix one = MonomialMatrix::identity(2);
    const std::size_t n = dim();

    for (int i = 1; i <= m; ++i) {
        for (const auto* base : {&g1, &g2}) {
            MonomialMatrix g = MonomialMatrix::identity(1);
            for (int j = 1; j < i; ++j) g = kron(g, k);
            g = kron(g, *base);
            for (int j = i + 1; j <= m; ++j) g = kron(g, one);
            tensor_.push_back(std::move(g));
        }
    }

    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t t = 0; t < n; ++t) perm[t] = relabel(t, m);
    for (const auto& g : tensor_) {
        MonomialMatrix r;
        r.row.resize(n);
        r.sign.resize(n);
        for (std::uint32_t t = 0; t < n; ++t) {
            r.row[perm[t]] = perm[g.row[t]];
            r.sign[perm[t]] = g.sign[t];
        }
        gens_.push_back(std::move(r));
    }

    const MonomialMatrix id = MonomialMatrix::identity(n);
    for (int i = 1; i <= 2 * m; ++i) {
        const MonomialMatrix sq = generator(i) * generator(i);
        if (sq != (i % 2 == 1 ? id : -id)) throw InconsistencyError("generator square has wrong sign");
        for (int j = i + 1; j <= 2 * m; ++j)
            if (generator(i) * generator(j) != -(generator(j) * generator(i)))
                throw InconsistencyError("generators do not anticommute");
    }

    sigma_.assign(n * n, 0);
    for (Mask a = 0; a < n; ++a) {
        for (Mask b = 0; b < n; ++b) {
            const EFBWord w = word_of_index({a, b}, m);
            std::uint32_t c = b;
            int s = 1;
            for (int site = m; site >= 1 && s != 0; --site) {
                const Letter l = w[static_cast<std::size_t>(site - 1)];
                // rightmost generator acts first
                std::array<bool, 2> seq{};
                int len = 0;
                switch (l) {
                    case Letter::QP: seq = {true, false}; len = 2; break;   // apply p then q
                    case Letter::PQ: seq = {false, true}; len = 2; break;   // apply q then p
                    case Letter::Q: seq = {false, false}; len = 1; break;
                    case Letter::P: seq = {true, false}; len = 1; break;
                }
                for (int k2 = 0; k2 < len && s != 0; ++k2) {
                    NullImage im = apply_null(seq[static_cast<std::size_t>(k2)], site, c);
                    s *= im.sign;
                    c = im.row;
                }
            }
            if (s == 0 || c != a) throw InconsistencyError("monomial does not map to a matrix unit");
            sigma_[(std::size_t{a} << m) | b] = static_cast<std::int8_t>(s);
        }
    }
}

RepContext::NullImage RepContext::apply_null(bool is_p, int site, std::uint32_t c) const {
    const MonomialMatrix& ga = generator(2 * site - 1);
    const MonomialMatrix& gb = generator(2 * site);
    // p = (γ_{2i-1} + γ_{2i})/2, q = (γ_{2i-1} - γ_{2i})/2
    const int sa = ga.sign[c];
    const int sb = is_p ? gb.sign[c] : -gb.sign[c];
    if (ga.row[c] != gb.row[c]) throw InconsistencyError("null generator is not monomial");
    const int total = sa + sb;
    if (total == 0) return {0, 0};
    return {ga.row[c], total / 2};
}

const MonomialMatrix& RepContext::tensor_generator(int i) const {
    if (i < 1 || i > 2 * m_) throw RangeError("generator index out of range");
    return tensor_[static_cast<std::size_t>(i - 1)];
}

const MonomialMatrix& RepContext::generator(int i) const {
    if (i < 1 || i > 2 * m_) throw RangeError("generator index out of range");
    return gens_[static_cast<std::size_t>(i - 1)];
}

ExactMatrix RepContext::generator_matrix(int i) const { return generator(i).dense(); }

ExactMatrix RepContext::p_matrix(int i) const {
    return (generator_matrix(2 * i - 1) + generator_matrix(2 * i)).scaled(Scalar(1, 2));
}

ExactMatrix RepContext::q_matrix(int i) const {
    return (generator_matrix(2 * i - 1) - generator_matrix(2 * i)).scaled(Scalar(1, 2));
}

ExactMatrix RepContext::to_matrix(const AlgebraElement& x) const {
    if (x.m() != m_) throw DimensionError("element and representation differ in m");
    ExactMatrix mat(dim(), dim());
    for (const auto& [key, c] : x.terms()) {
        const EFBIndex ix = key_index(key, m_);
        mat(ix.a, ix.b) = sigma(ix.a, ix.b) > 0 ? c : -c;
    }
    return mat;
}

AlgebraElement RepContext::from_matrix(const ExactMatrix& mat, Field field) const {
    if (mat.rows() != dim() || mat.cols() != dim()) throw DimensionError("matrix size does not match m");
    std::vector<AlgebraElement::Term> terms;
    for (Mask a = 0; a < dim(); ++a)
        for (Mask b = 0; b < dim(); ++b) {
            const Scalar& v = mat(a, b);
            if (!v.is_zero()) terms.emplace_back(index_key({a, b}, m_), sigma(a, b) > 0 ? v : -v);
        }
    return AlgebraElement::from_terms(m_, field, std::move(terms));
}

const RepContext& rep_context(int m) {
    check_m(m);
    static std::array<std::unique_ptr<RepContext>, kMaxM + 1> ctx;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)],
                   [m] { ctx[static_cast<std::size_t>(m)] = std::make_unique<RepContext>(m); });
    return *ctx[static_cast<std::size_t>(m)];
}

}  // namespace efb
