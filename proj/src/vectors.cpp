#include "efb/vectors.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "efb/errors.hpp"

namespace efb {

WittVector::WittVector(std::vector<Scalar> a, std::vector<Scalar> b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.size() != beta.size()) throw DimensionError("alpha and beta lengths differ");
}

WittVector WittVector::p(int m, int i) {
    if (i < 1 || i > m) throw RangeError("site index out of range");
    WittVector v(m);
    v.alpha[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

WittVector WittVector::q(int m, int i) {
    if (i < 1 || i > m) throw RangeError("site index out of range");
    WittVector v(m);
    v.beta[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

WittVector WittVector::gamma(int m, int i) {
    if (i < 1 || i > 2 * m) throw RangeError("generator index out of range");
    const int site = (i + 1) / 2;
    WittVector v = p(m, site);
    v.beta[static_cast<std::size_t>(site - 1)] = (i % 2 == 1) ? 1 : -1;
    return v;
}

bool WittVector::is_zero() const {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!alpha[i].is_zero() || !beta[i].is_zero()) return false;
    return true;
}

bool WittVector::is_real() const {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!alpha[i].is_real() || !beta[i].is_real()) return false;
    return true;
}

Vector WittVector::coords() const {
    Vector c(alpha);
    c.insert(c.end(), beta.begin(), beta.end());
    return c;
}

WittVector WittVector::from_coords(const Vector& c) {
    if (c.size() % 2 != 0) throw DimensionError("odd coordinate count");
    const auto half = static_cast<std::ptrdiff_t>(c.size() / 2);
    return WittVector(Vector(c.begin(), c.begin() + half), Vector(c.begin() + half, c.end()));
}

WittVector& WittVector::operator+=(const WittVector& o) {
    if (m() != o.m()) throw DimensionError("vectors of different m");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] += o.alpha[i];
        beta[i] += o.beta[i];
    }
    return *this;
}

WittVector& WittVector::operator-=(const WittVector& o) {
    if (m() != o.m()) throw DimensionError("vectors of different m");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] -= o.alpha[i];
        beta[i] -= o.beta[i];
    }
    return *this;
}

WittVector WittVector::scaled(const Scalar& c) const {
    WittVector v(*this);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        v.alpha[i] *= c;
        v.beta[i] *= c;
    }
    return v;
}

AlgebraElement embed(const WittVector& v, Field field) {
    const int m = v.m();
    check_m(m);
    std::vector<AlgebraElement::Term> terms;
    for (int i = 1; i <= m; ++i) {
        const Scalar& al = v.alpha[static_cast<std::size_t>(i - 1)];
        const Scalar& be = v.beta[static_cast<std::size_t>(i - 1)];
        const Mask bit = Mask{1} << (i - 1);
        for (Mask rest = 0; rest <= full_mask(m); ++rest) {
            if (rest & bit) continue;
            // p_i: a_i = -1, b_i = +1; q_i: a_i = +1, b_i = -1; identity elsewhere
            if (!al.is_zero()) terms.emplace_back(index_key({rest | bit, rest}, m), al);
            if (!be.is_zero()) terms.emplace_back(index_key({rest, rest | bit}, m), be);
        }
    }
    return AlgebraElement::from_terms(m, field, std::move(terms));
}

AlgebraElement gamma_element(int m, int i, Field field) { return embed(WittVector::gamma(m, i), field); }

Scalar anticommutator_form(const WittVector& v, const WittVector& u) {
    if (v.m() != u.m()) throw DimensionError("vectors of different m");
    Scalar s;
    for (std::size_t i = 0; i < v.alpha.size(); ++i) {
        s.add_product(v.alpha[i], u.beta[i]);
        s.add_product(v.beta[i], u.alpha[i]);
    }
    return s;
}

Scalar square(const WittVector& v) {
    Scalar s;
    for (std::size_t i = 0; i < v.alpha.size(); ++i) s.add_product(v.alpha[i], v.beta[i]);
    return s;
}

bool is_null(const WittVector& v) { return square(v).is_zero(); }

VectorClass classify(const WittVector& v) { return is_null(v) ? VectorClass::V0 : VectorClass::V1; }

WittVector conj_vector(const WittVector& v) {
    WittVector c(v.m());
    for (std::size_t i = 0; i < v.alpha.size(); ++i) {
        c.alpha[i] = v.beta[i].star();
        c.beta[i] = v.alpha[i].star();
    }
    return c;
}

Scalar hermitian_form(const WittVector& x, const WittVector& y) { return anticommutator_form(x, conj_vector(y)); }

AlgebraElement delta_element(int m, int sign) {
    AlgebraElement d = AlgebraElement::identity(m);
    for (int i = 1; i <= m; ++i) {
        WittVector v = WittVector::p(m, i);
        v.beta[static_cast<std::size_t>(i - 1)] = sign;
        d = d * embed(v);
    }
    return d;
}

namespace {

struct CPair {
    AlgebraElement c;
    AlgebraElement inv;
};

const CPair& c_pair(int m) {
    check_m(m);
    static std::array<std::unique_ptr<CPair>, kMaxM + 1> cache;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)], [m] {
        const bool odd = m % 2 == 1;
        AlgebraElement c = delta_element(m, odd ? 1 : -1);
        const long e = odd ? static_cast<long>(m) * (m - 1) / 2 : static_cast<long>(m) * (m + 1) / 2;
        AlgebraElement inv = c.scaled(Scalar(e % 2 == 0 ? 1 : -1));
        if (c * inv != AlgebraElement::identity(m)) throw InconsistencyError("C times its inverse is not 1");
        for (int i = 1; i <= m; ++i)
            if (c * embed(WittVector::p(m, i)) * inv != embed(WittVector::q(m, i)))
                throw InconsistencyError("C does not conjugate p_i to q_i");
        cache[static_cast<std::size_t>(m)] = std::make_unique<CPair>(CPair{std::move(c), std::move(inv)});
    });
    return *cache[static_cast<std::size_t>(m)];
}

}  // namespace

const AlgebraElement& C_element(int m) { return c_pair(m).c; }
const AlgebraElement& C_inverse(int m) { return c_pair(m).inv; }

AlgebraElement conj_element(const AlgebraElement& x) {
    const CPair& cp = c_pair(x.m());
    if (x.field() == Field::Q) return cp.c * x * cp.inv;
    return cp.c.with_field(Field::Qi) * x.star() * cp.inv.with_field(Field::Qi);
}

std::optional<TNPBasis> is_tnp(const std::vector<WittVector>& vs) {
    if (vs.empty()) return TNPBasis{};
    const int m = vs.front().m();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].m() != m) throw DimensionError("vectors of different m");
        for (std::size_t j = i; j < vs.size(); ++j)
            if (!anticommutator_form(vs[i], vs[j]).is_zero()) return std::nullopt;
    }
    std::vector<Vector> coords;
    for (const auto& v : vs) coords.push_back(v.coords());
    TNPBasis t{m, {}};
    for (auto& c : canonical_basis(static_cast<std::size_t>(2 * m), coords))
        t.vectors.push_back(WittVector::from_coords(c));
    return t;
}

TNPBasis require_tnp(const std::vector<WittVector>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].m() != vs.front().m()) throw DimensionError("vectors of different m");
        for (std::size_t j = i; j < vs.size(); ++j)
            if (!anticommutator_form(vs[i], vs[j]).is_zero()) throw NotTotallyNullError(i, j);
    }
    return *is_tnp(vs);
}

TNPFrame normalize_tnp(const std::vector<WittVector>& vs) {
    require_tnp(vs);
    TNPFrame f;
    std::vector<Scalar> norms;
    for (const auto& v : vs) {
        WittVector w = v;
        for (std::size_t j = 0; j < f.qs.size(); ++j)
            w -= f.qs[j].scaled(hermitian_form(v, f.qs[j]) / norms[j]);
        if (w.is_zero()) throw DependentVectorsError("totally null vectors are linearly dependent");
        Vector c = w.coords();
        for (const auto& x : c)
            if (!x.is_zero()) {
                w = w.scaled(x.inverse());
                break;
            }
        Scalar n = hermitian_form(w, w);
        f.ps.push_back(conj_vector(w).scaled(n.inverse()));
        f.qs.push_back(std::move(w));
        norms.push_back(std::move(n));
    }
    return f;
}

TNPBasis complete_tnp(const TNPBasis& t) {
    const int m = t.m;
    check_m(m);
    // x = Σ β_j q_j with {x, v} = Σ β_j α_v,j = 0 for all v in T
    ExactMatrix rows(t.dim(), static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < t.dim(); ++r)
        for (int j = 0; j < m; ++j) rows(r, static_cast<std::size_t>(j)) = t.vectors[r].alpha[static_cast<std::size_t>(j)];
    std::vector<WittVector> all = t.vectors;
    if (t.dim() == 0) {
        for (int j = 1; j <= m; ++j) all.push_back(WittVector::q(m, j));
    } else {
        for (auto& beta : kernel_basis(rows)) all.emplace_back(std::vector<Scalar>(static_cast<std::size_t>(m)), beta);
    }
    TNPBasis out = require_tnp(all);
    if (out.dim() != static_cast<std::size_t>(m)) throw InconsistencyError("completion is not maximal");
    return out;
}

}  // namespace efb
