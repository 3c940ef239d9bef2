#include "efb/algebra.hpp"

#include <algorithm>

#include "efb/errors.hpp"

namespace efb {

AlgebraElement::AlgebraElement(int m, Field field) : m_(m), field_(field) { check_m(m); }

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
    if (m_ != o.m_) throw DimensionError("elements of different m");
    if (field_ != o.field_) throw FieldError("elements over different fields");
}

void AlgebraElement::check_scalar(const Scalar& c) const {
    if (field_ == Field::Q && !c.is_real()) throw FieldError("complex coefficient in a real element");
}

AlgebraElement AlgebraElement::monomial(int m, EFBIndex x, Scalar c, Field field) {
    AlgebraElement e(m, field);
    if (x.a > full_mask(m) || x.b > full_mask(m)) throw RangeError("signature has bits beyond m");
    e.check_scalar(c);
    if (!c.is_zero()) e.terms_.emplace_back(index_key(x, m), std::move(c));
    return e;
}

AlgebraElement AlgebraElement::from_terms(int m, Field field, std::vector<Term> terms) {
    AlgebraElement e(m, field);
    const std::uint32_t limit = std::uint32_t{1} << (2 * m);
    for (const auto& t : terms) {
        if (t.first >= limit) throw RangeError("term key beyond m");
        e.check_scalar(t.second);
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first)
            e.terms_.back().second += t.second;
        else
            e.terms_.push_back(std::move(t));
    }
    std::erase_if(e.terms_, [](const Term& x) { return x.second.is_zero(); });
    return e;
}

AlgebraElement AlgebraElement::scalar(int m, const Scalar& c, Field field) {
    return identity(m, field).scaled(c);
}

AlgebraElement AlgebraElement::identity(int m, Field field) {
    AlgebraElement e(m, field);
    for (Mask a = 0; a <= full_mask(m); ++a) e.terms_.emplace_back(index_key({a, a}, m), Scalar(1));
    return e;
}

AlgebraElement AlgebraElement::volume_gamma(int m, Field field) {
    AlgebraElement e(m, field);
    for (Mask a = 0; a <= full_mask(m); ++a)
        e.terms_.emplace_back(index_key({a, a}, m), Scalar(parity_sign(a)));
    return e;
}

Scalar AlgebraElement::coeff(EFBIndex x) const {
    const std::uint32_t k = index_key(x, m_);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::uint32_t key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return Scalar(0);
}

AlgebraElement AlgebraElement::with_field(Field f) const {
    AlgebraElement e(*this);
    e.field_ = f;
    for (const auto& t : terms_) e.check_scalar(t.second);
    return e;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    check_scalar(c);
    AlgebraElement e(m_, field_);
    if (c.is_zero()) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.second *= c;
    return e;
}

AlgebraElement AlgebraElement::star() const {
    AlgebraElement e(*this);
    for (auto& t : e.terms_) t.second = t.second.star();
    return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            i->second += j->second;
            if (!i->second.is_zero()) out.push_back(std::move(*i));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e(*this);
    for (auto& t : e.terms_) t.second.negate();
    return e;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_compatible(y);
    const int m = x.m_;
    const std::size_t n = std::size_t{1} << m;
    const Mask low = full_mask(m);
    AlgebraElement out(m, x.field_);
    if (x.terms_.empty() || y.terms_.empty()) return out;

    // y's terms grouped by row b: [row_start[b], row_start[b+1])
    std::vector<std::size_t> row_start(n + 1, 0);
    for (const auto& t : y.terms_) ++row_start[(t.first >> m) + 1];
    for (std::size_t b = 0; b < n; ++b) row_start[b + 1] += row_start[b];

    std::vector<Scalar> acc(n);
    std::vector<char> touched(n, 0);
    std::vector<Mask> touched_list;
    touched_list.reserve(n);

    std::size_t i = 0;
    while (i < x.terms_.size()) {
        const Mask a = x.terms_[i].first >> m;
        std::size_t row_end = i;
        while (row_end < x.terms_.size() && (x.terms_[row_end].first >> m) == a) ++row_end;
        for (std::size_t k = i; k < row_end; ++k) {
            const Mask b = x.terms_[k].first & low;
            const Scalar& xi = x.terms_[k].second;
            for (std::size_t l = row_start[b]; l < row_start[b + 1]; ++l) {
                const Mask d = y.terms_[l].first & low;
                if (!touched[d]) {
                    touched[d] = 1;
                    touched_list.push_back(d);
                }
                if (sign_s(a, b, d, m) > 0)
                    acc[d].add_product(xi, y.terms_[l].second);
                else
                    acc[d].sub_product(xi, y.terms_[l].second);
            }
        }
        std::sort(touched_list.begin(), touched_list.end());
        for (Mask d : touched_list) {
            if (!acc[d].is_zero()) out.terms_.emplace_back((a << m) | d, std::move(acc[d]));
            acc[d] = Scalar();
            touched[d] = 0;
        }
        touched_list.clear();
        i = row_end;
    }
    return out;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

Scalar trace(const AlgebraElement& x) {
    Scalar t;
    const int m = x.m();
    for (const auto& [k, c] : x.terms())
        if ((k >> m) == (k & full_mask(m))) t += c;
    return t;
}

AlgebraElement main_automorphism(const AlgebraElement& x) {
    std::vector<AlgebraElement::Term> terms = x.terms();
    for (auto& t : terms)
        if (global_parity(key_index(t.first, x.m())) < 0) t.second.negate();
    return AlgebraElement::from_terms(x.m(), x.field(), std::move(terms));
}

}  // namespace efb
