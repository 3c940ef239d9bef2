#include "efb/scalar.hpp"

#include <ostream>
#include <regex>

#include "efb/errors.hpp"

namespace efb {

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(std::string_view s) {
    if (s == "Q") return Field::Q;
    if (s == "Qi") return Field::Qi;
    throw ParseError("unknown field '" + std::string(s) + "' (expected Q or Qi)");
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

namespace {

mpq_class parse_rational(std::string text) {
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(10); }

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    static const std::regex real_re(R"(^\s*([+-]?\d+(?:/\d+)?)\s*$)");
    static const std::regex cplx_re(
        R"(^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)?\s*\*?\s*i\s*$)");
    static const std::regex imag_re(R"(^\s*([+-]?)(\d+(?:/\d+)?)?\s*\*?\s*i\s*$)");
    std::string s(text);
    std::smatch mt;
    if (std::regex_match(s, mt, real_re)) return Scalar(parse_rational(mt[1].str()));
    if (std::regex_match(s, mt, cplx_re)) {
        mpq_class im = mt[3].matched ? parse_rational(mt[3].str()) : mpq_class(1);
        if (mt[2].str() == "-") im = -im;
        return Scalar(parse_rational(mt[1].str()), im);
    }
    if (std::regex_match(s, mt, imag_re)) {
        mpq_class im = mt[2].matched ? parse_rational(mt[2].str()) : mpq_class(1);
        if (mt[1].str() == "-") im = -im;
        return Scalar(mpq_class(0), im);
    }
    throw ParseError("bad scalar '" + s + "'");
}

std::string Scalar::str() const {
    if (is_real()) return rational_str(re_);
    std::string out = rational_str(re_);
    if (sgn(im_) < 0) {
        out += "-" + rational_str(-im_);
    } else {
        out += "+" + rational_str(im_);
    }
    return out + " i";
}

Scalar Scalar::star() const {
    if (is_real()) return *this;
    return Scalar(re_, -im_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.is_real() || !is_real()) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.is_real() || !is_real()) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero scalar");
    if (is_real() && o.is_real()) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.negate();
    return r;
}

void Scalar::negate() {
    mpq_neg(re_.get_mpq_t(), re_.get_mpq_t());
    if (!is_real()) mpq_neg(im_.get_mpq_t(), im_.get_mpq_t());
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_real() && b.is_real()) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), tmp.get_mpq_t());
        return;
    }
    *this += a * b;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
    if (a.is_real() && b.is_real()) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        mpq_sub(re_.get_mpq_t(), re_.get_mpq_t(), tmp.get_mpq_t());
        return;
    }
    *this -= a * b;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace efb
