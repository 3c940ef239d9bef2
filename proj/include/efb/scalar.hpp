#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace efb {

// Q: rationals. Qi: Gaussian rationals Q(i).
enum class Field { Q, Qi };

std::string_view field_name(Field f);
Field parse_field(std::string_view s);

// Exact element of Q or Q(i). Rational parts are kept in canonical form
// (positive denominator, coprime numerator); a real scalar has im() == 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class re) : re_(std::move(re)) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(long num, long den);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    // Accepts "p", "p/q", "p/q+r/s i", "p/q-r/s i" and "r/s i".
    static Scalar parse(std::string_view text);
    std::string str() const;

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }

    // Complex conjugate; identity on real scalars.
    Scalar star() const;
    Scalar inverse() const;
    // |x|^2, a nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    // this += a * b, avoiding temporaries on the real fast path.
    void add_product(const Scalar& a, const Scalar& b);
    void sub_product(const Scalar& a, const Scalar& b);
    void negate();

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class re_;
    mpq_class im_;
};

}  // namespace efb
