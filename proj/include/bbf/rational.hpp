#ifndef BBF_RATIONAL_HPP
#define BBF_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bbf
{

// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = static_cast<long>(v);
        } else {
            value_ = static_cast<unsigned long>(v);
        }
    }

    // Throws std::domain_error on a zero denominator.
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(mpq_class v);

    // Accepts "p", "p/q", and decimal forms such as "0.25", "-3.5e-2", "1e-9".
    // The decimal form is converted exactly. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpq_class &value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    // Negative exponents invert; 0^0 is 1.
    Rational pow(long e) const;
    double to_double() const { return value_.get_d(); }

    // Lossless "p/q" form; integers print as "p/1".
    std::string str() const;

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

} // namespace bbf

#endif
