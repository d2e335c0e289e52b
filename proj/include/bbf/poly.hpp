#ifndef BBF_POLY_HPP
#define BBF_POLY_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <bbf/rational.hpp>

namespace bbf
{

// Dense univariate polynomial in x. Coefficient i multiplies x^i. Trailing
// zeros are always trimmed, so the zero polynomial has no coefficients and
// structural equality is polynomial equality.
class Poly1
{
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs);

    static Poly1 constant(const Rational &c);
    static Poly1 x();
    static Poly1 monomial(const Rational &c, int power);

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;

    Rational eval(const Rational &x) const;
    Poly1 derivative(int order = 1) const;
    Poly1 pow(int e) const;
    // this(inner(x))
    Poly1 compose(const Poly1 &inner) const;

    Poly1 &operator+=(const Poly1 &o);
    Poly1 &operator-=(const Poly1 &o);
    Poly1 &operator*=(const Rational &c);

    friend Poly1 operator+(Poly1 a, const Poly1 &b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1 &b) { return a -= b; }
    friend Poly1 operator-(Poly1 a) { return a *= Rational(-1); }
    friend Poly1 operator*(const Poly1 &a, const Poly1 &b);
    friend Poly1 operator*(Poly1 a, const Rational &c) { return a *= c; }
    friend Poly1 operator*(const Rational &c, Poly1 a) { return a *= c; }

    friend bool operator==(const Poly1 &, const Poly1 &) = default;

    std::string str() const;
    friend std::ostream &operator<<(std::ostream &os, const Poly1 &p) { return os << p.str(); }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Dense bivariate polynomial in x and y. Row i holds the coefficients of
// x^i y^j for j = 0.. . Each row is trimmed and trailing empty rows are
// dropped, giving a canonical form.
class Poly2
{
public:
    Poly2() = default;
    explicit Poly2(std::vector<std::vector<Rational>> rows);

    static Poly2 constant(const Rational &c);
    static Poly2 x();
    static Poly2 y();
    static Poly2 monomial(const Rational &c, int x_power, int y_power);
    static Poly2 from_x(const Poly1 &p);
    static Poly2 from_y(const Poly1 &p);

    bool is_zero() const noexcept { return rows_.empty(); }
    // -1 for the zero polynomial.
    int degree_x() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    int degree_y() const noexcept;
    int total_degree() const noexcept;
    Rational coeff(int i, int j) const;
    const std::vector<std::vector<Rational>> &rows() const noexcept { return rows_; }

    Rational eval(const Rational &x, const Rational &y) const;
    Poly1 specialize_y(const Rational &y) const;
    Poly2 diff_x(int order = 1) const;
    Poly2 pow(int e) const;
    Poly2 swap_xy() const;
    // Replaces x by arg: sum c_ij arg^i y^j.
    Poly2 substitute_x(const Poly2 &arg) const;

    Poly2 &operator+=(const Poly2 &o);
    Poly2 &operator-=(const Poly2 &o);
    Poly2 &operator*=(const Rational &c);

    friend Poly2 operator+(Poly2 a, const Poly2 &b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2 &b) { return a -= b; }
    friend Poly2 operator-(Poly2 a) { return a *= Rational(-1); }
    friend Poly2 operator*(const Poly2 &a, const Poly2 &b);
    friend Poly2 operator*(Poly2 a, const Rational &c) { return a *= c; }
    friend Poly2 operator*(const Rational &c, Poly2 a) { return a *= c; }

    friend bool operator==(const Poly2 &, const Poly2 &) = default;

    std::string str() const;
    friend std::ostream &operator<<(std::ostream &os, const Poly2 &p) { return os << p.str(); }

private:
    void trim();

    std::vector<std::vector<Rational>> rows_;
};

// p(arg) for a bivariate argument.
Poly2 substitute(const Poly1 &p, const Poly2 &arg);

// Exponents (i, j) of the lowest differing monomial, ordered by x power then y
// power; nullopt when a == b.
std::optional<std::pair<int, int>> first_difference(const Poly2 &a, const Poly2 &b);
std::optional<int> first_difference(const Poly1 &a, const Poly1 &b);

} // namespace bbf

#endif
