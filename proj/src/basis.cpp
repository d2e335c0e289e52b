#include <bbf/basis.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace bbf
{

Rational binomial(int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

Rational factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r, mpz_class(1));
}

Rational falling_factorial(int n, int m)
{
    if (m < 0) {
        throw std::invalid_argument("falling_factorial: negative length");
    }
    Rational r(1);
    for (int i = 0; i < m; ++i) {
        r *= Rational(n - i);
    }
    return r;
}

Poly1 bernstein_basis(int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("bernstein_basis: negative degree");
    }
    if (k < 0 || k > n) {
        return {};
    }
    // C(n,k) x^k sum_i C(n-k,i) (-x)^i
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    const Rational lead = binomial(n, k);
    for (int i = 0; i <= n - k; ++i) {
        Rational c = lead * binomial(n - k, i);
        coeffs[static_cast<std::size_t>(k + i)] = (i % 2 == 0) ? c : -c;
    }
    return Poly1(std::move(coeffs));
}

Poly1 generalized_basis(int n, int k, const Rational &a, const Rational &b)
{
    if (a >= b) {
        throw std::invalid_argument("generalized_basis: requires a < b");
    }
    if (n < 0) {
        throw std::invalid_argument("generalized_basis: negative degree");
    }
    if (k < 0 || k > n) {
        return {};
    }
    const Poly1 x_minus_a({-a, Rational(1)});
    const Poly1 b_minus_x({b, Rational(-1)});
    return x_minus_a.pow(k) * b_minus_x.pow(n - k) * (binomial(n, k) / (b - a).pow(n));
}

BernsteinForm::BernsteinForm(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs))
{
    if (degree_ < 0) {
        throw std::invalid_argument("BernsteinForm: negative degree");
    }
    if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1) {
        throw std::invalid_argument("BernsteinForm: expected " + std::to_string(degree_ + 1) + " coefficients, got "
                                    + std::to_string(coeffs_.size()));
    }
}

BernsteinForm::BernsteinForm(std::vector<Rational> coeffs)
    : BernsteinForm(static_cast<int>(coeffs.size()) - 1, std::move(coeffs))
{
}

Rational eval_de_casteljau(const BernsteinForm &f, const Rational &x)
{
    std::vector<Rational> work = f.coeffs();
    const Rational one_minus_x = Rational(1) - x;
    for (std::size_t level = work.size(); level > 1; --level) {
        for (std::size_t i = 0; i + 1 < level; ++i) {
            work[i] = one_minus_x * work[i] + x * work[i + 1];
        }
    }
    return work.front();
}

Poly1 to_monomial(const BernsteinForm &f)
{
    Poly1 acc;
    for (int k = 0; k <= f.degree(); ++k) {
        const auto &c = f.coeffs()[static_cast<std::size_t>(k)];
        if (!c.is_zero()) {
            acc += bernstein_basis(f.degree(), k) * c;
        }
    }
    return acc;
}

BernsteinForm to_bernstein(const Poly1 &p, int n)
{
    if (n < 0) {
        throw std::invalid_argument("to_bernstein: negative degree");
    }
    if (p.degree() > n) {
        throw std::invalid_argument("to_bernstein: polynomial degree " + std::to_string(p.degree())
                                    + " exceeds target degree " + std::to_string(n));
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= p.degree(); ++l) {
        const Rational &pl = p.coeffs()[static_cast<std::size_t>(l)];
        if (pl.is_zero()) {
            continue;
        }
        const Rational scale = pl / binomial(n, l);
        for (int k = l; k <= n; ++k) {
            coeffs[static_cast<std::size_t>(k)] += scale * binomial(k, l);
        }
    }
    return BernsteinForm(n, std::move(coeffs));
}

} // namespace bbf
