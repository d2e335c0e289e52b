#ifndef BBF_BASIS_HPP
#define BBF_BASIS_HPP

#include <vector>

#include <bbf/poly.hpp>
#include <bbf/rational.hpp>

namespace bbf
{

// C(n, k), zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
Rational binomial(int n, int k);
Rational factorial(int n);
// (n)_m = n (n-1) ... (n-m+1), with (n)_0 = 1.
Rational falling_factorial(int n, int m);

// C(n,k) x^k (1-x)^(n-k) in the monomial basis. Out-of-range k gives the zero
// polynomial; identities with shifted indices rely on this.
Poly1 bernstein_basis(int n, int k);

// C(n,k) (x-a)^k (b-x)^(n-k) / (b-a)^n on [a, b]. Requires a < b.
Poly1 generalized_basis(int n, int k, const Rational &a, const Rational &b);

// Polynomial of degree <= n given by its coefficients over {B_0^n, ..., B_n^n}.
class BernsteinForm
{
public:
    // coeffs.size() must equal degree + 1.
    BernsteinForm(int degree, std::vector<Rational> coeffs);
    // Degree is coeffs.size() - 1; coeffs must be non-empty.
    explicit BernsteinForm(std::vector<Rational> coeffs);

    int degree() const noexcept { return degree_; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const BernsteinForm &, const BernsteinForm &) = default;

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

// Triangular convex-combination evaluation, independent of the monomial
// expansion.
Rational eval_de_casteljau(const BernsteinForm &f, const Rational &x);

Poly1 to_monomial(const BernsteinForm &f);

// Uses x^l = sum_{k=l}^{n} C(k,l)/C(n,l) B_k^n(x). Throws std::invalid_argument
// when deg(p) > n.
BernsteinForm to_bernstein(const Poly1 &p, int n);

} // namespace bbf

#endif
