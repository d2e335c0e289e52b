#ifndef BBF_EGF_HPP
#define BBF_EGF_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <bbf/poly.hpp>
#include <bbf/report.hpp>

namespace bbf
{

// sum_{n=0}^{N} a_n t^n / n! + O(t^{N+1}) with bivariate polynomial
// coefficients a_n in x and y. N is the order.
class TruncatedEGF
{
public:
    // Throws std::invalid_argument when coeffs is empty.
    explicit TruncatedEGF(std::vector<Poly2> coeffs);

    static TruncatedEGF zero(int order);
    static TruncatedEGF one(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Poly2> &coeffs() const noexcept { return coeffs_; }
    const Poly2 &operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    // Drops coefficients above the new order; new_order <= order().
    TruncatedEGF truncated(int new_order) const;

    TruncatedEGF &operator+=(const TruncatedEGF &o);
    TruncatedEGF &operator-=(const TruncatedEGF &o);
    // Coefficient-wise multiplication by a t-independent factor.
    TruncatedEGF &operator*=(const Poly2 &c);
    TruncatedEGF &operator*=(const Rational &c);

    friend TruncatedEGF operator+(TruncatedEGF a, const TruncatedEGF &b) { return a += b; }
    friend TruncatedEGF operator-(TruncatedEGF a, const TruncatedEGF &b) { return a -= b; }
    friend TruncatedEGF operator*(TruncatedEGF a, const Poly2 &c) { return a *= c; }
    friend TruncatedEGF operator*(TruncatedEGF a, const Rational &c) { return a *= c; }

    friend bool operator==(const TruncatedEGF &, const TruncatedEGF &) = default;

private:
    std::vector<Poly2> coeffs_;
};

// f_k(x,t) from the definition: a_n = B_k^n(x). Negative k gives zero.
TruncatedEGF egf_bernstein(int k, int order);
// f_k(x,t) built as x^k * (t^k/k!) * e^((1-x)t) through the product rule.
TruncatedEGF egf_bernstein_closed_form(int k, int order);
// e^(c t) for c of total degree <= 1.
TruncatedEGF egf_exp_affine(const Poly2 &c, int order);
// t^k / k!: the single coefficient a_k = 1.
TruncatedEGF egf_t_power(int k, int order);

// Binomial convolution c_n = sum_j C(n,j) a_j b_{n-j}; orders must match.
TruncatedEGF egf_mul(const TruncatedEGF &a, const TruncatedEGF &b);
// t -> s t for s of total degree <= 1: a_n <- a_n s^n.
TruncatedEGF egf_substitute_t(const TruncatedEGF &a, const Poly2 &s);
// x -> arg inside every coefficient.
TruncatedEGF egf_substitute_x(const TruncatedEGF &a, const Poly2 &arg);
TruncatedEGF egf_swap_xy(const TruncatedEGF &a);
TruncatedEGF egf_diff_x(const TruncatedEGF &a, int l);
// Index shift a'_m = a_{m+v}; the result has order N - v. Requires v <= N.
TruncatedEGF egf_diff_t(const TruncatedEGF &a, int v);

struct EgfComparison {
    bool equal = true;
    std::optional<int> index;
    // a_index - b_index when unequal.
    Poly2 difference;
};

// Orders must match.
EgfComparison egf_equal(const TruncatedEGF &a, const TruncatedEGF &b);

enum class FunctionalEquation { sum, alt, g1, g2, g3, sub, mono, diffx, difft, prod, xy };

IdentityId identity_id(FunctionalEquation fe);
std::optional<FunctionalEquation> functional_equation_from_id(IdentityId id);
// Accepts catalog names such as "FE-SUM"; throws std::invalid_argument otherwise.
FunctionalEquation functional_equation_from_string(std::string_view name);
// Parameter names the equation expects, in order.
std::vector<std::string> functional_equation_params(FunctionalEquation fe);

// Builds both sides from the operations above and compares them exactly
// through the given order. Parameters: FE-G*/FE-XY take k, FE-SUB j,
// FE-MONO l, FE-DIFFX k and l, FE-DIFFT k and v, FE-PROD k1 and k2; FE-SUM
// and FE-ALT take none.
IdentityReport check_functional_equation(FunctionalEquation fe, const Params &params, int order,
                                         Mutation mutation = Mutation::none);

// Definition against closed form: egf_bernstein(k) vs egf_bernstein_closed_form(k).
IdentityReport check_egf_closed_form(int k, int order, Mutation mutation = Mutation::none);

} // namespace bbf

#endif
