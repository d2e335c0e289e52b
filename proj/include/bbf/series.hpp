#ifndef BBF_SERIES_HPP
#define BBF_SERIES_HPP

#include <string_view>

#include <bbf/rational.hpp>
#include <bbf/report.hpp>

namespace bbf
{

// Infinite series obtained by Laplace-transforming the generating functions.
//   tg3: sum_{n>=k} B_k^n(x)              = 1/x          for 0 < x < 1
//   tg4: sum_{n>=k} (-1)^n B_k^n(x)/x^(n+1) = (-1)^k x^k   for 1/2 < x <= 1
// The domains come from the ratio test; outside them the series diverge (or
// the terms are not sign-controlled) and requests throw std::domain_error.
enum class SeriesId { tg3, tg4 };

std::string_view to_string(SeriesId id);
IdentityId identity_id(SeriesId id);
std::string_view convergence_domain(SeriesId id);

struct SeriesCheck {
    SeriesId series_id;
    int k = 0;
    Rational x;
    long terms_used = 0; // N: the sum runs over n = k..N
    Rational partial_sum;
    Rational limit;
    Rational tail_bound; // certified bound on |limit - partial_sum|

    Rational error() const { return (partial_sum - limit).abs(); }
    bool within_bound() const { return error() <= tail_bound; }
};

// Exact partial sum through n = N together with the closed-form limit and a
// certified tail bound. Mutation::rhs_constant shifts the reported limit by 1.
SeriesCheck partial_sum(SeriesId id, int k, const Rational &x, long N, Mutation mutation = Mutation::none);

// Bound on sum_{n>N} |term_n|: the exact terms up to the first index m > N
// where the term ratio r (m+1)/(m+1-k) drops below one, then a geometric
// majorant with that ratio.
Rational tail_bound(SeriesId id, int k, const Rational &x, long N);

// Smallest N >= k with tail_bound(N) <= eps.
long required_terms(SeriesId id, int k, const Rational &x, const Rational &eps);

struct LaplaceResult {
    double approximation = 0.0;
    Rational exact; // k! / x^(k+1)
    double relative_error = 0.0;
};

// Composite Simpson quadrature of int_0^T t^k e^(-x t) dt with `steps`
// subintervals (rounded up to even). Requires x > 0, horizon > 0, steps > 0.
LaplaceResult laplace_monomial(int k, const Rational &x, double horizon, long steps);

} // namespace bbf

#endif
