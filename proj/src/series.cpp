#include <bbf/series.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <bbf/basis.hpp>

namespace bbf
{

namespace
{

constexpr long max_terms = 10'000'000;

// |term_n| = amplitude * C(n,k) * ratio^(n-k) for n >= k, zero below.
struct TermModel {
    Rational amplitude;
    Rational ratio;
};

void check_domain(SeriesId id, int k, const Rational &x)
{
    if (k < 0) {
        throw std::invalid_argument("series index k must be nonnegative");
    }
    const bool ok = id == SeriesId::tg3 ? (x > Rational(0) && x < Rational(1))
                                        : (x > Rational(1, 2) && x <= Rational(1));
    if (!ok) {
        throw std::domain_error(std::string(to_string(id)) + ": x = " + x.str() + " outside convergence domain "
                                + std::string(convergence_domain(id)));
    }
}

TermModel model(SeriesId id, int k, const Rational &x)
{
    if (id == SeriesId::tg3) {
        return {x.pow(k), Rational(1) - x};
    }
    return {x.inverse(), (Rational(1) - x) / x};
}

// Ratio bound sup_{m' >= m} |term_{m'+1}| / |term_{m'}| = ratio (m+1)/(m+1-k).
Rational ratio_bound(const TermModel &tm, int k, long m)
{
    return tm.ratio * Rational(m + 1, m + 1 - k);
}

Rational term_magnitude(const TermModel &tm, int k, long n)
{
    if (n < k) {
        return Rational(0);
    }
    return tm.amplitude * binomial(static_cast<int>(n), k) * tm.ratio.pow(n - k);
}

Rational limit_of(SeriesId id, int k, const Rational &x)
{
    if (id == SeriesId::tg3) {
        return x.inverse();
    }
    return Rational(k % 2 == 0 ? 1 : -1) * x.pow(k);
}

} // namespace

std::string_view to_string(SeriesId id)
{
    return id == SeriesId::tg3 ? "TG3" : "TG4";
}

IdentityId identity_id(SeriesId id)
{
    return id == SeriesId::tg3 ? IdentityId::series_tg3 : IdentityId::series_tg4;
}

std::string_view convergence_domain(SeriesId id)
{
    return id == SeriesId::tg3 ? "0 < x < 1" : "1/2 < x <= 1";
}

SeriesCheck partial_sum(SeriesId id, int k, const Rational &x, long N, Mutation mutation)
{
    check_domain(id, k, x);
    if (N < 0 || N > max_terms) {
        throw std::invalid_argument("partial_sum: N out of range");
    }
    const TermModel tm = model(id, k, x);
    // Signed terms: tg4 alternates as (-1)^n.
    const Rational step_sign = id == SeriesId::tg4 ? Rational(-1) : Rational(1);
    Rational term = tm.amplitude * (id == SeriesId::tg4 && k % 2 != 0 ? Rational(-1) : Rational(1));
    Rational sum;
    for (long n = k; n <= N; ++n) {
        sum += term;
        term *= tm.ratio * Rational(n + 1, n + 1 - k) * step_sign;
    }

    SeriesCheck check{id, k, x, N, sum, limit_of(id, k, x), tail_bound(id, k, x, N)};
    if (mutation != Mutation::none) {
        check.limit += Rational(1);
    }
    return check;
}

Rational tail_bound(SeriesId id, int k, const Rational &x, long N)
{
    check_domain(id, k, x);
    if (N < 0) {
        throw std::invalid_argument("tail_bound: negative N");
    }
    const TermModel tm = model(id, k, x);
    long m = std::max<long>(N + 1, k);
    Rational magnitude = term_magnitude(tm, k, m);
    Rational bound;
    for (;; ++m) {
        const Rational rho = ratio_bound(tm, k, m);
        if (rho < Rational(1)) {
            return bound + magnitude / (Rational(1) - rho);
        }
        bound += magnitude;
        magnitude *= rho;
        if (m > max_terms) {
            throw std::domain_error("tail_bound: ratio bound never drops below one");
        }
    }
}

long required_terms(SeriesId id, int k, const Rational &x, const Rational &eps)
{
    check_domain(id, k, x);
    if (eps <= Rational(0)) {
        throw std::invalid_argument("required_terms: eps must be positive");
    }
    // tail_bound is nonincreasing in N, so gallop then bisect.
    long lo = k - 1; // bound(lo) > eps or lo below the search range
    long hi = k;
    while (tail_bound(id, k, x, hi) > eps) {
        lo = hi;
        hi = 2 * hi + 1;
        if (hi > max_terms) {
            throw std::domain_error("required_terms: tolerance not reachable");
        }
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (tail_bound(id, k, x, mid) <= eps) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

LaplaceResult laplace_monomial(int k, const Rational &x, double horizon, long steps)
{
    if (k < 0) {
        throw std::invalid_argument("laplace_monomial: negative k");
    }
    if (x <= Rational(0)) {
        throw std::domain_error("laplace_monomial: x must be positive");
    }
    if (!(horizon > 0.0) || steps <= 0) {
        throw std::invalid_argument("laplace_monomial: horizon and steps must be positive");
    }
    if (steps % 2 != 0) {
        ++steps;
    }
    const double xd = x.to_double();
    const auto f = [&](double t) { return std::pow(t, k) * std::exp(-xd * t); };
    const double h = horizon / static_cast<double>(steps);
    double odd = 0.0;
    double even = 0.0;
    for (long i = 1; i < steps; ++i) {
        const double v = f(h * static_cast<double>(i));
        if (i % 2 != 0) {
            odd += v;
        } else {
            even += v;
        }
    }
    const double approx = h / 3.0 * (f(0.0) + f(horizon) + 4.0 * odd + 2.0 * even);
    const Rational exact = factorial(k) / x.pow(k + 1);
    const double exact_d = exact.to_double();
    return {approx, exact, std::abs(approx - exact_d) / exact_d};
}

} // namespace bbf
