#include <bbf/report.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bbf
{

namespace
{

constexpr std::array catalog{
    IdentityInfo{IdentityId::egf_closed_form, "egf_closed_form", "definitional EGF equals t^k x^k e^((1-x)t)/k!"},
    IdentityInfo{IdentityId::fe_sum, "FE-SUM", "sum_k f_k(x,t) = e^t"},
    IdentityInfo{IdentityId::fe_alt, "FE-ALT", "sum_k (-1)^k f_k(x,t) = e^((1-2x)t)"},
    IdentityInfo{IdentityId::fe_g1, "FE-G1", "f_k(x,t) e^(xt) = t^k x^k e^t / k!"},
    IdentityInfo{IdentityId::fe_g2, "FE-G2", "f_k(x,t) e^(-t) = t^k x^k e^(-xt) / k!"},
    IdentityInfo{IdentityId::fe_g3, "FE-G3", "f_k(x,t) e^((x-1)t) = t^k x^k / k!"},
    IdentityInfo{IdentityId::fe_sub, "FE-SUB", "f_j(xy,t) = f_j(x,ty) e^(t(1-y))"},
    IdentityInfo{IdentityId::fe_mono, "FE-MONO", "x^l t^l e^t / l! = sum_k C(k,l) f_k(x,t)"},
    IdentityInfo{IdentityId::fe_diffx, "FE-DIFFX", "d^l/dx^l f_k = sum_j C(l,j) (-1)^(l-j) t^l f_(k-j)"},
    IdentityInfo{IdentityId::fe_difft, "FE-DIFFT", "d^v/dt^v f_k = sum_j B_j^v(x) f_(k-j)"},
    IdentityInfo{IdentityId::fe_prod, "FE-PROD", "f_k1 f_k2 = C(k1+k2,k1) 2^-(k1+k2) f_(k1+k2)(x,2t)"},
    IdentityInfo{IdentityId::fe_xy, "FE-XY", "f_k(x,t) f_k(y,-t) = (-xy t^2)^k e^(t(y-x)) / (k!)^2"},
    IdentityInfo{IdentityId::sum, "verify_sum", "sum_k B_k^n = 1"},
    IdentityInfo{IdentityId::alternating_sum, "verify_alternating_sum", "sum_k (-1)^k B_k^n = (1-2x)^n"},
    IdentityInfo{IdentityId::subdivision_product, "verify_subdivision.product",
                 "B_j^n(xy) = sum_k B_j^k(x) B_k^n(y)"},
    IdentityInfo{IdentityId::subdivision_affine, "verify_subdivision.affine",
                 "B_j^n((1-y)x+y) = sum_k B_(j-k)^(n-k)(x) B_k^n(y)"},
    IdentityInfo{IdentityId::subdivision_trivariate, "verify_subdivision.trivariate",
                 "B_j^n((1-y)x+yz) = sum_k sum_(p+q=j) B_p^(n-k)(x) B_q^k(z) B_k^n(y)"},
    IdentityInfo{IdentityId::monomial, "verify_monomial", "C(n,l) x^l = sum_(k=l..n) C(k,l) B_k^n"},
    IdentityInfo{IdentityId::derivative, "verify_derivative",
                 "d^l B_k^n = n!/(n-l)! sum_j (-1)^(l-j) C(l,j) B_(k-j)^(n-l)"},
    IdentityInfo{IdentityId::recurrence, "verify_recurrence", "B_k^n = sum_j B_j^v B_(k-j)^(n-v)"},
    IdentityInfo{IdentityId::degree_raise_x, "verify_degree_ops.raise_x",
                 "x^d B_k^n = n!(k+d)!/(k!(n+d)!) B_(k+d)^(n+d)"},
    IdentityInfo{IdentityId::degree_raise_1mx, "verify_degree_ops.raise_1mx",
                 "(1-x)^d B_k^n = n!(n+d-k)!/((n+d)!(n-k)!) B_k^(n+d)"},
    IdentityInfo{IdentityId::degree_elevation, "verify_degree_ops.elevation",
                 "B_k^n = ((k+1) B_(k+1)^(n+1) + (n+1-k) B_k^(n+1)) / (n+1)"},
    IdentityInfo{IdentityId::product, "verify_product",
                 "B_(k1+k2)^n = 2^(k1+k2-n) k1! k2!/(k1+k2)! sum_j C(n,j) B_k1^j B_k2^(n-j)"},
    IdentityInfo{IdentityId::two_point, "verify_two_point",
                 "(-xy)^k (y-x)^(n-2k) = (k!)^2/(n)_2k sum_j C(n,j) (-1)^(n-j) B_k^j(x) B_k^(n-j)(y)"},
    IdentityInfo{IdentityId::finite_sum_tg1, "verify_finite_sum.tg1",
                 "sum_(j<=n-k) C(n,j) x^j B_k^(n-j) = C(n,k) x^k"},
    IdentityInfo{IdentityId::finite_sum_tg2, "verify_finite_sum.tg2",
                 "sum_(j<=n-k) (-1)^j C(n,j) B_k^(n-j) = (-1)^(n-k) C(n,k) x^n"},
    IdentityInfo{IdentityId::finite_sum_tg5, "verify_finite_sum.tg5",
                 "sum_(j<=n-k) (-1)^j C(n,j) (1-x)^j B_k^(n-j) = x^k if n = k, else 0"},
    IdentityInfo{IdentityId::basis_roundtrip, "basis.roundtrip", "to_bernstein(to_monomial(f)) = f, random f"},
    IdentityInfo{IdentityId::basis_de_casteljau, "basis.de_casteljau",
                 "de Casteljau value equals monomial value, random f and x"},
    IdentityInfo{IdentityId::series_tg3, "series.TG3", "sum_(n>=k) B_k^n(x) = 1/x on 0 < x < 1"},
    IdentityInfo{IdentityId::series_tg4, "series.TG4",
                 "sum_(n>=k) (-1)^n B_k^n(x)/x^(n+1) = (-1)^k x^k on 1/2 < x <= 1"},
};

} // namespace

std::span<const IdentityInfo> identity_catalog()
{
    return catalog;
}

std::string_view to_string(IdentityId id)
{
    for (const auto &info : catalog) {
        if (info.id == id) {
            return info.name;
        }
    }
    throw std::invalid_argument("unknown identity id");
}

std::optional<IdentityId> identity_from_string(std::string_view name)
{
    for (const auto &info : catalog) {
        if (info.name == name) {
            return info.id;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::pass ? "pass" : "fail";
}

std::string_view to_string(Method m)
{
    return m == Method::symbolic ? "symbolic" : "grid";
}

long param(const Params &params, std::string_view name)
{
    const auto it = std::find_if(params.begin(), params.end(), [&](const auto &p) { return p.first == name; });
    if (it == params.end()) {
        throw std::invalid_argument("missing parameter '" + std::string(name) + "'");
    }
    return it->second;
}

IdentityReport compare_symbolic(IdentityId id, Params params, const Poly1 &lhs, const Poly1 &rhs)
{
    IdentityReport report{id, std::move(params)};
    if (const auto diff = first_difference(lhs, rhs)) {
        report.verdict = Verdict::fail;
        report.witness = Witness{std::nullopt, {{"x", *diff}}, {}, lhs.coeff(*diff), rhs.coeff(*diff)};
    }
    return report;
}

IdentityReport compare_symbolic(IdentityId id, Params params, const Poly2 &lhs, const Poly2 &rhs)
{
    IdentityReport report{id, std::move(params)};
    if (const auto diff = first_difference(lhs, rhs)) {
        const auto [i, j] = *diff;
        report.verdict = Verdict::fail;
        report.witness = Witness{std::nullopt, {{"x", i}, {"y", j}}, {}, lhs.coeff(i, j), rhs.coeff(i, j)};
    }
    return report;
}

Poly1 apply_mutation(Mutation m, const Rational &prefactor, const Poly1 &body)
{
    switch (m) {
    case Mutation::none:
        return body * prefactor;
    case Mutation::rhs_constant:
        return body * prefactor + Poly1::constant(Rational(1));
    case Mutation::rhs_prefactor:
        return body * (prefactor + Rational(1));
    case Mutation::rhs_leading: {
        const Poly1 rhs = body * prefactor;
        return rhs + Poly1::monomial(Rational(1), std::max(rhs.degree(), 0));
    }
    }
    throw std::invalid_argument("unknown mutation");
}

Poly2 apply_mutation(Mutation m, const Rational &prefactor, const Poly2 &body)
{
    switch (m) {
    case Mutation::none:
        return body * prefactor;
    case Mutation::rhs_constant:
        return body * prefactor + Poly2::constant(Rational(1));
    case Mutation::rhs_prefactor:
        return body * (prefactor + Rational(1));
    case Mutation::rhs_leading: {
        const Poly2 rhs = body * prefactor;
        return rhs + Poly2::monomial(Rational(1), std::max(rhs.degree_x(), 0), std::max(rhs.degree_y(), 0));
    }
    }
    throw std::invalid_argument("unknown mutation");
}

} // namespace bbf
