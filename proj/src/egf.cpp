#include <bbf/egf.hpp>

#include <stdexcept>
#include <string>
#include <utility>

#include <bbf/basis.hpp>

namespace bbf
{

namespace
{

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
}

void require_affine(const Poly2 &c, const char *what)
{
    if (c.total_degree() > 1) {
        throw std::invalid_argument(std::string(what) + ": expected total degree <= 1, got "
                                    + std::to_string(c.total_degree()));
    }
}

void require_same_order(const TruncatedEGF &a, const TruncatedEGF &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("EGF order mismatch: " + std::to_string(a.order()) + " vs "
                                    + std::to_string(b.order()));
    }
}

const Poly2 &one_minus_x()
{
    static const Poly2 p = Poly2::constant(Rational(1)) - Poly2::x();
    return p;
}

TruncatedEGF apply_mutation(Mutation m, const Rational &prefactor, const TruncatedEGF &body)
{
    switch (m) {
    case Mutation::none:
        return body * prefactor;
    case Mutation::rhs_constant: {
        auto coeffs = (body * prefactor).coeffs();
        coeffs.front() += Poly2::constant(Rational(1));
        return TruncatedEGF(std::move(coeffs));
    }
    case Mutation::rhs_prefactor:
        return body * (prefactor + Rational(1));
    case Mutation::rhs_leading: {
        auto coeffs = (body * prefactor).coeffs();
        coeffs.back() += Poly2::constant(Rational(1));
        return TruncatedEGF(std::move(coeffs));
    }
    }
    throw std::invalid_argument("unknown mutation");
}

IdentityReport compare_egf(IdentityId id, Params params, const TruncatedEGF &lhs, const TruncatedEGF &rhs)
{
    IdentityReport report{id, std::move(params)};
    const auto cmp = egf_equal(lhs, rhs);
    if (!cmp.equal) {
        const int n = *cmp.index;
        const auto [i, j] = *first_difference(lhs[n], rhs[n]);
        report.verdict = Verdict::fail;
        report.witness = Witness{n, {{"x", i}, {"y", j}}, {}, lhs[n].coeff(i, j), rhs[n].coeff(i, j)};
    }
    return report;
}

long nonnegative_param(const Params &params, std::string_view name)
{
    const long v = param(params, name);
    if (v < 0) {
        throw std::invalid_argument("parameter '" + std::string(name) + "' must be nonnegative");
    }
    return v;
}

} // namespace

// ---------------------------------------------------------------- TruncatedEGF

TruncatedEGF::TruncatedEGF(std::vector<Poly2> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedEGF needs at least one coefficient");
    }
}

TruncatedEGF TruncatedEGF::zero(int order)
{
    require_order(order);
    return TruncatedEGF(std::vector<Poly2>(static_cast<std::size_t>(order) + 1));
}

TruncatedEGF TruncatedEGF::one(int order)
{
    auto e = zero(order);
    e.coeffs_.front() = Poly2::constant(Rational(1));
    return e;
}

TruncatedEGF TruncatedEGF::truncated(int new_order) const
{
    require_order(new_order);
    if (new_order > order()) {
        throw std::invalid_argument("cannot raise the truncation order");
    }
    return TruncatedEGF(std::vector<Poly2>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedEGF &TruncatedEGF::operator+=(const TruncatedEGF &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += o.coeffs_[n];
    }
    return *this;
}

TruncatedEGF &TruncatedEGF::operator-=(const TruncatedEGF &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= o.coeffs_[n];
    }
    return *this;
}

TruncatedEGF &TruncatedEGF::operator*=(const Poly2 &c)
{
    for (auto &a : coeffs_) {
        a = a * c;
    }
    return *this;
}

TruncatedEGF &TruncatedEGF::operator*=(const Rational &c)
{
    for (auto &a : coeffs_) {
        a *= c;
    }
    return *this;
}

// ---------------------------------------------------------------- constructors

TruncatedEGF egf_bernstein(int k, int order)
{
    auto e = TruncatedEGF::zero(order);
    if (k < 0) {
        return e;
    }
    std::vector<Poly2> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = k; n <= order; ++n) {
        coeffs[static_cast<std::size_t>(n)] = Poly2::from_x(bernstein_basis(n, k));
    }
    return TruncatedEGF(std::move(coeffs));
}

TruncatedEGF egf_bernstein_closed_form(int k, int order)
{
    require_order(order);
    if (k < 0) {
        return TruncatedEGF::zero(order);
    }
    // x^k (t^k / k!) e^{(1-x)t}
    return egf_mul(egf_t_power(k, order), egf_exp_affine(one_minus_x(), order)) * Poly2::monomial(Rational(1), k, 0);
}

TruncatedEGF egf_exp_affine(const Poly2 &c, int order)
{
    require_order(order);
    require_affine(c, "egf_exp_affine");
    std::vector<Poly2> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    Poly2 power = Poly2::constant(Rational(1));
    for (int n = 0; n <= order; ++n) {
        coeffs.push_back(power);
        power = power * c;
    }
    return TruncatedEGF(std::move(coeffs));
}

TruncatedEGF egf_t_power(int k, int order)
{
    auto e = TruncatedEGF::zero(order);
    if (k < 0) {
        throw std::invalid_argument("egf_t_power: negative power");
    }
    if (k > order) {
        return e;
    }
    std::vector<Poly2> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[static_cast<std::size_t>(k)] = Poly2::constant(Rational(1));
    return TruncatedEGF(std::move(coeffs));
}

// ---------------------------------------------------------------- operations

TruncatedEGF egf_mul(const TruncatedEGF &a, const TruncatedEGF &b)
{
    require_same_order(a, b);
    const int order = a.order();
    std::vector<Poly2> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Poly2 acc;
        for (int j = 0; j <= n; ++j) {
            const auto &aj = a[j];
            const auto &bk = b[n - j];
            if (aj.is_zero() || bk.is_zero()) {
                continue;
            }
            acc += (aj * bk) * binomial(n, j);
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return TruncatedEGF(std::move(out));
}

TruncatedEGF egf_substitute_t(const TruncatedEGF &a, const Poly2 &s)
{
    require_affine(s, "egf_substitute_t");
    std::vector<Poly2> out;
    out.reserve(a.coeffs().size());
    Poly2 power = Poly2::constant(Rational(1));
    for (const auto &c : a.coeffs()) {
        out.push_back(c * power);
        power = power * s;
    }
    return TruncatedEGF(std::move(out));
}

TruncatedEGF egf_substitute_x(const TruncatedEGF &a, const Poly2 &arg)
{
    std::vector<Poly2> out;
    out.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        out.push_back(c.substitute_x(arg));
    }
    return TruncatedEGF(std::move(out));
}

TruncatedEGF egf_swap_xy(const TruncatedEGF &a)
{
    std::vector<Poly2> out;
    out.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        out.push_back(c.swap_xy());
    }
    return TruncatedEGF(std::move(out));
}

TruncatedEGF egf_diff_x(const TruncatedEGF &a, int l)
{
    if (l < 0) {
        throw std::invalid_argument("egf_diff_x: negative order");
    }
    std::vector<Poly2> out;
    out.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        out.push_back(c.diff_x(l));
    }
    return TruncatedEGF(std::move(out));
}

TruncatedEGF egf_diff_t(const TruncatedEGF &a, int v)
{
    if (v < 0 || v > a.order()) {
        throw std::invalid_argument("egf_diff_t: derivative order " + std::to_string(v) + " outside [0, "
                                    + std::to_string(a.order()) + "]");
    }
    return TruncatedEGF(std::vector<Poly2>(a.coeffs().begin() + v, a.coeffs().end()));
}

EgfComparison egf_equal(const TruncatedEGF &a, const TruncatedEGF &b)
{
    require_same_order(a, b);
    for (int n = 0; n <= a.order(); ++n) {
        if (a[n] != b[n]) {
            return {false, n, a[n] - b[n]};
        }
    }
    return {};
}

// ---------------------------------------------------------------- functional equations

IdentityId identity_id(FunctionalEquation fe)
{
    switch (fe) {
    case FunctionalEquation::sum:
        return IdentityId::fe_sum;
    case FunctionalEquation::alt:
        return IdentityId::fe_alt;
    case FunctionalEquation::g1:
        return IdentityId::fe_g1;
    case FunctionalEquation::g2:
        return IdentityId::fe_g2;
    case FunctionalEquation::g3:
        return IdentityId::fe_g3;
    case FunctionalEquation::sub:
        return IdentityId::fe_sub;
    case FunctionalEquation::mono:
        return IdentityId::fe_mono;
    case FunctionalEquation::diffx:
        return IdentityId::fe_diffx;
    case FunctionalEquation::difft:
        return IdentityId::fe_difft;
    case FunctionalEquation::prod:
        return IdentityId::fe_prod;
    case FunctionalEquation::xy:
        return IdentityId::fe_xy;
    }
    throw std::invalid_argument("unknown functional equation");
}

std::optional<FunctionalEquation> functional_equation_from_id(IdentityId id)
{
    constexpr FunctionalEquation all[] = {FunctionalEquation::sum,   FunctionalEquation::alt,   FunctionalEquation::g1,
                                          FunctionalEquation::g2,    FunctionalEquation::g3,    FunctionalEquation::sub,
                                          FunctionalEquation::mono,  FunctionalEquation::diffx, FunctionalEquation::difft,
                                          FunctionalEquation::prod,  FunctionalEquation::xy};
    for (auto fe : all) {
        if (identity_id(fe) == id) {
            return fe;
        }
    }
    return std::nullopt;
}

FunctionalEquation functional_equation_from_string(std::string_view name)
{
    if (const auto id = identity_from_string(name)) {
        if (const auto fe = functional_equation_from_id(*id)) {
            return *fe;
        }
    }
    throw std::invalid_argument("unknown functional equation '" + std::string(name) + "'");
}

std::vector<std::string> functional_equation_params(FunctionalEquation fe)
{
    switch (fe) {
    case FunctionalEquation::sum:
    case FunctionalEquation::alt:
        return {};
    case FunctionalEquation::g1:
    case FunctionalEquation::g2:
    case FunctionalEquation::g3:
    case FunctionalEquation::xy:
        return {"k"};
    case FunctionalEquation::sub:
        return {"j"};
    case FunctionalEquation::mono:
        return {"l"};
    case FunctionalEquation::diffx:
        return {"k", "l"};
    case FunctionalEquation::difft:
        return {"k", "v"};
    case FunctionalEquation::prod:
        return {"k1", "k2"};
    }
    throw std::invalid_argument("unknown functional equation");
}

IdentityReport check_functional_equation(FunctionalEquation fe, const Params &params, int order, Mutation mutation)
{
    require_order(order);
    const IdentityId id = identity_id(fe);
    Params echoed;
    for (const auto &name : functional_equation_params(fe)) {
        echoed.emplace_back(name, nonnegative_param(params, name));
    }
    const auto get = [&](std::string_view name) { return static_cast<int>(param(echoed, name)); };
    const Poly2 x = Poly2::x();
    const Poly2 y = Poly2::y();
    const Poly2 one = Poly2::constant(Rational(1));

    switch (fe) {
    case FunctionalEquation::sum: {
        // f_k contributes nothing below t^k, so k <= order is exact.
        auto lhs = TruncatedEGF::zero(order);
        for (int k = 0; k <= order; ++k) {
            lhs += egf_bernstein(k, order);
        }
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, egf_exp_affine(one, order)));
    }
    case FunctionalEquation::alt: {
        auto lhs = TruncatedEGF::zero(order);
        for (int k = 0; k <= order; ++k) {
            lhs += egf_bernstein(k, order) * Rational(k % 2 == 0 ? 1 : -1);
        }
        const auto rhs = egf_exp_affine(one - x * Rational(2), order);
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::g1: {
        const int k = get("k");
        const auto lhs = egf_mul(egf_bernstein(k, order), egf_exp_affine(x, order));
        const auto rhs = egf_mul(egf_t_power(k, order), egf_exp_affine(one, order)) * x.pow(k);
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::g2: {
        const int k = get("k");
        const auto lhs = egf_mul(egf_bernstein(k, order), egf_exp_affine(-one, order));
        const auto rhs = egf_mul(egf_t_power(k, order), egf_exp_affine(-x, order)) * x.pow(k);
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::g3: {
        const int k = get("k");
        const auto lhs = egf_mul(egf_bernstein(k, order), egf_exp_affine(x - one, order));
        const auto rhs = egf_t_power(k, order) * x.pow(k);
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::sub: {
        const int j = get("j");
        const auto f = egf_bernstein(j, order);
        const auto lhs = egf_substitute_x(f, x * y);
        const auto rhs = egf_mul(egf_substitute_t(f, y), egf_exp_affine(one - y, order));
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::mono: {
        const int l = get("l");
        const auto lhs = egf_mul(egf_t_power(l, order), egf_exp_affine(one, order)) * x.pow(l);
        auto rhs = TruncatedEGF::zero(order);
        for (int k = l; k <= order; ++k) {
            rhs += egf_bernstein(k, order) * binomial(k, l);
        }
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::diffx: {
        const int k = get("k");
        const int l = get("l");
        if (l > order) {
            throw std::invalid_argument("FE-DIFFX requires l <= order");
        }
        const auto lhs = egf_diff_x(egf_bernstein(k, order), l);
        // t^l = l! * (t^l / l!)
        const auto t_l = egf_t_power(l, order) * factorial(l);
        auto sum = TruncatedEGF::zero(order);
        for (int j = 0; j <= l; ++j) {
            const Rational c = binomial(l, j) * Rational((l - j) % 2 == 0 ? 1 : -1);
            sum += egf_bernstein(k - j, order) * c;
        }
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, egf_mul(t_l, sum)));
    }
    case FunctionalEquation::difft: {
        const int k = get("k");
        const int v = get("v");
        if (v > order) {
            throw std::invalid_argument("FE-DIFFT requires v <= order");
        }
        const auto lhs = egf_diff_t(egf_bernstein(k, order), v);
        auto rhs = TruncatedEGF::zero(order - v);
        for (int j = 0; j <= v; ++j) {
            rhs += egf_bernstein(k - j, order - v) * Poly2::from_x(bernstein_basis(v, j));
        }
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, 1, rhs));
    }
    case FunctionalEquation::prod: {
        const int k1 = get("k1");
        const int k2 = get("k2");
        const auto lhs = egf_mul(egf_bernstein(k1, order), egf_bernstein(k2, order));
        const Rational prefactor = binomial(k1 + k2, k1) / Rational(2).pow(k1 + k2);
        const auto body = egf_substitute_t(egf_bernstein(k1 + k2, order), Poly2::constant(Rational(2)));
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, prefactor, body));
    }
    case FunctionalEquation::xy: {
        const int k = get("k");
        const auto fx = egf_bernstein(k, order);
        const auto fy_neg = egf_substitute_t(egf_swap_xy(fx), -one);
        const auto lhs = egf_mul(fx, fy_neg);
        // (-xy t^2)^k / (k!)^2 = (-1)^k (2k)!/(k!)^2 (xy)^k t^{2k}/(2k)!
        const Rational prefactor = Rational(k % 2 == 0 ? 1 : -1) * factorial(2 * k) / factorial(k).pow(2);
        const auto body = egf_mul(egf_t_power(2 * k, order), egf_exp_affine(y - x, order)) * (x * y).pow(k);
        return compare_egf(id, echoed, lhs, apply_mutation(mutation, prefactor, body));
    }
    }
    throw std::invalid_argument("unknown functional equation");
}

IdentityReport check_egf_closed_form(int k, int order, Mutation mutation)
{
    if (k < 0) {
        throw std::invalid_argument("check_egf_closed_form: negative k");
    }
    return compare_egf(IdentityId::egf_closed_form, {{"k", k}}, egf_bernstein(k, order),
                       apply_mutation(mutation, 1, egf_bernstein_closed_form(k, order)));
}

} // namespace bbf
