#include <bbf/identities.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include <bbf/basis.hpp>

namespace bbf
{

namespace
{

Rational sign(int e)
{
    return Rational(e % 2 == 0 ? 1 : -1);
}

void require(bool ok, const std::string &message)
{
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

void require_degree(int n, const char *what)
{
    require(n >= 0, std::string(what) + ": n must be nonnegative");
}

Poly2 bx(int n, int k)
{
    return Poly2::from_x(bernstein_basis(n, k));
}

Poly2 by(int n, int k)
{
    return Poly2::from_y(bernstein_basis(n, k));
}

IdentityReport verify_trivariate(int n, int j, Mutation mutation, int grid_margin)
{
    require(grid_margin >= 0, "grid_margin must be nonnegative");
    const int nodes = n + 1 + grid_margin;
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(nodes));
    for (int i = 1; i <= nodes; ++i) {
        grid.emplace_back(i, nodes);
    }

    // table[i][m][p] = B_p^m(grid[i])
    std::vector<std::vector<std::vector<Rational>>> table(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table[i].resize(static_cast<std::size_t>(n) + 1);
        for (int m = 0; m <= n; ++m) {
            for (int p = 0; p <= m; ++p) {
                table[i][static_cast<std::size_t>(m)].push_back(bernstein_basis(m, p).eval(grid[i]));
            }
        }
    }
    const auto value = [&](std::size_t node, int m, int p) {
        return (p < 0 || p > m) ? Rational(0) : table[node][static_cast<std::size_t>(m)][static_cast<std::size_t>(p)];
    };

    const Poly1 lhs_poly = bernstein_basis(n, j);
    IdentityReport report{IdentityId::subdivision_trivariate, {{"n", n}, {"j", j}}};
    report.method = Method::grid;
    report.note = std::to_string(nodes) + " nodes per variable, degree bound " + std::to_string(n);

    for (std::size_t ix = 0; ix < grid.size(); ++ix) {
        for (std::size_t iy = 0; iy < grid.size(); ++iy) {
            for (std::size_t iz = 0; iz < grid.size(); ++iz) {
                const Rational &x = grid[ix];
                const Rational &y = grid[iy];
                const Rational &z = grid[iz];
                const Rational lhs = lhs_poly.eval((Rational(1) - y) * x + y * z);
                Rational body;
                for (int k = 0; k <= n; ++k) {
                    Rational inner;
                    for (int p = 0; p <= j; ++p) {
                        inner += value(ix, n - k, p) * value(iz, k, j - p);
                    }
                    body += inner * value(iy, n, k);
                }
                Rational rhs = body;
                if (mutation == Mutation::rhs_constant) {
                    rhs += Rational(1);
                } else if (mutation == Mutation::rhs_prefactor) {
                    rhs *= Rational(2);
                } else if (mutation == Mutation::rhs_leading) {
                    rhs += (x * y * z).pow(n);
                }
                if (lhs != rhs) {
                    report.verdict = Verdict::fail;
                    report.witness = Witness{std::nullopt, {}, {{"x", x}, {"y", y}, {"z", z}}, lhs, rhs};
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace

IdentityReport verify_sum(int n, Mutation mutation)
{
    require_degree(n, "verify_sum");
    Poly1 lhs;
    for (int k = 0; k <= n; ++k) {
        lhs += bernstein_basis(n, k);
    }
    return compare_symbolic(IdentityId::sum, {{"n", n}}, lhs,
                            apply_mutation(mutation, 1, Poly1::constant(Rational(1))));
}

IdentityReport verify_alternating_sum(int n, Mutation mutation)
{
    require_degree(n, "verify_alternating_sum");
    Poly1 lhs;
    for (int k = 0; k <= n; ++k) {
        lhs += bernstein_basis(n, k) * sign(k);
    }
    const Poly1 body = Poly1({Rational(1), Rational(-2)}).pow(n);
    return compare_symbolic(IdentityId::alternating_sum, {{"n", n}}, lhs, apply_mutation(mutation, 1, body));
}

IdentityReport verify_subdivision(SubdivisionVariant variant, int n, int j, Mutation mutation, int grid_margin)
{
    require_degree(n, "verify_subdivision");
    require(j >= 0 && j <= n, "verify_subdivision: j must satisfy 0 <= j <= n");
    const Poly2 one = Poly2::constant(Rational(1));
    const Poly2 x = Poly2::x();
    const Poly2 y = Poly2::y();

    switch (variant) {
    case SubdivisionVariant::product: {
        const Poly2 lhs = substitute(bernstein_basis(n, j), x * y);
        Poly2 body;
        for (int k = j; k <= n; ++k) {
            body += bx(k, j) * by(n, k);
        }
        return compare_symbolic(IdentityId::subdivision_product, {{"n", n}, {"j", j}}, lhs,
                                apply_mutation(mutation, 1, body));
    }
    case SubdivisionVariant::affine: {
        // u = (1-y)x + y, and 1 - u = (1-x)(1-y).
        const Poly2 u = (one - y) * x + y;
        const Poly2 lhs = u.pow(j) * ((one - x) * (one - y)).pow(n - j) * binomial(n, j);
        Poly2 body;
        for (int k = 0; k <= j; ++k) {
            body += bx(n - k, j - k) * by(n, k);
        }
        return compare_symbolic(IdentityId::subdivision_affine, {{"n", n}, {"j", j}}, lhs,
                                apply_mutation(mutation, 1, body));
    }
    case SubdivisionVariant::trivariate:
        return verify_trivariate(n, j, mutation, grid_margin);
    }
    throw std::invalid_argument("unknown subdivision variant");
}

IdentityReport verify_monomial(int n, int l, Mutation mutation)
{
    require_degree(n, "verify_monomial");
    require(l >= 0 && l <= n, "verify_monomial: l must satisfy 0 <= l <= n");
    const Poly1 lhs = Poly1::monomial(binomial(n, l), l);
    Poly1 body;
    for (int k = l; k <= n; ++k) {
        body += bernstein_basis(n, k) * binomial(k, l);
    }
    auto report = compare_symbolic(IdentityId::monomial, {{"n", n}, {"l", l}}, lhs, apply_mutation(mutation, 1, body));
    report.note = "summation over k = l..n";
    return report;
}

IdentityReport verify_derivative(int n, int k, int l, Mutation mutation)
{
    require_degree(n, "verify_derivative");
    require(l >= 0 && l <= n, "verify_derivative: l must satisfy 0 <= l <= n");
    const Poly1 lhs = bernstein_basis(n, k).derivative(l);
    Poly1 body;
    for (int j = 0; j <= l; ++j) {
        body += bernstein_basis(n - l, k - j) * (sign(l - j) * binomial(l, j));
    }
    const Rational prefactor = factorial(n) / factorial(n - l);
    return compare_symbolic(IdentityId::derivative, {{"n", n}, {"k", k}, {"l", l}}, lhs,
                            apply_mutation(mutation, prefactor, body));
}

IdentityReport verify_recurrence(int n, int k, int v, Mutation mutation)
{
    require_degree(n, "verify_recurrence");
    require(v >= 0 && v <= n, "verify_recurrence: v must satisfy 0 <= v <= n");
    const Poly1 lhs = bernstein_basis(n, k);
    Poly1 body;
    for (int j = 0; j <= v; ++j) {
        body += bernstein_basis(v, j) * bernstein_basis(n - v, k - j);
    }
    return compare_symbolic(IdentityId::recurrence, {{"n", n}, {"k", k}, {"v", v}}, lhs,
                            apply_mutation(mutation, 1, body));
}

IdentityReport verify_degree_ops(DegreeOp op, int n, int k, int d, Mutation mutation)
{
    require_degree(n, "verify_degree_ops");
    require(k >= 0 && k <= n, "verify_degree_ops: k must satisfy 0 <= k <= n");
    require(d >= 1, "verify_degree_ops: d must be at least 1");
    const Params params{{"n", n}, {"k", k}, {"d", d}};
    switch (op) {
    case DegreeOp::raise_x: {
        const Poly1 lhs = Poly1::monomial(1, d) * bernstein_basis(n, k);
        const Rational prefactor = factorial(n) * factorial(k + d) / (factorial(k) * factorial(n + d));
        return compare_symbolic(IdentityId::degree_raise_x, params, lhs,
                                apply_mutation(mutation, prefactor, bernstein_basis(n + d, k + d)));
    }
    case DegreeOp::raise_1mx: {
        const Poly1 lhs = Poly1({Rational(1), Rational(-1)}).pow(d) * bernstein_basis(n, k);
        const Rational prefactor = factorial(n) * factorial(n + d - k) / (factorial(n + d) * factorial(n - k));
        return compare_symbolic(IdentityId::degree_raise_1mx, params, lhs,
                                apply_mutation(mutation, prefactor, bernstein_basis(n + d, k)));
    }
    case DegreeOp::elevation: {
        require(d == 1, "verify_degree_ops: elevation is defined for d = 1 only");
        const Poly1 lhs = bernstein_basis(n, k);
        const Poly1 body = bernstein_basis(n + 1, k + 1) * Rational(k + 1) + bernstein_basis(n + 1, k) * Rational(n + 1 - k);
        return compare_symbolic(IdentityId::degree_elevation, params, lhs,
                                apply_mutation(mutation, Rational(1, n + 1), body));
    }
    }
    throw std::invalid_argument("unknown degree operation");
}

IdentityReport verify_product(int n, int k1, int k2, Mutation mutation)
{
    require_degree(n, "verify_product");
    require(k1 >= 0 && k2 >= 0, "verify_product: k1 and k2 must be nonnegative");
    const int total = k1 + k2;
    const Poly1 lhs = bernstein_basis(n, total);
    Poly1 body;
    for (int j = 0; j <= n; ++j) {
        body += bernstein_basis(j, k1) * bernstein_basis(n - j, k2) * binomial(n, j);
    }
    const Rational prefactor = Rational(2).pow(total - n) * factorial(k1) * factorial(k2) / factorial(total);
    return compare_symbolic(IdentityId::product, {{"n", n}, {"k1", k1}, {"k2", k2}}, lhs,
                            apply_mutation(mutation, prefactor, body));
}

IdentityReport verify_two_point(int n, int k, Mutation mutation)
{
    require(k >= 0, "verify_two_point: k must be nonnegative");
    if (n < 2 * k) {
        throw std::domain_error("verify_two_point: requires n >= 2k, the falling factorial (n)_{2k} vanishes otherwise");
    }
    const Poly2 x = Poly2::x();
    const Poly2 y = Poly2::y();
    const Poly2 lhs = (x * y * Rational(-1)).pow(k) * (y - x).pow(n - 2 * k);
    Poly2 body;
    for (int j = 0; j <= n; ++j) {
        body += bx(j, k) * by(n - j, k) * (binomial(n, j) * sign(n - j));
    }
    const Rational prefactor = factorial(k).pow(2) / falling_factorial(n, 2 * k);
    return compare_symbolic(IdentityId::two_point, {{"n", n}, {"k", k}}, lhs,
                            apply_mutation(mutation, prefactor, body));
}

IdentityReport verify_finite_sum(FiniteSum variant, int n, int k, Mutation mutation)
{
    require_degree(n, "verify_finite_sum");
    require(k >= 0 && k <= n, "verify_finite_sum: k must satisfy 0 <= k <= n");
    const Params params{{"n", n}, {"k", k}};
    const Poly1 one_minus_x({Rational(1), Rational(-1)});
    Poly1 lhs;
    switch (variant) {
    case FiniteSum::tg1: {
        for (int j = 0; j <= n - k; ++j) {
            lhs += Poly1::monomial(binomial(n, j), j) * bernstein_basis(n - j, k);
        }
        auto report = compare_symbolic(IdentityId::finite_sum_tg1, params, lhs,
                                       apply_mutation(mutation, binomial(n, k), Poly1::monomial(1, k)));
        report.note = "checked multiplied through by x^k";
        return report;
    }
    case FiniteSum::tg2: {
        for (int j = 0; j <= n - k; ++j) {
            lhs += bernstein_basis(n - j, k) * (sign(j) * binomial(n, j));
        }
        return compare_symbolic(IdentityId::finite_sum_tg2, params, lhs,
                                apply_mutation(mutation, sign(n - k) * binomial(n, k), Poly1::monomial(1, n)));
    }
    case FiniteSum::tg5: {
        for (int j = 0; j <= n - k; ++j) {
            lhs += one_minus_x.pow(j) * bernstein_basis(n - j, k) * (sign(j) * binomial(n, j));
        }
        const Poly1 body = n == k ? Poly1::monomial(1, k) : Poly1();
        auto report = compare_symbolic(IdentityId::finite_sum_tg5, params, lhs, apply_mutation(mutation, 1, body));
        report.note = "corrected branch condition: x^k when n = k, else 0";
        return report;
    }
    }
    throw std::invalid_argument("unknown finite-sum variant");
}

} // namespace bbf
