#include <doctest.h>

#include <random>
#include <stdexcept>

#include <bbf/basis.hpp>

#include "oracle.hpp"

using bbf::BernsteinForm;
using bbf::Poly1;
using bbf::Rational;

namespace
{

Rational random_unit(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> den(1, 97);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(0, q);
    return Rational(num(rng), q);
}

Rational random_coeff(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational arithmetic stays canonical")
{
    const Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() > 0);
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational(7).str() == "7/1");
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("1e-9") == Rational(1, 1'000'000'000));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("2.5E2") == Rational(250));
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("binomial")
{
    CHECK(bbf::binomial(5, 2) == Rational(10));
    CHECK(bbf::binomial(4, 7) == Rational(0));
    CHECK(bbf::binomial(0, 0) == Rational(1));
    CHECK(bbf::binomial(6, -1) == Rational(0));
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(bbf::binomial(n, k) == bbf::binomial(n - 1, k - 1) + bbf::binomial(n - 1, k));
        }
    }
}

TEST_CASE("bernstein_basis small cases")
{
    CHECK(bbf::bernstein_basis(2, 1) == Poly1({Rational(0), Rational(2), Rational(-2)}));
    CHECK(bbf::bernstein_basis(3, 5).degree() == -1);
    CHECK(bbf::bernstein_basis(3, -1).degree() == -1);
    for (int n = 0; n <= 10; ++n) {
        CHECK(bbf::bernstein_basis(n, 0).eval(Rational(0)) == Rational(1));
    }
}

TEST_CASE("bernstein_basis degree and low coefficient")
{
    for (int n = 0; n <= 15; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Poly1 b = bbf::bernstein_basis(n, k);
            CHECK(b.degree() == n);
            CHECK(b.coeff(k) == bbf::binomial(n, k));
            for (int i = 0; i < k; ++i) {
                CHECK(b.coeff(i).is_zero());
            }
        }
    }
}

TEST_CASE("bernstein_basis agrees with the oracle expansion")
{
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto ref = oracle::bern(n, k, oracle::Poly::var(0));
            const Poly1 b = bbf::bernstein_basis(n, k);
            for (int i = 0; i <= n; ++i) {
                const auto it = ref.terms().find({i, 0, 0});
                const oracle::Q expected = it == ref.terms().end() ? oracle::Q(0) : it->second;
                CHECK(b.coeff(i).value() == expected);
            }
        }
    }
}

TEST_CASE("de Casteljau evaluation")
{
    CHECK(bbf::eval_de_casteljau(BernsteinForm(1, {Rational(0), Rational(1)}), Rational(1, 3)) == Rational(1, 3));
    const BernsteinForm ones(2, {Rational(1), Rational(1), Rational(1)});
    for (const auto &x : {Rational(0), Rational(2, 7), Rational(1, 2), Rational(1)}) {
        CHECK(bbf::eval_de_casteljau(ones, x) == Rational(1));
    }
    CHECK(bbf::eval_de_casteljau(BernsteinForm(2, {Rational(0), Rational(0), Rational(1)}), Rational(1, 2)) ==
          Rational(1, 4));
}

TEST_CASE("de Casteljau matches monomial evaluation on unit vectors")
{
    std::mt19937_64 rng(20260101);
    for (int n = 0; n <= 15; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<Rational> unit(static_cast<std::size_t>(n) + 1);
            unit[static_cast<std::size_t>(k)] = Rational(1);
            const BernsteinForm f(n, unit);
            const Poly1 b = bbf::bernstein_basis(n, k);
            for (int i = 0; i < 20; ++i) {
                const Rational x = random_unit(rng);
                REQUIRE(bbf::eval_de_casteljau(f, x) == b.eval(x));
            }
        }
    }
}

TEST_CASE("to_monomial examples")
{
    CHECK(bbf::to_monomial(BernsteinForm(2, {Rational(1), Rational(1), Rational(1)})) == Poly1::constant(Rational(1)));
    CHECK(bbf::to_monomial(BernsteinForm(1, {Rational(0), Rational(1)})) == Poly1::x());
    CHECK(bbf::to_monomial(BernsteinForm(2, {Rational(0), Rational(1, 2), Rational(1)})) == Poly1::x());
}

TEST_CASE("to_bernstein examples")
{
    CHECK(bbf::to_bernstein(Poly1::constant(Rational(1)), 3).coeffs() ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(bbf::to_bernstein(Poly1::x(), 2).coeffs() == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    CHECK_THROWS_AS(bbf::to_bernstein(Poly1::monomial(Rational(1), 3), 2), std::invalid_argument);
}

TEST_CASE("basis conversion round trip")
{
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 12; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> c;
            for (int i = 0; i <= n; ++i) {
                c.push_back(random_coeff(rng));
            }
            const BernsteinForm f(n, c);
            const Poly1 p = bbf::to_monomial(f);
            REQUIRE(bbf::to_bernstein(p, n) == f);
            const Rational x = random_unit(rng);
            CHECK(bbf::eval_de_casteljau(f, x) == p.eval(x));
        }
    }
}

TEST_CASE("BernsteinForm validates its length")
{
    CHECK_THROWS_AS(BernsteinForm(2, {Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(BernsteinForm(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("generalized basis")
{
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(bbf::generalized_basis(n, k, Rational(0), Rational(1)) == bbf::bernstein_basis(n, k));
        }
    }
    CHECK(bbf::generalized_basis(1, 1, Rational(-1), Rational(1)) == Poly1({Rational(1, 2), Rational(1, 2)}));
    for (int n = 0; n <= 6; ++n) {
        Poly1 total;
        for (int k = 0; k <= n; ++k) {
            total += bbf::generalized_basis(n, k, Rational(2), Rational(5));
        }
        CHECK(total == Poly1::constant(Rational(1)));
    }
    CHECK_THROWS_AS(bbf::generalized_basis(2, 1, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(bbf::generalized_basis(2, 1, Rational(3), Rational(1)), std::invalid_argument);
}

TEST_CASE("Poly2 specialization matches evaluation")
{
    const bbf::Poly2 p = (bbf::Poly2::x() * bbf::Poly2::y() - bbf::Poly2::constant(Rational(3))).pow(3) +
                         bbf::Poly2::monomial(Rational(2, 5), 1, 4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const Rational x = random_coeff(rng);
        const Rational y = random_coeff(rng);
        CHECK(p.specialize_y(y).eval(x) == p.eval(x, y));
    }
    CHECK(p.swap_xy().swap_xy() == p);
    CHECK((p - p).is_zero());
}
