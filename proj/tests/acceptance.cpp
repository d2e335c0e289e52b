// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <bbf/egf.hpp>
#include <bbf/identities.hpp>
#include <bbf/series.hpp>

#include "oracle.hpp"
#include "process.hpp"

using namespace bbf;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome closed_form()
{
    constexpr double limit = 10.0;
    const auto start = Clock::now();
    int failures = 0;
    for (int k = 0; k <= 8; ++k) {
        failures += check_egf_closed_form(k, 24).passed() ? 0 : 1;
    }
    const double t = seconds_since(start);
    return {failures == 0 && t < limit, fmt("k<=8, N=24: %d mismatches, %.2fs (limit %.0fs)", failures, t, limit)};
}

Outcome functional_equations()
{
    constexpr int order = 24;
    int checks = 0;
    int failures = 0;
    const auto run = [&](FunctionalEquation fe, Params p) {
        ++checks;
        failures += check_functional_equation(fe, p, order).passed() ? 0 : 1;
    };
    run(FunctionalEquation::sum, {});
    run(FunctionalEquation::alt, {});
    for (int a = 0; a <= 8; ++a) {
        run(FunctionalEquation::g1, {{"k", a}});
        run(FunctionalEquation::g2, {{"k", a}});
        run(FunctionalEquation::g3, {{"k", a}});
        run(FunctionalEquation::sub, {{"j", a}});
        run(FunctionalEquation::mono, {{"l", a}});
        run(FunctionalEquation::xy, {{"k", a}});
        for (int b = 0; b <= 8; ++b) {
            run(FunctionalEquation::diffx, {{"k", a}, {"l", b}});
            run(FunctionalEquation::difft, {{"k", a}, {"v", b}});
            run(FunctionalEquation::prod, {{"k1", a}, {"k2", b}});
        }
    }
    return {failures == 0, fmt("all FE-* with indices <= 8 at N=%d: %d/%d exact", order, checks - failures, checks)};
}

Outcome identity_suite()
{
    constexpr double limit = 60.0;
    const auto start = Clock::now();
    int checks = 0;
    int failures = 0;
    const auto tally = [&](const IdentityReport &r) {
        ++checks;
        failures += r.passed() ? 0 : 1;
    };
    for (int n = 0; n <= 15; ++n) {
        tally(verify_sum(n));
        tally(verify_alternating_sum(n));
    }
    for (int n = 0; n <= 8; ++n) {
        for (int j = 0; j <= n; ++j) {
            for (const auto v : {SubdivisionVariant::product, SubdivisionVariant::affine, SubdivisionVariant::trivariate}) {
                tally(verify_subdivision(v, n, j));
            }
        }
        for (int k1 = 0; k1 <= 4; ++k1) {
            for (int k2 = 0; k2 <= 4; ++k2) {
                tally(verify_product(n, k1, k2));
            }
        }
        for (int k = 0; 2 * k <= n; ++k) {
            tally(verify_two_point(n, k));
        }
    }
    for (int n = 0; n <= 12; ++n) {
        for (int l = 0; l <= n; ++l) {
            tally(verify_monomial(n, l));
        }
    }
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l <= n; ++l) {
                tally(verify_derivative(n, k, l));
                tally(verify_recurrence(n, k, l));
            }
            for (int d = 1; d <= 3; ++d) {
                tally(verify_degree_ops(DegreeOp::raise_x, n, k, d));
                tally(verify_degree_ops(DegreeOp::raise_1mx, n, k, d));
            }
            tally(verify_degree_ops(DegreeOp::elevation, n, k, 1));
            for (const auto v : {FiniteSum::tg1, FiniteSum::tg2, FiniteSum::tg5}) {
                tally(verify_finite_sum(v, n, k));
            }
        }
    }
    const double t = seconds_since(start);
    return {failures == 0 && t < limit,
            fmt("%d/%d exact passes, %.2fs (limit %.0fs)", checks - failures, checks, t, limit)};
}

Outcome oracle_agreement()
{
    constexpr int min_mutated = 20;
    int compared = 0;
    int disagreements = 0;
    int non_flips = 0;
    std::map<std::string, int> mutated;
    for (const auto &c : oracle::identity_cases(8)) {
        const auto sides = c.expand();
        for (const auto m : {Mutation::none, Mutation::rhs_constant, Mutation::rhs_prefactor, Mutation::rhs_leading}) {
            const bool expected = oracle::expected_pass(sides, m);
            const bool actual = c.run(m).passed();
            ++compared;
            if (expected != actual) {
                ++disagreements;
                std::fprintf(stderr, "oracle disagreement: %s %s mutation=%d\n", c.family.c_str(), c.label.c_str(),
                             static_cast<int>(m));
            }
            if (m == Mutation::none) {
                non_flips += actual ? 0 : 1;
            } else if (oracle::mutation_changes(sides, m)) {
                ++mutated[c.family];
                non_flips += actual ? 1 : 0;
            }
        }
    }
    std::string fewest;
    int fewest_count = 1 << 30;
    for (const auto &[family, count] : mutated) {
        if (count < fewest_count) {
            fewest_count = count;
            fewest = family;
        }
    }
    const bool ok = disagreements == 0 && non_flips == 0 && mutated.size() == 16 && fewest_count >= min_mutated;
    return {ok, fmt("n<=8: %d verdicts, %d disagreements, %d unflipped; %zu families, fewest mutated %d (%s), need %d",
                    compared, disagreements, non_flips, mutated.size(), fewest_count, fewest.c_str(), min_mutated)};
}

Outcome series()
{
    const Rational eps = Rational::parse("1e-9");
    int violations = 0;
    int sums = 0;
    long largest_required = 0;
    const auto sweep = [&](SeriesId id, const Rational &x) {
        for (int k = 0; k <= 3; ++k) {
            for (long n = k; n <= 200; ++n) {
                ++sums;
                violations += partial_sum(id, k, x, n).within_bound() ? 0 : 1;
            }
            const long required = required_terms(id, k, x, eps);
            largest_required = std::max(largest_required, required);
            violations += partial_sum(id, k, x, required).error() <= eps ? 0 : 1;
        }
    };
    for (const auto &x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        sweep(SeriesId::tg3, x);
    }
    for (const auto &x : {Rational(5, 8), Rational(3, 4), Rational(1)}) {
        sweep(SeriesId::tg4, x);
    }
    return {violations == 0, fmt("%d partial sums within certified bounds, %d violations; required_terms(1e-9) <= %ld",
                                 sums, violations, largest_required)};
}

Outcome laplace()
{
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k) {
        for (const auto &x : {Rational(1, 2), Rational(1), Rational(2)}) {
            worst = std::max(worst, laplace_monomial(k, x, 40.0 / x.to_double(), 1'000'000).relative_error);
        }
    }
    return {worst < 1e-6, fmt("k<=4, x in {1/2,1,2}, T=40/x, 1e6 steps: worst relative error %.2e (limit 1e-6)", worst)};
}

Outcome cli_contract()
{
    const std::string exe = BBVERIFY_PATH;
    const auto a = testing::run_command(exe + " --seed 7 2>/dev/null");
    const auto b = testing::run_command(exe + " --seed 7 2>/dev/null");
    const bool stable = a.exit_code == 0 && b.exit_code == 0 &&
                        testing::strip_wall_time(a.out) == testing::strip_wall_time(b.out);

    const auto small = testing::run_command(exe + " --max-degree 3 --egf-order 6 2>/dev/null");
    std::ifstream in(std::string(GOLDEN_DIR) + "/small_campaign.json", std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    const bool matches_golden = small.exit_code == 0 && testing::strip_wall_time(small.out) == golden.str();

    const auto mutated = testing::run_command(exe + " --mutate verify_product 2>/dev/null");
    bool witness = false;
    if (mutated.exit_code == 1) {
        const auto report = nlohmann::json::parse(mutated.out);
        for (const auto &r : report["results"]) {
            witness = witness || (r["verdict"] == "fail" && r.contains("witness"));
        }
    }
    const int usage = testing::run_command(exe + " --max-degree 10 --egf-order 5 >/dev/null 2>&1").exit_code;
    return {stable && matches_golden && witness && usage == 2,
            fmt("default runs byte-stable: %s; golden match: %s; --mutate exit %d with witness: %s; usage exit %d",
                stable ? "yes" : "no", matches_golden ? "yes" : "no", mutated.exit_code, witness ? "yes" : "no",
                usage)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"closed-form generating function", closed_form},
        {"functional equations", functional_equations},
        {"identity suite", identity_suite},
        {"oracle agreement", oracle_agreement},
        {"series TG3/TG4", series},
        {"laplace quadrature", laplace},
        {"cli determinism and exit codes", cli_contract},
    };
    int failed = 0;
    int index = 1;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", index++, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
