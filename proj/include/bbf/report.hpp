#ifndef BBF_REPORT_HPP
#define BBF_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <bbf/poly.hpp>
#include <bbf/rational.hpp>

namespace bbf
{

// Every check the library can run. The order here is the report sort order.
enum class IdentityId {
    egf_closed_form,
    fe_sum,
    fe_alt,
    fe_g1,
    fe_g2,
    fe_g3,
    fe_sub,
    fe_mono,
    fe_diffx,
    fe_difft,
    fe_prod,
    fe_xy,
    sum,
    alternating_sum,
    subdivision_product,
    subdivision_affine,
    subdivision_trivariate,
    monomial,
    derivative,
    recurrence,
    degree_raise_x,
    degree_raise_1mx,
    degree_elevation,
    product,
    two_point,
    finite_sum_tg1,
    finite_sum_tg2,
    finite_sum_tg5,
    basis_roundtrip,
    basis_de_casteljau,
    series_tg3,
    series_tg4,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view summary;
};

std::span<const IdentityInfo> identity_catalog();
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

// Perturbations used to exercise failure paths. rhs_constant adds 1 to the
// constant term of the right-hand side (always a change). rhs_prefactor
// replaces the scalar prefactor c of the right-hand side by c + 1, which is a
// change only when the remaining factor is nonzero. rhs_leading adds the
// monomial x^a y^b whose exponents are the per-variable degrees of the
// unmutated right-hand side ((x y z)^n for the trivariate grid check, the top
// coefficient for generating functions), again always a change.
enum class Mutation { none, rhs_constant, rhs_prefactor, rhs_leading };

enum class Verdict { pass, fail };
enum class Method { symbolic, grid };

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);

// Ordered name -> integer parameter list; order is preserved in reports.
using Params = std::vector<std::pair<std::string, long>>;

// Lookup that throws std::invalid_argument when the name is absent.
long param(const Params &params, std::string_view name);

struct Witness {
    // Index n of the first differing t^n/n! coefficient, for generating
    // function checks.
    std::optional<int> egf_index;
    // Exponents of the first differing monomial (symbolic checks).
    std::vector<std::pair<std::string, int>> monomial;
    // Evaluation point (grid checks).
    std::vector<std::pair<std::string, Rational>> point;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    IdentityId id;
    Params params;
    Verdict verdict = Verdict::pass;
    Method method = Method::symbolic;
    std::optional<Witness> witness{};
    std::string note{};

    bool passed() const noexcept { return verdict == Verdict::pass; }
};

IdentityReport compare_symbolic(IdentityId id, Params params, const Poly1 &lhs, const Poly1 &rhs);
IdentityReport compare_symbolic(IdentityId id, Params params, const Poly2 &lhs, const Poly2 &rhs);

// Mutation applied to a right-hand side written as prefactor * body.
Poly1 apply_mutation(Mutation m, const Rational &prefactor, const Poly1 &body);
Poly2 apply_mutation(Mutation m, const Rational &prefactor, const Poly2 &body);

} // namespace bbf

#endif
