#ifndef BBF_IDENTITIES_HPP
#define BBF_IDENTITIES_HPP

#include <bbf/report.hpp>

namespace bbf
{

// Exact checks of the classical and generating-function-derived identities for
// the Bernstein basis. Each check expands both sides to canonical polynomials
// and compares them; the trivariate subdivision identity is instead evaluated
// on a rational tensor grid large enough to determine a polynomial of its
// degree. Out-of-range parameters throw std::invalid_argument.

IdentityReport verify_sum(int n, Mutation mutation = Mutation::none);
IdentityReport verify_alternating_sum(int n, Mutation mutation = Mutation::none);

enum class SubdivisionVariant { product, affine, trivariate };

// grid_margin: nodes per variable beyond the n + 1 required (trivariate only).
IdentityReport verify_subdivision(SubdivisionVariant variant, int n, int j, Mutation mutation = Mutation::none,
                                  int grid_margin = 1);

IdentityReport verify_monomial(int n, int l, Mutation mutation = Mutation::none);
IdentityReport verify_derivative(int n, int k, int l, Mutation mutation = Mutation::none);
IdentityReport verify_recurrence(int n, int k, int v, Mutation mutation = Mutation::none);

enum class DegreeOp { raise_x, raise_1mx, elevation };

// elevation accepts d = 1 only.
IdentityReport verify_degree_ops(DegreeOp op, int n, int k, int d, Mutation mutation = Mutation::none);

IdentityReport verify_product(int n, int k1, int k2, Mutation mutation = Mutation::none);

// Requires n >= 2k (std::domain_error otherwise); below that the falling
// factorial (n)_{2k} vanishes.
IdentityReport verify_two_point(int n, int k, Mutation mutation = Mutation::none);

enum class FiniteSum { tg1, tg2, tg5 };

// Requires 0 <= k <= n. tg1 is checked multiplied through by x^k; tg5 uses
// the branch condition n = k.
IdentityReport verify_finite_sum(FiniteSum variant, int n, int k, Mutation mutation = Mutation::none);

} // namespace bbf

#endif
