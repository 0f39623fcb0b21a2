#ifndef ORECODES_DUAL_HPP
#define ORECODES_DUAL_HPP

#include "orecodes/evalmap.hpp"

namespace orecodes {

// Anti-multiplicative involution of the (localized) Ore ring:
//   differential kind   sum a_i X^i  ->  sum (-X)^i a_i
//   frobenius kind      sum a_i Y^i  ->  sum Y^{-i} a_i   (Y = X + twist)
// On the centre it sends Z to -Z, resp. Z^{-1}.
OrePoly star(const OrePoly& f);          // differential kind only
LaurentOre star(const LaurentOre& f);    // frobenius kind
OreFraction star(const OreFraction& f);  // both kinds, canonical output

// Dual evaluation point: -c, resp. 1/(c + twist) - twist. Satisfies
// upsilon(c_dual) = -upsilon(c), resp. upsilon(c)^{-1}.
Elem c_dual(const CtxPtr& ctx, const Elem& c);

// Gram matrix of the pairing (x, y) -> tau(x y) on the fixed basis.
Matrix gram(const CtxPtr& ctx);
// Adjoint for that pairing: G^{-1} M^T G.
LinearOperator adjoint(const LinearOperator& op);
// Orthogonal complement for the same pairing.
Subspace orthogonal_subspace(const CtxPtr& ctx, const Subspace& V);

// Class representative of star(f) modulo Z - upsilon(c_dual(c)), mapped back
// to a polynomial of degree < s in the user's coordinates (negative powers of
// Z act through the scalar upsilon value).
OrePoly star_mod_point(const OrePoly& f, const Elem& c);

// Degree < s representative of a Laurent element modulo Z - z, in the user's
// coordinates (frobenius kind, z != 0).
OrePoly reduce_laurent_at(const LaurentOre& f, const CtxPtr& user_ctx, const Elem& z);

}  // namespace orecodes

#endif
