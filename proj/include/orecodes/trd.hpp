#ifndef ORECODES_TRD_HPP
#define ORECODES_TRD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "orecodes/orepoly.hpp"

namespace orecodes {

// Reduced trace of f: trace of x -> x f as a K[Z]-linear endomorphism of the
// Ore ring in the canonical basis 1, X, ..., X^{s-1}. Lands in F[Z].
CentralPoly trd_matrix(const OrePoly& f);

// Closed form: coefficientwise field trace on the twisted presentation
// (frobenius kind), resp. the trace form applied to the top canonical
// coefficient (differential kind). Agrees with trd_matrix.
CentralPoly trd_closed(const OrePoly& f);

// Top canonical-basis coefficient pi_{s-1}(f); K[Z]-linear form
// (differential kind).
CPoly sigma0(const OrePoly& f);

// Trace and norm forms extended to K[Z], with delta acting coefficientwise
// (differential kind).
CentralPoly tau_central(const CPoly& C);
CentralPoly upsilon_central(const CPoly& C);

// Roots in F of a central polynomial, with multiplicities, when it splits
// into linear factors over F; nullopt when it does not.
std::optional<std::vector<std::pair<Elem, int>>> f_rational_roots(const CentralPoly& d);

// Classical residue at Z = z of (num/den) dZ. The denominator is required
// to split over F; num may have coefficients in K.
Elem comm_residue(const CPoly& num, const CentralPoly& den, const Elem& z);
// Same, without the splitting check (callers that already validated den).
Elem comm_residue_unchecked(const CPoly& num, const CentralPoly& den, const Elem& z);

}  // namespace orecodes

#endif
