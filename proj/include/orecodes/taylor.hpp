#ifndef ORECODES_TAYLOR_HPP
#define ORECODES_TAYLOR_HPP

#include <optional>
#include <vector>

#include "orecodes/evalmap.hpp"
#include "orecodes/trd.hpp"

namespace orecodes {

// Truncated identification of the (Z - z)-adic completion with a power
// series ring over A+/NA+, N = Z - z. All data lives in the delta = 0
// presentation for the frobenius kind (the normalized ring ctx->twisted());
// for the differential kind the ring is unchanged.
//
// Y is the image of X: it satisfies Z(Y) = z mod N^M, Y = X mod N, and the
// defining commutation rule mod N^M, all verified by raw Ore arithmetic at
// construction.
struct AdmissibleIso {
    CtxPtr nctx;
    Elem z;
    int M = 0;
    OrePoly Y;
    CentralPoly N;
    std::vector<OrePoly> Npow;  // expansions of N^k, k = 0..M
    std::vector<OrePoly> Ypow;  // Y^j mod N^M, j = 0..s-1

    // Image of a class representative (degree < s) under X -> Y, mod N^M.
    OrePoly substitute(const OrePoly& rep) const;
};

// Successive-approximation construction; deterministic given the context.
// Differential kind: Y = X + a * zeta with zeta in F[Z];
// frobenius kind (twisted): Y = X * (1 + a * eta), requires z != 0.
// The unit a defaults to the context's tau_unit; tests may override it to
// probe independence of the choice.
AdmissibleIso build_admissible(const CtxPtr& ctx, const Elem& z, int M,
                               const Elem* tau_unit_override = nullptr);

// Truncated Taylor expansion at z. Coefficients are canonical class
// representatives (degree < s) in the user's coordinates; index k holds the
// coefficient of T^{valuation + k}. The window has `precision` entries.
struct TruncatedSeries {
    CtxPtr ctx;  // user ring
    Elem z;
    int valuation = 0;
    std::vector<OrePoly> coeffs;

    int precision() const { return static_cast<int>(coeffs.size()); }
    // Coefficient of T^e; zero below the valuation, error past the window.
    OrePoly coeff(int e) const;
};

TruncatedSeries ts(const OreFraction& f, const Elem& z, int M,
                   const Elem* tau_unit_override = nullptr);
TruncatedSeries ts(const OrePoly& f, const Elem& z, int M);

// Order of vanishing at z and the (choice-independent) leading coefficient.
std::pair<int, OrePoly> ord_and_principal(const OreFraction& f, const Elem& z,
                                          const Elem* tau_unit_override = nullptr);
int ord_at(const OreFraction& f, const Elem& z);

// Coefficient of T^{-1}; canonical whenever the pole is at most simple.
OrePoly sres(const OreFraction& f, const Elem& z, const Elem* tau_unit_override = nullptr);

// Residue of g D^{-1} at the i-th point through the cofactor formula, for
// D the multi-point annihilator of (points, spaces): the class of
// g * Nhat_i * D' mod N_i. Agrees with the series route.
OrePoly sres_simple(const OrePoly& g, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces, size_t i);

struct ResidueSummand {
    Elem z;
    int pole_order = 0;
    Elem value;  // T_rd of the skew residue, evaluated at z
};

struct ResidueReport {
    std::vector<ResidueSummand> points;
    Elem total;
    // True when the degree margin guarantees a vanishing total:
    // deg num <= deg den - 2 (differential) resp. deg den - s - 1
    // (frobenius; the wider margin also controls the places 0 and infinity,
    // which carry no explicit expansion here).
    bool degree_ok = false;
};

// Sum of T_rd(sres_z(f)) over the roots z of the denominator, which must
// split over F (frobenius kind: with nonzero roots only). Every summand is
// computed through the commutative residue of T_rd(f) dZ and cross-checked
// against the series route.
ResidueReport residue_sum(const OreFraction& f);

}  // namespace orecodes

#endif
