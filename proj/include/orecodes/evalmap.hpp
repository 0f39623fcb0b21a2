#ifndef ORECODES_EVALMAP_HPP
#define ORECODES_EVALMAP_HPP

#include <vector>

#include "orecodes/orepoly.hpp"

namespace orecodes {

// F-linear endomorphism of K, as the s x s matrix on the fixed basis
// (columns = images of the basis vectors, entries in F).
struct LinearOperator {
    CtxPtr ctx;
    Matrix m;

    LinearOperator() = default;
    LinearOperator(CtxPtr c, Matrix mat) : ctx(std::move(c)), m(std::move(mat)) {}

    Elem apply(const Elem& x) const;
    LinearOperator compose(const LinearOperator& o) const;  // this after o
    LinearOperator operator+(const LinearOperator& o) const;
    LinearOperator operator-(const LinearOperator& o) const;
    bool operator==(const LinearOperator& o) const { return m == o.m; }
    bool operator!=(const LinearOperator& o) const { return !(*this == o); }
    bool is_zero() const { return m.is_zero(); }
    Elem trace() const { return m.trace(); }
    size_t rank() const { return m.rank(); }
};

LinearOperator zero_operator(const CtxPtr& ctx);
LinearOperator identity_operator(const CtxPtr& ctx);
// Matrix of delta + c * theta.
LinearOperator operator_matrix(const CtxPtr& ctx, const Elem& c);
// Matrix of multiplication by a.
LinearOperator mul_operator(const CtxPtr& ctx, const Elem& a);

// The pseudo-linear point map u = delta + c*theta applied directly.
Elem pseudo_apply(const CtxPtr& ctx, const Elem& c, const Elem& x);

// Evaluation of P at the pseudo-linear endomorphism delta + c*theta:
// ring homomorphism into End_F(K).
LinearOperator ev(const OrePoly& P, const Elem& c);

void require_unramified(const CtxPtr& ctx, const Elem& c);

// Kernel of ev(P, c) as a canonical subspace; dim <= deg P for
// unramified c.
Subspace ev_kernel(const OrePoly& P, const Elem& c);

// Unique monic P with ker(ev(P, c)) = V and deg P = dim V.
OrePoly annihilator(const CtxPtr& ctx, const Elem& c, const Subspace& V);

void require_distinct_upsilons(const CtxPtr& ctx, const std::vector<Elem>& points);

// Unique monic D of degree sum dim V_i with ev(D, c_i) vanishing on V_i;
// requires unramified points with pairwise distinct upsilon values.
OrePoly multi_annihilator(const CtxPtr& ctx, const std::vector<Elem>& points,
                          const std::vector<Subspace>& spaces);

// N = prod (Z - upsilon(c_i)) as a central polynomial.
CentralPoly point_modulus(const CtxPtr& ctx, const std::vector<Elem>& points);

// D' with D' D = D D' = N.
OrePoly complement_cofactor(const OrePoly& D, const std::vector<Elem>& points,
                            const std::vector<Subspace>& spaces);

}  // namespace orecodes

#endif
