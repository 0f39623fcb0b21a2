#include "orecodes/evalmap.hpp"

namespace orecodes {

Elem LinearOperator::apply(const Elem& x) const {
    return ctx->from_coords(m.apply(ctx->coords(x)));
}

LinearOperator LinearOperator::compose(const LinearOperator& o) const {
    return LinearOperator(ctx, m * o.m);
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
    return LinearOperator(ctx, m + o.m);
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const {
    return LinearOperator(ctx, m - o.m);
}

LinearOperator zero_operator(const CtxPtr& ctx) {
    return LinearOperator(ctx, Matrix(ctx->K(), static_cast<size_t>(ctx->s()), static_cast<size_t>(ctx->s())));
}

LinearOperator identity_operator(const CtxPtr& ctx) {
    return LinearOperator(ctx, Matrix::identity(ctx->K(), static_cast<size_t>(ctx->s())));
}

Elem pseudo_apply(const CtxPtr& ctx, const Elem& c, const Elem& x) {
    return ctx->delta(x) + c * ctx->theta(x);
}

LinearOperator operator_matrix(const CtxPtr& ctx, const Elem& c) {
    std::vector<Elem> images;
    images.reserve(ctx->basis().size());
    for (const Elem& b : ctx->basis()) images.push_back(pseudo_apply(ctx, c, b));
    return LinearOperator(ctx, ctx->matrix_of(images));
}

LinearOperator mul_operator(const CtxPtr& ctx, const Elem& a) {
    std::vector<Elem> images;
    images.reserve(ctx->basis().size());
    for (const Elem& b : ctx->basis()) images.push_back(a * b);
    return LinearOperator(ctx, ctx->matrix_of(images));
}

LinearOperator ev(const OrePoly& P, const Elem& c) {
    const CtxPtr& ctx = P.ctx();
    LinearOperator u = operator_matrix(ctx, c);
    LinearOperator acc = zero_operator(ctx);
    LinearOperator upow = identity_operator(ctx);
    for (size_t i = 0; i < P.coeffs().size(); ++i) {
        if (!P.coeffs()[i].is_zero()) acc = acc + mul_operator(ctx, P.coeffs()[i]).compose(upow);
        if (i + 1 < P.coeffs().size()) upow = u.compose(upow);
    }
    return acc;
}

void require_unramified(const CtxPtr& ctx, const Elem& c) {
    if (ctx->is_ramified(c)) fail_precond("ramified evaluation point");
}

Subspace ev_kernel(const OrePoly& P, const Elem& c) {
    require_unramified(P.ctx(), c);
    Matrix k = ev(P, c).m.kernel();
    return Subspace::span(k);
}

OrePoly annihilator(const CtxPtr& ctx, const Elem& c, const Subspace& V) {
    require_unramified(ctx, c);
    // process basis vectors in order, annihilating each with a degree-1
    // factor X - u(w)/w and pushing the rest through
    std::vector<Elem> vecs;
    for (size_t j = 0; j < V.dim(); ++j) vecs.push_back(ctx->from_coords(V.basis().column(j)));
    OrePoly P = OrePoly::one(ctx);
    for (size_t j = 0; j < vecs.size(); ++j) {
        Elem w = ev(P, c).apply(vecs[j]);
        if (w.is_zero()) continue;
        OrePoly lin(ctx, {-(pseudo_apply(ctx, c, w) / w), ctx->one()});
        P = lin * P;
    }
    require_internal(P.degree() == static_cast<int>(V.dim()), "annihilator degree mismatch");
    return P;
}

void require_distinct_upsilons(const CtxPtr& ctx, const std::vector<Elem>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (ctx->upsilon(points[i]) == ctx->upsilon(points[j]))
                fail_precond("evaluation points with equal upsilon values");
}

OrePoly multi_annihilator(const CtxPtr& ctx, const std::vector<Elem>& points,
                          const std::vector<Subspace>& spaces) {
    if (points.empty() || points.size() != spaces.size()) fail_invalid("points and subspaces must align");
    for (const Elem& c : points) require_unramified(ctx, c);
    require_distinct_upsilons(ctx, points);
    OrePoly D = OrePoly::one(ctx);
    size_t total = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        total += spaces[i].dim();
        OrePoly Pi = annihilator(ctx, points[i], spaces[i]);
        if (Pi.degree() == 0) continue;
        D = D.degree() == 0 ? Pi : ore_lclm(D, Pi);
    }
    require_internal(D.degree() == static_cast<int>(total), "multi-point annihilator degree mismatch");
    return D;
}

CentralPoly point_modulus(const CtxPtr& ctx, const std::vector<Elem>& points) {
    CentralPoly N = CentralPoly::one(ctx);
    for (const Elem& c : points) N = N * CentralPoly::linear(ctx, ctx->upsilon(c));
    return N;
}

OrePoly complement_cofactor(const OrePoly& D, const std::vector<Elem>& points,
                            const std::vector<Subspace>& spaces) {
    (void)spaces;
    const CtxPtr& ctx = D.ctx();
    OrePoly N = expand(point_modulus(ctx, points));
    auto [q, r] = ore_divmod_right(N, D);
    require_internal(r.is_zero(), "annihilator does not divide the point modulus");
    require_internal(D * q == N, "cofactor does not commute past the annihilator");
    return q;
}

}  // namespace orecodes
