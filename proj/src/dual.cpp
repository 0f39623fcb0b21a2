#include "orecodes/dual.hpp"

namespace orecodes {

OrePoly star(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    if (ctx->kind() != CtxKind::differential)
        fail_precond("star on plain polynomials needs the differential kind; use the Laurent or fraction form");
    OrePoly acc = OrePoly::zero(ctx);
    OrePoly mX = -OrePoly::X(ctx);
    OrePoly p = OrePoly::one(ctx);
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        acc = acc + p * OrePoly::constant(ctx, f.coeffs()[i]);
        if (i + 1 < f.coeffs().size()) p = p * mX;
    }
    return acc;
}

LaurentOre star(const LaurentOre& f) {
    const CtxPtr& ctx = f.ctx();
    if (f.is_zero()) return f;
    // sum a_i Y^i -> sum Y^{-i} a_i = sum theta^{-i}(a_i) Y^{-i}
    int lo = -f.top();
    std::vector<Elem> c(f.coeffs().size(), ctx->zero());
    for (int e = f.valuation(); e <= f.top(); ++e)
        c[static_cast<size_t>(-e - lo)] = ctx->theta_pow(f.coeff(e), -e);
    return LaurentOre(ctx, lo, std::move(c));
}

OreFraction star(const OreFraction& f) {
    const CtxPtr& ctx = f.ctx();
    if (f.is_zero()) return f;
    if (ctx->kind() == CtxKind::differential) {
        // central denominator transforms by Z -> -Z
        std::vector<Elem> dc = f.den().raw().coeffs();
        for (size_t j = 1; j < dc.size(); j += 2) dc[j] = -dc[j];
        return OreFraction(star(f.num()), CentralPoly(ctx, std::move(dc)));
    }
    // frobenius: work in Laurent form and clear the Z powers afterwards.
    const CtxPtr nctx = ctx->twisted();
    LaurentOre sn = star(to_laurent(f.num()));
    const auto& dc = f.den().raw().coeffs();
    const int dd = f.den().degree();
    // star(den) = Z^{-dd} * rev(den); multiply both sides by Z^k so that the
    // numerator becomes polynomial.
    int k = dd;
    while (sn.valuation() + ctx->s() * k < 0) ++k;
    LaurentOre num_shift = sn.shift(ctx->s() * k);  // Z central: Y^{sk} * sn
    std::vector<Elem> rev(static_cast<size_t>(k) + 1, ctx->zero());
    for (int j = 0; j <= dd; ++j) rev[static_cast<size_t>(k - j)] = dc[static_cast<size_t>(j)];
    return OreFraction(from_laurent(ctx, num_shift), CentralPoly(ctx, std::move(rev)));
}

Elem c_dual(const CtxPtr& ctx, const Elem& c) {
    require_unramified(ctx, c);
    if (ctx->kind() == CtxKind::differential) return -c;
    return (c + ctx->twist()).inv() - ctx->twist();
}

Matrix gram(const CtxPtr& ctx) {
    const size_t s = static_cast<size_t>(ctx->s());
    Matrix g(ctx->K(), s, s);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) g.at(i, j) = ctx->tau(ctx->basis()[i] * ctx->basis()[j]);
    return g;
}

LinearOperator adjoint(const LinearOperator& op) {
    Matrix g = gram(op.ctx);
    auto ginv = g.inverse();
    require_internal(ginv.has_value(), "degenerate trace pairing");
    return LinearOperator(op.ctx, (*ginv) * op.m.transpose() * g);
}

Subspace orthogonal_subspace(const CtxPtr& ctx, const Subspace& V) {
    // x in V_perp  <=>  basis(V)^T G x = 0
    Matrix sys = V.basis().transpose() * gram(ctx);
    return Subspace::span(sys.kernel());
}

OrePoly reduce_laurent_at(const LaurentOre& f, const CtxPtr& user_ctx, const Elem& z) {
    if (z.is_zero()) fail_precond("cannot reduce a Laurent element at zero");
    if (f.is_zero()) return OrePoly::zero(user_ctx);
    const int s = user_ctx->s();
    // Y^e = z^q Y^{e - qs} mod (Z - z), q = floor(e / s)
    std::vector<Elem> rep(static_cast<size_t>(s), user_ctx->zero());
    for (int e = f.valuation(); e <= f.top(); ++e) {
        Elem a = f.coeff(e);
        if (a.is_zero()) continue;
        int q = e >= 0 ? e / s : -((-e + s - 1) / s);
        int rexp = e - q * s;  // in [0, s)
        Elem scaled = q >= 0 ? a * z.pow(static_cast<uint64_t>(q))
                             : a * z.inv().pow(static_cast<uint64_t>(-q));
        rep[static_cast<size_t>(rexp)] = rep[static_cast<size_t>(rexp)] + scaled;
    }
    OrePoly tw(user_ctx->twisted(), std::move(rep));
    return from_twisted(user_ctx, tw);
}

OrePoly star_mod_point(const OrePoly& f, const Elem& c) {
    const CtxPtr& ctx = f.ctx();
    Elem cd = c_dual(ctx, c);
    Elem zbar = ctx->upsilon(cd);
    if (ctx->kind() == CtxKind::differential) {
        OrePoly g = star(f);
        return ore_mod(g, expand(CentralPoly::linear(ctx, zbar)));
    }
    return reduce_laurent_at(star(to_laurent(f)), ctx, zbar);
}

}  // namespace orecodes
