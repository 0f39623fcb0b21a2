#include "orecodes/taylor.hpp"

#include <algorithm>

namespace orecodes {

namespace {

CentralPoly rebase(const CentralPoly& c, const CtxPtr& target) {
    return CentralPoly(target, c.raw().coeffs());
}

// Multiplicity of z as a root, removing the factors from d.
int strip_root(CentralPoly& d, const Elem& z) {
    const CtxPtr& ctx = d.ctx();
    CentralPoly lin = CentralPoly::linear(ctx, z);
    int m = 0;
    while (!d.is_zero() && d.eval(z).is_zero()) {
        auto [q, r] = d.divmod(lin);
        require_internal(r.is_zero(), "inexact deflation");
        d = q;
        ++m;
    }
    return m;
}

}  // namespace

OrePoly AdmissibleIso::substitute(const OrePoly& rep) const {
    OrePoly acc = OrePoly::zero(nctx);
    for (size_t j = 0; j < rep.coeffs().size(); ++j) {
        if (rep.coeffs()[j].is_zero()) continue;
        acc = acc + Ypow[j].left_scale(rep.coeffs()[j]);
    }
    return ore_mod(acc, Npow[static_cast<size_t>(M)]);
}

AdmissibleIso build_admissible(const CtxPtr& ctx, const Elem& z, int M,
                               const Elem* tau_unit_override) {
    if (M < 1) fail_precond("truncation order must be >= 1");
    const CtxPtr nctx = ctx->twisted();
    nctx->K()->check_elem(z);
    if (!nctx->in_F(z)) fail_precond("expansion point must lie in F");
    if (nctx->kind() == CtxKind::frobenius && z.is_zero())
        fail_precond("expansion at zero is not available in the frobenius kind");

    const Elem a = tau_unit_override ? *tau_unit_override : nctx->tau_unit();
    require_internal(nctx->tau(a).is_one(), "tau unit is not normalized");
    const size_t s = static_cast<size_t>(nctx->s());

    AdmissibleIso iso;
    iso.nctx = nctx;
    iso.z = z;
    iso.M = M;
    iso.N = CentralPoly::linear(nctx, z);

    // Newton updates happen entirely inside F[Z]; each step contributes a
    // scalar multiple of N^m.
    CentralPoly NM = iso.N.pow(static_cast<uint64_t>(M));
    CPoly correction = CPoly::zero(nctx);  // zeta resp. eta, in F[Z]
    for (int m = 1; m < M; ++m) {
        CPoly residual;  // Z(Y_m) - z as an element of K[Z]
        if (nctx->kind() == CtxKind::differential) {
            residual = (CPoly::Z(nctx) - CPoly::constant(nctx, z)) +
                       upsilon_central(correction.scale(a)).raw();
        } else {
            CPoly prod = CPoly::one(nctx);
            for (size_t i = 0; i < s; ++i)
                prod = prod * (CPoly::one(nctx) + correction.scale(nctx->theta_pow(a, static_cast<int>(i))));
            prod = prod.divmod(NM.raw().pow(2)).second;  // keep sizes bounded
            residual = CPoly::Z(nctx) * prod - CPoly::constant(nctx, z);
        }
        CentralPoly rho(residual);
        auto [q, r] = rho.divmod(iso.N.pow(static_cast<uint64_t>(m)));
        require_internal(r.is_zero(), "residual not divisible by N^m");
        Elem scalar = -q.eval(z);
        if (nctx->kind() == CtxKind::frobenius) scalar = scalar / z;
        if (!scalar.is_zero())
            correction = correction + iso.N.pow(static_cast<uint64_t>(m)).raw().scale(scalar);
    }

    OrePoly corr_poly = expand(CPoly(nctx, correction.coeffs()));
    if (nctx->kind() == CtxKind::differential) {
        iso.Y = OrePoly::X(nctx) + corr_poly.left_scale(a);
    } else {
        iso.Y = OrePoly::X(nctx) * (OrePoly::one(nctx) + corr_poly.left_scale(a));
    }

    iso.Npow.reserve(static_cast<size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) iso.Npow.push_back(expand(iso.N.pow(static_cast<uint64_t>(k))));
    iso.Y = ore_mod(iso.Y, iso.Npow[static_cast<size_t>(M)]);
    iso.Ypow.reserve(s);
    OrePoly yp = OrePoly::one(nctx);
    for (size_t j = 0; j < s; ++j) {
        iso.Ypow.push_back(yp);
        if (j + 1 < s) yp = ore_mod(yp * iso.Y, iso.Npow[static_cast<size_t>(M)]);
    }

    // Postconditions, via raw Ore arithmetic.
    OrePoly zy = OrePoly::zero(nctx);
    if (nctx->kind() == CtxKind::differential) {
        int64_t pk = 1;
        for (size_t i = 0; i < nctx->zcoeffs().size(); ++i) {
            zy = zy + iso.Y.pow(static_cast<uint64_t>(pk)).left_scale(nctx->zcoeffs()[i]);
            pk *= nctx->p();
        }
    } else {
        zy = iso.Y.pow(static_cast<uint64_t>(s));
    }
    zy = zy - OrePoly::constant(nctx, z);
    require_internal(ore_mod(zy, iso.Npow[static_cast<size_t>(M)]).is_zero(),
                     "Z(Y) - z does not vanish to the requested order");
    require_internal(ore_mod(iso.Y - OrePoly::X(nctx), iso.Npow[1]).is_zero(),
                     "Y does not reduce to X modulo N");
    for (const Elem& b : nctx->basis()) {
        OrePoly lhs = iso.Y * OrePoly::constant(nctx, b);
        OrePoly rhs = OrePoly::constant(nctx, nctx->theta(b)) * iso.Y +
                      OrePoly::constant(nctx, nctx->delta(b));
        require_internal(ore_mod(lhs - rhs, iso.Npow[static_cast<size_t>(M)]).is_zero(),
                         "substitution image violates the commutation rule");
    }
    return iso;
}

namespace {

// Series coefficients of a polynomial: M class representatives.
std::vector<OrePoly> ts_poly_normalized(const OrePoly& f, const AdmissibleIso& iso) {
    const int M = iso.M;
    std::vector<OrePoly> out;
    out.reserve(static_cast<size_t>(M));
    OrePoly h = ore_mod(f, iso.Npow[static_cast<size_t>(M)]);
    for (int k = 0; k < M; ++k) {
        OrePoly g = ore_mod(h, iso.Npow[1]);
        out.push_back(g);
        if (k + 1 < M) {
            OrePoly next = ore_div_exact(h - iso.substitute(g), iso.Npow[1]);
            h = ore_mod(next, iso.Npow[static_cast<size_t>(M - k - 1)]);
        }
    }
    return out;
}

// (Z-z)-adic valuation; also divides the factors out. Zero input is an error.
int strip_n_valuation(OrePoly& f, const OrePoly& n_expanded) {
    require_internal(!f.is_zero(), "valuation of zero");
    int v = 0;
    while (true) {
        auto [q, r] = ore_divmod_right(f, n_expanded);
        if (!r.is_zero()) break;
        f = q;
        ++v;
    }
    return v;
}

}  // namespace

OrePoly TruncatedSeries::coeff(int e) const {
    if (e < valuation) return OrePoly::zero(ctx);
    if (e >= valuation + precision()) fail_invalid("series coefficient beyond the computed window");
    return coeffs[static_cast<size_t>(e - valuation)];
}

namespace {

struct FracShape {
    OrePoly num;      // twisted presentation, all N factors removed
    CentralPoly den;  // rebased, deflated at z
    int val = 0;
};

FracShape frac_shape(const OreFraction& f, const Elem& z) {
    const CtxPtr nctx = f.ctx()->twisted();
    nctx->K()->check_elem(z);
    if (!nctx->in_F(z)) fail_precond("expansion point must lie in F");
    if (nctx->kind() == CtxKind::frobenius && z.is_zero())
        fail_precond("expansion at zero is not available in the frobenius kind");
    FracShape sh;
    sh.num = to_twisted(f.num());
    int v1 = strip_n_valuation(sh.num, expand(CentralPoly::linear(nctx, z)));
    sh.den = rebase(f.den(), nctx);
    int v2 = strip_root(sh.den, z);
    sh.val = v1 - v2;
    return sh;
}

}  // namespace

TruncatedSeries ts(const OreFraction& f, const Elem& z, int M, const Elem* tau_unit_override) {
    const CtxPtr& ctx = f.ctx();
    TruncatedSeries out;
    out.ctx = ctx;
    out.z = z;
    if (f.is_zero()) {
        out.valuation = 0;
        return out;
    }
    FracShape sh = frac_shape(f, z);
    out.valuation = sh.val;
    AdmissibleIso iso = build_admissible(ctx, z, M, tau_unit_override);
    const CtxPtr& nctx = iso.nctx;
    const OrePoly& num = sh.num;
    const CentralPoly& den = sh.den;

    std::vector<OrePoly> coeffs_n = ts_poly_normalized(num, iso);

    // invert the (scalar) series of the deflated denominator
    std::vector<Elem> e;
    {
        CentralPoly lin = CentralPoly::linear(nctx, z);
        CentralPoly w = den;
        for (int k = 0; k < M; ++k) {
            auto [q, r] = w.divmod(lin);
            e.push_back(r.is_zero() ? nctx->zero() : r.coeff(0));
            w = q;
        }
    }
    require_internal(!e[0].is_zero(), "deflated denominator vanishes at the point");
    std::vector<Elem> einv(static_cast<size_t>(M), nctx->zero());
    Elem e0_inv = e[0].inv();
    for (int k = 0; k < M; ++k) {
        Elem acc = (k == 0) ? nctx->one() : nctx->zero();
        for (int j = 0; j < k; ++j) acc = acc - einv[static_cast<size_t>(j)] * e[static_cast<size_t>(k - j)];
        einv[static_cast<size_t>(k)] = acc * e0_inv;
    }

    out.coeffs.reserve(static_cast<size_t>(M));
    for (int k = 0; k < M; ++k) {
        OrePoly acc = OrePoly::zero(nctx);
        for (int j = 0; j <= k; ++j) {
            const Elem& sc = einv[static_cast<size_t>(k - j)];
            if (!sc.is_zero()) acc = acc + coeffs_n[static_cast<size_t>(j)].left_scale(sc);
        }
        out.coeffs.push_back(from_twisted(ctx, acc));
    }
    return out;
}

TruncatedSeries ts(const OrePoly& f, const Elem& z, int M) {
    return ts(OreFraction(f), z, M);
}

std::pair<int, OrePoly> ord_and_principal(const OreFraction& f, const Elem& z,
                                          const Elem* tau_unit_override) {
    if (f.is_zero()) fail_precond("order of vanishing of the zero function");
    TruncatedSeries s = ts(f, z, 1, tau_unit_override);
    require_internal(!s.coeffs[0].is_zero(), "leading series coefficient vanished");
    return {s.valuation, s.coeffs[0]};
}

int ord_at(const OreFraction& f, const Elem& z) {
    if (f.is_zero()) fail_precond("order of vanishing of the zero function");
    return frac_shape(f, z).val;
}

OrePoly sres(const OreFraction& f, const Elem& z, const Elem* tau_unit_override) {
    const CtxPtr& ctx = f.ctx();
    if (f.is_zero()) return OrePoly::zero(ctx);
    int v = frac_shape(f, z).val;
    if (v >= 0) return OrePoly::zero(ctx);
    TruncatedSeries s = ts(f, z, -v, tau_unit_override);
    return s.coeff(-1);
}

OrePoly sres_simple(const OrePoly& g, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces, size_t i) {
    const CtxPtr& ctx = g.ctx();
    if (i >= points.size()) fail_invalid("point index out of range");
    OrePoly D = multi_annihilator(ctx, points, spaces);
    OrePoly Dp = complement_cofactor(D, points, spaces);
    Elem zi = ctx->upsilon(points[i]);
    CentralPoly Ni = CentralPoly::linear(ctx, zi);
    // scalar inverse of (N / N_i)(z_i)
    Elem nv = ctx->one();
    for (size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        nv = nv * (zi - ctx->upsilon(points[j]));
    }
    OrePoly rep = (g * Dp).left_scale(nv.inv());
    return ore_mod(rep, expand(Ni));
}

ResidueReport residue_sum(const OreFraction& f) {
    const CtxPtr& ctx = f.ctx();
    auto roots = f_rational_roots(f.den());
    if (!roots) fail_precond("denominator does not split over F");

    ResidueReport rep;
    rep.total = ctx->zero();
    const int s = ctx->s();
    const int den_deg = f.den().degree() * s;
    const int margin = ctx->kind() == CtxKind::frobenius ? s + 1 : 2;
    rep.degree_ok = !f.is_zero() && f.num().degree() <= den_deg - margin;
    if (f.is_zero()) {
        rep.degree_ok = true;
        return rep;
    }

    CentralPoly trd_num = trd_closed(f.num());
    for (const auto& [z, mult] : *roots) {
        if (ctx->kind() == CtxKind::frobenius && z.is_zero())
            fail_precond("frobenius-kind residues require nonzero denominator roots");
        ResidueSummand sm;
        sm.z = z;
        sm.pole_order = mult;
        sm.value = comm_residue_unchecked(trd_num.raw(), f.den(), z);
        // cross-check through the series machinery
        OrePoly r = sres(f, z);
        Elem via_series = trd_closed(r).eval(z);
        require_internal(sm.value == via_series,
                         "trace of the skew residue disagrees with the commutative residue");
        rep.total = rep.total + sm.value;
        rep.points.push_back(std::move(sm));
    }
    return rep;
}

}  // namespace orecodes
