#include "orecodes/trd.hpp"

#include <algorithm>

namespace orecodes {

CentralPoly trd_matrix(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    const size_t s = static_cast<size_t>(ctx->s());
    CPoly tr = CPoly::zero(ctx);
    OrePoly xi = OrePoly::one(ctx);
    OrePoly X = OrePoly::X(ctx);
    for (size_t i = 0; i < s; ++i) {
        std::vector<CPoly> col = centre_coords(xi * f);
        tr = tr + col[i];
        if (i + 1 < s) xi = X * xi;
    }
    return CentralPoly(tr);  // verifies the value lies in F[Z]
}

CentralPoly trd_closed(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    if (ctx->kind() == CtxKind::differential) return tau_central(sigma0(f));
    // coefficientwise trace of the Y^{s i} coefficients on the twisted side
    OrePoly g = to_twisted(f);
    const size_t s = static_cast<size_t>(ctx->s());
    std::vector<Elem> out;
    for (size_t j = 0; j * s < g.coeffs().size(); ++j) out.push_back(ctx->tau(g.coeff(j * s)));
    return CentralPoly(ctx, std::move(out));
}

CPoly sigma0(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    if (ctx->kind() != CtxKind::differential) fail_precond("sigma0 is defined in the differential kind");
    return centre_coords(f).back();
}

namespace {
CPoly delta_coeffwise(const CPoly& C, int k) {
    const CtxPtr& ctx = C.ctx();
    std::vector<Elem> c = C.coeffs();
    for (int it = 0; it < k; ++it)
        for (Elem& a : c) a = ctx->delta(a);
    return CPoly(ctx, std::move(c));
}
}  // namespace

CentralPoly tau_central(const CPoly& C) {
    const CtxPtr& ctx = C.ctx();
    if (ctx->kind() != CtxKind::differential) fail_precond("tau_central is defined in the differential kind");
    CPoly r = CPoly::zero(ctx);
    int64_t pk = 1;
    for (size_t i = 0; i < ctx->zcoeffs().size(); ++i) {
        r = r + delta_coeffwise(C, static_cast<int>(pk - 1)).scale(ctx->zcoeffs()[i]);
        pk *= ctx->p();
    }
    return CentralPoly(r);
}

CentralPoly upsilon_central(const CPoly& C) {
    const CtxPtr& ctx = C.ctx();
    if (ctx->kind() != CtxKind::differential) fail_precond("upsilon_central is defined in the differential kind");
    CPoly r = CPoly::zero(ctx);
    for (size_t i = 0; i < ctx->zcoeffs().size(); ++i) {
        int64_t pj = 1;
        for (size_t j = 0; j <= i; ++j) {
            CPoly term = delta_coeffwise(C, static_cast<int>(pj - 1)).scale(ctx->zcoeffs()[i]);
            uint64_t exp = 1;
            for (size_t k = 0; k < i - j; ++k) exp *= static_cast<uint64_t>(ctx->p());
            r = r + term.pow(exp);
            pj *= ctx->p();
        }
    }
    return CentralPoly(r);
}

// --- root extraction over F --------------------------------------------------

namespace {

// Factor a polynomial over F_p into monic irreducibles by trial division,
// smallest degree first.
std::vector<std::pair<FPoly, int>> factor_prime_poly(const FieldPtr& fp, FPoly f) {
    std::vector<std::pair<FPoly, int>> out;
    f = fp_monic(fp, fp_trim(std::move(f)));
    std::vector<Elem> elems = fp->all_elements();
    while (fp_deg(f) > 0) {
        FPoly factor = f;  // fallback: f itself is irreducible
        bool found = false;
        for (int k = 1; !found && 2 * k <= fp_deg(f); ++k) {
            std::vector<size_t> idx(static_cast<size_t>(k), 0);
            while (true) {
                FPoly cand(static_cast<size_t>(k) + 1, fp->zero());
                for (int i = 0; i < k; ++i) cand[static_cast<size_t>(i)] = elems[idx[static_cast<size_t>(i)]];
                cand[static_cast<size_t>(k)] = fp->one();
                if (fp_is_zero(fp_mod(fp, f, cand))) {
                    factor = cand;
                    found = true;
                    break;
                }
                size_t i = 0;
                while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
        }
        int mult = 0;
        while (true) {
            auto [q, r] = fp_divmod(fp, f, factor);
            if (!fp_is_zero(r)) break;
            f = q;
            ++mult;
        }
        out.emplace_back(std::move(factor), mult);
    }
    return out;
}

std::vector<FPoly> monic_divisors(const FieldPtr& fp, const FPoly& f) {
    auto factors = factor_prime_poly(fp, f);
    std::vector<FPoly> divs{FPoly{fp->one()}};
    for (const auto& [q, e] : factors) {
        std::vector<FPoly> next;
        FPoly qp{fp->one()};
        for (int i = 0; i <= e; ++i) {
            for (const FPoly& d : divs) next.push_back(fp_mul(fp, d, qp));
            if (i < e) qp = fp_mul(fp, qp, q);
        }
        divs = std::move(next);
    }
    return divs;
}

// Extract the multiplicity of the root z and divide it out.
int extract_root(CentralPoly& d, const Elem& z) {
    const CtxPtr& ctx = d.ctx();
    CentralPoly lin = CentralPoly::linear(ctx, z);
    int mult = 0;
    while (!d.is_zero() && d.eval(z).is_zero()) {
        auto [q, r] = d.divmod(lin);
        require_internal(r.is_zero(), "root does not divide");
        d = q;
        ++mult;
    }
    return mult;
}

std::optional<std::vector<std::pair<Elem, int>>> roots_frobenius(const CentralPoly& den) {
    const CtxPtr& ctx = den.ctx();
    const auto* K = static_cast<const ExtField*>(ctx->K().get());
    CentralPoly work = den;
    std::vector<std::pair<Elem, int>> roots;
    for (const Elem& fe : ctx->F_field()->all_elements()) {
        Elem z = K->embed(fe);
        int m = extract_root(work, z);
        if (m > 0) roots.emplace_back(z, m);
        if (work.degree() == 0) break;
    }
    if (work.degree() != 0) return std::nullopt;
    return roots;
}

std::optional<std::vector<std::pair<Elem, int>>> roots_differential(const CentralPoly& den) {
    const CtxPtr& ctx = den.ctx();
    const auto* K = static_cast<const RatFuncField*>(ctx->K().get());
    const FieldPtr& fp = K->coeff_field();
    const size_t p = static_cast<size_t>(ctx->p());

    // write coefficients as u-polynomial fractions, u = t^p
    auto to_u = [&](const FPoly& tp) {
        FPoly up;
        for (size_t i = 0; i < tp.size(); i += p) {
            up.resize(i / p + 1, fp->zero());
            up[i / p] = tp[i];
        }
        return fp_trim(std::move(up));
    };
    auto from_u = [&](const FPoly& up, const FPoly& uden) {
        FPoly tn(up.size() ? (up.size() - 1) * p + 1 : 0, fp->zero());
        for (size_t i = 0; i < up.size(); ++i) tn[i * p] = up[i];
        FPoly td(uden.size() ? (uden.size() - 1) * p + 1 : 0, fp->zero());
        for (size_t i = 0; i < uden.size(); ++i) td[i * p] = uden[i];
        return K->from_polys(fp_trim(std::move(tn)), fp_trim(std::move(td)));
    };

    // clear denominators: L = lcm of the coefficient denominators
    FPoly L{fp->one()};
    for (const Elem& c : den.raw().coeffs()) {
        FPoly cd = to_u(c.den());
        FPoly g = fp_gcd(fp, L, cd);
        L = fp_mul(fp, L, fp_divmod(fp, cd, g).first);
    }
    std::vector<FPoly> d;  // d[j](u), ascending in Z
    for (const Elem& c : den.raw().coeffs()) {
        FPoly cn = to_u(c.num());
        FPoly cd = to_u(c.den());
        d.push_back(fp_mul(fp, cn, fp_divmod(fp, L, cd).first));
    }
    FPoly content{};
    for (const FPoly& dj : d) content = fp_gcd(fp, content, dj);
    if (fp_deg(content) > 0)
        for (FPoly& dj : d) dj = fp_divmod(fp, dj, content).first;

    CentralPoly work = den;
    std::vector<std::pair<Elem, int>> roots;

    // root at zero = valuation in Z
    size_t v = 0;
    while (v < d.size() && fp_is_zero(d[v])) ++v;
    if (v > 0) {
        int m = extract_root(work, ctx->zero());
        require_internal(m == static_cast<int>(v), "zero-root multiplicity mismatch");
        roots.emplace_back(ctx->zero(), m);
        d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(v));
    }
    if (d.size() <= 1) {
        if (work.degree() != 0) return std::nullopt;
        return roots;
    }

    // rational-root candidates lambda * a / b, a | trailing, b | leading
    std::vector<FPoly> As = monic_divisors(fp, d.front());
    std::vector<FPoly> Bs = monic_divisors(fp, d.back());
    for (const FPoly& a : As) {
        for (const FPoly& b : Bs) {
            for (int64_t lam = 1; lam < ctx->p(); ++lam) {
                Elem z = from_u(fp_scale(fp, fp->from_int(lam), a), b);
                if (!work.eval(z).is_zero()) continue;
                int m = extract_root(work, z);
                if (m > 0) roots.emplace_back(z, m);
                if (work.degree() == 0) return roots;
            }
        }
    }
    if (work.degree() != 0) return std::nullopt;
    return roots;
}

}  // namespace

std::optional<std::vector<std::pair<Elem, int>>> f_rational_roots(const CentralPoly& d) {
    if (d.is_zero()) fail_invalid("zero polynomial has no root structure");
    if (d.degree() == 0) return std::vector<std::pair<Elem, int>>{};
    if (d.ctx()->kind() == CtxKind::frobenius) return roots_frobenius(d);
    return roots_differential(d);
}

Elem comm_residue_unchecked(const CPoly& num, const CentralPoly& den, const Elem& z) {
    const CtxPtr& ctx = num.ctx();
    ctx->K()->check_elem(z);
    if (!ctx->in_F(z)) fail_precond("residue point must lie in F");
    if (den.is_zero()) fail_invalid("zero denominator");

    CentralPoly lin = CentralPoly::linear(ctx, z);
    CentralPoly den2 = den;
    int m = extract_root(den2, z);
    if (m == 0 || num.is_zero()) return ctx->zero();

    // Taylor coefficients around z by repeated division by (Z - z)
    auto shifted = [&](CPoly f, size_t count) {
        std::vector<Elem> out;
        CPoly linc = lin.raw();
        for (size_t k = 0; k < count; ++k) {
            auto [q, r] = f.divmod(linc);
            out.push_back(r.is_zero() ? ctx->zero() : r.coeff(0));
            f = q;
        }
        return out;
    };
    size_t terms = static_cast<size_t>(m);
    std::vector<Elem> n = shifted(num, terms);
    std::vector<Elem> dd = shifted(den2.raw(), terms);
    require_internal(!dd[0].is_zero(), "deflated denominator vanishes at the point");

    // series quotient up to T^{m-1}
    std::vector<Elem> q(terms, ctx->zero());
    Elem d0_inv = dd[0].inv();
    for (size_t k = 0; k < terms; ++k) {
        Elem acc = n[k];
        for (size_t j = 0; j < k; ++j) acc = acc - q[j] * dd[k - j];
        q[k] = acc * d0_inv;
    }
    return q[terms - 1];
}

Elem comm_residue(const CPoly& num, const CentralPoly& den, const Elem& z) {
    if (!f_rational_roots(den).has_value()) fail_precond("denominator does not split over F");
    return comm_residue_unchecked(num, den, z);
}

}  // namespace orecodes
