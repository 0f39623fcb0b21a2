#include "orecodes/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "orecodes/rng.hpp"

namespace orecodes {

namespace {

struct CheckFail {
    std::string msg;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw CheckFail{msg};
}

struct StandardContexts {
    CtxPtr A;  // F_9 / F_3, theta = cube, delta = 0
    CtxPtr B;  // F_2(t) / F_2(t^2), delta = d/dt
    CtxPtr C;  // F_3(t) / F_3(t^3), delta = d/dt
    CtxPtr D;  // F_9 / F_3 with twist i
    std::vector<CtxPtr> all;
    std::vector<CtxPtr> residue;  // contexts with full residue machinery coverage
};

StandardContexts standard_contexts() {
    StandardContexts c;
    c.A = OreContext::make_frobenius(3, 1, 2);
    FieldPtr K2 = RatFuncField::make(2);
    c.B = OreContext::make_differential(2, K2->one());
    FieldPtr K3 = RatFuncField::make(3);
    c.C = OreContext::make_differential(3, K3->one());
    const auto* KA = static_cast<const ExtField*>(c.A->K().get());
    c.D = OreContext::make_frobenius(3, 1, 2, KA->gen());
    c.all = {c.A, c.B, c.C, c.D};
    c.residue = {c.A, c.B, c.C};
    return c;
}

std::string ctx_name(const CtxPtr& ctx) {
    std::ostringstream os;
    os << (ctx->kind() == CtxKind::frobenius ? "frobenius" : "differential") << "(p=" << ctx->p()
       << ",s=" << ctx->s() << ")";
    return os.str();
}

// --- criterion 1: ring laws and Euclidean division --------------------------

void crit_ring_laws(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.all) {
        for (int it = 0; it < 500; ++it) {
            OrePoly f = rng.ore_poly(ctx, 4), g = rng.ore_poly(ctx, 4), h = rng.ore_poly(ctx, 4);
            expect((f * g) * h == f * (g * h), "associativity failed in " + ctx_name(ctx));
            expect((f + g) * h == f * h + g * h, "right distributivity failed in " + ctx_name(ctx));
            expect(h * (f + g) == h * f + h * g, "left distributivity failed in " + ctx_name(ctx));
        }
        for (int it = 0; it < 500; ++it) {
            OrePoly f = rng.ore_poly(ctx, 6), g = rng.nonzero_ore_poly(ctx, 3);
            auto [q, r] = ore_divmod_right(f, g);
            expect(f == q * g + r, "right division round-trip failed in " + ctx_name(ctx));
            expect(r.degree() < g.degree(), "right remainder too large in " + ctx_name(ctx));
            auto [q2, r2] = ore_divmod_right(q * g + r, g);
            expect(q2 == q && r2 == r, "right division is not unique in " + ctx_name(ctx));
            auto [lq, lr] = ore_divmod_left(f, g);
            expect(f == g * lq + lr && lr.degree() < g.degree(),
                   "left division round-trip failed in " + ctx_name(ctx));
        }
    }
}

// --- criterion 2: evaluation kernels ----------------------------------------

void crit_kernels(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.all) {
        const size_t s = static_cast<size_t>(ctx->s());
        for (int it = 0; it < 50; ++it) {
            Elem c = rng.unramified(ctx);
            CentralPoly nc = CentralPoly::linear(ctx, ctx->upsilon(c));
            OrePoly n = expand(nc);
            expect(ev(n, c).is_zero(), "Z - upsilon(c) does not annihilate ev in " + ctx_name(ctx));
            // left multiples of n vanish; remainders of smaller degree do not
            OrePoly q = rng.ore_poly(ctx, static_cast<int>(s) - 1);
            expect(ev(q * n, c).is_zero(), "left multiple escapes the kernel in " + ctx_name(ctx));
            OrePoly r = rng.nonzero_ore_poly(ctx, static_cast<int>(s) - 1);
            OrePoly p = q * n + r;
            expect(!ev(p, c).is_zero(), "kernel contains a non-multiple in " + ctx_name(ctx));
            expect(ore_divmod_right(p - r, n).second.is_zero(), "division check failed");
        }
        // surjectivity: the operators ev(b_i X^j, c) span End_F(K)
        Elem c = rng.unramified(ctx);
        std::vector<std::vector<Elem>> cols;
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) {
                OrePoly m = OrePoly::monomial(ctx, ctx->basis()[i], j);
                Matrix em = ev(m, c).m;
                std::vector<Elem> flat;
                for (size_t u = 0; u < s; ++u)
                    for (size_t v = 0; v < s; ++v) flat.push_back(em.at(u, v));
                cols.push_back(std::move(flat));
            }
        Matrix span = Matrix::from_columns(ctx->K(), s * s, cols);
        expect(span.rank() == s * s, "evaluation is not surjective in " + ctx_name(ctx));
    }
}

// --- criterion 3: norm form vs division remainder ----------------------------

void crit_upsilon(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.all) {
        OrePoly z = centre_generator(ctx);
        for (int it = 0; it < 100; ++it) {
            Elem c = rng.k_elem(ctx);
            Elem u = ctx->upsilon(c);
            expect(ctx->in_F(u), "upsilon value escaped F in " + ctx_name(ctx));
            OrePoly lin(ctx, {-c, ctx->one()});
            OrePoly rem = ore_divmod_right(z, lin).second;
            expect(rem.degree() <= 0, "remainder degree");
            expect(rem.coeff(0) == u, "upsilon disagrees with the division remainder in " + ctx_name(ctx));
        }
    }
}

// --- criterion 4: reduced trace ----------------------------------------------

void crit_trd(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.all) {
        for (int it = 0; it < 300; ++it) {
            OrePoly f = rng.ore_poly(ctx, 3 * ctx->s());
            expect(trd_matrix(f) == trd_closed(f),
                   "matrix and closed-form reduced traces disagree in " + ctx_name(ctx));
        }
        for (int it = 0; it < 300; ++it) {
            OrePoly f = rng.ore_poly(ctx, 4), g = rng.ore_poly(ctx, 4);
            expect(trd_closed(f * g) == trd_closed(g * f), "trace relation failed in " + ctx_name(ctx));
        }
        for (int it = 0; it < 100; ++it) {
            OrePoly f = rng.ore_poly(ctx, 2 * ctx->s());
            Elem c = rng.unramified(ctx);
            Elem lhs = ev(f, c).trace();
            Elem rhs = trd_closed(f).eval(ctx->upsilon(c));
            expect(lhs == rhs, "trace does not intertwine evaluation in " + ctx_name(ctx));
        }
    }
    // worked instance: differential kind over F_2, f = t X at c = 1
    {
        const CtxPtr& ctx = sc.B;
        const auto* K = static_cast<const RatFuncField*>(ctx->K().get());
        OrePoly f = OrePoly::monomial(ctx, K->t(), 1);
        Elem one = ctx->one();
        expect(ev(f, one).trace() == one, "worked trace instance (operator side)");
        expect(trd_closed(f).eval(ctx->upsilon(one)) == one, "worked trace instance (trace side)");
    }
}

// --- criterion 5: Taylor machinery --------------------------------------------

Elem random_point(const CtxPtr& ctx, Sampler& rng) {
    while (true) {
        Elem z = rng.f_elem(ctx, 1);
        if (ctx->kind() == CtxKind::frobenius && z.is_zero()) continue;
        return z;
    }
}

void crit_taylor(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.residue) {
        for (int it = 0; it < 20; ++it) {
            Elem z = random_point(ctx, rng);
            int M = 1 + static_cast<int>(rng.next(6));
            AdmissibleIso iso = build_admissible(ctx, z, M);
            // re-derive the defining property with raw arithmetic
            OrePoly zy = ctx->kind() == CtxKind::frobenius
                             ? iso.Y.pow(static_cast<uint64_t>(ctx->s()))
                             : OrePoly::zero(iso.nctx);
            if (ctx->kind() == CtxKind::differential) {
                int64_t pk = 1;
                for (size_t i = 0; i < ctx->zcoeffs().size(); ++i) {
                    zy = zy + iso.Y.pow(static_cast<uint64_t>(pk)).left_scale(ctx->zcoeffs()[i]);
                    pk *= ctx->p();
                }
            }
            zy = zy - OrePoly::constant(iso.nctx, z);
            expect(ore_mod(zy, iso.Npow[static_cast<size_t>(M)]).is_zero(),
                   "centre image of Y misses the target in " + ctx_name(ctx));
        }
        // series round-trip
        for (int it = 0; it < 100; ++it) {
            Elem z = random_point(ctx, rng);
            int M = 1 + static_cast<int>(rng.next(5));
            OrePoly f = rng.ore_poly(ctx, 3 * ctx->s() - 1);
            AdmissibleIso iso = build_admissible(ctx, z, M);
            TruncatedSeries series = ts(OreFraction(f), z, M);
            expect(series.valuation >= 0 || f.is_zero(), "polynomial with a pole");
            OrePoly acc = OrePoly::zero(iso.nctx);
            for (int k = 0; k < M; ++k) {
                int e = k;  // exponent of T
                OrePoly rep = e >= series.valuation && e < series.valuation + series.precision()
                                  ? series.coeff(e)
                                  : OrePoly::zero(ctx);
                acc = acc + ore_mod(iso.substitute(to_twisted(rep)) *
                                        iso.Npow[static_cast<size_t>(k)],
                                    iso.Npow[static_cast<size_t>(M)]);
            }
            OrePoly fn = ore_mod(to_twisted(f), iso.Npow[static_cast<size_t>(M)]);
            expect(ore_mod(acc - fn, iso.Npow[static_cast<size_t>(M)]).is_zero(),
                   "series does not reconstruct the polynomial in " + ctx_name(ctx));
        }
        // simple-pole fast path agrees with the series route
        for (int it = 0; it < 50; ++it) {
            size_t m = 1 + rng.next(2);
            std::vector<Elem> points;
            std::vector<Subspace> spaces;
            while (points.size() < m) {
                Elem c = rng.unramified(ctx);
                bool dup = false;
                for (const Elem& c2 : points)
                    if (ctx->upsilon(c2) == ctx->upsilon(c)) dup = true;
                if (ctx->kind() == CtxKind::frobenius && ctx->upsilon(c).is_zero()) dup = true;
                if (!dup) {
                    points.push_back(c);
                    spaces.push_back(rng.subspace(ctx));
                }
            }
            OrePoly D = multi_annihilator(ctx, points, spaces);
            OrePoly Dp = complement_cofactor(D, points, spaces);
            CentralPoly N = point_modulus(ctx, points);
            OrePoly g = rng.ore_poly(ctx, 2 * ctx->s());
            OreFraction f(g * Dp, N);
            for (size_t i = 0; i < m; ++i) {
                OrePoly fast = sres_simple(g, points, spaces, i);
                OrePoly slow = sres(f, ctx->upsilon(points[i]));
                expect(fast == slow, "cofactor residue disagrees with the series in " + ctx_name(ctx));
            }
        }
    }
}

// --- criterion 6: residues and the residue formula ------------------------------

struct SplitFraction {
    OreFraction f;
    std::vector<Elem> roots;
};

SplitFraction random_split_fraction(const CtxPtr& ctx, Sampler& rng, bool force_double,
                                    bool degree_certified) {
    const int s = ctx->s();
    size_t nroots = 2 + rng.next(2);
    std::vector<Elem> roots;
    while (roots.size() < nroots) {
        Elem z = random_point(ctx, rng);
        bool dup = false;
        for (const Elem& w : roots)
            if (w == z) dup = true;
        if (!dup) roots.push_back(z);
    }
    CentralPoly D = CentralPoly::one(ctx);
    for (size_t i = 0; i < roots.size(); ++i) {
        int mult = (force_double && i == 0) ? 2 : 1 + static_cast<int>(rng.next(2));
        D = D * CentralPoly::linear(ctx, roots[i]).pow(static_cast<uint64_t>(mult));
    }
    int margin = ctx->kind() == CtxKind::frobenius ? s + 1 : 2;
    int max_deg = D.degree() * s - margin;
    require_internal(max_deg >= 0, "degenerate residue instance");
    OrePoly P = degree_certified ? rng.nonzero_ore_poly(ctx, max_deg)
                                 : rng.nonzero_ore_poly(ctx, D.degree() * s - 1);
    return {OreFraction(P, D), roots};
}

void crit_residues(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.residue) {
        // trace-of-residue commutation (the residue_sum cross-check runs on
        // every point, including the double poles)
        for (int it = 0; it < 50; ++it) {
            SplitFraction sf = random_split_fraction(ctx, rng, it % 2 == 0, false);
            CentralPoly tn = trd_closed(sf.f.num());
            for (const Elem& z : sf.roots) {
                Elem lhs = trd_closed(sres(sf.f, z)).eval(z);
                Elem rhs = comm_residue(tn.raw(), sf.f.den(), z);
                expect(lhs == rhs, "trace/residue commutation failed in " + ctx_name(ctx));
            }
        }
        // residue formula
        for (int it = 0; it < 50; ++it) {
            SplitFraction sf = random_split_fraction(ctx, rng, it % 3 == 0, true);
            ResidueReport rep = residue_sum(sf.f);
            expect(rep.degree_ok, "residue instance misses the degree margin");
            expect(rep.total.is_zero(), "residue formula sum is nonzero in " + ctx_name(ctx));
        }
    }
    // sigma0 refinement, differential kind
    for (const CtxPtr& ctx : {sc.B, sc.C}) {
        for (int it = 0; it < 50; ++it) {
            SplitFraction sf = random_split_fraction(ctx, rng, it % 2 == 0, false);
            CPoly s0 = sigma0(sf.f.num());
            for (const Elem& z : sf.roots) {
                OrePoly rep = sres(sf.f, z);
                Elem lhs = rep.coeff(static_cast<size_t>(ctx->s()) - 1);
                Elem rhs = comm_residue(s0, sf.f.den(), z);
                expect(lhs == rhs, "sigma0 refinement failed in " + ctx_name(ctx));
            }
        }
    }
}

// --- criterion 7: duality commutations ------------------------------------------

void crit_duality_maps(const StandardContexts& sc, Sampler& rng) {
    for (const CtxPtr& ctx : sc.all) {
        for (int it = 0; it < 50; ++it) {
            Elem c = rng.unramified(ctx);
            OrePoly f = rng.ore_poly(ctx, 2 * ctx->s());
            LinearOperator lhs = adjoint(ev(f, c));
            LinearOperator rhs = ev(star_mod_point(f, c), c_dual(ctx, c));
            expect(lhs == rhs, "adjoint does not match the dual evaluation in " + ctx_name(ctx));
        }
    }
    for (const CtxPtr& ctx : sc.residue) {
        for (int it = 0; it < 50; ++it) {
            Elem z = random_point(ctx, rng);
            Elem zbar = ctx->kind() == CtxKind::differential ? -z : z.inv();
            OrePoly g = rng.nonzero_ore_poly(ctx, 2 * ctx->s());
            OreFraction f(g, CentralPoly::linear(ctx, zbar));
            OrePoly lhs = sres(star(f), z);
            OrePoly r = sres(f, zbar);
            OrePoly rhs;
            if (ctx->kind() == CtxKind::differential) {
                rhs = -ore_mod(star(r), expand(CentralPoly::linear(ctx, z)));
            } else {
                LaurentOre lr = star(to_laurent(r)).shift(-2 * ctx->s());
                rhs = -reduce_laurent_at(lr, ctx, z);
            }
            expect(lhs == rhs, "residue duality at a simple pole failed in " + ctx_name(ctx));
        }
    }
}

// --- criteria 8 and 9: the code grid ----------------------------------------------

struct GridCombo {
    CtxPtr ctx;
    std::vector<Elem> points;
    std::vector<Subspace> spaces;
};

std::vector<GridCombo> code_grid(const StandardContexts& sc) {
    std::vector<GridCombo> out;
    for (const CtxPtr& ctx : {sc.A, sc.B}) {
        const size_t s = static_cast<size_t>(ctx->s());
        Elem one = ctx->one();
        Elem gen = ctx->kind() == CtxKind::frobenius
                       ? static_cast<const ExtField*>(ctx->K().get())->gen()
                       : static_cast<const RatFuncField*>(ctx->K().get())->t();
        std::vector<Elem> pts{one, one + gen};
        if (ctx->kind() == CtxKind::differential) pts = {one, gen};
        std::vector<Subspace> vs;
        vs.push_back(Subspace::zero(ctx->K(), s));
        vs.push_back(Subspace::span(Matrix::from_columns(ctx->K(), s, {ctx->coords(one)})));
        vs.push_back(Subspace::span(Matrix::from_columns(ctx->K(), s, {ctx->coords(gen)})));
        vs.push_back(Subspace::full(ctx->K(), s));
        for (const Elem& c : pts)
            for (const Subspace& v : vs) out.push_back({ctx, {c}, {v}});
        for (const Subspace& v1 : vs)
            for (const Subspace& v2 : vs) out.push_back({ctx, pts, {v1, v2}});
    }
    return out;
}

void crit_code_parameters(const StandardContexts& sc, Sampler& rng) {
    for (const GridCombo& gc : code_grid(sc)) {
        const CtxPtr& ctx = gc.ctx;
        const bool finite = ctx->K()->finite();
        const uint64_t budget = default_enumeration_budget();
        size_t n_lrs = 0;
        for (const Subspace& v : gc.spaces) n_lrs += v.dim();
        for (size_t k = 1; k <= n_lrs; ++k) {
            CodeBasis code = lrs_basis(ctx, k, gc.points, gc.spaces);
            expect(code.dim_K() == k, "evaluation code dimension");
            MinDistResult md = min_distance(code, budget);
            expect(md.d == static_cast<int>(n_lrs - k + 1), "evaluation code is not MSRD");
            expect(static_cast<size_t>(md.d) + k <= n_lrs + 1, "Singleton bound violated");
            if (!finite) {
                // the enumeration is witness-based over F_p(t); probe the
                // lower bound on random codewords
                for (int it = 0; it < 100; ++it) {
                    OrePoly P = rng.nonzero_ore_poly(ctx, static_cast<int>(k) - 1);
                    HomTuple w = lrs_encode(P, gc.points, gc.spaces);
                    if (w.is_zero()) continue;
                    expect(sum_rank_weight(w) >= md.d, "random codeword beats the claimed distance");
                }
            }
        }
        size_t n_lg = 0;
        for (const Subspace& v : gc.spaces) n_lg += static_cast<size_t>(ctx->s()) - v.dim();
        for (size_t k = 1; k < n_lg; ++k) {
            CodeBasis code = lg_basis(ctx, k, gc.points, gc.spaces);
            expect(code.dim_K() == k, "residue code dimension");
            MinDistResult md = min_distance(code, budget);
            expect(md.d == static_cast<int>(n_lg - k + 1), "residue code is not MSRD");
            // transport isomorphism preserves the weight
            PsiSetup psi = psi_setup(ctx, k, gc.points, gc.spaces);
            for (int it = 0; it < 100; ++it) {
                std::vector<Matrix> blocks;
                for (size_t i = 0; i < psi.W.size(); ++i) {
                    Matrix b(ctx->K(), static_cast<size_t>(ctx->s()), psi.W[i].dim());
                    for (size_t u = 0; u < b.rows(); ++u)
                        for (size_t v = 0; v < b.cols(); ++v) b.at(u, v) = rng.f_elem(ctx, 1);
                    blocks.push_back(std::move(b));
                }
                HomTuple on_w(psi.domain, std::move(blocks));
                expect(sum_rank_weight(on_w) == sum_rank_weight(psi_apply(psi, on_w)),
                       "transport does not preserve the sum-rank weight");
            }
        }
    }
}

void crit_duality_theorem(const StandardContexts& sc, Sampler&) {
    for (const GridCombo& gc : code_grid(sc)) {
        const CtxPtr& ctx = gc.ctx;
        size_t n = 0;
        for (const Subspace& v : gc.spaces) n += v.dim();
        if (n == 0) continue;
        std::vector<Elem> cd;
        std::vector<Subspace> vperp;
        for (const Elem& c : gc.points) cd.push_back(c_dual(ctx, c));
        for (const Subspace& v : gc.spaces) vperp.push_back(orthogonal_subspace(ctx, v));
        for (size_t k = 1; k <= n; ++k) {
            CodeBasis lrs = lrs_basis(ctx, k, gc.points, gc.spaces);
            CodeBasis lg = lg_basis(ctx, n - k, cd, vperp);
            for (const HomTuple& phi : lg.gens)
                for (const HomTuple& psi : lrs.gens)
                    expect(hom_pairing(phi, psi).is_zero(),
                           "evaluation and residue generators do not pair to zero in " + ctx_name(ctx));
            expect(lrs.dim_K() + lg.dim_K() == n, "dual dimensions do not sum to the length");
            CodeBasis dual = dual_code(lrs);
            expect(codes_equal(dual, lg), "orthogonal code differs from the residue code in " + ctx_name(ctx));
        }
    }
}

using CritFn = std::function<void(const StandardContexts&, Sampler&)>;

}  // namespace

SelftestReport run_selftest(uint64_t seed) {
    SelftestReport report;
    report.seed = seed;
    StandardContexts sc = standard_contexts();

    std::vector<std::pair<std::string, CritFn>> suites = {
        {"ore ring laws and Euclidean division", crit_ring_laws},
        {"evaluation kernels and surjectivity", crit_kernels},
        {"norm form equals the division remainder", crit_upsilon},
        {"reduced trace forms and evaluation", crit_trd},
        {"Taylor expansions and simple poles", crit_taylor},
        {"residue commutation and residue formula", crit_residues},
        {"duality commutation with evaluation and residues", crit_duality_maps},
        {"code parameters on the grid", crit_code_parameters},
        {"duality theorem on the grid", crit_duality_theorem},
    };

    report.pass = true;
    for (size_t i = 0; i < suites.size(); ++i) {
        CriterionResult res;
        res.id = static_cast<int>(i) + 1;
        res.name = suites[i].first;
        Sampler rng(seed + i);
        auto start = std::chrono::steady_clock::now();
        try {
            suites[i].second(sc, rng);
            res.pass = true;
        } catch (const CheckFail& f) {
            res.pass = false;
            res.detail = f.msg;
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        auto end = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(end - start).count();
        if (res.pass) {
            std::ostringstream os;
            os.precision(2);
            os << std::fixed << secs << "s";
            res.detail = os.str();
        }
        report.pass = report.pass && res.pass;
        report.criteria.push_back(std::move(res));
    }
    return report;
}

json selftest_report_json(const SelftestReport& r) {
    json out;
    out["seed"] = r.seed;
    out["pass"] = r.pass;
    json arr = json::array();
    for (const CriterionResult& c : r.criteria)
        arr.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["criteria"] = arr;
    return out;
}

}  // namespace orecodes
