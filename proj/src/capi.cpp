#include "orecodes.h"

#include <cstring>
#include <string>

#include "orecodes/selftest.hpp"

using namespace orecodes;

struct orc_ctx {
    CtxPtr ctx;
};

struct orc_poly {
    OrePoly poly;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int set_error(const std::exception& e, int fallback) {
    g_last_error = e.what();
    if (const auto* err = dynamic_cast<const Error*>(&e)) return static_cast<int>(err->code());
    return fallback;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return ORC_OK;
    } catch (const std::exception& e) {
        return set_error(e, ORC_EINTERNAL);
    }
}

json parse_json(const char* text, const char* what) {
    if (!text) fail_invalid(std::string("missing ") + what);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail_invalid(std::string("malformed JSON for ") + what);
    return j;
}

std::vector<Elem> points_from_json(const CtxPtr& ctx, const json& j) {
    std::vector<Elem> pts;
    for (const json& e : j) pts.push_back(elem_from_json(ctx->K(), e));
    return pts;
}

std::vector<Subspace> spaces_from_json(const CtxPtr& ctx, const json& j) {
    std::vector<Subspace> out;
    for (const json& e : j) out.push_back(subspace_from_json_flexible(ctx, e));
    return out;
}

}  // namespace

extern "C" {

const char* orc_version(void) { return "0.1.0"; }

const char* orc_last_error(void) { return g_last_error.c_str(); }

void orc_string_free(char* s) { delete[] s; }

int orc_ctx_frobenius(int64_t p, int e, int s, const char* twist_json, orc_ctx** out) {
    return guarded([&] {
        CtxPtr base = OreContext::make_frobenius(p, e, s);
        if (twist_json) {
            Elem twist = elem_from_json(base->K(), parse_json(twist_json, "twist"));
            base = OreContext::make_frobenius(p, e, s, twist);
        }
        *out = new orc_ctx{base};
    });
}

int orc_ctx_differential(int64_t p, const char* a_json, orc_ctx** out) {
    return guarded([&] {
        FieldPtr K = RatFuncField::make(p);
        Elem a = elem_from_json(K, parse_json(a_json, "derivation scale"));
        *out = new orc_ctx{OreContext::make_differential(p, a)};
    });
}

int orc_ctx_from_json(const char* descriptor_json, orc_ctx** out) {
    return guarded([&] { *out = new orc_ctx{context_from_json(parse_json(descriptor_json, "context"))}; });
}

void orc_ctx_free(orc_ctx* ctx) { delete ctx; }

int orc_ctx_describe(const orc_ctx* ctx, char** json_out) {
    return guarded([&] { *json_out = dup_string(context_describe(ctx->ctx).dump()); });
}

int orc_upsilon(const orc_ctx* ctx, const char* elem_json, char** json_out) {
    return guarded([&] {
        Elem c = elem_from_json(ctx->ctx->K(), parse_json(elem_json, "element"));
        *json_out = dup_string(felem_to_json(ctx->ctx, ctx->ctx->upsilon(c)).dump());
    });
}

int orc_tau(const orc_ctx* ctx, const char* elem_json, char** json_out) {
    return guarded([&] {
        Elem c = elem_from_json(ctx->ctx->K(), parse_json(elem_json, "element"));
        *json_out = dup_string(felem_to_json(ctx->ctx, ctx->ctx->tau(c)).dump());
    });
}

int orc_is_ramified(const orc_ctx* ctx, const char* elem_json, int* out) {
    return guarded([&] {
        Elem c = elem_from_json(ctx->ctx->K(), parse_json(elem_json, "element"));
        *out = ctx->ctx->is_ramified(c) ? 1 : 0;
    });
}

int orc_c_dual(const orc_ctx* ctx, const char* elem_json, char** json_out) {
    return guarded([&] {
        Elem c = elem_from_json(ctx->ctx->K(), parse_json(elem_json, "element"));
        *json_out = dup_string(elem_to_json(c_dual(ctx->ctx, c)).dump());
    });
}

int orc_poly_parse(const orc_ctx* ctx, const char* coeffs_json, orc_poly** out) {
    return guarded([&] {
        *out = new orc_poly{orepoly_from_json(ctx->ctx, parse_json(coeffs_json, "polynomial"))};
    });
}

void orc_poly_free(orc_poly* f) { delete f; }

int orc_poly_to_json(const orc_poly* f, char** json_out) {
    return guarded([&] { *json_out = dup_string(orepoly_to_json(f->poly).dump()); });
}

int orc_poly_add(const orc_poly* f, const orc_poly* g, orc_poly** out) {
    return guarded([&] { *out = new orc_poly{f->poly + g->poly}; });
}

int orc_poly_mul(const orc_poly* f, const orc_poly* g, orc_poly** out) {
    return guarded([&] { *out = new orc_poly{f->poly * g->poly}; });
}

int orc_poly_divmod(const orc_poly* f, const orc_poly* g, int side, orc_poly** q, orc_poly** r) {
    return guarded([&] {
        auto [qq, rr] = side ? ore_divmod_left(f->poly, g->poly) : ore_divmod_right(f->poly, g->poly);
        *q = new orc_poly{std::move(qq)};
        *r = new orc_poly{std::move(rr)};
    });
}

int orc_poly_rgcd(const orc_poly* f, const orc_poly* g, orc_poly** out) {
    return guarded([&] { *out = new orc_poly{ore_rgcd(f->poly, g->poly)}; });
}

int orc_poly_lclm(const orc_poly* f, const orc_poly* g, orc_poly** out) {
    return guarded([&] { *out = new orc_poly{ore_lclm(f->poly, g->poly)}; });
}

int orc_poly_ev(const orc_poly* f, const char* point_json, char** matrix_json_out) {
    return guarded([&] {
        Elem c = elem_from_json(f->poly.ctx()->K(), parse_json(point_json, "point"));
        *matrix_json_out = dup_string(operator_to_json(ev(f->poly, c)).dump());
    });
}

int orc_code_build(const orc_ctx* ctxh, const char* params_json, char** json_out) {
    return guarded([&] {
        const CtxPtr& ctx = ctxh->ctx;
        json p = parse_json(params_json, "code parameters");
        std::string family = p.value("family", "lrs");
        size_t k = p.at("k").get<size_t>();
        std::vector<Elem> points = points_from_json(ctx, p.at("points"));
        std::vector<Subspace> spaces = spaces_from_json(ctx, p.at("subspaces"));
        CodeBasis code = family == "lg" ? lg_basis(ctx, k, points, spaces)
                                        : lrs_basis(ctx, k, points, spaces);
        json out = code_to_json(code);
        if (p.value("check_msrd", false)) {
            MinDistResult md = min_distance(code, default_enumeration_budget());
            out["d"] = md.d;
            out["exhaustive"] = md.exhaustive;
            out["msrd"] = (static_cast<size_t>(md.d) == code.length() - code.dim_K() + 1);
        }
        *json_out = dup_string(out.dump());
    });
}

int orc_dualcheck(const orc_ctx* ctxh, const char* params_json, char** report_json, int* ok) {
    return guarded([&] {
        const CtxPtr& ctx = ctxh->ctx;
        json p = parse_json(params_json, "dualcheck parameters");
        size_t k = p.at("k").get<size_t>();
        std::vector<Elem> points = points_from_json(ctx, p.at("points"));
        std::vector<Subspace> spaces = spaces_from_json(ctx, p.at("subspaces"));
        bool corrupt = p.value("corrupt", false);

        CodeBasis lrs = lrs_basis(ctx, k, points, spaces);
        size_t n = lrs.length();
        std::vector<Elem> cd;
        std::vector<Subspace> vperp;
        for (const Elem& c : points) cd.push_back(c_dual(ctx, c));
        for (const Subspace& v : spaces) vperp.push_back(orthogonal_subspace(ctx, v));
        CodeBasis lg = lg_basis(ctx, n - k, cd, vperp);
        if (corrupt && !lrs.gens.empty()) {
            // replace (or add) a generator that provably pairs nonzero with
            // the evaluation code: elementary tuples span the ambient space,
            // so one of them must detect the nonzero generator
            const size_t s = static_cast<size_t>(ctx->s());
            HomSpace amb{ctx, true, vperp};
            bool planted = false;
            for (size_t i = 0; i < vperp.size() && !planted; ++i) {
                Matrix rowspace = vperp[i].basis().transpose().kernel();
                for (size_t rc = 0; rc < rowspace.cols() && !planted; ++rc)
                    for (size_t u = 0; u < s && !planted; ++u) {
                        HomTuple cand = HomTuple::zero(amb);
                        for (size_t v = 0; v < s; ++v) cand.blocks[i].at(u, v) = rowspace.at(v, rc);
                        for (const HomTuple& psi : lrs.gens)
                            if (!hom_pairing(cand, psi).is_zero()) {
                                if (lg.gens.empty())
                                    lg.gens.push_back(cand);
                                else
                                    lg.gens[0] = cand;
                                planted = true;
                                break;
                            }
                    }
            }
            if (!planted) fail_internal("could not plant a corrupted generator");
        }

        json pairings = json::array();
        bool all_zero = true;
        for (const HomTuple& phi : lg.gens)
            for (const HomTuple& psi : lrs.gens) {
                Elem v = hom_pairing(phi, psi);
                pairings.push_back(felem_to_json(ctx, v));
                all_zero = all_zero && v.is_zero();
            }
        bool dims = lrs.dim_K() + lg.dim_K() == n;
        json rep;
        rep["n"] = n;
        rep["k"] = k;
        rep["pairings"] = pairings;
        rep["dimensions_sum"] = dims;
        rep["pass"] = all_zero && dims;
        *ok = (all_zero && dims) ? 1 : 0;
        *report_json = dup_string(rep.dump());
    });
}

int orc_residue_demo(const orc_ctx* ctxh, const char* num_json, const char* den_json,
                     char** report_json) {
    return guarded([&] {
        const CtxPtr& ctx = ctxh->ctx;
        OrePoly num = orepoly_from_json(ctx, parse_json(num_json, "numerator"));
        CentralPoly den = centralpoly_from_json(ctx, parse_json(den_json, "denominator"));
        ResidueReport rr = residue_sum(OreFraction(num, den));
        json pts = json::array();
        for (const ResidueSummand& sm : rr.points)
            pts.push_back(json{{"z", felem_to_json(ctx, sm.z)},
                               {"pole_order", sm.pole_order},
                               {"value", felem_to_json(ctx, sm.value)}});
        json rep;
        rep["points"] = pts;
        rep["sum"] = felem_to_json(ctx, rr.total);
        rep["asserted"] = rr.degree_ok;
        rep["sum_is_zero"] = rr.total.is_zero();
        if (rr.degree_ok && !rr.total.is_zero())
            fail(errc::verification_failure, "residue sum does not vanish");
        *report_json = dup_string(rep.dump());
    });
}

int orc_selftest(uint64_t seed, char** report_json, int* ok) {
    return guarded([&] {
        SelftestReport rep = run_selftest(seed);
        *ok = rep.pass ? 1 : 0;
        *report_json = dup_string(selftest_report_json(rep).dump());
    });
}

}  // extern "C"
