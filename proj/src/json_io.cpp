#include "orecodes/json_io.hpp"

#include <sstream>

namespace orecodes {

json elem_to_json(const Elem& x) {
    const Field& f = *x.field();
    switch (f.kind()) {
        case Field::Kind::prime:
            return x.ival();
        case Field::Kind::ext: {
            json arr = json::array();
            for (const Elem& c : x.parts()) arr.push_back(elem_to_json(c));
            return arr;
        }
        case Field::Kind::ratfunc: {
            json num = json::array(), den = json::array();
            for (const Elem& c : x.num()) num.push_back(c.ival());
            for (const Elem& c : x.den()) den.push_back(c.ival());
            return json{{"num", num}, {"den", den}};
        }
    }
    fail_internal("unknown field kind");
}

Elem elem_from_json(const FieldPtr& f, const json& j) {
    switch (f->kind()) {
        case Field::Kind::prime:
            if (!j.is_number_integer()) fail_invalid("prime field element must be an integer");
            return f->from_int(j.get<int64_t>());
        case Field::Kind::ext: {
            const auto* ext = static_cast<const ExtField*>(f.get());
            if (j.is_number_integer()) return ext->from_int(j.get<int64_t>());
            if (!j.is_array()) fail_invalid("extension element must be a coefficient array");
            std::vector<Elem> coeffs;
            for (const json& c : j) coeffs.push_back(elem_from_json(ext->base(), c));
            if (coeffs.size() > ext->degree()) fail_invalid("too many coefficients for the extension degree");
            return ext->from_coeffs(std::move(coeffs));
        }
        case Field::Kind::ratfunc: {
            const auto* rf = static_cast<const RatFuncField*>(f.get());
            if (j.is_number_integer()) return rf->from_int(j.get<int64_t>());
            if (!j.is_object() || !j.contains("num") || !j.contains("den"))
                fail_invalid("rational function element must be {\"num\", \"den\"}");
            FPoly num, den;
            for (const json& c : j["num"]) num.push_back(rf->coeff_field()->from_int(c.get<int64_t>()));
            for (const json& c : j["den"]) den.push_back(rf->coeff_field()->from_int(c.get<int64_t>()));
            return rf->from_polys(std::move(num), std::move(den));
        }
    }
    fail_internal("unknown field kind");
}

json felem_to_json(const CtxPtr& ctx, const Elem& x) {
    ctx->require_in_F(x, "serialized F-element");
    if (ctx->kind() == CtxKind::differential) return elem_to_json(x);
    const auto* K = static_cast<const ExtField*>(ctx->K().get());
    return elem_to_json(K->to_base(x));
}

Elem felem_from_json(const CtxPtr& ctx, const json& j) {
    if (ctx->kind() == CtxKind::differential) {
        Elem x = elem_from_json(ctx->K(), j);
        if (!ctx->in_F(x)) fail_invalid("element does not lie in F");
        return x;
    }
    const auto* K = static_cast<const ExtField*>(ctx->K().get());
    return K->embed(elem_from_json(K->base(), j));
}

json orepoly_to_json(const OrePoly& f) {
    json arr = json::array();
    for (const Elem& c : f.coeffs()) arr.push_back(elem_to_json(c));
    return arr;
}

OrePoly orepoly_from_json(const CtxPtr& ctx, const json& j) {
    if (!j.is_array()) fail_invalid("Ore polynomial must be a coefficient array");
    std::vector<Elem> c;
    for (const json& e : j) c.push_back(elem_from_json(ctx->K(), e));
    return OrePoly(ctx, std::move(c));
}

json centralpoly_to_json(const CentralPoly& c) {
    json arr = json::array();
    for (const Elem& e : c.raw().coeffs()) arr.push_back(felem_to_json(c.ctx(), e));
    return arr;
}

CentralPoly centralpoly_from_json(const CtxPtr& ctx, const json& j) {
    if (!j.is_array()) fail_invalid("central polynomial must be a coefficient array");
    std::vector<Elem> c;
    for (const json& e : j) c.push_back(felem_from_json(ctx, e));
    return CentralPoly(ctx, std::move(c));
}

json laurent_to_json(const LaurentOre& f) {
    json arr = json::array();
    for (const Elem& c : f.coeffs()) arr.push_back(elem_to_json(c));
    return json{{"val", f.valuation()}, {"coeffs", arr}};
}

json matrix_to_json(const CtxPtr& ctx, const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(felem_to_json(ctx, m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json operator_to_json(const LinearOperator& op) { return matrix_to_json(op.ctx, op.m); }

json subspace_to_json(const CtxPtr& ctx, const Subspace& v) {
    json cols = json::array();
    for (size_t j = 0; j < v.dim(); ++j) {
        json col = json::array();
        for (size_t i = 0; i < v.ambient_dim(); ++i) col.push_back(felem_to_json(ctx, v.basis().at(i, j)));
        cols.push_back(col);
    }
    return cols;
}

Subspace subspace_from_json(const CtxPtr& ctx, const json& j) {
    if (!j.is_array()) fail_invalid("subspace must be a list of basis columns");
    const size_t s = static_cast<size_t>(ctx->s());
    std::vector<std::vector<Elem>> cols;
    for (const json& cj : j) {
        if (!cj.is_array() || cj.size() != s) fail_invalid("basis column has wrong length");
        std::vector<Elem> col;
        for (const json& e : cj) col.push_back(felem_from_json(ctx, e));
        cols.push_back(std::move(col));
    }
    return Subspace::span(Matrix::from_columns(ctx->K(), s, cols));
}

Subspace subspace_from_json_flexible(const CtxPtr& ctx, const json& j) {
    const size_t s = static_cast<size_t>(ctx->s());
    if (j.is_string()) {
        std::string v = j.get<std::string>();
        if (v == "0" || v == "zero") return Subspace::zero(ctx->K(), s);
        if (v == "K" || v == "full") return Subspace::full(ctx->K(), s);
        fail_invalid("unknown subspace shorthand: " + v);
    }
    return subspace_from_json(ctx, j);
}

json context_to_json(const CtxPtr& ctx) {
    json j;
    j["p"] = ctx->p();
    if (ctx->kind() == CtxKind::frobenius) {
        j["kind"] = "frobenius";
        j["e"] = ctx->e();
        j["s"] = ctx->s();
        j["twist"] = elem_to_json(ctx->twist());
    } else {
        j["kind"] = "differential";
        j["a"] = elem_to_json(ctx->deriv_scale());
    }
    return j;
}

CtxPtr context_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("p")) fail_invalid("malformed context descriptor");
    std::string kind = j["kind"].get<std::string>();
    int64_t p = j["p"].get<int64_t>();
    if (kind == "frobenius") {
        int e = j.value("e", 1);
        if (!j.contains("s")) fail_invalid("frobenius context needs s");
        int s = j["s"].get<int>();
        CtxPtr base = OreContext::make_frobenius(p, e, s);
        if (j.contains("twist") && !j["twist"].is_null()) {
            Elem twist = elem_from_json(base->K(), j["twist"]);
            return OreContext::make_frobenius(p, e, s, twist);
        }
        return base;
    }
    if (kind == "differential") {
        if (!j.contains("a")) fail_invalid("differential context needs the derivation scale a");
        FieldPtr K = RatFuncField::make(p);
        Elem a = elem_from_json(K, j["a"]);
        return OreContext::make_differential(p, a);
    }
    fail_invalid("unknown context kind: " + kind);
}

json context_describe(const CtxPtr& ctx) {
    json j = context_to_json(ctx);
    j["s"] = ctx->s();
    j["centre_generator"] = orepoly_to_json(centre_generator(ctx));
    if (ctx->kind() == CtxKind::differential) {
        json z = json::array();
        for (const Elem& zi : ctx->zcoeffs()) z.push_back(felem_to_json(ctx, zi));
        j["z_coeffs"] = z;
    }
    json basis = json::array();
    for (const Elem& b : ctx->basis()) basis.push_back(elem_to_json(b));
    j["basis"] = basis;
    j["tau_unit"] = elem_to_json(ctx->tau_unit());
    j["gram"] = matrix_to_json(ctx, gram(ctx));
    return j;
}

json homtuple_to_json(const HomTuple& t) {
    json blocks = json::array();
    for (const Matrix& b : t.blocks) blocks.push_back(matrix_to_json(t.space.ctx, b));
    return blocks;
}

json code_to_json(const CodeBasis& c) {
    json j;
    j["kind"] = c.kind == CodeKind::lrs ? "lrs" : (c.kind == CodeKind::lg ? "lg" : "generic");
    j["k"] = c.k;
    j["n"] = c.length();
    json pts = json::array();
    for (const Elem& p : c.points) pts.push_back(elem_to_json(p));
    j["points"] = pts;
    json sub = json::array();
    for (const Subspace& v : c.spaces) sub.push_back(subspace_to_json(c.ctx, v));
    j["subspaces"] = sub;
    json gens = json::array();
    for (const HomTuple& g : c.gens) gens.push_back(homtuple_to_json(g));
    j["generators"] = gens;
    return j;
}

Elem elem_from_string(const CtxPtr& ctx, const std::string& s) {
    auto parse_ints = [](const std::string& part) {
        std::vector<int64_t> out;
        std::istringstream is(part);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) fail_invalid("malformed integer list: " + part);
            out.push_back(v);
        }
        return out;
    };
    if (ctx->kind() == CtxKind::differential) {
        const auto* K = static_cast<const RatFuncField*>(ctx->K().get());
        std::string num = s, den = "1";
        if (auto slash = s.find('/'); slash != std::string::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
        FPoly np, dp;
        for (int64_t v : parse_ints(num)) np.push_back(K->coeff_field()->from_int(v));
        for (int64_t v : parse_ints(den)) dp.push_back(K->coeff_field()->from_int(v));
        return K->from_polys(std::move(np), std::move(dp));
    }
    std::vector<int64_t> coeffs = parse_ints(s);
    json arr = json::array();
    for (int64_t v : coeffs) arr.push_back(v);
    return elem_from_json(ctx->K(), arr);
}

}  // namespace orecodes
