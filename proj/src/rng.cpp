#include "orecodes/rng.hpp"

namespace orecodes {

uint64_t Sampler::next(uint64_t bound) {
    std::uniform_int_distribution<uint64_t> d(0, bound - 1);
    return d(rng_);
}

Elem Sampler::field_elem(const FieldPtr& f, int max_deg) {
    switch (f->kind()) {
        case Field::Kind::prime:
            return f->from_int(static_cast<int64_t>(next(static_cast<uint64_t>(f->characteristic()))));
        case Field::Kind::ext: {
            const auto* ext = static_cast<const ExtField*>(f.get());
            std::vector<Elem> c;
            for (size_t i = 0; i < ext->degree(); ++i) c.push_back(field_elem(ext->base(), max_deg));
            return ext->from_coeffs(std::move(c));
        }
        case Field::Kind::ratfunc: {
            const auto* rf = static_cast<const RatFuncField*>(f.get());
            const FieldPtr& fp = rf->coeff_field();
            auto poly = [&](bool force_nonzero) {
                FPoly out;
                size_t deg = next(static_cast<uint64_t>(max_deg) + 1);
                for (size_t i = 0; i <= deg; ++i)
                    out.push_back(fp->from_int(static_cast<int64_t>(next(static_cast<uint64_t>(fp->characteristic())))));
                out = fp_trim(std::move(out));
                if (force_nonzero && fp_is_zero(out)) out = FPoly{fp->one()};
                return out;
            };
            return rf->from_polys(poly(false), poly(true));
        }
    }
    fail_internal("unknown field kind");
}

Elem Sampler::nonzero(const FieldPtr& f, int max_deg) {
    for (int tries = 0; tries < 256; ++tries) {
        Elem x = field_elem(f, max_deg);
        if (!x.is_zero()) return x;
    }
    fail_internal("could not sample a nonzero element");
}

Elem Sampler::f_elem(const CtxPtr& ctx, int max_deg) {
    if (ctx->kind() == CtxKind::frobenius) {
        const auto* K = static_cast<const ExtField*>(ctx->K().get());
        return K->embed(field_elem(K->base(), max_deg));
    }
    // an element of F_p(t^p): sample in u and substitute u = t^p
    const auto* K = static_cast<const RatFuncField*>(ctx->K().get());
    const FieldPtr& fp = K->coeff_field();
    const size_t p = static_cast<size_t>(ctx->p());
    auto upoly = [&](bool force_nonzero) {
        FPoly out;
        size_t deg = next(static_cast<uint64_t>(max_deg) + 1);
        for (size_t i = 0; i <= deg; ++i) {
            out.resize(i * p + 1, fp->zero());
            out[i * p] = fp->from_int(static_cast<int64_t>(next(static_cast<uint64_t>(fp->characteristic()))));
        }
        out = fp_trim(std::move(out));
        if (force_nonzero && fp_is_zero(out)) out = FPoly{fp->one()};
        return out;
    };
    return K->from_polys(upoly(false), upoly(true));
}

Elem Sampler::unramified(const CtxPtr& ctx) {
    for (int tries = 0; tries < 256; ++tries) {
        Elem c = k_elem(ctx);
        if (!ctx->is_ramified(c)) return c;
    }
    fail_internal("could not sample an unramified point");
}

OrePoly Sampler::ore_poly(const CtxPtr& ctx, int max_deg) {
    size_t deg = next(static_cast<uint64_t>(max_deg) + 1);
    std::vector<Elem> c;
    for (size_t i = 0; i <= deg; ++i) c.push_back(k_elem(ctx));
    return OrePoly(ctx, std::move(c));
}

OrePoly Sampler::nonzero_ore_poly(const CtxPtr& ctx, int max_deg) {
    for (int tries = 0; tries < 256; ++tries) {
        OrePoly f = ore_poly(ctx, max_deg);
        if (!f.is_zero()) return f;
    }
    fail_internal("could not sample a nonzero polynomial");
}

CentralPoly Sampler::central_poly(const CtxPtr& ctx, int max_deg) {
    size_t deg = next(static_cast<uint64_t>(max_deg) + 1);
    std::vector<Elem> c;
    for (size_t i = 0; i <= deg; ++i) c.push_back(f_elem(ctx));
    return CentralPoly(ctx, std::move(c));
}

CPoly Sampler::c_poly(const CtxPtr& ctx, int max_deg) {
    size_t deg = next(static_cast<uint64_t>(max_deg) + 1);
    std::vector<Elem> c;
    for (size_t i = 0; i <= deg; ++i) c.push_back(k_elem(ctx));
    return CPoly(ctx, std::move(c));
}

Subspace Sampler::subspace(const CtxPtr& ctx) {
    const size_t s = static_cast<size_t>(ctx->s());
    size_t d = next(s + 1);
    std::vector<std::vector<Elem>> cols;
    for (size_t j = 0; j < d; ++j) {
        std::vector<Elem> col;
        for (size_t i = 0; i < s; ++i) col.push_back(f_elem(ctx));
        cols.push_back(std::move(col));
    }
    return Subspace::span(Matrix::from_columns(ctx->K(), s, cols));
}

}  // namespace orecodes
