#include "orecodes/codes.hpp"

#include <algorithm>
#include <cstdlib>

namespace orecodes {

// --- HomSpace / HomTuple -----------------------------------------------------

size_t HomSpace::block_cols(size_t i) const {
    return quotient ? static_cast<size_t>(ctx->s()) : domains[i].dim();
}

size_t HomSpace::length() const {
    size_t n = 0;
    for (const Subspace& d : domains)
        n += quotient ? static_cast<size_t>(ctx->s()) - d.dim() : d.dim();
    return n;
}

bool HomSpace::same(const HomSpace& o) const {
    if (quotient != o.quotient || domains.size() != o.domains.size()) return false;
    if (!ctx->same(*o.ctx)) return false;
    for (size_t i = 0; i < domains.size(); ++i)
        if (domains[i] != o.domains[i]) return false;
    return true;
}

HomTuple::HomTuple(HomSpace sp, std::vector<Matrix> b) : space(std::move(sp)), blocks(std::move(b)) {
    if (blocks.size() != space.blocks()) fail_invalid("wrong number of blocks");
    const size_t s = static_cast<size_t>(space.ctx->s());
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].rows() != s || blocks[i].cols() != space.block_cols(i))
            fail_invalid("block has the wrong shape");
        if (space.quotient) {
            // quotient-domain maps must kill the defining subspace
            Matrix img = blocks[i] * space.domains[i].basis();
            require_internal(img.is_zero(), "quotient block does not vanish on its subspace");
        }
    }
}

HomTuple HomTuple::zero(const HomSpace& sp) {
    std::vector<Matrix> b;
    const size_t s = static_cast<size_t>(sp.ctx->s());
    for (size_t i = 0; i < sp.blocks(); ++i) b.emplace_back(sp.ctx->K(), s, sp.block_cols(i));
    return HomTuple(sp, std::move(b));
}

HomTuple HomTuple::operator+(const HomTuple& o) const {
    if (!space.same(o.space)) fail_invalid("tuples from different spaces");
    std::vector<Matrix> b;
    for (size_t i = 0; i < blocks.size(); ++i) b.push_back(blocks[i] + o.blocks[i]);
    return HomTuple(space, std::move(b));
}

HomTuple HomTuple::operator-(const HomTuple& o) const {
    if (!space.same(o.space)) fail_invalid("tuples from different spaces");
    std::vector<Matrix> b;
    for (size_t i = 0; i < blocks.size(); ++i) b.push_back(blocks[i] - o.blocks[i]);
    return HomTuple(space, std::move(b));
}

bool HomTuple::operator==(const HomTuple& o) const {
    if (!space.same(o.space)) return false;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i] != o.blocks[i]) return false;
    return true;
}

bool HomTuple::is_zero() const {
    for (const Matrix& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

HomTuple HomTuple::scale(const Elem& a) const {
    Matrix mu = mul_operator(space.ctx, a).m;
    std::vector<Matrix> b;
    for (const Matrix& blk : blocks) b.push_back(mu * blk);
    return HomTuple(space, std::move(b));
}

std::vector<Elem> HomTuple::flatten() const {
    std::vector<Elem> v;
    for (const Matrix& b : blocks)
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) v.push_back(b.at(i, j));
    return v;
}

int sum_rank_weight(const HomTuple& t) {
    int w = 0;
    for (const Matrix& b : t.blocks) w += static_cast<int>(b.rank());
    return w;
}

int sum_rank_distance(const HomTuple& a, const HomTuple& b) { return sum_rank_weight(a - b); }

// --- code constructions ---------------------------------------------------------

namespace {

void check_code_params(const CtxPtr& ctx, const std::vector<Elem>& points,
                       const std::vector<Subspace>& spaces) {
    if (points.empty() || points.size() != spaces.size()) fail_invalid("points and subspaces must align");
    for (const Elem& c : points) require_unramified(ctx, c);
    require_distinct_upsilons(ctx, points);
    for (const Subspace& V : spaces)
        if (V.ambient_dim() != static_cast<size_t>(ctx->s())) fail_invalid("subspace has wrong ambient dimension");
}

// Columns of the F-span of the K-saturation of the given tuples.
Matrix k_span_columns(const CtxPtr& ctx, const std::vector<HomTuple>& gens) {
    std::vector<std::vector<Elem>> cols;
    for (const HomTuple& g : gens)
        for (const Elem& b : ctx->basis()) cols.push_back(g.scale(b).flatten());
    size_t rows = cols.empty() ? 0 : cols[0].size();
    return Matrix::from_columns(ctx->K(), rows, cols);
}

}  // namespace

HomTuple lrs_encode(const OrePoly& P, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces) {
    const CtxPtr& ctx = P.ctx();
    check_code_params(ctx, points, spaces);
    HomSpace sp{ctx, false, spaces};
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < points.size(); ++i)
        blocks.push_back(ev(P, points[i]).m * spaces[i].basis());
    return HomTuple(std::move(sp), std::move(blocks));
}

CodeBasis lrs_basis(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces) {
    check_code_params(ctx, points, spaces);
    HomSpace sp{ctx, false, spaces};
    const size_t n = sp.length();
    if (k > n) fail_precond("dimension k exceeds the code length");
    CodeBasis code;
    code.kind = CodeKind::lrs;
    code.ctx = ctx;
    code.k = k;
    code.points = points;
    code.spaces = spaces;
    code.space = sp;
    for (size_t j = 0; j < k; ++j)
        code.gens.push_back(lrs_encode(OrePoly::monomial(ctx, ctx->one(), j), points, spaces));
    if (k > 0)
        require_internal(k_span_columns(ctx, code.gens).rank() ==
                             k * static_cast<size_t>(ctx->s()),
                         "evaluation generators are not K-free");
    return code;
}

OreFraction goppa_multiplier(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                             const std::vector<Subspace>& spaces) {
    check_code_params(ctx, points, spaces);
    HomSpace quot{ctx, true, spaces};
    const size_t n = quot.length();
    if (n == 0) fail_precond("empty quotient space");
    if (k >= n) fail_precond("dimension k must be smaller than the code length");
    OrePoly D = multi_annihilator(ctx, points, spaces);
    OrePoly Dp = complement_cofactor(D, points, spaces);
    CentralPoly N = point_modulus(ctx, points);
    if (ctx->kind() == CtxKind::differential) return OreFraction(Dp, N);
    const size_t m = points.size();
    OrePoly shiftpow = OrePoly(ctx, {ctx->twist(), ctx->one()}).pow(n - k);
    CentralPoly den = N * CentralPoly::Z(ctx).pow(static_cast<uint64_t>(m) + 1);
    return OreFraction(shiftpow * Dp, den);
}

HomTuple residue_codeword(const OreFraction& f, const std::vector<Elem>& points,
                          const std::vector<Subspace>& spaces) {
    const CtxPtr& ctx = f.ctx();
    check_code_params(ctx, points, spaces);
    HomSpace sp{ctx, true, spaces};
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < points.size(); ++i) {
        Elem zi = ctx->upsilon(points[i]);
        // the denominator has at most a simple zero at z_i
        CentralPoly deflated = f.den();
        CentralPoly lin = CentralPoly::linear(ctx, zi);
        auto [q, r] = deflated.divmod(lin);
        OrePoly rep;
        if (!r.is_zero()) {
            // no pole: the residue vanishes
            rep = OrePoly::zero(ctx);
        } else {
            Elem unit = q.eval(zi);
            require_internal(!unit.is_zero(), "pole of order >= 2 at an evaluation point");
            rep = ore_mod(f.num().left_scale(unit.inv()), expand(lin));
        }
        blocks.push_back(ev(rep, points[i]).m);
    }
    return HomTuple(std::move(sp), std::move(blocks));  // the constructor checks vanishing on V_i
}

CodeBasis lg_basis(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                   const std::vector<Subspace>& spaces) {
    check_code_params(ctx, points, spaces);
    CodeBasis code;
    code.kind = CodeKind::lg;
    code.ctx = ctx;
    code.k = k;
    code.points = points;
    code.spaces = spaces;
    code.space = HomSpace{ctx, true, spaces};
    if (k == 0) return code;
    OreFraction P = goppa_multiplier(ctx, k, points, spaces);
    OrePoly X = OrePoly::X(ctx);
    OrePoly xj = OrePoly::one(ctx);
    for (size_t j = 0; j < k; ++j) {
        code.gens.push_back(residue_codeword(OreFraction(xj * P.num(), P.den()), points, spaces));
        if (j + 1 < k) xj = X * xj;
    }
    require_internal(k_span_columns(ctx, code.gens).rank() == k * static_cast<size_t>(ctx->s()),
                     "residue generators are not K-free");
    return code;
}

// --- pairing and duality ----------------------------------------------------------

namespace {

// Extension of a restricted block to all of K, zero on the chosen complement.
Matrix extend_block(const CtxPtr& ctx, const Matrix& block, const Subspace& V) {
    const size_t s = static_cast<size_t>(ctx->s());
    Matrix B(ctx->K(), s, s);
    Matrix comp = V.complement_columns();
    for (size_t j = 0; j < V.dim(); ++j)
        for (size_t i = 0; i < s; ++i) B.at(i, j) = V.basis().at(i, j);
    for (size_t j = 0; j < comp.cols(); ++j)
        for (size_t i = 0; i < s; ++i) B.at(i, V.dim() + j) = comp.at(i, j);
    auto Binv = B.inverse();
    require_internal(Binv.has_value(), "degenerate basis completion");
    Matrix ext(ctx->K(), s, s);
    for (size_t j = 0; j < V.dim(); ++j)
        for (size_t i = 0; i < s; ++i) ext.at(i, j) = block.at(i, j);
    return ext * (*Binv);
}

}  // namespace

Elem hom_pairing(const HomTuple& quotient_side, const HomTuple& restricted_side) {
    const CtxPtr& ctx = quotient_side.space.ctx;
    if (!quotient_side.space.quotient || restricted_side.space.quotient)
        fail_invalid("pairing takes a quotient-domain tuple and a restricted-domain tuple");
    if (quotient_side.space.blocks() != restricted_side.space.blocks())
        fail_invalid("pairing block count mismatch");
    Matrix g = gram(ctx);
    auto ginv = g.inverse();
    require_internal(ginv.has_value(), "degenerate trace pairing");
    Elem acc = ctx->zero();
    for (size_t i = 0; i < quotient_side.space.blocks(); ++i) {
        const Subspace& V = restricted_side.space.domains[i];
        const Subspace& W = quotient_side.space.domains[i];
        require_internal(orthogonal_subspace(ctx, V) == W,
                         "pairing spaces are not orthogonal partners");
        Matrix adj = (*ginv) * quotient_side.blocks[i].transpose() * g;
        // the adjoint lands inside V, so any extension of the restricted
        // block gives the same trace
        for (size_t j = 0; j < adj.cols(); ++j)
            require_internal(V.contains(adj.column(j)), "adjoint image escapes the domain subspace");
        Matrix ext = extend_block(ctx, restricted_side.blocks[i], V);
        acc = acc + (adj * ext).trace();
    }
    ctx->require_in_F(acc, "pairing value");
    return acc;
}

CodeBasis dual_code(const CodeBasis& code) {
    const CtxPtr& ctx = code.ctx;
    if (code.space.quotient) fail_invalid("dual_code expects a restricted-domain code");
    const size_t s = static_cast<size_t>(ctx->s());
    const size_t m = code.space.blocks();
    const size_t n = code.length();

    std::vector<Subspace> Vperp;
    for (const Subspace& V : code.space.domains) Vperp.push_back(orthogonal_subspace(ctx, V));
    HomSpace dual_space{ctx, true, Vperp};

    Matrix g = gram(ctx);
    Matrix ginv = *g.inverse();

    // unknowns: entries of the m quotient blocks, row-major
    const size_t unknowns = m * s * s;
    std::vector<std::vector<Elem>> rows;

    // vanishing on V_i^perp
    for (size_t i = 0; i < m; ++i) {
        const Subspace& W = Vperp[i];
        for (size_t col = 0; col < W.dim(); ++col)
            for (size_t r = 0; r < s; ++r) {
                std::vector<Elem> row(unknowns, ctx->zero());
                for (size_t c = 0; c < s; ++c)
                    row[(i * s + r) * s + c] = W.basis().at(c, col);
                rows.push_back(std::move(row));
            }
    }

    // orthogonality to the F-saturation of the generators:
    // Tr(adjoint(phi_i) ext_i) = sum_{u,v} phi_i[u][v] (G ext_i G^{-1})[u][v]
    for (const HomTuple& gen : code.gens) {
        for (const Elem& b : ctx->basis()) {
            HomTuple w = gen.scale(b);
            std::vector<Elem> row(unknowns, ctx->zero());
            for (size_t i = 0; i < m; ++i) {
                Matrix ext = extend_block(ctx, w.blocks[i], code.space.domains[i]);
                Matrix coeff = g * ext * ginv;
                for (size_t u = 0; u < s; ++u)
                    for (size_t v = 0; v < s; ++v) row[(i * s + u) * s + v] = coeff.at(u, v);
            }
            rows.push_back(std::move(row));
        }
    }

    Matrix sys(ctx->K(), rows.size(), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
    Matrix ker = sys.kernel();
    require_internal(ker.cols() == s * (n - code.dim_K()),
                     "orthogonal space has unexpected dimension");

    auto tuple_of = [&](const std::vector<Elem>& v) {
        std::vector<Matrix> blocks;
        for (size_t i = 0; i < m; ++i) {
            Matrix blk(ctx->K(), s, s);
            for (size_t u = 0; u < s; ++u)
                for (size_t c = 0; c < s; ++c) blk.at(u, c) = v[(i * s + u) * s + c];
            blocks.push_back(std::move(blk));
        }
        return HomTuple(dual_space, std::move(blocks));
    };

    // greedy K-basis extraction, checking K-stability as we go
    CodeBasis dual;
    dual.kind = CodeKind::generic;
    dual.ctx = ctx;
    dual.space = dual_space;
    std::vector<std::vector<Elem>> span_cols;
    Matrix span(ctx->K(), unknowns, 0);
    for (size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Elem> v = ker.column(j);
        if (span.cols() > 0 && span.in_column_span(v)) continue;
        HomTuple t = tuple_of(v);
        for (const Elem& b : ctx->basis()) {
            HomTuple tb = t.scale(b);
            std::vector<Elem> w;
            for (size_t i = 0; i < m; ++i)
                for (size_t u = 0; u < s; ++u)
                    for (size_t c = 0; c < s; ++c) w.push_back(tb.blocks[i].at(u, c));
            for (const Elem& entry : sys.apply(w))
                require_internal(entry.is_zero(), "orthogonal code is not K-stable");
            span_cols.push_back(std::move(w));
        }
        span = Matrix::from_columns(ctx->K(), unknowns, span_cols);
        dual.gens.push_back(std::move(t));
    }
    dual.k = dual.gens.size();
    require_internal(dual.k == n - code.dim_K(), "dual dimension law violated");
    return dual;
}

// --- transport isomorphism -------------------------------------------------------

PsiSetup psi_setup(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                   const std::vector<Subspace>& spaces) {
    check_code_params(ctx, points, spaces);
    OreFraction P = goppa_multiplier(ctx, k, points, spaces);
    PsiSetup psi;
    psi.ctx = ctx;
    psi.points = points;
    psi.V = spaces;
    const size_t s = static_cast<size_t>(ctx->s());

    for (size_t i = 0; i < points.size(); ++i) {
        Elem zi = ctx->upsilon(points[i]);
        // value of P * N_i at z_i: (num / (den / N_i)) evaluated mod N_i
        CentralPoly lin = CentralPoly::linear(ctx, zi);
        auto [den_def, r] = P.den().divmod(lin);
        require_internal(r.is_zero(), "multiplier denominator misses the point factor");
        Elem unit = den_def.eval(zi);
        require_internal(!unit.is_zero(), "deflated denominator vanishes at the point");
        OrePoly rep = ore_mod(P.num().left_scale(unit.inv()), expand(lin));
        Matrix taui = ev(rep, points[i]).m;

        Matrix killed = taui * spaces[i].basis();
        require_internal(killed.is_zero(), "transport map does not vanish on V_i");
        Subspace Wi = Subspace::span(taui);
        require_internal(Wi.dim() == s - spaces[i].dim(), "transport map has wrong rank");

        // coordinates of tau_i on the basis of W_i
        Matrix coords(ctx->K(), Wi.dim(), s);
        for (size_t col = 0; col < s; ++col) {
            auto sol = Wi.basis().solve(taui.column(col));
            require_internal(sol.has_value(), "transport image escapes W_i");
            for (size_t r2 = 0; r2 < Wi.dim(); ++r2) coords.at(r2, col) = (*sol)[r2];
        }
        psi.W.push_back(std::move(Wi));
        psi.tau.push_back(std::move(taui));
        psi.tau_coords.push_back(std::move(coords));
    }
    psi.domain = HomSpace{ctx, false, psi.W};
    psi.codomain = HomSpace{ctx, true, psi.V};
    return psi;
}

HomTuple psi_apply(const PsiSetup& psi, const HomTuple& on_W) {
    if (!on_W.space.same(psi.domain)) fail_invalid("tuple does not live on the transport domain");
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < psi.W.size(); ++i) blocks.push_back(on_W.blocks[i] * psi.tau_coords[i]);
    return HomTuple(psi.codomain, std::move(blocks));
}

// --- minimum distance ---------------------------------------------------------------

uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("ORECODES_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return 1000000;
}

namespace {

// All nonzero K-lines in coordinates (a_0..a_{k-1}): last nonzero entry 1.
template <typename Fn>
void for_each_line(const std::vector<Elem>& elems, const Elem& one, size_t k, Fn&& fn) {
    for (size_t topidx = 0; topidx < k; ++topidx) {
        std::vector<size_t> idx(topidx, 0);
        while (true) {
            std::vector<Elem> coef;
            coef.reserve(topidx + 1);
            for (size_t i = 0; i < topidx; ++i) coef.push_back(elems[idx[i]]);
            coef.push_back(one);
            fn(coef);
            size_t i = 0;
            while (i < topidx && ++idx[i] == elems.size()) idx[i++] = 0;
            if (i == topidx) break;
        }
    }
}

MinDistResult min_distance_enumerated(const CodeBasis& code, uint64_t budget) {
    const CtxPtr& ctx = code.ctx;
    const uint64_t q = ctx->K()->size();
    uint64_t count = 0, acc = 1;
    for (size_t j = 0; j < code.dim_K(); ++j) {
        count += acc;
        acc *= q;
        if (count > budget) fail(errc::budget_exceeded, "enumeration exceeds the configured budget");
    }
    MinDistResult res;
    res.exhaustive = true;
    res.d = static_cast<int>(code.length()) + 1;
    std::vector<Elem> elems = ctx->K()->all_elements();
    for_each_line(elems, ctx->one(), code.dim_K(), [&](const std::vector<Elem>& coef) {
        HomTuple word = HomTuple::zero(code.space);
        for (size_t j = 0; j < coef.size(); ++j)
            if (!coef[j].is_zero()) word = word + code.gens[j].scale(coef[j]);
        res.d = std::min(res.d, sum_rank_weight(word));
        ++res.enumerated;
    });
    return res;
}

// Extremal codewords from annihilators vanishing on prefix subspaces of the
// block domains, for every way of distributing k-1 kernel dimensions.
MinDistResult min_distance_witnessed(const CodeBasis& code) {
    const CtxPtr& ctx = code.ctx;
    MinDistResult res;
    res.exhaustive = false;
    res.d = static_cast<int>(code.length()) + 1;

    std::vector<Subspace> domains;
    PsiSetup psi;
    const bool is_lg = code.kind == CodeKind::lg;
    if (is_lg) {
        psi = psi_setup(ctx, code.k, code.points, code.spaces);
        domains = psi.W;
    } else {
        domains = code.spaces;
    }

    const size_t m = domains.size();
    const size_t want = code.k == 0 ? 0 : code.k - 1;

    // distribute `want` kernel dimensions over the blocks, bounded by the
    // domain dimensions; each distribution yields one extremal codeword
    std::vector<size_t> part(m, 0);
    auto emit = [&]() {
        std::vector<Subspace> U;
        for (size_t i = 0; i < m; ++i) {
            Matrix cols(ctx->K(), static_cast<size_t>(ctx->s()), part[i]);
            for (size_t j = 0; j < part[i]; ++j)
                for (size_t r = 0; r < cols.rows(); ++r) cols.at(r, j) = domains[i].basis().at(r, j);
            U.push_back(Subspace::span(cols));
        }
        OrePoly P = multi_annihilator(ctx, code.points, U);
        HomTuple word = lrs_encode(P, code.points, domains);
        if (is_lg) word = psi_apply(psi, word);
        if (!word.is_zero()) {
            res.d = std::min(res.d, sum_rank_weight(word));
            ++res.enumerated;
        }
    };
    auto rec = [&](auto&& self, size_t i, size_t left) -> void {
        if (i == m) {
            if (left == 0) emit();
            return;
        }
        for (size_t d = 0; d <= std::min(left, domains[i].dim()); ++d) {
            part[i] = d;
            self(self, i + 1, left - d);
        }
    };
    rec(rec, 0, want);
    return res;
}

}  // namespace

MinDistResult min_distance(const CodeBasis& code, uint64_t budget) {
    if (code.dim_K() == 0) fail_precond("minimum distance of the zero code");
    if (code.ctx->K()->finite()) return min_distance_enumerated(code, budget);
    if (code.kind == CodeKind::generic)
        fail(errc::budget_exceeded, "cannot enumerate an unstructured code over an infinite field");
    return min_distance_witnessed(code);
}

// --- code comparison ------------------------------------------------------------

bool code_contains(const CodeBasis& code, const HomTuple& word) {
    if (!code.space.same(word.space)) return false;
    if (word.is_zero()) return true;
    if (code.dim_K() == 0) return false;
    Matrix span = k_span_columns(code.ctx, code.gens);
    return span.in_column_span(word.flatten());
}

bool codes_equal(const CodeBasis& a, const CodeBasis& b) {
    if (!a.space.same(b.space)) return false;
    if (a.dim_K() != b.dim_K()) return false;
    for (const HomTuple& g : a.gens)
        if (!code_contains(b, g)) return false;
    for (const HomTuple& g : b.gens)
        if (!code_contains(a, g)) return false;
    return true;
}

}  // namespace orecodes
