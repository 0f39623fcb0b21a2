#include "orecodes/orepoly.hpp"

#include <algorithm>

namespace orecodes {

namespace {
std::vector<Elem> trim(std::vector<Elem> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}
void check_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (!a || !b) fail_internal("missing context");
    if (!a->same(*b)) fail_invalid("context mismatch between operands");
}
}  // namespace

// --- OrePoly ---------------------------------------------------------------

OrePoly::OrePoly(CtxPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(trim(std::move(coeffs))) {
    for (const Elem& a : c_) ctx_->K()->check_elem(a);
}

OrePoly OrePoly::zero(CtxPtr ctx) { return OrePoly(std::move(ctx), {}); }
OrePoly OrePoly::one(CtxPtr ctx) {
    Elem e = ctx->one();
    return OrePoly(std::move(ctx), {e});
}
OrePoly OrePoly::constant(CtxPtr ctx, const Elem& a) { return OrePoly(std::move(ctx), {a}); }
OrePoly OrePoly::X(CtxPtr ctx) {
    std::vector<Elem> c{ctx->zero(), ctx->one()};
    return OrePoly(std::move(ctx), std::move(c));
}
OrePoly OrePoly::monomial(CtxPtr ctx, const Elem& a, size_t deg) {
    std::vector<Elem> c(deg + 1, ctx->zero());
    c[deg] = a;
    return OrePoly(std::move(ctx), std::move(c));
}

Elem OrePoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

Elem OrePoly::lead() const {
    if (is_zero()) fail_invalid("leading coefficient of zero polynomial");
    return c_.back();
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    check_ctx(ctx_, o.ctx_);
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return OrePoly(ctx_, std::move(c));
}

OrePoly OrePoly::operator-() const {
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return OrePoly(ctx_, std::move(c));
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::operator*(const OrePoly& o) const {
    check_ctx(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    std::vector<Elem> acc(c_.size() + o.c_.size() - 1, ctx_->zero());
    // xig = X^i * g, advanced by one application of X at a time
    std::vector<Elem> xig = o.c_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero())
            for (size_t j = 0; j < xig.size(); ++j) acc[j] = acc[j] + c_[i] * xig[j];
        if (i + 1 < c_.size()) {
            // X * (sum c_j X^j) = sum theta(c_j) X^{j+1} + delta(c_j) X^j
            std::vector<Elem> next(xig.size() + 1, ctx_->zero());
            for (size_t j = 0; j < xig.size(); ++j) {
                next[j + 1] = next[j + 1] + ctx_->theta(xig[j]);
                next[j] = next[j] + ctx_->delta(xig[j]);
            }
            xig = std::move(next);
        }
    }
    return OrePoly(ctx_, std::move(acc));
}

bool OrePoly::operator==(const OrePoly& o) const {
    check_ctx(ctx_, o.ctx_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

OrePoly OrePoly::left_scale(const Elem& a) const {
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = a * c_[i];
    return OrePoly(ctx_, std::move(c));
}

OrePoly OrePoly::monic() const {
    if (is_zero()) return *this;
    return left_scale(lead().inv());
}

OrePoly OrePoly::shift(size_t k) const {
    // this * X^k: coefficients move up unchanged
    if (is_zero()) return *this;
    std::vector<Elem> c(c_.size() + k, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return OrePoly(ctx_, std::move(c));
}

OrePoly OrePoly::pow(uint64_t e) const {
    OrePoly r = one(ctx_);
    OrePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<OrePoly, OrePoly> ore_divmod_right(const OrePoly& f, const OrePoly& g) {
    check_ctx(f.ctx(), g.ctx());
    if (g.is_zero()) fail_invalid("Ore division by zero");
    const CtxPtr& ctx = f.ctx();
    OrePoly q = OrePoly::zero(ctx);
    OrePoly r = f;
    const int dg = g.degree();
    const Elem glead = g.lead();
    while (r.degree() >= dg) {
        int d = r.degree() - dg;
        // (c X^d) * g has leading coefficient c * theta^d(lead g)
        Elem c = r.lead() / ctx->theta_pow(glead, d);
        OrePoly term = OrePoly::monomial(ctx, c, static_cast<size_t>(d));
        q = q + term;
        r = r - term * g;
    }
    return {q, r};
}

std::pair<OrePoly, OrePoly> ore_divmod_left(const OrePoly& f, const OrePoly& g) {
    check_ctx(f.ctx(), g.ctx());
    if (g.is_zero()) fail_invalid("Ore division by zero");
    const CtxPtr& ctx = f.ctx();
    OrePoly q = OrePoly::zero(ctx);
    OrePoly r = f;
    const int dg = g.degree();
    const Elem glead = g.lead();
    while (r.degree() >= dg) {
        int d = r.degree() - dg;
        // g * (c X^d) has leading coefficient lead(g) * theta^{deg g}(c)
        Elem c = ctx->theta_pow(r.lead() / glead, -dg);
        OrePoly term = OrePoly::monomial(ctx, c, static_cast<size_t>(d));
        q = q + term;
        r = r - g * term;
    }
    return {q, r};
}

OrePoly ore_mod(const OrePoly& f, const OrePoly& g) { return ore_divmod_right(f, g).second; }

OrePoly ore_div_exact(const OrePoly& f, const OrePoly& g) {
    auto [q, r] = ore_divmod_right(f, g);
    require_internal(r.is_zero(), "inexact Ore division");
    return q;
}

OrePoly ore_rgcd(const OrePoly& f, const OrePoly& g) {
    check_ctx(f.ctx(), g.ctx());
    if (f.is_zero() && g.is_zero()) fail_invalid("gcd of two zero polynomials");
    OrePoly a = f, b = g;
    while (!b.is_zero()) {
        OrePoly r = ore_divmod_right(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

OrePoly ore_lclm(const OrePoly& f, const OrePoly& g) {
    check_ctx(f.ctx(), g.ctx());
    if (f.is_zero() || g.is_zero()) fail_precond("lclm requires nonzero inputs");
    const CtxPtr& ctx = f.ctx();
    // extended right Euclid, tracking the f-cofactor: r_i = u_i f + v_i g
    OrePoly r0 = f, r1 = g;
    OrePoly u0 = OrePoly::one(ctx), u1 = OrePoly::zero(ctx);
    while (!r1.is_zero()) {
        auto [q, r2] = ore_divmod_right(r0, r1);
        OrePoly u2 = u0 - q * u1;
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    // now u1 f + v1 g = 0, so u1 f is a common left multiple of minimal degree
    OrePoly m = (u1 * f).monic();
    require_internal(m.degree() == f.degree() + g.degree() - r0.degree(),
                     "lclm degree law violated");
    require_internal(ore_divmod_right(m, f).second.is_zero() && ore_divmod_right(m, g).second.is_zero(),
                     "lclm is not a common multiple");
    return m;
}

// --- CPoly -------------------------------------------------------------------

CPoly::CPoly(CtxPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(trim(std::move(coeffs))) {
    for (const Elem& a : c_) ctx_->K()->check_elem(a);
}

CPoly CPoly::zero(CtxPtr ctx) { return CPoly(std::move(ctx), {}); }
CPoly CPoly::one(CtxPtr ctx) {
    Elem e = ctx->one();
    return CPoly(std::move(ctx), {e});
}
CPoly CPoly::constant(CtxPtr ctx, const Elem& a) { return CPoly(std::move(ctx), {a}); }
CPoly CPoly::Z(CtxPtr ctx) {
    std::vector<Elem> c{ctx->zero(), ctx->one()};
    return CPoly(std::move(ctx), std::move(c));
}

Elem CPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

CPoly CPoly::operator+(const CPoly& o) const {
    check_ctx(ctx_, o.ctx_);
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return CPoly(ctx_, std::move(c));
}

CPoly CPoly::operator-() const {
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CPoly(ctx_, std::move(c));
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + (-o); }

CPoly CPoly::operator*(const CPoly& o) const {
    check_ctx(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return CPoly(ctx_, std::move(c));
}

bool CPoly::operator==(const CPoly& o) const {
    check_ctx(ctx_, o.ctx_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

CPoly CPoly::scale(const Elem& a) const {
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = a * c_[i];
    return CPoly(ctx_, std::move(c));
}

CPoly CPoly::pow(uint64_t e) const {
    CPoly r = one(ctx_);
    CPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<CPoly, CPoly> CPoly::divmod(const CPoly& o) const {
    check_ctx(ctx_, o.ctx_);
    if (o.is_zero()) fail_invalid("division by the zero polynomial");
    CPoly q = zero(ctx_), r = *this;
    Elem lead_inv = o.c_.back().inv();
    while (r.degree() >= o.degree()) {
        size_t d = static_cast<size_t>(r.degree() - o.degree());
        Elem c = r.c_.back() * lead_inv;
        std::vector<Elem> term(d + 1, ctx_->zero());
        term[d] = c;
        CPoly tq(ctx_, std::move(term));
        q = q + tq;
        r = r - tq * o;
    }
    return {q, r};
}

Elem CPoly::eval(const Elem& z) const {
    Elem r = ctx_->zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * z + c_[i];
    return r;
}

bool CPoly::central() const {
    for (const Elem& a : c_)
        if (!ctx_->in_F(a)) return false;
    return true;
}

// --- CentralPoly ---------------------------------------------------------------

CentralPoly::CentralPoly(CPoly p) : p_(std::move(p)) {
    if (!p_.central()) fail_internal("central polynomial has a coefficient outside F");
}
CentralPoly::CentralPoly(CtxPtr ctx, std::vector<Elem> coeffs) : CentralPoly(CPoly(std::move(ctx), std::move(coeffs))) {}

CentralPoly CentralPoly::zero(CtxPtr ctx) { return CentralPoly(CPoly::zero(std::move(ctx))); }
CentralPoly CentralPoly::one(CtxPtr ctx) { return CentralPoly(CPoly::one(std::move(ctx))); }
CentralPoly CentralPoly::Z(CtxPtr ctx) { return CentralPoly(CPoly::Z(std::move(ctx))); }
CentralPoly CentralPoly::linear(CtxPtr ctx, const Elem& z) {
    std::vector<Elem> c{-z, ctx->one()};
    return CentralPoly(CPoly(std::move(ctx), std::move(c)));
}

bool CentralPoly::is_monic() const { return !is_zero() && p_.coeffs().back().is_one(); }

std::pair<CentralPoly, CentralPoly> CentralPoly::divmod(const CentralPoly& o) const {
    auto [q, r] = p_.divmod(o.p_);
    return {CentralPoly(std::move(q)), CentralPoly(std::move(r))};
}

CentralPoly CentralPoly::monic() const {
    if (is_zero()) return *this;
    return CentralPoly(p_.scale(p_.coeffs().back().inv()));
}

// --- centre interaction -----------------------------------------------------

OrePoly centre_generator(const CtxPtr& ctx) { return OrePoly(ctx, ctx->centre_coeffs()); }

OrePoly expand(const CPoly& c) {
    const CtxPtr& ctx = c.ctx();
    OrePoly zp = centre_generator(ctx);
    OrePoly r = OrePoly::zero(ctx);
    for (size_t i = c.coeffs().size(); i-- > 0;) r = r * zp + OrePoly::constant(ctx, c.coeffs()[i]);
    return r;
}

OrePoly expand(const CentralPoly& c) { return expand(c.raw()); }

std::vector<CPoly> centre_coords(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    const size_t s = static_cast<size_t>(ctx->s());
    OrePoly zp = centre_generator(ctx);
    std::vector<std::vector<Elem>> rows(s);  // rows[i][j] = coefficient of Z^j X^i
    OrePoly rest = f;
    size_t j = 0;
    while (!rest.is_zero()) {
        auto [q, r] = ore_divmod_right(rest, zp);
        for (size_t i = 0; i < s; ++i) {
            Elem ci = r.coeff(i);
            if (!ci.is_zero()) {
                rows[i].resize(std::max(rows[i].size(), j + 1), ctx->zero());
                rows[i][j] = ci;
            }
        }
        rest = q;
        ++j;
    }
    std::vector<CPoly> out;
    out.reserve(s);
    for (size_t i = 0; i < s; ++i) out.emplace_back(ctx, std::move(rows[i]));
    return out;
}

OrePoly from_centre_coords(const std::vector<CPoly>& g) {
    if (g.empty()) fail_invalid("empty coordinate vector");
    const CtxPtr& ctx = g[0].ctx();
    OrePoly r = OrePoly::zero(ctx);
    for (size_t i = 0; i < g.size(); ++i) r = r + expand(g[i]) * OrePoly::X(ctx).pow(i);
    return r;
}

// --- OreFraction -----------------------------------------------------------------

OreFraction::OreFraction(OrePoly num) : num_(std::move(num)), den_(CentralPoly::one(num_.ctx())) {}

OreFraction::OreFraction(OrePoly num, CentralPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_ctx(num_.ctx(), den_.ctx());
    if (den_.is_zero()) fail_invalid("zero denominator");
    if (!den_.is_monic()) {
        Elem lead = den_.raw().coeffs().back();
        num_ = num_.left_scale(lead.inv());
        den_ = den_.monic();
    }
}

OreFraction OreFraction::operator+(const OreFraction& o) const {
    OrePoly n = num_ * expand(o.den_) + o.num_ * expand(den_);
    return OreFraction(std::move(n), den_ * o.den_);
}

OreFraction OreFraction::operator-(const OreFraction& o) const {
    OrePoly n = num_ * expand(o.den_) - o.num_ * expand(den_);
    return OreFraction(std::move(n), den_ * o.den_);
}

OreFraction OreFraction::operator*(const OreFraction& o) const {
    return OreFraction(num_ * o.num_, den_ * o.den_);
}

bool OreFraction::operator==(const OreFraction& o) const {
    return num_ * expand(o.den_) == o.num_ * expand(den_);
}

// --- LaurentOre ------------------------------------------------------------------

LaurentOre::LaurentOre(CtxPtr twisted_ctx, int valuation, std::vector<Elem> coeffs)
    : ctx_(std::move(twisted_ctx)), val_(valuation), c_(std::move(coeffs)) {
    if (ctx_->kind() != CtxKind::frobenius) fail_precond("Laurent elements exist only in the frobenius kind");
    require_internal(ctx_->twist().is_zero(), "Laurent elements live in the twisted presentation");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead_zeros = 0;
    while (lead_zeros < c_.size() && c_[lead_zeros].is_zero()) ++lead_zeros;
    if (lead_zeros) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
        val_ += static_cast<int>(lead_zeros);
    }
    if (c_.empty()) val_ = 0;
}

LaurentOre LaurentOre::zero(CtxPtr twisted_ctx) { return LaurentOre(std::move(twisted_ctx), 0, {}); }

Elem LaurentOre::coeff(int exponent) const {
    if (exponent < val_ || exponent > top()) return ctx_->zero();
    return c_[static_cast<size_t>(exponent - val_)];
}

LaurentOre LaurentOre::operator+(const LaurentOre& o) const {
    check_ctx(ctx_, o.ctx_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(val_, o.val_), hi = std::max(top(), o.top());
    std::vector<Elem> c(static_cast<size_t>(hi - lo + 1), ctx_->zero());
    for (int k = lo; k <= hi; ++k) c[static_cast<size_t>(k - lo)] = coeff(k) + o.coeff(k);
    return LaurentOre(ctx_, lo, std::move(c));
}

LaurentOre LaurentOre::operator-(const LaurentOre& o) const {
    std::vector<Elem> c(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = -o.c_[i];
    return *this + LaurentOre(o.ctx_, o.val_, std::move(c));
}

LaurentOre LaurentOre::operator*(const LaurentOre& o) const {
    check_ctx(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    int lo = val_ + o.val_;
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int ei = val_ + static_cast<int>(i);
        for (size_t j = 0; j < o.c_.size(); ++j) {
            // Y^{ei} b = theta^{ei}(b) Y^{ei}
            Elem term = c_[i] * ctx_->theta_pow(o.c_[j], ei);
            c[i + j] = c[i + j] + term;
        }
    }
    return LaurentOre(ctx_, lo, std::move(c));
}

bool LaurentOre::operator==(const LaurentOre& o) const {
    check_ctx(ctx_, o.ctx_);
    if (val_ != o.val_ || c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

LaurentOre LaurentOre::shift(int k) const {
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->theta_pow(c_[i], k);
    return LaurentOre(ctx_, val_ + k, std::move(c));
}

// --- coordinate changes --------------------------------------------------------

OrePoly hilbert_substitute(const OrePoly& f, const CtxPtr& target, const Elem& a) {
    OrePoly w(target, {a, target->one()});
    OrePoly r = OrePoly::zero(target);
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;) r = r * w + OrePoly::constant(target, c[i]);
    return r;
}

OrePoly to_twisted(const OrePoly& f) {
    const CtxPtr& ctx = f.ctx();
    if (ctx->kind() == CtxKind::differential || ctx->twist().is_zero()) return f;
    return hilbert_substitute(f, ctx->twisted(), -ctx->twist());
}

OrePoly from_twisted(const CtxPtr& user_ctx, const OrePoly& g) {
    if (user_ctx->kind() == CtxKind::differential || user_ctx->twist().is_zero()) return g;
    check_ctx(g.ctx(), user_ctx->twisted());
    return hilbert_substitute(g, user_ctx, user_ctx->twist());
}

LaurentOre to_laurent(const OrePoly& f) {
    if (f.ctx()->kind() != CtxKind::frobenius) fail_precond("Laurent form requires the frobenius kind");
    OrePoly g = to_twisted(f);
    return LaurentOre(f.ctx()->twisted(), 0, g.coeffs());
}

OrePoly from_laurent(const CtxPtr& user_ctx, const LaurentOre& f) {
    if (f.valuation() < 0) fail_invalid("Laurent element with a pole cannot become a polynomial");
    std::vector<Elem> c(static_cast<size_t>(f.valuation()), f.ctx()->zero());
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return from_twisted(user_ctx, OrePoly(f.ctx(), std::move(c)));
}

}  // namespace orecodes
