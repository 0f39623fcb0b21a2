#include "orecodes/context.hpp"

#include <algorithm>

namespace orecodes {

namespace {

// K = F_{q^s} as a tower: F_p -> F_q (degree e) -> K (degree s), each step
// using the first irreducible modulus in counting order.
std::pair<FieldPtr, FieldPtr> build_frobenius_fields(int64_t p, int e, int s) {
    FieldPtr fp = PrimeField::make(p);
    FieldPtr F = fp;
    if (e > 1) F = ExtField::make(fp, find_irreducible(fp, static_cast<size_t>(e)));
    FieldPtr K = ExtField::make(F, find_irreducible(F, static_cast<size_t>(s)));
    return {K, F};
}

}  // namespace

CtxPtr OreContext::make_frobenius(int64_t p, int e, int s) {
    return make_frobenius(p, e, s, Elem());
}

CtxPtr OreContext::make_frobenius(int64_t p, int e, int s, const Elem& twist) {
    if (!is_prime(p)) fail_invalid("p must be prime");
    if (e < 1) fail_invalid("e must be >= 1");
    if (s < 2) fail_invalid("s must be >= 2: theta = id with delta = 0 is excluded");

    auto ctx = std::shared_ptr<OreContext>(new OreContext());
    ctx->kind_ = CtxKind::frobenius;
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->s_ = s;
    std::tie(ctx->K_, ctx->F_) = build_frobenius_fields(p, e, s);
    const auto* K = static_cast<const ExtField*>(ctx->K_.get());

    if (twist.valid()) {
        ctx->K_->check_elem(twist);
        ctx->twist_ = twist;
    } else {
        ctx->twist_ = ctx->K_->zero();
    }
    ctx->dscale_ = ctx->K_->zero();

    ctx->basis_.reserve(static_cast<size_t>(s));
    Elem g = K->gen();
    Elem b = ctx->K_->one();
    for (int i = 0; i < s; ++i) {
        ctx->basis_.push_back(b);
        b = b * g;
    }
    ctx->init_tau_unit();
    ctx->init_centre_coeffs();

    if (ctx->twist_.is_zero()) {
        ctx->twisted_ = ctx;
    } else {
        CtxPtr base = make_frobenius(p, e, s, ctx->K_->zero());
        ctx->twisted_ = base;
    }
    return ctx;
}

CtxPtr OreContext::make_differential(int64_t p, const Elem& a) {
    if (!is_prime(p)) fail_invalid("p must be prime");
    auto ctx = std::shared_ptr<OreContext>(new OreContext());
    ctx->kind_ = CtxKind::differential;
    ctx->p_ = p;
    ctx->e_ = 1;
    ctx->s_ = static_cast<int>(p);
    ctx->K_ = RatFuncField::make(p);
    ctx->F_ = ctx->K_;
    ctx->K_->check_elem(a);
    if (a.is_zero()) fail_invalid("derivation scale must be nonzero");
    ctx->dscale_ = a;
    ctx->twist_ = ctx->K_->zero();

    const auto* K = static_cast<const RatFuncField*>(ctx->K_.get());
    Elem t = K->t();
    Elem b = ctx->K_->one();
    for (int i = 0; i < ctx->s_; ++i) {
        ctx->basis_.push_back(b);
        b = b * t;
    }

    // Z(X) = X^p + z0 X: solve delta^p = -z0 * delta on the matrix of delta.
    Matrix M = ctx->delta_matrix();
    Matrix Mp = M.pow(static_cast<uint64_t>(p));
    Elem z0 = ctx->K_->zero();
    bool found = false;
    for (size_t i = 0; i < M.rows() && !found; ++i)
        for (size_t j = 0; j < M.cols() && !found; ++j)
            if (!M.at(i, j).is_zero()) {
                z0 = -(Mp.at(i, j) / M.at(i, j));
                found = true;
            }
    require_internal(found, "delta vanishes on the fixed basis");
    if (Mp != M.scale(-z0))
        fail_internal("no degree-p linearized annihilator of delta");
    ctx->require_in_F(z0, "z0 coefficient of the centre generator");
    ctx->zcoeffs_ = {z0, ctx->K_->one()};

    ctx->init_tau_unit();
    ctx->init_centre_coeffs();
    ctx->twisted_ = ctx;
    return ctx;
}

void OreContext::init_centre_coeffs() {
    if (kind_ == CtxKind::differential) {
        zpoly_.assign(static_cast<size_t>(s_) + 1, K_->zero());
        int64_t pk = 1;
        for (size_t i = 0; i < zcoeffs_.size(); ++i) {
            zpoly_[static_cast<size_t>(pk)] = zpoly_[static_cast<size_t>(pk)] + zcoeffs_[i];
            pk *= p_;
        }
        return;
    }
    // (X + twist)^s via the commutation rule
    std::vector<Elem> acc{K_->one()};
    for (int it = 0; it < s_; ++it) {
        std::vector<Elem> next(acc.size() + 1, K_->zero());
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = next[j + 1] + theta(acc[j]);
            next[j] = next[j] + delta(acc[j]) + twist_ * acc[j];
        }
        acc = std::move(next);
    }
    zpoly_ = std::move(acc);
}

void OreContext::init_tau_unit() {
    for (const Elem& b : basis_) {
        Elem tb = tau(b);
        if (!tb.is_zero()) {
            tau_unit_ = b / tb;
            return;
        }
    }
    fail_internal("trace form vanishes on the fixed basis");
}

bool OreContext::same(const OreContext& o) const {
    if (kind_ != o.kind_ || p_ != o.p_ || e_ != o.e_ || s_ != o.s_) return false;
    if (kind_ == CtxKind::frobenius) return twist_ == o.twist_;
    return dscale_ == o.dscale_;
}

Elem OreContext::theta(const Elem& x) const {
    if (kind_ == CtxKind::differential) return x;
    uint64_t q = 1;
    for (int i = 0; i < e_; ++i) q *= static_cast<uint64_t>(p_);
    return x.pow(q);
}

Elem OreContext::theta_pow(const Elem& x, int k) const {
    if (kind_ == CtxKind::differential) return x;
    k %= s_;
    if (k < 0) k += s_;
    Elem r = x;
    for (int i = 0; i < k; ++i) r = theta(r);
    return r;
}

Elem OreContext::theta_inv(const Elem& x) const { return theta_pow(x, s_ - 1); }

Elem OreContext::delta(const Elem& x) const {
    if (kind_ == CtxKind::frobenius) {
        if (twist_.is_zero()) return K_->zero();
        return twist_ * (theta(x) - x);
    }
    const auto* K = static_cast<const RatFuncField*>(K_.get());
    return dscale_ * K->derivative(x);
}

Elem OreContext::delta_pow(const Elem& x, int k) const {
    Elem r = x;
    for (int i = 0; i < k; ++i) r = delta(r);
    return r;
}

bool OreContext::in_F(const Elem& x) const {
    K_->check_elem(x);
    if (kind_ == CtxKind::frobenius) return static_cast<const ExtField*>(K_.get())->in_base(x);
    return static_cast<const RatFuncField*>(K_.get())->is_p_power_support(x);
}

void OreContext::require_in_F(const Elem& x, const char* what) const {
    if (!in_F(x)) fail_internal(std::string("value expected in F is not: ") + what);
}

std::vector<Elem> OreContext::coords(const Elem& x) const {
    K_->check_elem(x);
    if (kind_ == CtxKind::frobenius) {
        const auto* K = static_cast<const ExtField*>(K_.get());
        std::vector<Elem> c;
        c.reserve(x.parts().size());
        for (const Elem& part : x.parts()) c.push_back(K->embed(part));
        return c;
    }
    return static_cast<const RatFuncField*>(K_.get())->p_basis_coords(x);
}

Elem OreContext::from_coords(const std::vector<Elem>& c) const {
    if (c.size() != static_cast<size_t>(s_)) fail_invalid("coordinate vector has wrong length");
    Elem x = K_->zero();
    for (size_t i = 0; i < c.size(); ++i) x = x + c[i] * basis_[i];
    return x;
}

Elem OreContext::tau(const Elem& x) const {
    K_->check_elem(x);
    Elem r = K_->zero();
    if (kind_ == CtxKind::frobenius) {
        Elem y = x;
        for (int i = 0; i < s_; ++i) {
            r = r + y;
            y = theta(y);
        }
    } else {
        // sum_i z_i delta^{p^i - 1}(x), z_r = 1, r = 1
        int64_t pk = 1;
        for (size_t i = 0; i < zcoeffs_.size(); ++i) {
            r = r + zcoeffs_[i] * delta_pow(x, static_cast<int>(pk - 1));
            pk *= p_;
        }
    }
    require_in_F(r, "tau value");
    return r;
}

Elem OreContext::upsilon(const Elem& c) const {
    K_->check_elem(c);
    Elem r = K_->zero();
    if (kind_ == CtxKind::frobenius) {
        Elem y = c + twist_;
        r = K_->one();
        for (int i = 0; i < s_; ++i) {
            r = r * y;
            y = theta(y);
        }
    } else {
        // sum_{i<=r} sum_{j<=i} (z_i delta^{p^j-1}(c))^{p^{i-j}}
        for (size_t i = 0; i < zcoeffs_.size(); ++i) {
            int64_t pj = 1;
            for (size_t j = 0; j <= i; ++j) {
                Elem term = zcoeffs_[i] * delta_pow(c, static_cast<int>(pj - 1));
                uint64_t exp = 1;
                for (size_t k = 0; k < i - j; ++k) exp *= static_cast<uint64_t>(p_);
                r = r + term.pow(exp);
                pj *= p_;
            }
        }
    }
    require_in_F(r, "upsilon value");
    return r;
}

bool OreContext::is_ramified(const Elem& c) const {
    K_->check_elem(c);
    if (kind_ == CtxKind::differential) return false;
    return c == -twist_;
}

CtxPtr OreContext::twisted() const { return twisted_; }

Matrix OreContext::delta_matrix() const {
    std::vector<Elem> images;
    images.reserve(basis_.size());
    for (const Elem& b : basis_) images.push_back(delta(b));
    return matrix_of(images);
}

Matrix OreContext::matrix_of(const std::vector<Elem>& images_of_basis) const {
    if (images_of_basis.size() != basis_.size()) fail_invalid("need one image per basis vector");
    Matrix m(K_, basis_.size(), basis_.size());
    for (size_t j = 0; j < images_of_basis.size(); ++j) {
        std::vector<Elem> col = coords(images_of_basis[j]);
        for (size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

}  // namespace orecodes
