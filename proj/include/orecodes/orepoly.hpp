#ifndef ORECODES_OREPOLY_HPP
#define ORECODES_OREPOLY_HPP

#include <utility>
#include <vector>

#include "orecodes/context.hpp"

namespace orecodes {

// Ore polynomial in K[X; theta, delta], ascending coefficients, trimmed.
// Multiplication follows X a = theta(a) X + delta(a).
class OrePoly {
   public:
    OrePoly() = default;
    OrePoly(CtxPtr ctx, std::vector<Elem> coeffs);
    static OrePoly zero(CtxPtr ctx);
    static OrePoly one(CtxPtr ctx);
    static OrePoly constant(CtxPtr ctx, const Elem& a);
    static OrePoly X(CtxPtr ctx);
    static OrePoly monomial(CtxPtr ctx, const Elem& a, size_t deg);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Elem coeff(size_t i) const;
    Elem lead() const;

    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const;
    OrePoly operator*(const OrePoly& o) const;
    OrePoly operator-() const;
    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    OrePoly left_scale(const Elem& a) const;  // a * this
    OrePoly monic() const;
    OrePoly shift(size_t k) const;  // X^k * this ... no: this * X^k (coefficients shift up)
    OrePoly pow(uint64_t e) const;

   private:
    CtxPtr ctx_;
    std::vector<Elem> c_;
};

// f = Q g + R with deg R < deg g.
std::pair<OrePoly, OrePoly> ore_divmod_right(const OrePoly& f, const OrePoly& g);
// f = g Q + R with deg R < deg g (theta is bijective here, so always defined).
std::pair<OrePoly, OrePoly> ore_divmod_left(const OrePoly& f, const OrePoly& g);
OrePoly ore_mod(const OrePoly& f, const OrePoly& g);
// Exact division on the right: f = Q g; throws if the remainder is nonzero.
OrePoly ore_div_exact(const OrePoly& f, const OrePoly& g);
// Monic greatest common right divisor.
OrePoly ore_rgcd(const OrePoly& f, const OrePoly& g);
// Monic least common left multiple; deg = deg f + deg g - deg rgcd.
OrePoly ore_lclm(const OrePoly& f, const OrePoly& g);

// Polynomial in the centre generator Z with coefficients in K (the
// commutative subring K[Z]). Ascending in Z, trimmed.
class CPoly {
   public:
    CPoly() = default;
    CPoly(CtxPtr ctx, std::vector<Elem> coeffs);
    static CPoly zero(CtxPtr ctx);
    static CPoly one(CtxPtr ctx);
    static CPoly constant(CtxPtr ctx, const Elem& a);
    static CPoly Z(CtxPtr ctx);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(size_t i) const;

    CPoly operator+(const CPoly& o) const;
    CPoly operator-(const CPoly& o) const;
    CPoly operator*(const CPoly& o) const;
    CPoly operator-() const;
    bool operator==(const CPoly& o) const;
    bool operator!=(const CPoly& o) const { return !(*this == o); }
    CPoly scale(const Elem& a) const;
    CPoly pow(uint64_t e) const;
    std::pair<CPoly, CPoly> divmod(const CPoly& o) const;
    Elem eval(const Elem& z) const;  // Z -> z
    bool central() const;            // all coefficients in F

   private:
    CtxPtr ctx_;
    std::vector<Elem> c_;
};

// Element of the centre F[Z]: a CPoly whose coefficients all lie in F.
class CentralPoly {
   public:
    CentralPoly() = default;
    explicit CentralPoly(CPoly p);
    CentralPoly(CtxPtr ctx, std::vector<Elem> coeffs);
    static CentralPoly zero(CtxPtr ctx);
    static CentralPoly one(CtxPtr ctx);
    static CentralPoly Z(CtxPtr ctx);
    // Z - z
    static CentralPoly linear(CtxPtr ctx, const Elem& z);

    const CPoly& raw() const { return p_; }
    const CtxPtr& ctx() const { return p_.ctx(); }
    int degree() const { return p_.degree(); }
    bool is_zero() const { return p_.is_zero(); }
    Elem coeff(size_t i) const { return p_.coeff(i); }
    bool is_monic() const;

    CentralPoly operator+(const CentralPoly& o) const { return CentralPoly(p_ + o.p_); }
    CentralPoly operator-(const CentralPoly& o) const { return CentralPoly(p_ - o.p_); }
    CentralPoly operator*(const CentralPoly& o) const { return CentralPoly(p_ * o.p_); }
    bool operator==(const CentralPoly& o) const { return p_ == o.p_; }
    bool operator!=(const CentralPoly& o) const { return !(*this == o); }
    CentralPoly pow(uint64_t e) const { return CentralPoly(p_.pow(e)); }
    std::pair<CentralPoly, CentralPoly> divmod(const CentralPoly& o) const;
    CentralPoly monic() const;
    Elem eval(const Elem& z) const { return p_.eval(z); }

   private:
    CPoly p_;
};

// Expansion of Z as an Ore polynomial: (X + twist)^s, resp.
// X^{p} + z0 X.
OrePoly centre_generator(const CtxPtr& ctx);
// Substitute the centre generator for Z.
OrePoly expand(const CPoly& c);
OrePoly expand(const CentralPoly& c);
// Coefficients g_0..g_{s-1} in K[Z] with f = sum g_i(Z) X^i.
std::vector<CPoly> centre_coords(const OrePoly& f);
OrePoly from_centre_coords(const std::vector<CPoly>& g);

// f / den with a central denominator; equality by cross-multiplication.
class OreFraction {
   public:
    OreFraction() = default;
    OreFraction(OrePoly num, CentralPoly den);
    explicit OreFraction(OrePoly num);

    const OrePoly& num() const { return num_; }
    const CentralPoly& den() const { return den_; }
    const CtxPtr& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }

    OreFraction operator+(const OreFraction& o) const;
    OreFraction operator-(const OreFraction& o) const;
    OreFraction operator*(const OreFraction& o) const;
    bool operator==(const OreFraction& o) const;
    bool operator!=(const OreFraction& o) const { return !(*this == o); }

   private:
    OrePoly num_;
    CentralPoly den_;  // monic
};

// Laurent element over the delta = 0 presentation (frobenius kind): a
// polynomial in Y = X + twist and its inverse, with Y^n b = theta^n(b) Y^n
// for every integer n. Stored in the twisted ring (twist 0).
class LaurentOre {
   public:
    LaurentOre() = default;
    LaurentOre(CtxPtr twisted_ctx, int valuation, std::vector<Elem> coeffs);
    static LaurentOre zero(CtxPtr twisted_ctx);

    const CtxPtr& ctx() const { return ctx_; }
    int valuation() const { return val_; }
    // degree of the top term; valuation - 1 if zero
    int top() const { return val_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(int exponent) const;

    LaurentOre operator+(const LaurentOre& o) const;
    LaurentOre operator-(const LaurentOre& o) const;
    LaurentOre operator*(const LaurentOre& o) const;
    bool operator==(const LaurentOre& o) const;
    LaurentOre shift(int k) const;  // multiply by Y^k on the left

   private:
    CtxPtr ctx_;  // twisted (delta = 0) ring
    int val_ = 0;
    std::vector<Elem> c_;
};

// Ring isomorphism onto the twisted (delta = 0) presentation, X -> X - twist,
// and its inverse. Identity when the twist is zero or in the differential kind.
OrePoly to_twisted(const OrePoly& f);
OrePoly from_twisted(const CtxPtr& user_ctx, const OrePoly& g);
// The same substitution with an arbitrary shift: f(X) -> f(X + a) computed in
// the ring with derivation delta + a * delta0.
OrePoly hilbert_substitute(const OrePoly& f, const CtxPtr& target, const Elem& a);

LaurentOre to_laurent(const OrePoly& f);
// Requires valuation >= 0.
OrePoly from_laurent(const CtxPtr& user_ctx, const LaurentOre& f);

}  // namespace orecodes

#endif
