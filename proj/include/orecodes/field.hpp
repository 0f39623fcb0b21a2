#ifndef ORECODES_FIELD_HPP
#define ORECODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orecodes/errors.hpp"

namespace orecodes {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One field element. The payload layout depends on the owning field:
//   prime field   -- iv in [0, p)
//   extension     -- a = coefficient vector over the base field, length = degree
//   rational fn   -- a / b = num / den over the prime field, ascending in t,
//                    gcd-reduced, den monic, zero num stored as empty vector
// Elements are immutable values; all arithmetic routes through the owning
// field so representations stay canonical.
class Elem {
   public:
    Elem() = default;
    Elem(FieldPtr f, int64_t v) : field_(std::move(f)), iv_(v) {}
    Elem(FieldPtr f, std::vector<Elem> a) : field_(std::move(f)), a_(std::move(a)) {}
    Elem(FieldPtr f, std::vector<Elem> num, std::vector<Elem> den)
        : field_(std::move(f)), a_(std::move(num)), b_(std::move(den)) {}

    const FieldPtr& field() const { return field_; }
    bool valid() const { return field_ != nullptr; }

    int64_t ival() const { return iv_; }
    const std::vector<Elem>& parts() const { return a_; }
    const std::vector<Elem>& num() const { return a_; }
    const std::vector<Elem>& den() const { return b_; }

    bool is_zero() const;
    bool is_one() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;
    Elem operator-() const;
    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

    Elem inv() const;
    Elem pow(uint64_t e) const;

    std::string str() const;

   private:
    FieldPtr field_;
    int64_t iv_ = 0;
    std::vector<Elem> a_;
    std::vector<Elem> b_;
};

class Field : public std::enable_shared_from_this<Field> {
   public:
    enum class Kind { prime, ext, ratfunc };

    virtual ~Field() = default;

    Kind kind() const { return kind_; }
    int64_t characteristic() const { return p_; }

    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem from_int(int64_t v) const = 0;

    virtual Elem add(const Elem& x, const Elem& y) const = 0;
    virtual Elem sub(const Elem& x, const Elem& y) const = 0;
    virtual Elem mul(const Elem& x, const Elem& y) const = 0;
    virtual Elem neg(const Elem& x) const = 0;
    virtual Elem inv(const Elem& x) const = 0;
    Elem div(const Elem& x, const Elem& y) const;

    virtual bool is_zero(const Elem& x) const = 0;
    virtual bool eq(const Elem& x, const Elem& y) const = 0;

    // Structural identity: two separately constructed descriptions of the
    // same field compare equal.
    virtual bool same(const Field& o) const = 0;

    virtual bool finite() const = 0;
    // Number of elements; only for finite fields.
    virtual uint64_t size() const;
    // All elements in a fixed deterministic order; only for finite fields.
    virtual std::vector<Elem> all_elements() const;

    virtual std::string elem_str(const Elem& x) const = 0;

    Elem pow(const Elem& x, uint64_t e) const;

    void check_elem(const Elem& x) const;

   protected:
    Field(Kind k, int64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    int64_t p_;
};

class PrimeField : public Field {
   public:
    static FieldPtr make(int64_t p);

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(int64_t v) const override;
    Elem add(const Elem& x, const Elem& y) const override;
    Elem sub(const Elem& x, const Elem& y) const override;
    Elem mul(const Elem& x, const Elem& y) const override;
    Elem neg(const Elem& x) const override;
    Elem inv(const Elem& x) const override;
    bool is_zero(const Elem& x) const override;
    bool eq(const Elem& x, const Elem& y) const override;
    bool same(const Field& o) const override;
    bool finite() const override { return true; }
    uint64_t size() const override { return static_cast<uint64_t>(p_); }
    std::vector<Elem> all_elements() const override;
    std::string elem_str(const Elem& x) const override;

   private:
    explicit PrimeField(int64_t p);
};

// Extension of a (finite) base field by a monic irreducible modulus,
// elements represented on the power basis of the generator.
class ExtField : public Field {
   public:
    // Validates that the modulus is monic and irreducible (trial division).
    static FieldPtr make(FieldPtr base, std::vector<Elem> modulus);

    const FieldPtr& base() const { return base_; }
    size_t degree() const { return modulus_.size() - 1; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem from_coeffs(std::vector<Elem> coeffs) const;
    Elem embed(const Elem& base_elem) const;
    // Constant coefficient as a base-field element; requires the element to
    // be degree 0 (all higher coordinates zero).
    Elem to_base(const Elem& x) const;
    bool in_base(const Elem& x) const;
    Elem gen() const;

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(int64_t v) const override;
    Elem add(const Elem& x, const Elem& y) const override;
    Elem sub(const Elem& x, const Elem& y) const override;
    Elem mul(const Elem& x, const Elem& y) const override;
    Elem neg(const Elem& x) const override;
    Elem inv(const Elem& x) const override;
    bool is_zero(const Elem& x) const override;
    bool eq(const Elem& x, const Elem& y) const override;
    bool same(const Field& o) const override;
    bool finite() const override { return true; }
    uint64_t size() const override;
    std::vector<Elem> all_elements() const override;
    std::string elem_str(const Elem& x) const override;

   private:
    ExtField(FieldPtr base, std::vector<Elem> modulus);

    FieldPtr base_;
    std::vector<Elem> modulus_;  // ascending, monic, length degree+1
};

// Rational function field F_p(t).
class RatFuncField : public Field {
   public:
    static FieldPtr make(int64_t p);

    const FieldPtr& coeff_field() const { return base_; }

    // num/den as ascending coefficient vectors over F_p; canonicalizes.
    Elem from_polys(std::vector<Elem> num, std::vector<Elem> den) const;
    // Same, on raw residue vectors (the fast path used internally).
    Elem from_ipolys(std::vector<int64_t> num, std::vector<int64_t> den) const;
    Elem t() const;
    // d/dt via the quotient rule.
    Elem derivative(const Elem& x) const;
    // True when the canonical form only involves p-th power monomials,
    // i.e. the element lies in F_p(t^p).
    bool is_p_power_support(const Elem& x) const;
    // Coordinates of x on the basis 1, t, ..., t^{p-1} over F_p(t^p),
    // returned as elements of this field lying in that subfield.
    std::vector<Elem> p_basis_coords(const Elem& x) const;

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(int64_t v) const override;
    Elem add(const Elem& x, const Elem& y) const override;
    Elem sub(const Elem& x, const Elem& y) const override;
    Elem mul(const Elem& x, const Elem& y) const override;
    Elem neg(const Elem& x) const override;
    Elem inv(const Elem& x) const override;
    bool is_zero(const Elem& x) const override;
    bool eq(const Elem& x, const Elem& y) const override;
    bool same(const Field& o) const override;
    bool finite() const override { return false; }
    std::string elem_str(const Elem& x) const override;

   private:
    explicit RatFuncField(int64_t p);

    FieldPtr base_;  // F_p
};

// --- dense polynomials with coefficients in one field -----------------
//
// Ascending coefficient vectors, trimmed (no trailing zeros); the empty
// vector is the zero polynomial. Used for extension-field moduli, the
// centre F[Z], and rational function canonicalization.
using FPoly = std::vector<Elem>;

FPoly fp_trim(FPoly a);
int fp_deg(const FPoly& a);  // -1 for zero
bool fp_is_zero(const FPoly& a);
bool fp_eq(const FPoly& a, const FPoly& b);
FPoly fp_add(const FieldPtr& f, const FPoly& a, const FPoly& b);
FPoly fp_sub(const FieldPtr& f, const FPoly& a, const FPoly& b);
FPoly fp_neg(const FieldPtr& f, const FPoly& a);
FPoly fp_mul(const FieldPtr& f, const FPoly& a, const FPoly& b);
FPoly fp_scale(const FieldPtr& f, const Elem& c, const FPoly& a);
// Requires the divisor's leading coefficient invertible (always, over a field).
std::pair<FPoly, FPoly> fp_divmod(const FieldPtr& f, const FPoly& a, const FPoly& b);
FPoly fp_mod(const FieldPtr& f, const FPoly& a, const FPoly& b);
FPoly fp_monic(const FieldPtr& f, const FPoly& a);
FPoly fp_gcd(const FieldPtr& f, FPoly a, FPoly b);  // monic
FPoly fp_pow(const FieldPtr& f, const FPoly& a, uint64_t e);
Elem fp_eval(const FieldPtr& f, const FPoly& a, const Elem& x);
// Inverse of a modulo m (coprime); extended Euclid.
FPoly fp_inv_mod(const FieldPtr& f, const FPoly& a, const FPoly& m);

// Smallest monic irreducible polynomial of the given degree over a finite
// field, in the deterministic coefficient-counting order.
FPoly find_irreducible(const FieldPtr& base, size_t degree);
bool is_irreducible(const FieldPtr& base, const FPoly& m);

bool is_prime(int64_t p);

}  // namespace orecodes

#endif
