#include "orecodes/field.hpp"

#include <algorithm>
#include <sstream>

namespace orecodes {

// --- Elem ---------------------------------------------------------------

namespace {
const Field& F_of(const Elem& x) {
    if (!x.valid()) fail_internal("uninitialized field element");
    return *x.field();
}
void check_same_field(const Elem& x, const Elem& y) {
    if (!x.valid() || !y.valid()) fail_internal("uninitialized field element");
    if (!x.field()->same(*y.field())) fail_invalid("field mismatch between operands");
}
}  // namespace

bool Elem::is_zero() const { return F_of(*this).is_zero(*this); }
bool Elem::is_one() const { return F_of(*this).eq(*this, field_->one()); }

Elem Elem::operator+(const Elem& o) const {
    check_same_field(*this, o);
    return field_->add(*this, o);
}
Elem Elem::operator-(const Elem& o) const {
    check_same_field(*this, o);
    return field_->sub(*this, o);
}
Elem Elem::operator*(const Elem& o) const {
    check_same_field(*this, o);
    return field_->mul(*this, o);
}
Elem Elem::operator/(const Elem& o) const {
    check_same_field(*this, o);
    return field_->div(*this, o);
}
Elem Elem::operator-() const { return F_of(*this).neg(*this); }
bool Elem::operator==(const Elem& o) const {
    check_same_field(*this, o);
    return field_->eq(*this, o);
}
Elem Elem::inv() const { return F_of(*this).inv(*this); }
Elem Elem::pow(uint64_t e) const { return F_of(*this).pow(*this, e); }
std::string Elem::str() const { return F_of(*this).elem_str(*this); }

// --- Field base ----------------------------------------------------------

Elem Field::div(const Elem& x, const Elem& y) const {
    if (is_zero(y)) fail_invalid("division by zero");
    return mul(x, inv(y));
}

Elem Field::pow(const Elem& x, uint64_t e) const {
    Elem r = one();
    Elem b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint64_t Field::size() const { fail_invalid("size() on an infinite field"); }
std::vector<Elem> Field::all_elements() const { fail_invalid("cannot enumerate an infinite field"); }

void Field::check_elem(const Elem& x) const {
    if (!x.valid() || !x.field()->same(*this)) fail_invalid("element does not belong to this field");
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- PrimeField ------------------------------------------------------------

PrimeField::PrimeField(int64_t p) : Field(Kind::prime, p) {}

FieldPtr PrimeField::make(int64_t p) {
    if (!is_prime(p)) fail_invalid("characteristic must be prime");
    if (p >= (int64_t{1} << 31)) fail_invalid("characteristic too large");
    return FieldPtr(new PrimeField(p));
}

Elem PrimeField::zero() const { return Elem(shared_from_this(), int64_t{0}); }
Elem PrimeField::one() const { return Elem(shared_from_this(), int64_t{1}); }
Elem PrimeField::from_int(int64_t v) const {
    int64_t r = v % p_;
    if (r < 0) r += p_;
    return Elem(shared_from_this(), r);
}
Elem PrimeField::add(const Elem& x, const Elem& y) const { return from_int(x.ival() + y.ival()); }
Elem PrimeField::sub(const Elem& x, const Elem& y) const { return from_int(x.ival() - y.ival()); }
Elem PrimeField::mul(const Elem& x, const Elem& y) const { return from_int(x.ival() * y.ival()); }
Elem PrimeField::neg(const Elem& x) const { return from_int(-x.ival()); }

Elem PrimeField::inv(const Elem& x) const {
    if (x.ival() == 0) fail_invalid("division by zero");
    // extended Euclid on (x, p)
    int64_t a = x.ival(), b = p_, u = 1, v = 0;
    while (b) {
        int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    return from_int(u);
}

bool PrimeField::is_zero(const Elem& x) const { return x.ival() == 0; }
bool PrimeField::eq(const Elem& x, const Elem& y) const { return x.ival() == y.ival(); }
bool PrimeField::same(const Field& o) const { return o.kind() == Kind::prime && o.characteristic() == p_; }

std::vector<Elem> PrimeField::all_elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(p_));
    for (int64_t v = 0; v < p_; ++v) out.push_back(from_int(v));
    return out;
}

std::string PrimeField::elem_str(const Elem& x) const { return std::to_string(x.ival()); }

// --- ExtField ----------------------------------------------------------------

ExtField::ExtField(FieldPtr base, std::vector<Elem> modulus)
    : Field(Kind::ext, base->characteristic()), base_(std::move(base)), modulus_(std::move(modulus)) {}

FieldPtr ExtField::make(FieldPtr base, std::vector<Elem> modulus) {
    modulus = fp_trim(std::move(modulus));
    if (fp_deg(modulus) < 1) fail_invalid("modulus must have degree >= 1");
    if (!modulus.back().is_one()) fail_invalid("modulus must be monic");
    for (const Elem& c : modulus) base->check_elem(c);
    if (!is_irreducible(base, modulus)) fail_invalid("modulus is reducible");
    return FieldPtr(new ExtField(std::move(base), std::move(modulus)));
}

Elem ExtField::from_coeffs(std::vector<Elem> coeffs) const {
    const size_t d = degree();
    for (const Elem& c : coeffs) base_->check_elem(c);
    if (coeffs.size() > d) {
        FPoly r = fp_mod(base_, fp_trim(std::move(coeffs)), modulus_);
        coeffs = std::move(r);
    }
    coeffs.resize(d, base_->zero());
    return Elem(shared_from_this(), std::move(coeffs));
}

Elem ExtField::embed(const Elem& base_elem) const {
    base_->check_elem(base_elem);
    std::vector<Elem> c(degree(), base_->zero());
    c[0] = base_elem;
    return Elem(shared_from_this(), std::move(c));
}

bool ExtField::in_base(const Elem& x) const {
    check_elem(x);
    for (size_t i = 1; i < x.parts().size(); ++i)
        if (!x.parts()[i].is_zero()) return false;
    return true;
}

Elem ExtField::to_base(const Elem& x) const {
    if (!in_base(x)) fail_invalid("element is not in the base field");
    return x.parts()[0];
}

Elem ExtField::gen() const {
    std::vector<Elem> c(degree(), base_->zero());
    if (degree() >= 2) c[1] = base_->one();
    return Elem(shared_from_this(), std::move(c));
}

Elem ExtField::zero() const {
    return Elem(shared_from_this(), std::vector<Elem>(degree(), base_->zero()));
}
Elem ExtField::one() const { return embed(base_->one()); }
Elem ExtField::from_int(int64_t v) const { return embed(base_->from_int(v)); }

Elem ExtField::add(const Elem& x, const Elem& y) const {
    std::vector<Elem> c(degree());
    for (size_t i = 0; i < degree(); ++i) c[i] = x.parts()[i] + y.parts()[i];
    return Elem(shared_from_this(), std::move(c));
}
Elem ExtField::sub(const Elem& x, const Elem& y) const {
    std::vector<Elem> c(degree());
    for (size_t i = 0; i < degree(); ++i) c[i] = x.parts()[i] - y.parts()[i];
    return Elem(shared_from_this(), std::move(c));
}
Elem ExtField::neg(const Elem& x) const {
    std::vector<Elem> c(degree());
    for (size_t i = 0; i < degree(); ++i) c[i] = -x.parts()[i];
    return Elem(shared_from_this(), std::move(c));
}

Elem ExtField::mul(const Elem& x, const Elem& y) const {
    FPoly prod = fp_mul(base_, fp_trim(x.parts()), fp_trim(y.parts()));
    FPoly r = fp_mod(base_, prod, modulus_);
    r.resize(degree(), base_->zero());
    return Elem(shared_from_this(), std::move(r));
}

Elem ExtField::inv(const Elem& x) const {
    if (is_zero(x)) fail_invalid("division by zero");
    FPoly r = fp_inv_mod(base_, fp_trim(x.parts()), modulus_);
    r.resize(degree(), base_->zero());
    return Elem(shared_from_this(), std::move(r));
}

bool ExtField::is_zero(const Elem& x) const {
    check_elem(x);
    for (const Elem& c : x.parts())
        if (!c.is_zero()) return false;
    return true;
}

bool ExtField::eq(const Elem& x, const Elem& y) const {
    for (size_t i = 0; i < degree(); ++i)
        if (x.parts()[i] != y.parts()[i]) return false;
    return true;
}

bool ExtField::same(const Field& o) const {
    if (o.kind() != Kind::ext) return false;
    const auto& e = static_cast<const ExtField&>(o);
    if (!base_->same(*e.base_)) return false;
    if (modulus_.size() != e.modulus_.size()) return false;
    for (size_t i = 0; i < modulus_.size(); ++i)
        if (!base_->eq(modulus_[i], e.modulus_[i])) return false;
    return true;
}

uint64_t ExtField::size() const {
    uint64_t s = 1;
    for (size_t i = 0; i < degree(); ++i) s *= base_->size();
    return s;
}

std::vector<Elem> ExtField::all_elements() const {
    std::vector<Elem> base_elems = base_->all_elements();
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(size()));
    std::vector<size_t> idx(degree(), 0);
    while (true) {
        std::vector<Elem> c(degree());
        for (size_t i = 0; i < degree(); ++i) c[i] = base_elems[idx[i]];
        out.push_back(Elem(shared_from_this(), std::move(c)));
        size_t i = 0;
        while (i < degree() && ++idx[i] == base_elems.size()) idx[i++] = 0;
        if (i == degree()) break;
    }
    return out;
}

std::string ExtField::elem_str(const Elem& x) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < x.parts().size(); ++i) {
        if (i) os << ",";
        os << x.parts()[i].str();
    }
    os << "]";
    return os.str();
}

// --- RatFuncField --------------------------------------------------------------
//
// The rational function arithmetic is the innermost loop of everything in
// the differential kind, so it runs on plain int64 coefficient vectors and
// only wraps the results into elements at the boundary.

namespace {

using IPoly = std::vector<int64_t>;  // ascending, reduced mod p, trimmed

int64_t imod(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

int64_t iinv(int64_t a, int64_t p) {
    int64_t b = p, u = 1, v = 0;
    while (b) {
        int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    return imod(u, p);
}

IPoly ip_trim(IPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

IPoly ip_mul(const IPoly& a, const IPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return ip_trim(std::move(r));
}

IPoly ip_sub(const IPoly& a, const IPoly& b, int64_t p) {
    IPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = imod(r[i] - b[i], p);
    return ip_trim(std::move(r));
}

// in-place remainder; returns the quotient
IPoly ip_divmod(IPoly& r, const IPoly& b, int64_t p) {
    int db = static_cast<int>(b.size()) - 1;
    int dr = static_cast<int>(r.size()) - 1;
    if (dr < db) return {};
    IPoly q(static_cast<size_t>(dr - db) + 1, 0);
    int64_t li = iinv(b.back(), p);
    for (int i = dr - db; i >= 0; --i) {
        int64_t top = r[static_cast<size_t>(i + db)];
        if (!top) continue;
        int64_t c = (top * li) % p;
        q[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i + j)] = imod(r[static_cast<size_t>(i + j)] - c * b[static_cast<size_t>(j)], p);
    }
    r = ip_trim(std::move(r));
    return q;
}

IPoly ip_gcd(IPoly a, IPoly b, int64_t p) {
    a = ip_trim(std::move(a));
    b = ip_trim(std::move(b));
    while (!b.empty()) {
        ip_divmod(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        int64_t li = iinv(a.back(), p);
        for (int64_t& c : a) c = (c * li) % p;
    }
    return a;
}

IPoly ip_of(const FPoly& a) {
    IPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].ival();
    return ip_trim(std::move(out));
}

}  // namespace

RatFuncField::RatFuncField(int64_t p) : Field(Kind::ratfunc, p), base_(PrimeField::make(p)) {}

FieldPtr RatFuncField::make(int64_t p) {
    if (!is_prime(p)) fail_invalid("characteristic must be prime");
    return FieldPtr(new RatFuncField(p));
}

Elem RatFuncField::from_ipolys(IPoly n, IPoly d) const {
    n = ip_trim(std::move(n));
    d = ip_trim(std::move(d));
    if (d.empty()) fail_invalid("zero denominator");
    if (n.empty()) return zero();
    IPoly g = ip_gcd(n, d, p_);
    if (g.size() > 1) {
        IPoly nn = n, dd = d;
        n = ip_divmod(nn, g, p_);
        d = ip_divmod(dd, g, p_);
    }
    if (d.back() != 1) {
        int64_t li = iinv(d.back(), p_);
        for (int64_t& c : n) c = (c * li) % p_;
        for (int64_t& c : d) c = (c * li) % p_;
    }
    FPoly num(n.size()), den(d.size());
    for (size_t i = 0; i < n.size(); ++i) num[i] = Elem(base_, n[i]);
    for (size_t i = 0; i < d.size(); ++i) den[i] = Elem(base_, d[i]);
    return Elem(shared_from_this(), std::move(num), std::move(den));
}

Elem RatFuncField::from_polys(std::vector<Elem> num, std::vector<Elem> den) const {
    for (const Elem& c : num) base_->check_elem(c);
    for (const Elem& c : den) base_->check_elem(c);
    return from_ipolys(ip_of(num), ip_of(den));
}

Elem RatFuncField::t() const { return from_polys({base_->zero(), base_->one()}, {base_->one()}); }

Elem RatFuncField::zero() const {
    return Elem(shared_from_this(), FPoly{}, FPoly{base_->one()});
}
Elem RatFuncField::one() const {
    return Elem(shared_from_this(), FPoly{base_->one()}, FPoly{base_->one()});
}
Elem RatFuncField::from_int(int64_t v) const {
    return from_polys({base_->from_int(v)}, {base_->one()});
}

Elem RatFuncField::add(const Elem& x, const Elem& y) const {
    IPoly xn = ip_of(x.num()), xd = ip_of(x.den());
    IPoly yn = ip_of(y.num()), yd = ip_of(y.den());
    IPoly n = ip_sub(ip_mul(xn, yd, p_), ip_mul(ip_sub({}, yn, p_), xd, p_), p_);
    return from_ipolys(std::move(n), ip_mul(xd, yd, p_));
}
Elem RatFuncField::sub(const Elem& x, const Elem& y) const {
    IPoly xn = ip_of(x.num()), xd = ip_of(x.den());
    IPoly yn = ip_of(y.num()), yd = ip_of(y.den());
    IPoly n = ip_sub(ip_mul(xn, yd, p_), ip_mul(yn, xd, p_), p_);
    return from_ipolys(std::move(n), ip_mul(xd, yd, p_));
}
Elem RatFuncField::mul(const Elem& x, const Elem& y) const {
    return from_ipolys(ip_mul(ip_of(x.num()), ip_of(y.num()), p_),
                       ip_mul(ip_of(x.den()), ip_of(y.den()), p_));
}
Elem RatFuncField::neg(const Elem& x) const {
    FPoly n(x.num().size());
    for (size_t i = 0; i < n.size(); ++i) n[i] = Elem(base_, imod(-x.num()[i].ival(), p_));
    return Elem(shared_from_this(), std::move(n), x.den());
}
Elem RatFuncField::inv(const Elem& x) const {
    if (is_zero(x)) fail_invalid("division by zero");
    return from_ipolys(ip_of(x.den()), ip_of(x.num()));
}

bool RatFuncField::is_zero(const Elem& x) const {
    check_elem(x);
    return fp_is_zero(x.num());
}
bool RatFuncField::eq(const Elem& x, const Elem& y) const {
    // canonical representation makes equality structural
    return fp_eq(x.num(), y.num()) && fp_eq(x.den(), y.den());
}
bool RatFuncField::same(const Field& o) const {
    return o.kind() == Kind::ratfunc && o.characteristic() == p_;
}

Elem RatFuncField::derivative(const Elem& x) const {
    check_elem(x);
    auto deriv = [&](const IPoly& a) {
        IPoly d;
        for (size_t i = 1; i < a.size(); ++i) d.push_back((static_cast<int64_t>(i) % p_) * a[i] % p_);
        return ip_trim(std::move(d));
    };
    // (n/d)' = (n' d - n d') / d^2
    IPoly n = ip_of(x.num()), d = ip_of(x.den());
    IPoly top = ip_sub(ip_mul(deriv(n), d, p_), ip_mul(n, deriv(d), p_), p_);
    return from_ipolys(std::move(top), ip_mul(d, d, p_));
}

bool RatFuncField::is_p_power_support(const Elem& x) const {
    check_elem(x);
    auto ok = [&](const FPoly& a) {
        for (size_t i = 0; i < a.size(); ++i)
            if (i % static_cast<size_t>(p_) != 0 && !a[i].is_zero()) return false;
        return true;
    };
    return ok(x.num()) && ok(x.den());
}

std::vector<Elem> RatFuncField::p_basis_coords(const Elem& x) const {
    check_elem(x);
    const size_t p = static_cast<size_t>(p_);
    // x = num/den = (num den^{p-1}) / den^p, and den^p has p-power support;
    // split the numerator by exponent residue.
    IPoly num = ip_of(x.num()), den = ip_of(x.den());
    IPoly den_pow{1};
    for (size_t i = 0; i + 1 < p; ++i) den_pow = ip_mul(den_pow, den, p_);
    IPoly c = ip_mul(num, den_pow, p_);
    IPoly D = ip_mul(den_pow, den, p_);
    std::vector<Elem> out;
    out.reserve(p);
    for (size_t i = 0; i < p; ++i) {
        IPoly ni;
        for (size_t j = i; j < c.size(); j += p) {
            ni.resize(j - i + 1, 0);
            ni[j - i] = c[j];
        }
        out.push_back(from_ipolys(std::move(ni), D));
    }
    return out;
}

std::string RatFuncField::elem_str(const Elem& x) const {
    auto poly_str = [&](const FPoly& a) {
        if (fp_is_zero(a)) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || !a[i].is_one()) os << a[i].str();
            if (i == 1) os << (a[i].is_one() ? "t" : "*t");
            if (i > 1) os << (a[i].is_one() ? "t^" : "*t^") << i;
        }
        return os.str();
    };
    if (fp_deg(x.den()) == 0) return poly_str(x.num());
    return "(" + poly_str(x.num()) + ")/(" + poly_str(x.den()) + ")";
}

// --- dense polynomial helpers ---------------------------------------------

FPoly fp_trim(FPoly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

int fp_deg(const FPoly& a) { return static_cast<int>(a.size()) - 1; }
bool fp_is_zero(const FPoly& a) { return a.empty(); }

bool fp_eq(const FPoly& a, const FPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

FPoly fp_add(const FieldPtr& f, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), f->zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return fp_trim(std::move(r));
}

FPoly fp_sub(const FieldPtr& f, const FPoly& a, const FPoly& b) { return fp_add(f, a, fp_neg(f, b)); }

FPoly fp_neg(const FieldPtr& f, const FPoly& a) {
    (void)f;
    FPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

FPoly fp_mul(const FieldPtr& f, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, f->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return fp_trim(std::move(r));
}

FPoly fp_scale(const FieldPtr& f, const Elem& c, const FPoly& a) {
    (void)f;
    FPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return fp_trim(std::move(r));
}

std::pair<FPoly, FPoly> fp_divmod(const FieldPtr& f, const FPoly& a, const FPoly& b) {
    if (fp_is_zero(b)) fail_invalid("polynomial division by zero");
    FPoly r = fp_trim(a);
    const int db = fp_deg(b);
    const int dr = fp_deg(r);
    if (dr < db) return {FPoly{}, std::move(r)};
    FPoly q(static_cast<size_t>(dr - db) + 1, f->zero());
    Elem lead_inv = b.back().inv();
    for (int i = dr - db; i >= 0; --i) {
        Elem top = r[static_cast<size_t>(i + db)];
        if (top.is_zero()) continue;
        Elem c = top * lead_inv;
        q[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i + j)] = r[static_cast<size_t>(i + j)] - c * b[static_cast<size_t>(j)];
    }
    return {fp_trim(std::move(q)), fp_trim(std::move(r))};
}

FPoly fp_mod(const FieldPtr& f, const FPoly& a, const FPoly& b) { return fp_divmod(f, a, b).second; }

FPoly fp_monic(const FieldPtr& f, const FPoly& a) {
    if (fp_is_zero(a)) return a;
    return fp_scale(f, a.back().inv(), a);
}

FPoly fp_gcd(const FieldPtr& f, FPoly a, FPoly b) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!fp_is_zero(b)) {
        FPoly r = fp_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(f, a);
}

FPoly fp_pow(const FieldPtr& f, const FPoly& a, uint64_t e) {
    FPoly r{f->one()};
    FPoly b = a;
    while (e) {
        if (e & 1) r = fp_mul(f, r, b);
        b = fp_mul(f, b, b);
        e >>= 1;
    }
    return r;
}

Elem fp_eval(const FieldPtr& f, const FPoly& a, const Elem& x) {
    Elem r = f->zero();
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

FPoly fp_inv_mod(const FieldPtr& f, const FPoly& a, const FPoly& m) {
    // extended Euclid: u*a + v*m = g
    FPoly r0 = m, r1 = fp_mod(f, a, m);
    FPoly u0{}, u1{f->one()};
    while (!fp_is_zero(r1)) {
        auto [q, r2] = fp_divmod(f, r0, r1);
        FPoly u2 = fp_sub(f, u0, fp_mul(f, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (fp_deg(r0) != 0) fail_invalid("element not invertible modulo the given modulus");
    return fp_mod(f, fp_scale(f, r0[0].inv(), u0), m);
}

bool is_irreducible(const FieldPtr& base, const FPoly& m) {
    int d = fp_deg(m);
    if (d < 1) return false;
    if (d == 1) return true;
    // trial division by all monic polynomials of degree <= d/2
    std::vector<Elem> elems = base->all_elements();
    for (int k = 1; 2 * k <= d; ++k) {
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        while (true) {
            FPoly cand(static_cast<size_t>(k) + 1, base->zero());
            for (int i = 0; i < k; ++i) cand[static_cast<size_t>(i)] = elems[idx[static_cast<size_t>(i)]];
            cand[static_cast<size_t>(k)] = base->one();
            if (fp_is_zero(fp_mod(base, m, cand))) return false;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    return true;
}

FPoly find_irreducible(const FieldPtr& base, size_t degree) {
    if (degree == 0) fail_invalid("degree must be positive");
    std::vector<Elem> elems = base->all_elements();
    std::vector<size_t> idx(degree, 0);
    while (true) {
        FPoly cand(degree + 1, base->zero());
        for (size_t i = 0; i < degree; ++i) cand[i] = elems[idx[i]];
        cand[degree] = base->one();
        if (is_irreducible(base, cand)) return cand;
        size_t i = 0;
        while (i < degree && ++idx[i] == elems.size()) idx[i++] = 0;
        if (i == degree) break;
    }
    fail_internal("no irreducible polynomial found");  // unreachable over a finite field
}

}  // namespace orecodes
