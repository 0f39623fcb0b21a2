#ifndef ORECODES_CONTEXT_HPP
#define ORECODES_CONTEXT_HPP

#include <memory>
#include <vector>

#include "orecodes/field.hpp"
#include "orecodes/linalg.hpp"

namespace orecodes {

enum class CtxKind { frobenius, differential };

class OreContext;
using CtxPtr = std::shared_ptr<const OreContext>;

// Immutable bundle of the ambient data of one Ore polynomial ring
// K[X; theta, delta]:
//
//   frobenius kind    K = F_{q^s}, q = p^e, theta = q-power Frobenius,
//                     delta = twist * (theta - id), F = F_q,
//                     centre generator Z(X) = (X + twist)^s
//   differential kind K = F_p(t), theta = id, delta = a * d/dt (a != 0),
//                     F = F_p(t^p), s = p,
//                     Z(X) = X^p + z0 * X, the minimal linearized
//                     polynomial of delta
//
// The F-basis of K is the power basis (extension generator, resp.
// 1, t, ..., t^{p-1}). Elements of F are represented as elements of K
// and recognized structurally; all F-linear algebra runs inside K.
class OreContext : public std::enable_shared_from_this<OreContext> {
   public:
    static CtxPtr make_frobenius(int64_t p, int e, int s, const Elem& twist);
    static CtxPtr make_frobenius(int64_t p, int e, int s);  // twist = 0
    static CtxPtr make_differential(int64_t p, const Elem& a);

    CtxKind kind() const { return kind_; }
    int64_t p() const { return p_; }
    int e() const { return e_; }
    int s() const { return s_; }
    const FieldPtr& K() const { return K_; }
    // Base field F_q of the tower (frobenius kind only).
    const FieldPtr& F_field() const { return F_; }
    const Elem& twist() const { return twist_; }        // frobenius
    const Elem& deriv_scale() const { return dscale_; }  // differential
    const std::vector<Elem>& basis() const { return basis_; }
    // z_0, ..., z_r with z_r = 1 (differential kind; r = 1 here).
    const std::vector<Elem>& zcoeffs() const { return zcoeffs_; }
    // X-coefficients of the centre generator Z(X), precomputed.
    const std::vector<Elem>& centre_coeffs() const { return zpoly_; }
    const Elem& tau_unit() const { return tau_unit_; }

    bool same(const OreContext& o) const;

    Elem theta(const Elem& x) const;
    Elem theta_pow(const Elem& x, int k) const;  // k taken mod s
    Elem theta_inv(const Elem& x) const;
    Elem delta(const Elem& x) const;
    Elem delta_pow(const Elem& x, int k) const;

    bool in_F(const Elem& x) const;
    void require_in_F(const Elem& x, const char* what) const;
    // Coordinates in the fixed F-basis, as elements of K lying in F.
    std::vector<Elem> coords(const Elem& x) const;
    Elem from_coords(const std::vector<Elem>& c) const;

    // Trace-like form: field trace of K/F (frobenius) or
    // sum_i z_i delta^{p^i - 1} (differential). Lands in F.
    Elem tau(const Elem& x) const;
    // Norm-like form: N_{K/F}(twist + c) (frobenius) or the closed
    // linearized-norm formula (differential). Equals the remainder of Z(X)
    // under right division by X - c; lands in F.
    Elem upsilon(const Elem& c) const;
    bool is_ramified(const Elem& c) const;
    Elem zero() const { return K_->zero(); }
    Elem one() const { return K_->one(); }

    // The companion ring with delta = 0 reached by the substitution
    // X -> X - twist (frobenius kind; identity when twist = 0).
    CtxPtr twisted() const;
    // Point translation matching the substitution: evaluation at c in this
    // ring agrees with evaluation at c + twist in the twisted ring.
    Elem to_twisted_point(const Elem& c) const { return c + twist_; }
    Elem from_twisted_point(const Elem& c) const { return c - twist_; }

    Matrix delta_matrix() const;  // s x s over F, columns on the fixed basis
    // Matrix of an F-linear map given the images of the fixed basis.
    Matrix matrix_of(const std::vector<Elem>& images_of_basis) const;

   private:
    OreContext() = default;

    CtxKind kind_;
    int64_t p_ = 0;
    int e_ = 1;
    int s_ = 0;
    FieldPtr K_;
    FieldPtr F_;
    Elem twist_;
    Elem dscale_;
    std::vector<Elem> basis_;
    std::vector<Elem> zcoeffs_;
    std::vector<Elem> zpoly_;
    Elem tau_unit_;
    mutable std::shared_ptr<const OreContext> twisted_;  // set at construction

    void init_tau_unit();
    void init_centre_coeffs();
};

}  // namespace orecodes

#endif
