#ifndef ORECODES_RNG_HPP
#define ORECODES_RNG_HPP

#include <cstdint>
#include <random>

#include "orecodes/orepoly.hpp"

namespace orecodes {

// Deterministic sampling helpers shared by the test suites and the
// built-in verification runs.
class Sampler {
   public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    uint64_t next(uint64_t bound);  // uniform in [0, bound)

    Elem field_elem(const FieldPtr& f, int max_deg = 2);
    Elem nonzero(const FieldPtr& f, int max_deg = 2);
    Elem k_elem(const CtxPtr& ctx) { return field_elem(ctx->K()); }
    // Element of F (an F-combination rebuilt through the canonical form).
    Elem f_elem(const CtxPtr& ctx, int max_deg = 2);
    Elem unramified(const CtxPtr& ctx);
    OrePoly ore_poly(const CtxPtr& ctx, int max_deg);
    OrePoly nonzero_ore_poly(const CtxPtr& ctx, int max_deg);
    CentralPoly central_poly(const CtxPtr& ctx, int max_deg);
    CPoly c_poly(const CtxPtr& ctx, int max_deg);
    Subspace subspace(const CtxPtr& ctx);

   private:
    std::mt19937_64 rng_;
};

}  // namespace orecodes

#endif
