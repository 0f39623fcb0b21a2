#ifndef ORECODES_CODES_HPP
#define ORECODES_CODES_HPP

#include <cstdint>
#include <vector>

#include "orecodes/dual.hpp"
#include "orecodes/taylor.hpp"

namespace orecodes {

// Ambient product space of F-linear maps. Every block is either
// Hom_F(V_i, K), stored as an s x dim(V_i) matrix on the echelon basis of
// V_i, or Hom_F(K/W_i, K), stored as an s x s matrix vanishing on W_i.
struct HomSpace {
    CtxPtr ctx;
    bool quotient = false;
    std::vector<Subspace> domains;  // V_i, resp. the killed subspaces W_i

    size_t blocks() const { return domains.size(); }
    size_t block_cols(size_t i) const;
    // Sum of the domain dimensions (the code length).
    size_t length() const;
    bool same(const HomSpace& o) const;
};

struct HomTuple {
    HomSpace space;
    std::vector<Matrix> blocks;

    HomTuple() = default;
    HomTuple(HomSpace sp, std::vector<Matrix> b);
    static HomTuple zero(const HomSpace& sp);

    HomTuple operator+(const HomTuple& o) const;
    HomTuple operator-(const HomTuple& o) const;
    bool operator==(const HomTuple& o) const;
    bool operator!=(const HomTuple& o) const { return !(*this == o); }
    bool is_zero() const;
    // Action of K on the codomain: every block is left-multiplied by the
    // matrix of x -> a x.
    HomTuple scale(const Elem& a) const;
    std::vector<Elem> flatten() const;
};

int sum_rank_weight(const HomTuple& t);
int sum_rank_distance(const HomTuple& a, const HomTuple& b);

enum class CodeKind { lrs, lg, generic };

struct CodeBasis {
    CodeKind kind = CodeKind::generic;
    CtxPtr ctx;
    size_t k = 0;
    std::vector<Elem> points;
    std::vector<Subspace> spaces;  // defining V_i (lrs/lg only)
    HomSpace space;
    std::vector<HomTuple> gens;

    size_t length() const { return space.length(); }
    size_t dim_K() const { return gens.size(); }
};

// Evaluation codeword: (ev(P, c_1)|V_1, ..., ev(P, c_m)|V_m).
HomTuple lrs_encode(const OrePoly& P, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces);

// Images of 1, X, ..., X^{k-1}; K-free whenever k <= n.
CodeBasis lrs_basis(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                    const std::vector<Subspace>& spaces);

// The residue-construction multiplier: D^{-1} (differential kind), resp.
// Z^{-m-1} (X + twist)^{n-k} D^{-1} (frobenius kind), as a fraction with a
// central denominator.
OreFraction goppa_multiplier(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                             const std::vector<Subspace>& spaces);

// Residue codeword of one fraction: block i is ev(sres at upsilon(c_i), c_i),
// constrained to vanish on V_i.
HomTuple residue_codeword(const OreFraction& f, const std::vector<Elem>& points,
                          const std::vector<Subspace>& spaces);

// Goppa code basis: residue codewords of X^j * multiplier, j < k.
CodeBasis lg_basis(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                   const std::vector<Subspace>& spaces);

// Perfect pairing between Hom(K/V_perp, K)-tuples and Hom(V, K)-tuples:
// sum over blocks of Tr(adjoint(phi_i) o psi_i~), psi_i~ any extension of
// psi_i to K (the value is extension-independent).
Elem hom_pairing(const HomTuple& quotient_side, const HomTuple& restricted_side);

// Orthogonal of a restricted-domain code inside the quotient ambient over
// the orthogonal subspaces; K-basis, verified K-stable.
CodeBasis dual_code(const CodeBasis& code);

// Transport data between Hom(W_, K) and Hom(K/V_, K): tau_i is the value of
// multiplier * N_i at upsilon(c_i) evaluated at c_i, an isomorphism
// K/V_i -> W_i = im(tau_i).
struct PsiSetup {
    CtxPtr ctx;
    std::vector<Elem> points;
    std::vector<Subspace> V;
    std::vector<Subspace> W;
    std::vector<Matrix> tau;        // s x s, kernel V_i, image W_i
    std::vector<Matrix> tau_coords; // dim(W_i) x s: tau in W_i coordinates
    HomSpace domain;                // restricted over W_
    HomSpace codomain;              // quotient over V_
};

PsiSetup psi_setup(const CtxPtr& ctx, size_t k, const std::vector<Elem>& points,
                   const std::vector<Subspace>& spaces);

// phi on W_ composed with the transport maps; preserves sum-rank weight.
HomTuple psi_apply(const PsiSetup& psi, const HomTuple& on_W);

struct MinDistResult {
    int d = 0;
    bool exhaustive = false;
    uint64_t enumerated = 0;
};

// Minimum sum-rank weight of a nonzero codeword. Over a finite K this
// enumerates one representative per K-line (monic polynomials for lrs
// bases); over K = F_p(t) exhaustive enumeration is impossible and the
// minimum is taken over the annihilator-built extremal codewords instead
// (exhaustive = false).
MinDistResult min_distance(const CodeBasis& code, uint64_t budget);

uint64_t default_enumeration_budget();

// Same K-subspace: equal K-dimension and mutual membership of generators.
bool codes_equal(const CodeBasis& a, const CodeBasis& b);
bool code_contains(const CodeBasis& code, const HomTuple& word);

}  // namespace orecodes

#endif
