#pragma once

#include <memory>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Finite abelian group (product of cyclic factors) carrying a left action
/// of one ring and a right action of another. Actions are stored as full
/// tables; the canonical residue action is generated when both the host
/// ring and the carrier are residue-based. Either action may be absent.
class Bimodule {
public:
    /// Canonical residue bimodule: carrier Z_{d1} x ... with a acting by
    /// residue multiplication. Requires every d_i to divide the modulus of
    /// the acting Z_n ring (validated).
    static std::shared_ptr<Bimodule> canonical(std::vector<unsigned> factors,
                                               RingPtr left_ring, RingPtr right_ring);

    /// Explicit action tables (left_table[a][m], right_table[m][b]).
    static std::shared_ptr<Bimodule> from_tables(std::vector<unsigned> factors,
                                                 RingPtr left_ring, RingPtr right_ring,
                                                 std::vector<std::vector<ElemIdx>> left_table,
                                                 std::vector<std::vector<ElemIdx>> right_table);

    std::size_t size() const { return size_; }
    const std::vector<unsigned>& factors() const { return factors_; }
    ElemIdx zero() const { return 0; }
    ElemIdx add(ElemIdx a, ElemIdx b) const;
    ElemIdx neg(ElemIdx a) const;
    ElemIdx left_act(ElemIdx ring_elem, ElemIdx m) const { return left_table_[ring_elem][m]; }
    ElemIdx right_act(ElemIdx m, ElemIdx ring_elem) const { return right_table_[m][ring_elem]; }
    bool has_left() const { return !left_table_.empty(); }
    bool has_right() const { return !right_table_.empty(); }
    const RingPtr& left_ring() const { return left_ring_; }
    const RingPtr& right_ring() const { return right_ring_; }
    std::string display(ElemIdx m) const;
    std::string spec_string() const;

    /// Exhaustive bimodule-axiom check: additivity in both slots,
    /// action associativity, unitality and compatibility (am)b = a(mb).
    /// Throws ValidationError naming the violated law.
    void validate() const;

    /// All subgroups of the carrier closed under both actions, each as a
    /// sorted element list, sorted by size then lexicographic.
    std::vector<std::vector<ElemIdx>> submodules() const;

private:
    Bimodule() = default;
    std::vector<unsigned> factors_;
    std::size_t size_ = 1;
    RingPtr left_ring_, right_ring_;
    std::vector<std::vector<ElemIdx>> left_table_;  // |left ring| x |M|
    std::vector<std::vector<ElemIdx>> right_table_; // |M| x |right ring|
};

using ModulePtr = std::shared_ptr<Bimodule>;

/// Coordinatewise product ring. Element index is mixed-radix over the
/// factors, first factor most significant.
RingPtr direct_product(std::vector<RingPtr> parts);

/// Component access for product rings (nullptr check via dynamic_cast in the
/// callers is avoided by these free helpers; they throw on non-product).
const std::vector<RingPtr>& product_parts(const FiniteRing& r);
ElemIdx product_component(const FiniteRing& r, ElemIdx x, std::size_t part);
ElemIdx product_compose(const FiniteRing& r, const std::vector<ElemIdx>& comps);
bool is_product_ring(const FiniteRing& r);

/// Upper triangular k x k matrix ring over r; entries indexed row-major over
/// the k(k+1)/2 upper positions, first entry most significant.
RingPtr triangular_ring(unsigned k, RingPtr r);
bool is_triangular_ring(const FiniteRing& r);
unsigned triangular_dim(const FiniteRing& r);
const RingPtr& triangular_base(const FiniteRing& r);
/// Entry X_{ij} (0-based, i <= j) of a triangular ring element.
ElemIdx triangular_entry(const FiniteRing& r, ElemIdx x, unsigned i, unsigned j);
/// Build a triangular element from its upper entries (row-major).
ElemIdx triangular_compose(const FiniteRing& r, const std::vector<ElemIdx>& entries);

/// Corner ring fRf for an idempotent f; carrier is the sorted set {fxf}.
RingPtr corner_ring(RingPtr r, ElemIdx f);
bool is_corner_ring(const FiniteRing& r);
/// Index in the corner ring of a base element fxf; the element must lie in
/// the carrier.
ElemIdx corner_index(const FiniteRing& corner, ElemIdx base_elem);
/// Base-ring element behind a corner index.
ElemIdx corner_lift(const FiniteRing& corner, ElemIdx x);
const RingPtr& corner_base(const FiniteRing& r);

/// Idealization R(M): carrier R x M, (r,m)(r',m') = (rr', rm' + r'm).
/// Base must be commutative; module axioms validated.
RingPtr idealization(RingPtr r, ModulePtr m);
bool is_idealization_ring(const FiniteRing& r);
const RingPtr& idealization_base(const FiniteRing& r);
const ModulePtr& idealization_module(const FiniteRing& r);
ElemIdx idealization_compose(const FiniteRing& r, ElemIdx base_elem, ElemIdx mod_elem);
std::pair<ElemIdx, ElemIdx> idealization_split(const FiniteRing& r, ElemIdx x);

enum class PairingKind { Zero, Mul, Tables };

/// Morita context ring [[A, M], [N, B]] with pairings
/// pair_A : M x N -> A and pair_B : N x M -> B. M is an (A,B)-bimodule and
/// N a (B,A)-bimodule. Bilinearity and the associativity conditions
/// pair_A(m,n)m' = m pair_B(n,m') and pair_B(n,m)n' = n pair_A(m,n') are
/// validated exhaustively at construction.
struct MoritaSpec {
    RingPtr A, B;
    ModulePtr M; // left A, right B
    ModulePtr N; // left B, right A
    PairingKind kind = PairingKind::Zero;
    std::vector<std::vector<ElemIdx>> pair_A; // |M| x |N| -> A
    std::vector<std::vector<ElemIdx>> pair_B; // |N| x |M| -> B
};

RingPtr morita_ring(MoritaSpec spec);
bool is_morita_ring(const FiniteRing& r);
const MoritaSpec& morita_spec(const FiniteRing& r);
/// Components (a, m, n, b) of a Morita ring element.
struct MoritaElem {
    ElemIdx a, m, n, b;
};
MoritaElem morita_split(const FiniteRing& r, ElemIdx x);
ElemIdx morita_compose(const FiniteRing& r, const MoritaElem& e);

struct Ideal;

/// The four corner collections p_A, p_M, p_N, p_B of a subset of a Morita
/// ring.
struct ContextProjection {
    std::vector<ElemIdx> p_A, p_B; // element sets in A, B
    std::vector<ElemIdx> p_M, p_N; // subsets of M, N
};

ContextProjection context_projections(const Ideal& i);

} // namespace ringlab
