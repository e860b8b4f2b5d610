#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A two-sided ideal inside a host ring, stored as the full element set
/// (sorted index list plus membership mask).
struct Ideal {
    RingPtr ring;
    std::vector<ElemIdx> generators;
    std::vector<ElemIdx> elements; // sorted
    std::vector<bool> mask;

    bool contains(ElemIdx x) const { return mask[x]; }
    std::size_t size() const { return elements.size(); }
    bool is_proper() const { return elements.size() < ring->size(); }

    std::string display_gens() const;
};

/// Least two-sided ideal containing gens: additive closure of all r*g*s.
Ideal ideal_generated_by(const RingPtr& ring, const std::vector<ElemIdx>& gens);

/// Ideal from a known-closed element set (validated).
Ideal ideal_from_elements(const RingPtr& ring, std::vector<ElemIdx> elements);

/// True iff the element set is closed under +, - and two-sided multiplication
/// by the ring, and contains 0.
bool is_ideal_set(const FiniteRing& ring, const std::vector<bool>& mask);

/// Sum of two ideals of the same ring.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Every two-sided ideal exactly once, sorted by size then lexicographic
/// element set. Principal ideals closed under pairwise sums to a fixpoint.
std::vector<Ideal> all_ideals(const RingPtr& ring);

/// Every element nilpotent?
bool is_nil_ideal(const Ideal& i);

class QuotientRingImpl;

/// R/I with canonical minimal coset representatives.
struct QuotientRing {
    RingPtr base;
    Ideal modulus;
    RingPtr ring;                    // the quotient as a FiniteRing
    std::vector<ElemIdx> reps;       // quotient index -> minimal base representative
    std::vector<ElemIdx> projection; // base index -> quotient index

    ElemIdx project(ElemIdx base_elem) const { return projection[base_elem]; }
};

QuotientRing quotient_ring(const RingPtr& ring, const Ideal& i);

/// Image (i + modulus)/modulus of an ideal of the base ring inside the
/// quotient.
Ideal image_ideal(const QuotientRing& q, const Ideal& i);

/// Pull an ideal of the quotient ring back to the base ring.
Ideal preimage_ideal(const QuotientRing& q, const Ideal& i);

/// Given a nil ideal i and a with a^2 - a in i, produce an idempotent e with
/// e - a in i, by the Newton-style iteration e <- 3e^2 - 2e^3. Throws
/// ValidationError when the preconditions fail.
ElemIdx lift_idempotent_mod_nil(const RingPtr& ring, const Ideal& i, ElemIdx a);

} // namespace ringlab
