#pragma once

#include <map>
#include <optional>
#include <string>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Decomposition flavors. "weak"/"weakly" admits the sign alternative
/// x = e + w or x = -e + w; "strongly" adds the commuting requirement
/// ew = we; nil flavors want w nilpotent, clean flavors want w a unit.
enum class Flavor {
    Clean,
    WeaklyClean,
    NilClean,
    WeakNilClean,
    StronglyClean,
    StronglyWeaklyClean,
    StronglyNilClean,
    StronglyWeakNilClean,
};

bool flavor_is_weak(Flavor f);
bool flavor_is_nil(Flavor f);   // w nilpotent (else unit)
bool flavor_is_strong(Flavor f);
std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(std::string_view name);

/// A verifiable witness x = sign*e + w with e idempotent and w nilpotent or
/// a unit per flavor. type_tag records the sign form for weak flavors
/// ("I" = plus, "II" = minus).
struct DecompositionCertificate {
    Flavor flavor;
    RingPtr ring;
    ElemIdx x;
    int sign; // +1 or -1; -1 only for weak flavors
    ElemIdx e;
    ElemIdx w;
    bool commuting;
    std::string type_tag; // "I" or "II" for weak flavors, "" otherwise

    std::string to_json() const;
    /// Parses the certificate JSON emitted by to_json; rebuilds the ring
    /// from the embedded spec string.
    static DecompositionCertificate from_json(const std::string& text);
};

/// Deterministic search for a decomposition of x: idempotents in ascending
/// index order, sign +1 tried before -1. restrict_to confines both e and w
/// to the ideal. Absence is a value, not an error.
std::optional<DecompositionCertificate> decompose(const RingPtr& ring, ElemIdx x, Flavor flavor,
                                                  const Ideal* restrict_to = nullptr);

/// Number of distinct idempotents e of the host ring with x - e or x + e
/// nilpotent (the two signs merged per e).
std::size_t unique_wnc_witness_count(const RingPtr& ring, ElemIdx x);

/// Re-evaluates every certificate invariant against ring arithmetic,
/// independently of the search that produced it.
bool verify_certificate(const DecompositionCertificate& c);

struct IdealClassification {
    Flavor flavor;
    bool restricted;
    bool holds;
    std::map<ElemIdx, DecompositionCertificate> witnesses; // when holds
    std::optional<ElemIdx> failure_witness;                // least failing element
};

/// flavor holds iff every element of the ideal decomposes (witnesses inside
/// the ideal when restricted).
IdealClassification classify_ideal(const Ideal& i, Flavor flavor, bool restricted = false);

/// The ring classified as its own improper ideal.
IdealClassification classify_ring(const RingPtr& ring, Flavor flavor);

/// Every element of the ideal has exactly one weak-nil-clean idempotent
/// witness.
bool is_uniquely_weak_nil_clean_ideal(const Ideal& i);

} // namespace ringlab
