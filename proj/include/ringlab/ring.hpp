#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ringlab {

using ElemIdx = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Process-wide cap on |R| for full element-set computation. Overridable
/// from the CLI via --cap.
std::size_t default_size_cap();
void set_default_size_cap(std::size_t cap);

struct NilInfo {
    ElemIdx x;
    int index; // smallest k with x^k = 0
};

struct UnitInfo {
    ElemIdx x;
    ElemIdx inverse;
};

/// The five fundamental element sets of a finite ring, all sorted by index.
struct ElementSets {
    std::vector<ElemIdx> idempotents;
    std::vector<NilInfo> nilpotents;
    std::vector<UnitInfo> units;
    std::vector<ElemIdx> jacobson;
    std::vector<ElemIdx> center;
};

/// A finite unital associative ring with elements encoded as 0..|R|-1.
/// Concrete encodings are defined by the construction subclasses; all
/// derived data (element sets, display maps) is cached on the ring and
/// filled at most once under a lock, so rings are shareable across threads.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    virtual ~FiniteRing() = default;

    std::size_t size() const { return size_; }
    ElemIdx zero() const { return zero_; }
    ElemIdx one() const { return one_; }

    virtual ElemIdx add(ElemIdx a, ElemIdx b) const = 0;
    virtual ElemIdx neg(ElemIdx a) const = 0;
    virtual ElemIdx mul(ElemIdx a, ElemIdx b) const = 0;

    ElemIdx sub(ElemIdx a, ElemIdx b) const { return add(a, neg(b)); }
    ElemIdx pow(ElemIdx a, unsigned k) const;

    virtual std::string display(ElemIdx a) const = 0;

    /// Canonical spec-grammar text that rebuilds this ring.
    virtual std::string spec_string() const = 0;

    /// Inverse of display (whitespace-insensitive). Nullopt if no element
    /// of this ring displays as the given text.
    std::optional<ElemIdx> parse_element(std::string_view text) const;

    /// Smallest k <= |R| with a^k = 0, using cycle detection on the power
    /// sequence; nullopt if a is not nilpotent.
    std::optional<int> nilpotency_index(ElemIdx a) const;

    const std::vector<ElemIdx>& idempotents() const;
    const std::vector<NilInfo>& nilpotents() const;
    const std::vector<UnitInfo>& units() const;
    const std::vector<ElemIdx>& jacobson() const;
    const std::vector<ElemIdx>& center() const;

    /// Forces computation of all five sets.
    const ElementSets& element_sets() const;

    const std::vector<bool>& idem_mask() const;
    const std::vector<bool>& nil_mask() const;
    const std::vector<bool>& unit_mask() const;

    bool is_commutative() const { return center().size() == size_; }

    /// Exhaustive ring-axiom check (group laws, associativity,
    /// distributivity, identities). Throws ValidationError on violation.
    void check_axioms() const;

    void check_index(ElemIdx a) const {
        if (a >= size_) throw std::out_of_range("element index " + std::to_string(a) +
                                                " out of range for ring of size " + std::to_string(size_));
    }

protected:
    FiniteRing(std::size_t size, ElemIdx zero, ElemIdx one)
        : size_(size), zero_(zero), one_(one) {}

private:
    void ensure_cap() const;

    std::size_t size_;
    ElemIdx zero_;
    ElemIdx one_;

    mutable std::mutex cache_mu_;
    mutable std::unique_ptr<ElementSets> sets_;          // filled piecewise
    mutable bool have_idem_ = false, have_nil_ = false, have_units_ = false,
                 have_jac_ = false, have_center_ = false;
    mutable std::vector<bool> idem_mask_, nil_mask_, unit_mask_;
    mutable std::unique_ptr<std::unordered_map<std::string, ElemIdx>> display_map_;
};

/// Residue ring Z_n, the base of every construction.
class ZnRing final : public FiniteRing {
public:
    explicit ZnRing(unsigned n);

    ElemIdx add(ElemIdx a, ElemIdx b) const override { return (a + b) % n_; }
    ElemIdx neg(ElemIdx a) const override { return a == 0 ? 0 : n_ - a; }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override {
        return static_cast<ElemIdx>(std::uint64_t(a) * b % n_);
    }
    std::string display(ElemIdx a) const override { return std::to_string(a); }
    std::string spec_string() const override { return "Z" + std::to_string(n_); }

    unsigned modulus() const { return n_; }

private:
    unsigned n_;
};

RingPtr make_zn(unsigned n);

} // namespace ringlab
