#include "ringlab/ideal.hpp"

#include <algorithm>
#include <deque>

namespace ringlab {

std::string Ideal::display_gens() const {
    std::string out;
    const auto& src = generators.empty() ? elements : generators;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (i) out += ",";
        out += ring->display(src[i]);
    }
    return out;
}

namespace {

// Additive closure of seed within the ring. Seed must already contain every
// needed product; 0 and negatives fall out of the group closure.
std::vector<bool> additive_closure(const FiniteRing& r, std::vector<bool> mask) {
    mask[r.zero()] = true;
    std::deque<ElemIdx> work;
    std::vector<ElemIdx> members;
    for (ElemIdx x = 0; x < r.size(); ++x)
        if (mask[x]) {
            work.push_back(x);
            members.push_back(x);
        }
    while (!work.empty()) {
        ElemIdx x = work.front();
        work.pop_front();
        ElemIdx nx = r.neg(x);
        if (!mask[nx]) {
            mask[nx] = true;
            work.push_back(nx);
            members.push_back(nx);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            ElemIdx s = r.add(x, members[i]);
            if (!mask[s]) {
                mask[s] = true;
                work.push_back(s);
                members.push_back(s);
            }
        }
    }
    return mask;
}

Ideal from_mask(const RingPtr& ring, std::vector<ElemIdx> gens, std::vector<bool> mask) {
    Ideal out;
    out.ring = ring;
    out.generators = std::move(gens);
    out.mask = std::move(mask);
    for (ElemIdx x = 0; x < ring->size(); ++x)
        if (out.mask[x]) out.elements.push_back(x);
    return out;
}

} // namespace

Ideal ideal_generated_by(const RingPtr& ring, const std::vector<ElemIdx>& gens) {
    const auto& r = *ring;
    const std::size_t n = r.size();
    // Two-sided span R g R computed in two one-sided passes, then additive
    // closure. g itself is 1*g*1.
    std::vector<bool> span(n, false);
    for (ElemIdx g : gens) {
        r.check_index(g);
        std::vector<ElemIdx> left;
        std::vector<bool> seen(n, false);
        for (ElemIdx a = 0; a < n; ++a) {
            ElemIdx ag = r.mul(a, g);
            if (!seen[ag]) {
                seen[ag] = true;
                left.push_back(ag);
            }
        }
        for (ElemIdx l : left)
            for (ElemIdx b = 0; b < n; ++b) span[r.mul(l, b)] = true;
    }
    return from_mask(ring, gens, additive_closure(r, std::move(span)));
}

bool is_ideal_set(const FiniteRing& r, const std::vector<bool>& mask) {
    if (!mask[r.zero()]) return false;
    for (ElemIdx x = 0; x < r.size(); ++x) {
        if (!mask[x]) continue;
        if (!mask[r.neg(x)]) return false;
        for (ElemIdx y = 0; y < r.size(); ++y) {
            if (mask[y] && !mask[r.add(x, y)]) return false;
            if (!mask[r.mul(x, y)] || !mask[r.mul(y, x)]) return false;
        }
    }
    return true;
}

Ideal ideal_from_elements(const RingPtr& ring, std::vector<ElemIdx> elements) {
    std::vector<bool> mask(ring->size(), false);
    for (ElemIdx x : elements) {
        ring->check_index(x);
        mask[x] = true;
    }
    if (!is_ideal_set(*ring, mask))
        throw ValidationError("element set is not a two-sided ideal of " + ring->spec_string());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Ideal out;
    out.ring = ring;
    out.mask = std::move(mask);
    out.elements = std::move(elements);
    return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<bool> mask = a.mask;
    for (ElemIdx x : b.elements) mask[x] = true;
    std::vector<ElemIdx> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return from_mask(a.ring, std::move(gens), additive_closure(*a.ring, std::move(mask)));
}

std::vector<Ideal> all_ideals(const RingPtr& ring) {
    const std::size_t n = ring->size();
    if (n > default_size_cap())
        throw SizeCapError("ideal lattice enumeration: ring of size " + std::to_string(n) +
                           " exceeds cap " + std::to_string(default_size_cap()));
    std::vector<Ideal> found;
    auto add_unique = [&](Ideal i) -> bool {
        for (const auto& j : found)
            if (j.mask == i.mask) return false;
        found.push_back(std::move(i));
        return true;
    };
    add_unique(ideal_generated_by(ring, {}));
    for (ElemIdx x = 1; x < n; ++x) add_unique(ideal_generated_by(ring, {x}));
    // Close under pairwise sums to a fixpoint.
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t cur = found.size();
        for (std::size_t i = 0; i < cur; ++i)
            for (std::size_t j = i + 1; j < cur; ++j)
                if (add_unique(ideal_sum(found[i], found[j]))) grew = true;
    }
    std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return found;
}

bool is_nil_ideal(const Ideal& i) {
    for (ElemIdx x : i.elements)
        if (!i.ring->nil_mask()[x]) return false;
    return true;
}

namespace {

class QuotRingFixed final : public FiniteRing {
public:
    QuotRingFixed(RingPtr base, std::vector<ElemIdx> reps, std::vector<ElemIdx> proj,
                  std::string spec, ElemIdx zero_q, ElemIdx one_q)
        : FiniteRing(reps.size(), zero_q, one_q),
          base_(std::move(base)), reps_(std::move(reps)), proj_(std::move(proj)),
          spec_(std::move(spec)) {}

    ElemIdx add(ElemIdx a, ElemIdx b) const override { return proj_[base_->add(reps_[a], reps_[b])]; }
    ElemIdx neg(ElemIdx a) const override { return proj_[base_->neg(reps_[a])]; }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override { return proj_[base_->mul(reps_[a], reps_[b])]; }
    std::string display(ElemIdx a) const override { return base_->display(reps_[a]); }
    std::string spec_string() const override { return spec_; }

private:
    RingPtr base_;
    std::vector<ElemIdx> reps_;
    std::vector<ElemIdx> proj_;
    std::string spec_;
};

} // namespace

QuotientRing quotient_ring(const RingPtr& ring, const Ideal& i) {
    const std::size_t n = ring->size();
    constexpr ElemIdx kUnset = ~ElemIdx{0};
    // Canonical representative of x + I is the minimal element of the coset.
    std::vector<ElemIdx> coset_rep(n, kUnset);
    for (ElemIdx x = 0; x < n; ++x) {
        if (coset_rep[x] != kUnset) continue;
        ElemIdx rep = kUnset;
        std::vector<ElemIdx> coset;
        for (ElemIdx d : i.elements) {
            ElemIdx y = ring->add(x, d);
            coset.push_back(y);
            rep = std::min(rep, y);
        }
        for (ElemIdx y : coset) coset_rep[y] = rep;
    }
    std::vector<ElemIdx> reps;
    std::vector<ElemIdx> proj(n);
    for (ElemIdx x = 0; x < n; ++x)
        if (coset_rep[x] == x) reps.push_back(x);
    std::vector<ElemIdx> rep_to_idx(n, kUnset);
    for (std::size_t q = 0; q < reps.size(); ++q) rep_to_idx[reps[q]] = static_cast<ElemIdx>(q);
    for (ElemIdx x = 0; x < n; ++x) proj[x] = rep_to_idx[coset_rep[x]];

    std::string spec = "Quot(" + ring->spec_string() + ";";
    const auto& gens = i.generators.empty() ? i.elements : i.generators;
    for (std::size_t k = 0; k < gens.size(); ++k)
        spec += (k ? "," : "") + ring->display(gens[k]);
    spec += ")";

    QuotientRing out;
    out.base = ring;
    out.modulus = i;
    out.reps = reps;
    out.projection = proj;
    out.ring = std::make_shared<QuotRingFixed>(ring, reps, proj, spec,
                                               proj[ring->zero()], proj[ring->one()]);
    return out;
}

Ideal image_ideal(const QuotientRing& q, const Ideal& i) {
    std::vector<bool> mask(q.ring->size(), false);
    std::vector<ElemIdx> elems;
    for (ElemIdx x : i.elements) {
        ElemIdx y = q.project(x);
        if (!mask[y]) {
            mask[y] = true;
            elems.push_back(y);
        }
    }
    std::sort(elems.begin(), elems.end());
    Ideal out;
    out.ring = q.ring;
    out.mask = std::move(mask);
    out.elements = std::move(elems);
    return out;
}

Ideal preimage_ideal(const QuotientRing& q, const Ideal& i) {
    std::vector<bool> mask(q.base->size(), false);
    std::vector<ElemIdx> elems;
    for (ElemIdx x = 0; x < q.base->size(); ++x)
        if (i.contains(q.project(x))) {
            mask[x] = true;
            elems.push_back(x);
        }
    Ideal out;
    out.ring = q.base;
    out.mask = std::move(mask);
    out.elements = std::move(elems);
    return out;
}

ElemIdx lift_idempotent_mod_nil(const RingPtr& ring, const Ideal& i, ElemIdx a) {
    if (!is_nil_ideal(i)) throw ValidationError("lift: modulus is not a nil ideal");
    ElemIdx defect = ring->sub(ring->mul(a, a), a);
    if (!i.contains(defect)) throw ValidationError("lift: element is not idempotent mod the ideal");
    // e <- 3e^2 - 2e^3; the defect e^2 - e squares into deeper powers of the
    // nil ideal, so iteration count is bounded by the nilpotency bound.
    ElemIdx e = a;
    for (std::size_t iter = 0; iter <= i.ring->size(); ++iter) {
        ElemIdx e2 = ring->mul(e, e);
        if (e2 == e) return e;
        ElemIdx e3 = ring->mul(e2, e);
        ElemIdx three_e2 = ring->add(e2, ring->add(e2, e2));
        e = ring->sub(three_e2, ring->add(e3, e3));
    }
    throw ValidationError("lift: iteration failed to converge"); // unreachable when preconditions hold
}

} // namespace ringlab
