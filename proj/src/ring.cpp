#include "ringlab/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace ringlab {

namespace {
std::atomic<std::size_t> g_size_cap{4096};

std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}
} // namespace

std::size_t default_size_cap() { return g_size_cap.load(); }
void set_default_size_cap(std::size_t cap) { g_size_cap.store(cap); }

ElemIdx FiniteRing::pow(ElemIdx a, unsigned k) const {
    ElemIdx r = one();
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::optional<int> FiniteRing::nilpotency_index(ElemIdx a) const {
    check_index(a);
    // Walk the power sequence; a repeat before hitting zero means no power
    // is ever zero.
    std::vector<bool> seen(size_, false);
    ElemIdx p = a;
    for (int k = 1; k <= static_cast<int>(size_); ++k) {
        if (p == zero()) return k;
        if (seen[p]) return std::nullopt;
        seen[p] = true;
        p = mul(p, a);
    }
    return std::nullopt;
}

void FiniteRing::ensure_cap() const {
    if (size_ > default_size_cap())
        throw SizeCapError("ring of size " + std::to_string(size_) +
                           " exceeds element-set cap " + std::to_string(default_size_cap()));
}

const std::vector<ElemIdx>& FiniteRing::idempotents() const {
    std::lock_guard lock(cache_mu_);
    if (!sets_) sets_ = std::make_unique<ElementSets>();
    if (!have_idem_) {
        ensure_cap();
        idem_mask_.assign(size_, false);
        for (ElemIdx x = 0; x < size_; ++x)
            if (mul(x, x) == x) {
                sets_->idempotents.push_back(x);
                idem_mask_[x] = true;
            }
        have_idem_ = true;
    }
    return sets_->idempotents;
}

const std::vector<NilInfo>& FiniteRing::nilpotents() const {
    std::lock_guard lock(cache_mu_);
    if (!sets_) sets_ = std::make_unique<ElementSets>();
    if (!have_nil_) {
        ensure_cap();
        nil_mask_.assign(size_, false);
        for (ElemIdx x = 0; x < size_; ++x)
            if (auto k = nilpotency_index(x)) {
                sets_->nilpotents.push_back({x, *k});
                nil_mask_[x] = true;
            }
        have_nil_ = true;
    }
    return sets_->nilpotents;
}

const std::vector<UnitInfo>& FiniteRing::units() const {
    std::lock_guard lock(cache_mu_);
    if (!sets_) sets_ = std::make_unique<ElementSets>();
    if (!have_units_) {
        ensure_cap();
        unit_mask_.assign(size_, false);
        for (ElemIdx x = 0; x < size_; ++x) {
            for (ElemIdx v = 0; v < size_; ++v) {
                if (mul(x, v) == one() && mul(v, x) == one()) {
                    sets_->units.push_back({x, v});
                    unit_mask_[x] = true;
                    break;
                }
            }
        }
        have_units_ = true;
    }
    return sets_->units;
}

const std::vector<ElemIdx>& FiniteRing::jacobson() const {
    units(); // needs unit_mask_
    std::lock_guard lock(cache_mu_);
    if (!have_jac_) {
        // J(R) = {x : 1 - rxs is a unit for all r, s}. The two-sided form
        // is a two-sided ideal test unconditionally; the one-sided variant
        // lives in the tests as a cross-check oracle.
        for (ElemIdx x = 0; x < size_; ++x) {
            bool in = true;
            for (ElemIdx r = 0; r < size_ && in; ++r) {
                ElemIdx rx = mul(r, x);
                for (ElemIdx s = 0; s < size_; ++s) {
                    if (!unit_mask_[sub(one(), mul(rx, s))]) {
                        in = false;
                        break;
                    }
                }
            }
            if (in) sets_->jacobson.push_back(x);
        }
        have_jac_ = true;
    }
    return sets_->jacobson;
}

const std::vector<ElemIdx>& FiniteRing::center() const {
    std::lock_guard lock(cache_mu_);
    if (!sets_) sets_ = std::make_unique<ElementSets>();
    if (!have_center_) {
        ensure_cap();
        for (ElemIdx x = 0; x < size_; ++x) {
            bool central = true;
            for (ElemIdx r = 0; r < size_; ++r)
                if (mul(x, r) != mul(r, x)) {
                    central = false;
                    break;
                }
            if (central) sets_->center.push_back(x);
        }
        have_center_ = true;
    }
    return sets_->center;
}

const ElementSets& FiniteRing::element_sets() const {
    idempotents();
    nilpotents();
    units();
    jacobson();
    center();
    std::lock_guard lock(cache_mu_);
    return *sets_;
}

const std::vector<bool>& FiniteRing::idem_mask() const {
    idempotents();
    return idem_mask_;
}
const std::vector<bool>& FiniteRing::nil_mask() const {
    nilpotents();
    return nil_mask_;
}
const std::vector<bool>& FiniteRing::unit_mask() const {
    units();
    return unit_mask_;
}

std::optional<ElemIdx> FiniteRing::parse_element(std::string_view text) const {
    {
        std::lock_guard lock(cache_mu_);
        if (!display_map_) {
            auto map = std::make_unique<std::unordered_map<std::string, ElemIdx>>();
            for (ElemIdx x = 0; x < size_; ++x) map->emplace(strip_ws(display(x)), x);
            display_map_ = std::move(map);
        }
    }
    auto it = display_map_->find(strip_ws(text));
    if (it == display_map_->end()) return std::nullopt;
    return it->second;
}

void FiniteRing::check_axioms() const {
    const ElemIdx z = zero(), o = one();
    auto fail = [&](const std::string& what) {
        throw ValidationError("ring axiom failure in " + spec_string() + ": " + what);
    };
    for (ElemIdx a = 0; a < size_; ++a) {
        if (add(a, z) != a) fail("additive identity");
        if (add(a, neg(a)) != z) fail("additive inverse");
        if (mul(a, o) != a || mul(o, a) != a) fail("multiplicative identity");
        for (ElemIdx b = 0; b < size_; ++b) {
            if (add(a, b) != add(b, a)) fail("addition commutativity");
            for (ElemIdx c = 0; c < size_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("addition associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("left distributivity");
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("right distributivity");
            }
        }
    }
}

ZnRing::ZnRing(unsigned n) : FiniteRing(n, 0, n == 1 ? 0 : 1), n_(n) {
    if (n == 0) throw ValidationError("Z0 is not a ring");
}

RingPtr make_zn(unsigned n) { return std::make_shared<ZnRing>(n); }

} // namespace ringlab
