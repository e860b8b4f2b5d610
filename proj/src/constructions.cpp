#include "ringlab/constructions.hpp"

#include <algorithm>
#include <deque>

#include "ringlab/ideal.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Bimodule

namespace {

std::vector<ElemIdx> decode_mixed(const std::vector<unsigned>& radices, std::size_t x) {
    std::vector<ElemIdx> out(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        out[i] = static_cast<ElemIdx>(x % radices[i]);
        x /= radices[i];
    }
    return out;
}

std::size_t encode_mixed(const std::vector<unsigned>& radices, const std::vector<ElemIdx>& comps) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < radices.size(); ++i) x = x * radices[i] + comps[i];
    return x;
}

} // namespace

ElemIdx Bimodule::add(ElemIdx a, ElemIdx b) const {
    auto ca = decode_mixed(factors_, a), cb = decode_mixed(factors_, b);
    for (std::size_t i = 0; i < factors_.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors_[i];
    return static_cast<ElemIdx>(encode_mixed(factors_, ca));
}

ElemIdx Bimodule::neg(ElemIdx a) const {
    auto ca = decode_mixed(factors_, a);
    for (std::size_t i = 0; i < factors_.size(); ++i) ca[i] = ca[i] ? factors_[i] - ca[i] : 0;
    return static_cast<ElemIdx>(encode_mixed(factors_, ca));
}

std::string Bimodule::display(ElemIdx m) const {
    auto c = decode_mixed(factors_, m);
    if (factors_.size() == 1) return std::to_string(c[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

std::string Bimodule::spec_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
    return out;
}

std::shared_ptr<Bimodule> Bimodule::canonical(std::vector<unsigned> factors,
                                              RingPtr left_ring, RingPtr right_ring) {
    auto m = std::shared_ptr<Bimodule>(new Bimodule);
    m->factors_ = std::move(factors);
    for (unsigned d : m->factors_) {
        if (d == 0) throw ValidationError("module carrier factor must be positive");
        m->size_ *= d;
    }
    auto residue_table = [&](const RingPtr& ring, bool left) {
        auto zn = std::dynamic_pointer_cast<const ZnRing>(ring);
        if (!zn)
            throw ValidationError("canonical residue action requires a Z_n host ring; got " +
                                  ring->spec_string() + " (supply explicit action tables)");
        for (unsigned d : m->factors_)
            if (zn->modulus() % d != 0)
                throw ValidationError("canonical residue action: carrier Z" + std::to_string(d) +
                                      " is not a Z" + std::to_string(zn->modulus()) + "-module (divisibility fails)");
        std::size_t rows = left ? ring->size() : m->size_;
        std::size_t cols = left ? m->size_ : ring->size();
        std::vector<std::vector<ElemIdx>> t(rows, std::vector<ElemIdx>(cols));
        for (ElemIdx a = 0; a < ring->size(); ++a)
            for (ElemIdx x = 0; x < m->size_; ++x) {
                auto c = decode_mixed(m->factors_, x);
                for (std::size_t i = 0; i < m->factors_.size(); ++i)
                    c[i] = static_cast<ElemIdx>(std::uint64_t(a) * c[i] % m->factors_[i]);
                ElemIdx ax = static_cast<ElemIdx>(encode_mixed(m->factors_, c));
                if (left)
                    t[a][x] = ax;
                else
                    t[x][a] = ax;
            }
        return t;
    };
    m->left_ring_ = std::move(left_ring);
    m->right_ring_ = std::move(right_ring);
    if (m->left_ring_) m->left_table_ = residue_table(m->left_ring_, true);
    if (m->right_ring_) m->right_table_ = residue_table(m->right_ring_, false);
    m->validate();
    return m;
}

std::shared_ptr<Bimodule> Bimodule::from_tables(std::vector<unsigned> factors,
                                                RingPtr left_ring, RingPtr right_ring,
                                                std::vector<std::vector<ElemIdx>> left_table,
                                                std::vector<std::vector<ElemIdx>> right_table) {
    auto m = std::shared_ptr<Bimodule>(new Bimodule);
    m->factors_ = std::move(factors);
    for (unsigned d : m->factors_) {
        if (d == 0) throw ValidationError("module carrier factor must be positive");
        m->size_ *= d;
    }
    m->left_ring_ = std::move(left_ring);
    m->right_ring_ = std::move(right_ring);
    m->left_table_ = std::move(left_table);
    m->right_table_ = std::move(right_table);
    if (m->left_ring_ &&
        (m->left_table_.size() != m->left_ring_->size() ||
         (m->left_table_.size() && m->left_table_[0].size() != m->size_)))
        throw ValidationError("left action table has wrong shape");
    if (m->right_ring_ &&
        (m->right_table_.size() != m->size_ ||
         (m->right_table_.size() && m->right_table_[0].size() != m->right_ring_->size())))
        throw ValidationError("right action table has wrong shape");
    m->validate();
    return m;
}

void Bimodule::validate() const {
    auto fail = [&](const std::string& what) {
        throw ValidationError("module axiom failure (" + spec_string() + "): " + what);
    };
    if (has_left()) {
        const auto& A = *left_ring_;
        for (ElemIdx a = 0; a < A.size(); ++a)
            for (ElemIdx x = 0; x < size_; ++x) {
                if (left_act(a, x) >= size_) fail("left action out of range");
                for (ElemIdx y = 0; y < size_; ++y)
                    if (left_act(a, add(x, y)) != add(left_act(a, x), left_act(a, y)))
                        fail("left additivity in module slot");
                for (ElemIdx b = 0; b < A.size(); ++b) {
                    if (left_act(A.add(a, b), x) != add(left_act(a, x), left_act(b, x)))
                        fail("left additivity in ring slot");
                    if (left_act(A.mul(a, b), x) != left_act(a, left_act(b, x)))
                        fail("left action associativity");
                }
            }
        for (ElemIdx x = 0; x < size_; ++x)
            if (left_act(A.one(), x) != x) fail("left action unitality");
    }
    if (has_right()) {
        const auto& B = *right_ring_;
        for (ElemIdx x = 0; x < size_; ++x)
            for (ElemIdx a = 0; a < B.size(); ++a) {
                if (right_act(x, a) >= size_) fail("right action out of range");
                for (ElemIdx y = 0; y < size_; ++y)
                    if (right_act(add(x, y), a) != add(right_act(x, a), right_act(y, a)))
                        fail("right additivity in module slot");
                for (ElemIdx b = 0; b < B.size(); ++b) {
                    if (right_act(x, B.add(a, b)) != add(right_act(x, a), right_act(x, b)))
                        fail("right additivity in ring slot");
                    if (right_act(x, B.mul(a, b)) != right_act(right_act(x, a), b))
                        fail("right action associativity");
                }
            }
        for (ElemIdx x = 0; x < size_; ++x)
            if (right_act(x, B.one()) != x) fail("right action unitality");
    }
    if (has_left() && has_right()) {
        for (ElemIdx a = 0; a < left_ring_->size(); ++a)
            for (ElemIdx x = 0; x < size_; ++x)
                for (ElemIdx b = 0; b < right_ring_->size(); ++b)
                    if (right_act(left_act(a, x), b) != left_act(a, right_act(x, b)))
                        fail("action compatibility (am)b = a(mb)");
    }
}

std::vector<std::vector<ElemIdx>> Bimodule::submodules() const {
    auto close = [&](std::vector<bool> mask) {
        std::deque<ElemIdx> work;
        std::vector<ElemIdx> members;
        mask[0] = true;
        for (ElemIdx x = 0; x < size_; ++x)
            if (mask[x]) {
                work.push_back(x);
                members.push_back(x);
            }
        auto push = [&](ElemIdx y) {
            if (!mask[y]) {
                mask[y] = true;
                work.push_back(y);
                members.push_back(y);
            }
        };
        while (!work.empty()) {
            ElemIdx x = work.front();
            work.pop_front();
            push(neg(x));
            for (std::size_t i = 0; i < members.size(); ++i) push(add(x, members[i]));
            if (has_left())
                for (ElemIdx a = 0; a < left_ring_->size(); ++a) push(left_act(a, x));
            if (has_right())
                for (ElemIdx b = 0; b < right_ring_->size(); ++b) push(right_act(x, b));
        }
        return mask;
    };
    std::vector<std::vector<bool>> found;
    auto add_unique = [&](std::vector<bool> mask) -> bool {
        for (const auto& f : found)
            if (f == mask) return false;
        found.push_back(std::move(mask));
        return true;
    };
    add_unique(close(std::vector<bool>(size_, false)));
    for (ElemIdx x = 1; x < size_; ++x) {
        std::vector<bool> seed(size_, false);
        seed[x] = true;
        add_unique(close(std::move(seed)));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t cur = found.size();
        for (std::size_t i = 0; i < cur; ++i)
            for (std::size_t j = i + 1; j < cur; ++j) {
                std::vector<bool> u = found[i];
                for (ElemIdx x = 0; x < size_; ++x)
                    if (found[j][x]) u[x] = true;
                if (add_unique(close(std::move(u)))) grew = true;
            }
    }
    std::vector<std::vector<ElemIdx>> out;
    for (const auto& mask : found) {
        std::vector<ElemIdx> elems;
        for (ElemIdx x = 0; x < size_; ++x)
            if (mask[x]) elems.push_back(x);
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Direct product

namespace {

class ProductRing final : public FiniteRing {
public:
    explicit ProductRing(std::vector<RingPtr> parts, std::size_t size, ElemIdx one)
        : FiniteRing(size, 0, one), parts_(std::move(parts)) {
        radices_.reserve(parts_.size());
        for (const auto& p : parts_) radices_.push_back(static_cast<unsigned>(p->size()));
    }

    ElemIdx add(ElemIdx a, ElemIdx b) const override { return zip(a, b, [](const FiniteRing& r, ElemIdx x, ElemIdx y) { return r.add(x, y); }); }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override { return zip(a, b, [](const FiniteRing& r, ElemIdx x, ElemIdx y) { return r.mul(x, y); }); }
    ElemIdx neg(ElemIdx a) const override {
        auto c = decode_mixed(radices_, a);
        for (std::size_t i = 0; i < parts_.size(); ++i) c[i] = parts_[i]->neg(c[i]);
        return static_cast<ElemIdx>(encode_mixed(radices_, c));
    }
    std::string display(ElemIdx a) const override {
        auto c = decode_mixed(radices_, a);
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            out += (i ? "," : "") + parts_[i]->display(c[i]);
        return out + ")";
    }
    std::string spec_string() const override {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            out += (i ? " x " : "") + parts_[i]->spec_string();
        return out;
    }

    const std::vector<RingPtr>& parts() const { return parts_; }
    const std::vector<unsigned>& radices() const { return radices_; }

private:
    template <class F>
    ElemIdx zip(ElemIdx a, ElemIdx b, F f) const {
        auto ca = decode_mixed(radices_, a), cb = decode_mixed(radices_, b);
        for (std::size_t i = 0; i < parts_.size(); ++i) ca[i] = f(*parts_[i], ca[i], cb[i]);
        return static_cast<ElemIdx>(encode_mixed(radices_, ca));
    }

    std::vector<RingPtr> parts_;
    std::vector<unsigned> radices_;
};

} // namespace

RingPtr direct_product(std::vector<RingPtr> parts) {
    if (parts.empty()) throw ValidationError("direct product needs at least one factor");
    if (parts.size() == 1) return parts[0];
    std::size_t size = 1;
    std::vector<unsigned> radices;
    std::vector<ElemIdx> ones;
    for (const auto& p : parts) {
        if (size > default_size_cap() / p->size() + 1) // overflow guard before multiply
            throw SizeCapError("product ring exceeds size cap");
        size *= p->size();
        radices.push_back(static_cast<unsigned>(p->size()));
        ones.push_back(p->one());
    }
    if (size > default_size_cap())
        throw SizeCapError("product ring of size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(default_size_cap()));
    ElemIdx one = static_cast<ElemIdx>(encode_mixed(radices, ones));
    return std::make_shared<ProductRing>(std::move(parts), size, one);
}

bool is_product_ring(const FiniteRing& r) { return dynamic_cast<const ProductRing*>(&r) != nullptr; }

const std::vector<RingPtr>& product_parts(const FiniteRing& r) {
    auto* p = dynamic_cast<const ProductRing*>(&r);
    if (!p) throw ValidationError("not a product ring: " + r.spec_string());
    return p->parts();
}

ElemIdx product_component(const FiniteRing& r, ElemIdx x, std::size_t part) {
    auto* p = dynamic_cast<const ProductRing*>(&r);
    if (!p) throw ValidationError("not a product ring: " + r.spec_string());
    return decode_mixed(p->radices(), x)[part];
}

ElemIdx product_compose(const FiniteRing& r, const std::vector<ElemIdx>& comps) {
    auto* p = dynamic_cast<const ProductRing*>(&r);
    if (!p) throw ValidationError("not a product ring: " + r.spec_string());
    return static_cast<ElemIdx>(encode_mixed(p->radices(), comps));
}

// ---------------------------------------------------------------------------
// Upper triangular matrix ring

namespace {

class TriangularRing final : public FiniteRing {
public:
    TriangularRing(unsigned k, RingPtr base, std::size_t size)
        : FiniteRing(size, 0, 0), k_(k), base_(std::move(base)),
          entries_(k * (k + 1) / 2) {
        // entry_pos_[i][j] = row-major slot of (i, j), i <= j
        entry_pos_.assign(k_, std::vector<unsigned>(k_, 0));
        unsigned pos = 0;
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = i; j < k_; ++j) entry_pos_[i][j] = pos++;
        radices_.assign(entries_, static_cast<unsigned>(base_->size()));
        std::vector<ElemIdx> id(entries_, base_->zero());
        for (unsigned i = 0; i < k_; ++i) id[entry_pos_[i][i]] = base_->one();
        one_ = static_cast<ElemIdx>(encode_mixed(radices_, id));
    }

    ElemIdx add(ElemIdx a, ElemIdx b) const override {
        auto ca = decode_mixed(radices_, a), cb = decode_mixed(radices_, b);
        for (unsigned p = 0; p < entries_; ++p) ca[p] = base_->add(ca[p], cb[p]);
        return static_cast<ElemIdx>(encode_mixed(radices_, ca));
    }
    ElemIdx neg(ElemIdx a) const override {
        auto ca = decode_mixed(radices_, a);
        for (unsigned p = 0; p < entries_; ++p) ca[p] = base_->neg(ca[p]);
        return static_cast<ElemIdx>(encode_mixed(radices_, ca));
    }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override {
        auto ca = decode_mixed(radices_, a), cb = decode_mixed(radices_, b);
        std::vector<ElemIdx> out(entries_, base_->zero());
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = i; j < k_; ++j) {
                ElemIdx s = base_->zero();
                for (unsigned l = i; l <= j; ++l)
                    s = base_->add(s, base_->mul(ca[entry_pos_[i][l]], cb[entry_pos_[l][j]]));
                out[entry_pos_[i][j]] = s;
            }
        return static_cast<ElemIdx>(encode_mixed(radices_, out));
    }
    std::string display(ElemIdx a) const override {
        auto c = decode_mixed(radices_, a);
        std::string out = "[";
        for (unsigned i = 0; i < k_; ++i) {
            out += (i ? ",[" : "[");
            for (unsigned j = 0; j < k_; ++j) {
                out += (j ? "," : "");
                out += j < i ? base_->display(base_->zero()) : base_->display(c[entry_pos_[i][j]]);
            }
            out += "]";
        }
        return out + "]";
    }
    std::string spec_string() const override {
        return "T" + std::to_string(k_) + "(" + base_->spec_string() + ")";
    }

    unsigned dim() const { return k_; }
    const RingPtr& base() const { return base_; }
    ElemIdx entry(ElemIdx x, unsigned i, unsigned j) const {
        return decode_mixed(radices_, x)[entry_pos_[i][j]];
    }
    ElemIdx compose(const std::vector<ElemIdx>& entries) const {
        return static_cast<ElemIdx>(encode_mixed(radices_, entries));
    }
    ElemIdx one_idx() const { return one_; }

private:
    unsigned k_;
    RingPtr base_;
    unsigned entries_;
    std::vector<std::vector<unsigned>> entry_pos_;
    std::vector<unsigned> radices_;
    ElemIdx one_;
};

// Same zero/one bootstrap problem as the quotient ring: compute one first.
class TriangularRingFixed final : public FiniteRing {
public:
    TriangularRingFixed(std::shared_ptr<TriangularRing> impl)
        : FiniteRing(impl->size(), 0, impl->one_idx()), impl_(std::move(impl)) {}
    ElemIdx add(ElemIdx a, ElemIdx b) const override { return impl_->add(a, b); }
    ElemIdx neg(ElemIdx a) const override { return impl_->neg(a); }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override { return impl_->mul(a, b); }
    std::string display(ElemIdx a) const override { return impl_->display(a); }
    std::string spec_string() const override { return impl_->spec_string(); }
    const std::shared_ptr<TriangularRing>& impl() const { return impl_; }

private:
    std::shared_ptr<TriangularRing> impl_;
};

const TriangularRingFixed* as_triangular(const FiniteRing& r) {
    return dynamic_cast<const TriangularRingFixed*>(&r);
}

} // namespace

RingPtr triangular_ring(unsigned k, RingPtr r) {
    if (k < 1) throw ValidationError("triangular ring needs k >= 1");
    unsigned entries = k * (k + 1) / 2;
    std::size_t size = 1;
    for (unsigned p = 0; p < entries; ++p) {
        if (size > default_size_cap() / r->size() + 1)
            throw SizeCapError("triangular ring exceeds size cap");
        size *= r->size();
    }
    if (size > default_size_cap())
        throw SizeCapError("triangular ring of size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(default_size_cap()));
    auto impl = std::make_shared<TriangularRing>(k, std::move(r), size);
    return std::make_shared<TriangularRingFixed>(std::move(impl));
}

bool is_triangular_ring(const FiniteRing& r) { return as_triangular(r) != nullptr; }

unsigned triangular_dim(const FiniteRing& r) {
    auto* t = as_triangular(r);
    if (!t) throw ValidationError("not a triangular ring: " + r.spec_string());
    return t->impl()->dim();
}

const RingPtr& triangular_base(const FiniteRing& r) {
    auto* t = as_triangular(r);
    if (!t) throw ValidationError("not a triangular ring: " + r.spec_string());
    return t->impl()->base();
}

ElemIdx triangular_entry(const FiniteRing& r, ElemIdx x, unsigned i, unsigned j) {
    auto* t = as_triangular(r);
    if (!t) throw ValidationError("not a triangular ring: " + r.spec_string());
    return t->impl()->entry(x, i, j);
}

ElemIdx triangular_compose(const FiniteRing& r, const std::vector<ElemIdx>& entries) {
    auto* t = as_triangular(r);
    if (!t) throw ValidationError("not a triangular ring: " + r.spec_string());
    return t->impl()->compose(entries);
}

// ---------------------------------------------------------------------------
// Corner ring

namespace {

class CornerRing final : public FiniteRing {
public:
    CornerRing(RingPtr base, ElemIdx f, std::vector<ElemIdx> carrier,
               std::vector<ElemIdx> base_to_idx, ElemIdx zero_idx, ElemIdx one_idx)
        : FiniteRing(carrier.size(), zero_idx, one_idx), base_(std::move(base)), f_(f),
          carrier_(std::move(carrier)), base_to_idx_(std::move(base_to_idx)) {}

    ElemIdx add(ElemIdx a, ElemIdx b) const override { return base_to_idx_[base_->add(carrier_[a], carrier_[b])]; }
    ElemIdx neg(ElemIdx a) const override { return base_to_idx_[base_->neg(carrier_[a])]; }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override { return base_to_idx_[base_->mul(carrier_[a], carrier_[b])]; }
    std::string display(ElemIdx a) const override { return base_->display(carrier_[a]); }
    std::string spec_string() const override {
        return "Corner(" + base_->spec_string() + ";" + base_->display(f_) + ")";
    }

    const RingPtr& base() const { return base_; }
    const std::vector<ElemIdx>& carrier() const { return carrier_; }
    ElemIdx index_of(ElemIdx base_elem) const {
        ElemIdx i = base_to_idx_[base_elem];
        if (i == kUnset || carrier_[i] != base_elem)
            throw ValidationError("element not in corner carrier");
        return i;
    }
    ElemIdx lift(ElemIdx x) const { return carrier_[x]; }

    static constexpr ElemIdx kUnset = ~ElemIdx{0};

private:
    RingPtr base_;
    ElemIdx f_;
    std::vector<ElemIdx> carrier_;
    std::vector<ElemIdx> base_to_idx_;
};

} // namespace

RingPtr corner_ring(RingPtr r, ElemIdx f) {
    r->check_index(f);
    if (r->mul(f, f) != f)
        throw ValidationError("corner ring: " + r->display(f) + " is not idempotent in " +
                              r->spec_string());
    std::vector<bool> in(r->size(), false);
    std::vector<ElemIdx> carrier;
    for (ElemIdx x = 0; x < r->size(); ++x) {
        ElemIdx y = r->mul(f, r->mul(x, f));
        if (!in[y]) {
            in[y] = true;
            carrier.push_back(y);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    std::vector<ElemIdx> base_to_idx(r->size(), CornerRing::kUnset);
    for (std::size_t i = 0; i < carrier.size(); ++i)
        base_to_idx[carrier[i]] = static_cast<ElemIdx>(i);
    ElemIdx zero_idx = base_to_idx[r->zero()];
    ElemIdx one_idx = base_to_idx[f]; // f is the unity of fRf
    return std::make_shared<CornerRing>(std::move(r), f, std::move(carrier),
                                        std::move(base_to_idx), zero_idx, one_idx);
}

bool is_corner_ring(const FiniteRing& r) { return dynamic_cast<const CornerRing*>(&r) != nullptr; }

ElemIdx corner_index(const FiniteRing& corner, ElemIdx base_elem) {
    auto* c = dynamic_cast<const CornerRing*>(&corner);
    if (!c) throw ValidationError("not a corner ring: " + corner.spec_string());
    return c->index_of(base_elem);
}

ElemIdx corner_lift(const FiniteRing& corner, ElemIdx x) {
    auto* c = dynamic_cast<const CornerRing*>(&corner);
    if (!c) throw ValidationError("not a corner ring: " + corner.spec_string());
    return c->lift(x);
}

const RingPtr& corner_base(const FiniteRing& r) {
    auto* c = dynamic_cast<const CornerRing*>(&r);
    if (!c) throw ValidationError("not a corner ring: " + r.spec_string());
    return c->base();
}

// ---------------------------------------------------------------------------
// Idealization

namespace {

class IdealizationRing final : public FiniteRing {
public:
    IdealizationRing(RingPtr base, ModulePtr m, std::size_t size, ElemIdx one)
        : FiniteRing(size, 0, one), base_(std::move(base)), m_(std::move(m)) {}

    ElemIdx add(ElemIdx a, ElemIdx b) const override {
        auto [ra, ma] = split(a);
        auto [rb, mb] = split(b);
        return join(base_->add(ra, rb), m_->add(ma, mb));
    }
    ElemIdx neg(ElemIdx a) const override {
        auto [ra, ma] = split(a);
        return join(base_->neg(ra), m_->neg(ma));
    }
    ElemIdx mul(ElemIdx a, ElemIdx b) const override {
        auto [ra, ma] = split(a);
        auto [rb, mb] = split(b);
        // (r,m)(r',m') = (rr', rm' + r'm)
        return join(base_->mul(ra, rb), m_->add(m_->left_act(ra, mb), m_->left_act(rb, ma)));
    }
    std::string display(ElemIdx a) const override {
        auto [r, m] = split(a);
        return "(" + base_->display(r) + "," + m_->display(m) + ")";
    }
    std::string spec_string() const override {
        return "Idealization(" + base_->spec_string() + "," + m_->spec_string() + ")";
    }

    std::pair<ElemIdx, ElemIdx> split(ElemIdx a) const {
        return {static_cast<ElemIdx>(a / m_->size()), static_cast<ElemIdx>(a % m_->size())};
    }
    ElemIdx join(ElemIdx r, ElemIdx m) const {
        return static_cast<ElemIdx>(std::size_t(r) * m_->size() + m);
    }
    const RingPtr& base() const { return base_; }
    const ModulePtr& module() const { return m_; }

private:
    RingPtr base_;
    ModulePtr m_;
};

} // namespace

RingPtr idealization(RingPtr r, ModulePtr m) {
    if (!r->is_commutative())
        throw ValidationError("idealization requires a commutative base ring; " +
                              r->spec_string() + " is not commutative");
    if (!m->has_left()) throw ValidationError("idealization module needs an action of the base ring");
    m->validate();
    std::size_t size = r->size() * m->size();
    if (size > default_size_cap())
        throw SizeCapError("idealization of size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(default_size_cap()));
    ElemIdx one = static_cast<ElemIdx>(std::size_t(r->one()) * m->size() + m->zero());
    return std::make_shared<IdealizationRing>(std::move(r), std::move(m), size, one);
}

bool is_idealization_ring(const FiniteRing& r) {
    return dynamic_cast<const IdealizationRing*>(&r) != nullptr;
}

namespace {
const IdealizationRing& as_idealization(const FiniteRing& r) {
    auto* p = dynamic_cast<const IdealizationRing*>(&r);
    if (!p) throw ValidationError("not an idealization ring: " + r.spec_string());
    return *p;
}
} // namespace

const RingPtr& idealization_base(const FiniteRing& r) { return as_idealization(r).base(); }
const ModulePtr& idealization_module(const FiniteRing& r) { return as_idealization(r).module(); }
ElemIdx idealization_compose(const FiniteRing& r, ElemIdx base_elem, ElemIdx mod_elem) {
    return as_idealization(r).join(base_elem, mod_elem);
}
std::pair<ElemIdx, ElemIdx> idealization_split(const FiniteRing& r, ElemIdx x) {
    return as_idealization(r).split(x);
}

// ---------------------------------------------------------------------------
// Morita context ring

namespace {

class MoritaRing final : public FiniteRing {
public:
    MoritaRing(MoritaSpec spec, std::size_t size, ElemIdx one)
        : FiniteRing(size, 0, one), spec_(std::move(spec)) {
        nb_ = spec_.B->size();
        nn_ = spec_.N->size();
        nm_ = spec_.M->size();
    }

    MoritaElem split(ElemIdx x) const {
        MoritaElem e;
        e.b = static_cast<ElemIdx>(x % nb_);
        x /= static_cast<ElemIdx>(nb_);
        e.n = static_cast<ElemIdx>(x % nn_);
        x /= static_cast<ElemIdx>(nn_);
        e.m = static_cast<ElemIdx>(x % nm_);
        e.a = static_cast<ElemIdx>(x / nm_);
        return e;
    }
    ElemIdx join(const MoritaElem& e) const {
        return static_cast<ElemIdx>(((std::size_t(e.a) * nm_ + e.m) * nn_ + e.n) * nb_ + e.b);
    }

    ElemIdx add(ElemIdx x, ElemIdx y) const override {
        auto p = split(x), q = split(y);
        return join({spec_.A->add(p.a, q.a), spec_.M->add(p.m, q.m),
                     spec_.N->add(p.n, q.n), spec_.B->add(p.b, q.b)});
    }
    ElemIdx neg(ElemIdx x) const override {
        auto p = split(x);
        return join({spec_.A->neg(p.a), spec_.M->neg(p.m), spec_.N->neg(p.n), spec_.B->neg(p.b)});
    }
    ElemIdx mul(ElemIdx x, ElemIdx y) const override {
        auto p = split(x), q = split(y);
        // [[a,m],[n,b]] [[a',m'],[n',b']] =
        //   [[aa' + <m,n'>, am' + mb'], [na' + bn', <n,m'> + bb']]
        MoritaElem out;
        out.a = spec_.A->add(spec_.A->mul(p.a, q.a), spec_.pair_A[p.m][q.n]);
        out.m = spec_.M->add(spec_.M->left_act(p.a, q.m), spec_.M->right_act(p.m, q.b));
        out.n = spec_.N->add(spec_.N->right_act(p.n, q.a), spec_.N->left_act(p.b, q.n));
        out.b = spec_.B->add(spec_.pair_B[p.n][q.m], spec_.B->mul(p.b, q.b));
        return join(out);
    }
    std::string display(ElemIdx x) const override {
        auto p = split(x);
        return "[[" + spec_.A->display(p.a) + "," + spec_.M->display(p.m) + "],[" +
               spec_.N->display(p.n) + "," + spec_.B->display(p.b) + "]]";
    }
    std::string spec_string() const override {
        std::string pairing = spec_.kind == PairingKind::Zero ? "zero"
                              : spec_.kind == PairingKind::Mul ? "mul"
                                                               : "tables";
        return "Morita(" + spec_.A->spec_string() + "," + spec_.B->spec_string() + "," +
               spec_.M->spec_string() + "," + spec_.N->spec_string() + "," + pairing + ")";
    }

    const MoritaSpec& spec() const { return spec_; }

private:
    MoritaSpec spec_;
    std::size_t nb_, nn_, nm_;
};

void validate_pairings(const MoritaSpec& s) {
    const auto& A = *s.A;
    const auto& B = *s.B;
    const auto& M = *s.M;
    const auto& N = *s.N;
    auto fail = [&](const std::string& identity, const std::string& witness) {
        throw ValidationError("Morita pairing validation failure: identity " + identity +
                              " violated at " + witness);
    };
    if (s.pair_A.size() != M.size() || (M.size() && s.pair_A[0].size() != N.size()))
        throw ValidationError("pair_A table has wrong shape");
    if (s.pair_B.size() != N.size() || (N.size() && s.pair_B[0].size() != M.size()))
        throw ValidationError("pair_B table has wrong shape");
    for (ElemIdx m = 0; m < M.size(); ++m)
        for (ElemIdx n = 0; n < N.size(); ++n) {
            // bilinearity
            for (ElemIdx m2 = 0; m2 < M.size(); ++m2)
                if (s.pair_A[M.add(m, m2)][n] != A.add(s.pair_A[m][n], s.pair_A[m2][n]))
                    fail("pair_A(m+m',n) = pair_A(m,n)+pair_A(m',n)",
                         "m=" + M.display(m) + ", m'=" + M.display(m2) + ", n=" + N.display(n));
            for (ElemIdx n2 = 0; n2 < N.size(); ++n2)
                if (s.pair_A[m][N.add(n, n2)] != A.add(s.pair_A[m][n], s.pair_A[m][n2]))
                    fail("pair_A(m,n+n') = pair_A(m,n)+pair_A(m,n')",
                         "m=" + M.display(m) + ", n=" + N.display(n) + ", n'=" + N.display(n2));
            // A-bimodule homomorphism and B-balance
            for (ElemIdx a = 0; a < A.size(); ++a) {
                if (s.pair_A[M.left_act(a, m)][n] != A.mul(a, s.pair_A[m][n]))
                    fail("pair_A(am,n) = a pair_A(m,n)",
                         "a=" + A.display(a) + ", m=" + M.display(m) + ", n=" + N.display(n));
                if (s.pair_A[m][N.right_act(n, a)] != A.mul(s.pair_A[m][n], a))
                    fail("pair_A(m,na) = pair_A(m,n) a",
                         "a=" + A.display(a) + ", m=" + M.display(m) + ", n=" + N.display(n));
            }
            for (ElemIdx b = 0; b < B.size(); ++b)
                if (s.pair_A[M.right_act(m, b)][n] != s.pair_A[m][N.left_act(b, n)])
                    fail("pair_A(mb,n) = pair_A(m,bn)",
                         "b=" + B.display(b) + ", m=" + M.display(m) + ", n=" + N.display(n));
        }
    for (ElemIdx n = 0; n < N.size(); ++n)
        for (ElemIdx m = 0; m < M.size(); ++m) {
            for (ElemIdx n2 = 0; n2 < N.size(); ++n2)
                if (s.pair_B[N.add(n, n2)][m] != B.add(s.pair_B[n][m], s.pair_B[n2][m]))
                    fail("pair_B(n+n',m) = pair_B(n,m)+pair_B(n',m)",
                         "n=" + N.display(n) + ", n'=" + N.display(n2) + ", m=" + M.display(m));
            for (ElemIdx m2 = 0; m2 < M.size(); ++m2)
                if (s.pair_B[n][M.add(m, m2)] != B.add(s.pair_B[n][m], s.pair_B[n][m2]))
                    fail("pair_B(n,m+m') = pair_B(n,m)+pair_B(n,m')",
                         "n=" + N.display(n) + ", m=" + M.display(m) + ", m'=" + M.display(m2));
            for (ElemIdx b = 0; b < B.size(); ++b) {
                if (s.pair_B[N.left_act(b, n)][m] != B.mul(b, s.pair_B[n][m]))
                    fail("pair_B(bn,m) = b pair_B(n,m)",
                         "b=" + B.display(b) + ", n=" + N.display(n) + ", m=" + M.display(m));
                if (s.pair_B[n][M.right_act(m, b)] != B.mul(s.pair_B[n][m], b))
                    fail("pair_B(n,mb) = pair_B(n,m) b",
                         "b=" + B.display(b) + ", n=" + N.display(n) + ", m=" + M.display(m));
            }
            for (ElemIdx a = 0; a < A.size(); ++a)
                if (s.pair_B[N.right_act(n, a)][m] != s.pair_B[n][M.left_act(a, m)])
                    fail("pair_B(na,m) = pair_B(n,am)",
                         "a=" + A.display(a) + ", n=" + N.display(n) + ", m=" + M.display(m));
        }
    // Associativity of the context: pair_A(m,n)m' = m pair_B(n,m') and
    // pair_B(n,m)n' = n pair_A(m,n').
    for (ElemIdx m = 0; m < M.size(); ++m)
        for (ElemIdx n = 0; n < N.size(); ++n) {
            for (ElemIdx m2 = 0; m2 < M.size(); ++m2)
                if (M.left_act(s.pair_A[m][n], m2) != M.right_act(m, s.pair_B[n][m2]))
                    fail("pair_A(m,n)m' = m pair_B(n,m')",
                         "m=" + M.display(m) + ", n=" + N.display(n) + ", m'=" + M.display(m2));
            for (ElemIdx n2 = 0; n2 < N.size(); ++n2)
                if (N.left_act(s.pair_B[n][m], n2) != N.right_act(n, s.pair_A[m][n2]))
                    fail("pair_B(n,m)n' = n pair_A(m,n')",
                         "m=" + M.display(m) + ", n=" + N.display(n) + ", n'=" + N.display(n2));
        }
}

} // namespace

RingPtr morita_ring(MoritaSpec spec) {
    spec.M->validate();
    spec.N->validate();
    if (spec.kind == PairingKind::Zero) {
        spec.pair_A.assign(spec.M->size(), std::vector<ElemIdx>(spec.N->size(), spec.A->zero()));
        spec.pair_B.assign(spec.N->size(), std::vector<ElemIdx>(spec.M->size(), spec.B->zero()));
    } else if (spec.kind == PairingKind::Mul) {
        auto za = std::dynamic_pointer_cast<const ZnRing>(spec.A);
        auto zb = std::dynamic_pointer_cast<const ZnRing>(spec.B);
        if (!za || !zb || za->modulus() != zb->modulus() ||
            spec.M->size() != za->modulus() || spec.N->size() != za->modulus())
            throw ValidationError("mul pairing requires A = B = M = N = Z_k");
        unsigned k = za->modulus();
        spec.pair_A.assign(k, std::vector<ElemIdx>(k));
        spec.pair_B.assign(k, std::vector<ElemIdx>(k));
        for (ElemIdx m = 0; m < k; ++m)
            for (ElemIdx n = 0; n < k; ++n) {
                spec.pair_A[m][n] = static_cast<ElemIdx>(std::uint64_t(m) * n % k);
                spec.pair_B[m][n] = static_cast<ElemIdx>(std::uint64_t(m) * n % k);
            }
    }
    validate_pairings(spec);
    std::size_t size = spec.A->size() * spec.M->size() * spec.N->size() * spec.B->size();
    if (size > default_size_cap())
        throw SizeCapError("Morita ring of size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(default_size_cap()));
    MoritaElem one_parts{spec.A->one(), spec.M->zero(), spec.N->zero(), spec.B->one()};
    std::size_t nm = spec.M->size(), nn = spec.N->size(), nb = spec.B->size();
    ElemIdx one = static_cast<ElemIdx>(
        ((std::size_t(one_parts.a) * nm + one_parts.m) * nn + one_parts.n) * nb + one_parts.b);
    return std::make_shared<MoritaRing>(std::move(spec), size, one);
}

namespace {
const MoritaRing& as_morita(const FiniteRing& r) {
    auto* p = dynamic_cast<const MoritaRing*>(&r);
    if (!p) throw ValidationError("not a Morita context ring: " + r.spec_string());
    return *p;
}
} // namespace

bool is_morita_ring(const FiniteRing& r) { return dynamic_cast<const MoritaRing*>(&r) != nullptr; }
const MoritaSpec& morita_spec(const FiniteRing& r) { return as_morita(r).spec(); }
MoritaElem morita_split(const FiniteRing& r, ElemIdx x) { return as_morita(r).split(x); }
ElemIdx morita_compose(const FiniteRing& r, const MoritaElem& e) { return as_morita(r).join(e); }

ContextProjection context_projections(const Ideal& i) {
    const auto& host = as_morita(*i.ring);
    const auto& s = host.spec();
    std::vector<bool> in_a(s.A->size(), false), in_b(s.B->size(), false),
        in_m(s.M->size(), false), in_n(s.N->size(), false);
    for (ElemIdx x : i.elements) {
        auto p = host.split(x);
        in_a[p.a] = in_b[p.b] = true;
        in_m[p.m] = in_n[p.n] = true;
    }
    ContextProjection out;
    for (ElemIdx a = 0; a < s.A->size(); ++a)
        if (in_a[a]) out.p_A.push_back(a);
    for (ElemIdx b = 0; b < s.B->size(); ++b)
        if (in_b[b]) out.p_B.push_back(b);
    for (ElemIdx m = 0; m < s.M->size(); ++m)
        if (in_m[m]) out.p_M.push_back(m);
    for (ElemIdx n = 0; n < s.N->size(); ++n)
        if (in_n[n]) out.p_N.push_back(n);
    return out;
}

} // namespace ringlab
