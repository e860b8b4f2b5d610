#include "ringlab/cleanness.hpp"

#include <array>

#include <json.hpp>

#include "ringlab/parser.hpp"

namespace ringlab {

bool flavor_is_weak(Flavor f) {
    return f == Flavor::WeaklyClean || f == Flavor::WeakNilClean ||
           f == Flavor::StronglyWeaklyClean || f == Flavor::StronglyWeakNilClean;
}

bool flavor_is_nil(Flavor f) {
    return f == Flavor::NilClean || f == Flavor::WeakNilClean || f == Flavor::StronglyNilClean ||
           f == Flavor::StronglyWeakNilClean;
}

bool flavor_is_strong(Flavor f) {
    return f == Flavor::StronglyClean || f == Flavor::StronglyWeaklyClean ||
           f == Flavor::StronglyNilClean || f == Flavor::StronglyWeakNilClean;
}

namespace {
constexpr std::array<std::pair<Flavor, const char*>, 8> kFlavorNames{{
    {Flavor::Clean, "clean"},
    {Flavor::WeaklyClean, "weakly_clean"},
    {Flavor::NilClean, "nil_clean"},
    {Flavor::WeakNilClean, "weak_nil_clean"},
    {Flavor::StronglyClean, "strongly_clean"},
    {Flavor::StronglyWeaklyClean, "strongly_weakly_clean"},
    {Flavor::StronglyNilClean, "strongly_nil_clean"},
    {Flavor::StronglyWeakNilClean, "strongly_weak_nil_clean"},
}};
} // namespace

std::string flavor_name(Flavor f) {
    for (auto& [fl, name] : kFlavorNames)
        if (fl == f) return name;
    return "?";
}

std::optional<Flavor> flavor_from_name(std::string_view name) {
    for (auto& [fl, n] : kFlavorNames)
        if (name == n) return fl;
    return std::nullopt;
}

std::optional<DecompositionCertificate> decompose(const RingPtr& ring, ElemIdx x, Flavor flavor,
                                                  const Ideal* restrict_to) {
    ring->check_index(x);
    const bool weak = flavor_is_weak(flavor);
    const bool nil = flavor_is_nil(flavor);
    const bool strong = flavor_is_strong(flavor);
    const auto& w_mask = nil ? ring->nil_mask() : ring->unit_mask();
    for (ElemIdx e : ring->idempotents()) {
        if (restrict_to && !restrict_to->contains(e)) continue;
        for (int sign : {+1, -1}) {
            if (sign < 0 && !weak) break;
            // x = sign*e + w  =>  w = x - sign*e
            ElemIdx w = sign > 0 ? ring->sub(x, e) : ring->add(x, e);
            if (!w_mask[w]) continue;
            if (restrict_to && !restrict_to->contains(w)) continue;
            if (strong && ring->mul(e, w) != ring->mul(w, e)) continue;
            DecompositionCertificate c;
            c.flavor = flavor;
            c.ring = ring;
            c.x = x;
            c.sign = sign;
            c.e = e;
            c.w = w;
            c.commuting = ring->mul(e, w) == ring->mul(w, e);
            c.type_tag = weak ? (sign > 0 ? "I" : "II") : "";
            return c;
        }
    }
    return std::nullopt;
}

std::size_t unique_wnc_witness_count(const RingPtr& ring, ElemIdx x) {
    std::size_t count = 0;
    const auto& nil = ring->nil_mask();
    for (ElemIdx e : ring->idempotents())
        if (nil[ring->sub(x, e)] || nil[ring->add(x, e)]) ++count;
    return count;
}

bool verify_certificate(const DecompositionCertificate& c) {
    const auto& r = *c.ring;
    if (c.x >= r.size() || c.e >= r.size() || c.w >= r.size())
        throw ValidationError("certificate refers to elements outside the ring");
    if (c.sign != 1 && c.sign != -1) return false;
    if (c.sign == -1 && !flavor_is_weak(c.flavor)) return false;
    ElemIdx signed_e = c.sign > 0 ? c.e : r.neg(c.e);
    if (r.add(signed_e, c.w) != c.x) return false;
    if (r.mul(c.e, c.e) != c.e) return false;
    if (flavor_is_nil(c.flavor)) {
        if (!r.nilpotency_index(c.w)) return false;
    } else {
        if (!r.unit_mask()[c.w]) return false;
    }
    bool commute = r.mul(c.e, c.w) == r.mul(c.w, c.e);
    if (c.commuting && !commute) return false;
    if (flavor_is_strong(c.flavor) && !commute) return false;
    if (flavor_is_weak(c.flavor)) {
        if (c.type_tag != (c.sign > 0 ? "I" : "II")) return false;
    } else if (!c.type_tag.empty()) {
        return false;
    }
    return true;
}

std::string DecompositionCertificate::to_json() const {
    nlohmann::json j;
    j["flavor"] = flavor_name(flavor);
    j["ring_spec"] = ring->spec_string();
    j["x"] = ring->display(x);
    j["sign"] = sign;
    j["e"] = ring->display(e);
    j["w"] = ring->display(w);
    j["commuting"] = commuting;
    j["type_tag"] = type_tag;
    return j.dump();
}

DecompositionCertificate DecompositionCertificate::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DecompositionCertificate c;
    auto fl = flavor_from_name(j.at("flavor").get<std::string>());
    if (!fl) throw ValidationError("unknown flavor in certificate");
    c.flavor = *fl;
    c.ring = parse_ring_spec(j.at("ring_spec").get<std::string>());
    auto elem = [&](const char* key) {
        auto e = c.ring->parse_element(j.at(key).get<std::string>());
        if (!e)
            throw ValidationError(std::string("certificate field '") + key +
                                  "' is not an element of " + c.ring->spec_string());
        return *e;
    };
    c.x = elem("x");
    c.e = elem("e");
    c.w = elem("w");
    c.sign = j.at("sign").get<int>();
    c.commuting = j.at("commuting").get<bool>();
    c.type_tag = j.at("type_tag").get<std::string>();
    return c;
}

IdealClassification classify_ideal(const Ideal& i, Flavor flavor, bool restricted) {
    IdealClassification out;
    out.flavor = flavor;
    out.restricted = restricted;
    out.holds = true;
    for (ElemIdx x : i.elements) {
        auto c = decompose(i.ring, x, flavor, restricted ? &i : nullptr);
        if (!c) {
            out.holds = false;
            out.failure_witness = x; // elements scanned in ascending order
            out.witnesses.clear();
            return out;
        }
        out.witnesses.emplace(x, std::move(*c));
    }
    return out;
}

IdealClassification classify_ring(const RingPtr& ring, Flavor flavor) {
    std::vector<ElemIdx> all(ring->size());
    for (ElemIdx x = 0; x < ring->size(); ++x) all[x] = x;
    Ideal whole;
    whole.ring = ring;
    whole.elements = std::move(all);
    whole.mask.assign(ring->size(), true);
    return classify_ideal(whole, flavor, false);
}

bool is_uniquely_weak_nil_clean_ideal(const Ideal& i) {
    for (ElemIdx x : i.elements)
        if (unique_wnc_witness_count(i.ring, x) != 1) return false;
    return true;
}

} // namespace ringlab
