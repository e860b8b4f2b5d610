#include "ringlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

#include "ringlab/cleanness.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/parser.hpp"

namespace ringlab {

std::string CorpusConfig::to_json() const {
    nlohmann::json j;
    j["zn_max"] = zn_max;
    j["product_max"] = product_max;
    j["triangular_zn_max"] = triangular_zn_max;
    j["idealization_n_max"] = idealization_n_max;
    j["morita_bases"] = morita_bases;
    j["ring_size_cap"] = ring_size_cap;
    return j.dump(2);
}

CorpusConfig CorpusConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CorpusConfig c;
    c.zn_max = j.value("zn_max", c.zn_max);
    c.product_max = j.value("product_max", c.product_max);
    c.triangular_zn_max = j.value("triangular_zn_max", c.triangular_zn_max);
    c.idealization_n_max = j.value("idealization_n_max", c.idealization_n_max);
    c.morita_bases = j.value("morita_bases", c.morita_bases);
    c.ring_size_cap = j.value("ring_size_cap", c.ring_size_cap);
    return c;
}

Corpus build_corpus(const CorpusConfig& config) {
    set_default_size_cap(config.ring_size_cap);
    std::vector<RingPtr> rings;
    auto guard = [&](const char* what, std::size_t size) {
        if (size > config.ring_size_cap)
            throw SizeCapError(std::string("corpus construction '") + what + "' of size " +
                               std::to_string(size) + " exceeds cap " +
                               std::to_string(config.ring_size_cap));
    };
    for (unsigned n = 1; n <= config.zn_max; ++n) {
        guard("Zn", n);
        rings.push_back(make_zn(n));
    }
    for (unsigned a = 1; a <= config.product_max; ++a)
        for (unsigned b = 1; b <= config.product_max; ++b) {
            guard("product", std::size_t(a) * b);
            rings.push_back(direct_product({make_zn(a), make_zn(b)}));
        }
    for (unsigned n = 1; n <= config.triangular_zn_max; ++n) {
        guard("triangular", std::size_t(n) * n * n);
        rings.push_back(triangular_ring(2, make_zn(n)));
    }
    for (unsigned n = 1; n <= config.idealization_n_max; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            guard("idealization", std::size_t(n) * d);
            auto base = make_zn(n);
            rings.push_back(idealization(base, Bimodule::canonical({d}, base, nullptr)));
        }
    for (unsigned k : config.morita_bases)
        for (PairingKind kind : {PairingKind::Zero, PairingKind::Mul}) {
            std::size_t size = std::size_t(k) * k * k * k;
            guard("morita", size);
            MoritaSpec spec;
            spec.A = make_zn(k);
            spec.B = make_zn(k);
            spec.M = Bimodule::canonical({k}, spec.A, spec.B);
            spec.N = Bimodule::canonical({k}, spec.B, spec.A);
            spec.kind = kind;
            rings.push_back(morita_ring(std::move(spec)));
        }

    Corpus corpus;
    corpus.reserve(rings.size());
    for (auto& r : rings) {
        CorpusEntry e;
        e.ring = r;
        r->element_sets();
        e.ideals = all_ideals(r);
        corpus.push_back(std::move(e));
    }
    return corpus;
}

namespace {

// ---------------------------------------------------------------------------
// Shared checker helpers

bool ideal_is(const Ideal& i, Flavor f, bool restricted = false) {
    return classify_ideal(i, f, restricted).holds;
}

bool ring_is(const RingPtr& r, Flavor f) { return classify_ring(r, f).holds; }

struct Check {
    TheoremReport& report;

    void instance() { ++report.instances; }
    void vacuous() {
        ++report.instances;
        ++report.vacuous;
    }
    void fail(Counterexample c) {
        report.pass = false;
        if (report.counterexamples.size() < 25) report.counterexamples.push_back(std::move(c));
    }
    void expect(bool ok, const RingPtr& ring, const std::string& ideal, const std::string& element,
                const std::string& expected, const std::string& actual) {
        if (!ok) fail({ring->spec_string(), ideal, element, expected, actual});
    }
};

// Complete sets of orthogonal central idempotents of size <= 3; completeness
// asserted before use.
std::vector<std::vector<ElemIdx>> complete_central_sets(const RingPtr& r) {
    std::vector<ElemIdx> central_idems;
    const auto& idem = r->idem_mask();
    for (ElemIdx c : r->center())
        if (idem[c]) central_idems.push_back(c);

    std::vector<std::vector<ElemIdx>> sets;
    auto assert_complete = [&](const std::vector<ElemIdx>& s) {
        ElemIdx sum = r->zero();
        for (std::size_t i = 0; i < s.size(); ++i) {
            sum = r->add(sum, s[i]);
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (r->mul(s[i], s[j]) != r->zero() || r->mul(s[j], s[i]) != r->zero())
                    throw ValidationError("idempotent set not orthogonal");
        }
        if (sum != r->one()) throw ValidationError("idempotent set not complete");
    };
    sets.push_back({r->one()});
    for (ElemIdx e : central_idems) {
        ElemIdx f = r->sub(r->one(), e);
        std::vector<ElemIdx> pair{e, f};
        if (e > f) std::swap(pair[0], pair[1]);
        if (std::find(sets.begin(), sets.end(), pair) == sets.end()) sets.push_back(pair);
    }
    for (std::size_t i = 0; i < central_idems.size(); ++i)
        for (std::size_t j = i + 1; j < central_idems.size(); ++j) {
            ElemIdx e1 = central_idems[i], e2 = central_idems[j];
            if (r->mul(e1, e2) != r->zero()) continue;
            ElemIdx e3 = r->sub(r->one(), r->add(e1, e2));
            if (r->mul(e3, e3) != e3) continue;
            if (r->mul(e1, e3) != r->zero() || r->mul(e2, e3) != r->zero()) continue;
            std::vector<ElemIdx> trip{e1, e2, e3};
            std::sort(trip.begin(), trip.end());
            if (std::find(sets.begin(), sets.end(), trip) == sets.end()) sets.push_back(trip);
        }
    for (const auto& s : sets) assert_complete(s);
    return sets;
}

// e I inside the corner ring eRe, for a central idempotent e.
Ideal corner_image_ideal(const RingPtr& host, const RingPtr& corner, ElemIdx e, const Ideal& i) {
    std::vector<ElemIdx> elems;
    std::vector<bool> seen(corner->size(), false);
    for (ElemIdx x : i.elements) {
        ElemIdx y = corner_index(*corner, host->mul(e, host->mul(x, e)));
        if (!seen[y]) {
            seen[y] = true;
            elems.push_back(y);
        }
    }
    std::sort(elems.begin(), elems.end());
    return ideal_from_elements(corner, std::move(elems));
}

std::string elems_str(const FiniteRing& r, const std::vector<ElemIdx>& elems, std::size_t limit = 8) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size() && i < limit; ++i)
        out += (i ? "," : "") + r.display(elems[i]);
    if (elems.size() > limit) out += ",...";
    return out + "}";
}

// ---------------------------------------------------------------------------
// Statement checkers

void check_l1(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& i : ideals) {
            auto wnc = classify_ideal(i, Flavor::WeakNilClean);
            if (!wnc.holds) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            ck.expect(ideal_is(i, Flavor::WeaklyClean), ring, i.display_gens(), "",
                      "weakly clean ideal", "not weakly clean");
            // explicit unit witnesses from the proof
            for (const auto& [x, cert] : wnc.witnesses) {
                if (cert.sign > 0) {
                    // x = e + n  =>  x = (1-e) + (2e-1+n), 2e-1+n a unit
                    ElemIdx u = ring->add(ring->sub(ring->add(cert.e, cert.e), ring->one()), cert.w);
                    ck.expect(ring->unit_mask()[u] &&
                                  ring->add(ring->sub(ring->one(), cert.e), u) == x,
                              ring, i.display_gens(), ring->display(x),
                              "2e-1+n a unit completing x=(1-e)+u", "witness transform failed");
                } else {
                    // x = -e + n  =>  -1+n a unit and x + e - n = 0
                    ElemIdx u = ring->sub(cert.w, ring->one());
                    ck.expect(ring->unit_mask()[u] &&
                                  ring->sub(ring->add(x, cert.e), cert.w) == ring->zero(),
                              ring, i.display_gens(), ring->display(x),
                              "-1+n a unit and x+e-n=0", "witness transform failed");
                }
            }
        }
}

void check_ppp1(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        const auto& jac = ring->jacobson();
        for (const auto& i : ideals) {
            if (!ideal_is(i, Flavor::WeakNilClean)) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            for (ElemIdx x : jac)
                if (i.contains(x))
                    ck.expect(ring->nil_mask()[x], ring, i.display_gens(), ring->display(x),
                              "element of I∩J(R) nilpotent", "not nilpotent");
        }
    }
}

void check_jac(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!ring_is(ring, Flavor::WeakNilClean)) {
            ck.vacuous();
            continue;
        }
        ck.instance();
        const auto& nil = ring->nil_mask();
        for (ElemIdx x : ring->jacobson())
            ck.expect(nil[x], ring, "", ring->display(x), "J(R) ⊆ Nil(R)", "J element not nilpotent");
        if (ring->is_commutative()) {
            for (const auto& n : ring->nilpotents()) {
                bool in_j = std::binary_search(ring->jacobson().begin(), ring->jacobson().end(), n.x);
                ck.expect(in_j, ring, "", ring->display(n.x), "commutative WNC: Nil(R) ⊆ J(R)",
                          "nilpotent outside J");
            }
        }
    }
}

void check_strong(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& i : ideals) {
            auto swc = classify_ideal(i, Flavor::StronglyWeaklyClean);
            auto swnc = classify_ideal(i, Flavor::StronglyWeakNilClean);
            if (!swc.holds && !swnc.holds) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            if (swnc.holds) {
                // part 1
                ck.expect(swc.holds, ring, i.display_gens(), "",
                          "strongly WNC ideal is strongly weakly clean", "not strongly weakly clean");
                for (const auto& [x, cert] : swnc.witnesses) {
                    ElemIdx x2 = ring->mul(x, x);
                    ElemIdx val = cert.sign > 0 ? ring->sub(x, x2) : ring->add(x, x2);
                    ck.expect(ring->nil_mask()[val], ring, i.display_gens(), ring->display(x),
                              cert.sign > 0 ? "x-x^2 nilpotent" : "x+x^2 nilpotent", "not nilpotent");
                }
            }
            if (swc.holds) {
                // part 2, constructive reading: the hypothesis is evaluated on
                // the decomposition the search finds
                bool hypothesis = true;
                for (const auto& [x, cert] : swc.witnesses) {
                    ElemIdx x2 = ring->mul(x, x);
                    ElemIdx val = cert.sign > 0 ? ring->sub(x, x2) : ring->add(x, x2);
                    if (!ring->nil_mask()[val]) {
                        hypothesis = false;
                        break;
                    }
                }
                if (hypothesis)
                    ck.expect(swnc.holds, ring, i.display_gens(), "",
                              "strongly weakly clean + nilpotency hypothesis => strongly WNC",
                              "not strongly WNC");
            }
        }
}

void check_uniqc(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& i : ideals) {
            if (!is_uniquely_weak_nil_clean_ideal(i)) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            const auto& idem = ring->idem_mask();
            for (ElemIdx e : i.elements) {
                if (!idem[e]) continue;
                for (ElemIdx x = 0; x < ring->size(); ++x)
                    if (ring->mul(e, x) != ring->mul(x, e)) {
                        ck.fail({ring->spec_string(), i.display_gens(), ring->display(e),
                                 "idempotent central", "ex != xe at x=" + ring->display(x)});
                        break;
                    }
            }
        }
}

void check_t111(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& i : ideals) {
            ck.instance();
            bool plain = ideal_is(i, Flavor::WeakNilClean, false);
            bool restricted = ideal_is(i, Flavor::WeakNilClean, true);
            ck.expect(plain == restricted, ring, i.display_gens(), "",
                      "ambient witnesses iff witnesses inside I",
                      plain ? "ambient yes, restricted no" : "ambient no, restricted yes");
        }
}

void check_local(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        bool trivial_idems = true;
        for (ElemIdx e : ring->idempotents())
            if (e != ring->zero() && e != ring->one()) {
                trivial_idems = false;
                break;
            }
        for (const auto& i : ideals) {
            if (!trivial_idems || !i.is_proper() || !ideal_is(i, Flavor::WeakNilClean)) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            ck.expect(is_nil_ideal(i), ring, i.display_gens(), "",
                      "proper WNC ideal of idempotent-free ring is nil", "not nil");
        }
    }
}

void check_main(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        ck.instance();
        bool lhs = ring_is(ring, Flavor::WeakNilClean);
        bool rhs = false;
        const auto& idem = ring->idem_mask();
        for (ElemIdx e : ring->center()) {
            if (!idem[e]) continue;
            Ideal ie = ideal_generated_by(ring, {e});
            Ideal if_ = ideal_generated_by(ring, {ring->sub(ring->one(), e)});
            if (!ideal_is(ie, Flavor::WeakNilClean) || !ideal_is(if_, Flavor::WeakNilClean))
                continue;
            if (ideal_is(ie, Flavor::NilClean) || ideal_is(if_, Flavor::NilClean)) {
                rhs = true;
                break;
            }
        }
        ck.expect(lhs == rhs, ring, "", "", "WNC ring iff central idempotent split exists",
                  lhs ? "ring WNC but no split" : "split exists but ring not WNC");
    }
}

void check_cset(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        ck.instance();
        bool lhs = ring_is(ring, Flavor::WeakNilClean);
        bool rhs = false;
        for (const auto& set : complete_central_sets(ring)) {
            bool all_wnc = true;
            int not_nc = 0;
            for (ElemIdx e : set) {
                Ideal ie = ideal_generated_by(ring, {e});
                if (!ideal_is(ie, Flavor::WeakNilClean)) {
                    all_wnc = false;
                    break;
                }
                if (!ideal_is(ie, Flavor::NilClean)) ++not_nc;
            }
            if (all_wnc && not_nc <= 1) {
                rhs = true;
                break;
            }
        }
        ck.expect(lhs == rhs, ring, "", "", "WNC ring iff complete central set condition",
                  lhs ? "ring WNC but no qualifying set" : "qualifying set but ring not WNC");
    }
}

void check_peirce(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        auto sets = complete_central_sets(ring);
        // corner rings once per central idempotent
        std::vector<ElemIdx> corner_es;
        std::vector<RingPtr> corners;
        for (const auto& set : sets)
            for (ElemIdx e : set)
                if (std::find(corner_es.begin(), corner_es.end(), e) == corner_es.end()) {
                    corner_es.push_back(e);
                    corners.push_back(corner_ring(ring, e));
                }
        auto corner_of = [&](ElemIdx e) {
            return corners[std::find(corner_es.begin(), corner_es.end(), e) - corner_es.begin()];
        };
        for (const auto& i : ideals) {
            ck.instance();
            bool lhs = ideal_is(i, Flavor::WeakNilClean);
            bool rhs = false;
            for (const auto& set : sets) {
                bool all_wnc = true;
                int not_nc = 0;
                for (ElemIdx e : set) {
                    RingPtr c = corner_of(e);
                    Ideal ei = corner_image_ideal(ring, c, e, i);
                    if (!ideal_is(ei, Flavor::WeakNilClean)) {
                        all_wnc = false;
                        break;
                    }
                    if (!ideal_is(ei, Flavor::NilClean)) ++not_nc;
                }
                if (all_wnc && not_nc <= 1) {
                    rhs = true;
                    break;
                }
            }
            ck.expect(lhs == rhs, ring, i.display_gens(), "",
                      "I WNC iff Peirce components condition",
                      lhs ? "I WNC but no qualifying set" : "qualifying set but I not WNC");
        }
    }
}

void check_quot(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& nil_i : ideals) {
            if (!is_nil_ideal(nil_i)) continue;
            QuotientRing q = quotient_ring(ring, nil_i);
            for (const auto& i1 : ideals) {
                bool contains = true;
                for (ElemIdx x : nil_i.elements)
                    if (!i1.contains(x)) {
                        contains = false;
                        break;
                    }
                if (!contains) continue; // builder only pairs I1 ⊇ I
                ck.instance();
                bool base_wnc = ideal_is(i1, Flavor::WeakNilClean);
                bool quot_wnc = ideal_is(image_ideal(q, i1), Flavor::WeakNilClean);
                ck.expect(base_wnc == quot_wnc, ring,
                          i1.display_gens() + " mod " + nil_i.display_gens(), "",
                          "I1 WNC in R iff I1/I WNC in R/I",
                          base_wnc ? "WNC below, not above" : "WNC above, not below");
            }
        }
}

void check_hom(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (const auto& modulus : ideals) {
            QuotientRing q = quotient_ring(ring, modulus);
            for (const auto& i : ideals) {
                if (!ideal_is(i, Flavor::WeakNilClean)) {
                    ck.vacuous();
                    continue;
                }
                ck.instance();
                ck.expect(ideal_is(image_ideal(q, i), Flavor::WeakNilClean), ring,
                          i.display_gens() + " mod " + modulus.display_gens(), "",
                          "homomorphic image of WNC ideal is WNC", "image not WNC");
            }
        }
}

void check_prod(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_product_ring(*ring)) continue;
        const auto& parts = product_parts(*ring);
        std::vector<std::vector<Ideal>> part_ideals;
        for (const auto& p : parts) part_ideals.push_back(all_ideals(p));
        // all tuples of component ideals (two parts in the default corpus)
        std::vector<std::size_t> pick(parts.size(), 0);
        while (true) {
            ck.instance();
            std::vector<const Ideal*> comp;
            for (std::size_t k = 0; k < parts.size(); ++k) comp.push_back(&part_ideals[k][pick[k]]);
            // product ideal as a box of component sets
            std::vector<ElemIdx> elems;
            std::vector<ElemIdx> tuple(parts.size(), 0);
            std::vector<std::size_t> at(parts.size(), 0);
            while (true) {
                for (std::size_t k = 0; k < parts.size(); ++k) tuple[k] = comp[k]->elements[at[k]];
                elems.push_back(product_compose(*ring, tuple));
                std::size_t k = parts.size();
                while (k-- > 0) {
                    if (++at[k] < comp[k]->elements.size()) break;
                    at[k] = 0;
                    if (k == 0) goto done_tuple;
                }
                if (at == std::vector<std::size_t>(parts.size(), 0)) break;
            }
        done_tuple:
            std::sort(elems.begin(), elems.end());
            Ideal prod = ideal_from_elements(ring, std::move(elems));
            bool lhs = ideal_is(prod, Flavor::WeakNilClean);
            bool all_wnc = true;
            int not_nc = 0;
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (!ideal_is(*comp[k], Flavor::WeakNilClean)) all_wnc = false;
                else if (!ideal_is(*comp[k], Flavor::NilClean)) ++not_nc;
            }
            bool rhs = all_wnc && not_nc <= 1;
            std::string gens;
            for (std::size_t k = 0; k < parts.size(); ++k)
                gens += (k ? " x " : "") + std::string("<") + comp[k]->display_gens() + ">";
            ck.expect(lhs == rhs, ring, gens, "", "product ideal WNC iff component condition",
                      lhs ? "product WNC but components fail condition"
                          : "components satisfy condition but product not WNC");
            std::size_t k = parts.size();
            while (k-- > 0) {
                if (++pick[k] < part_ideals[k].size()) break;
                pick[k] = 0;
                if (k == 0) goto done_ring;
            }
            if (pick == std::vector<std::size_t>(parts.size(), 0)) break;
        }
    done_ring:;
    }
}

void check_d211(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_triangular_ring(*ring)) continue;
        ck.instance();
        unsigned k = triangular_dim(*ring);
        const RingPtr& base = triangular_base(*ring);
        for (ElemIdx x = 0; x < ring->size(); ++x) {
            if (ring->mul(x, x) == x)
                for (unsigned d = 0; d < k; ++d) {
                    ElemIdx xd = triangular_entry(*ring, x, d, d);
                    ck.expect(base->mul(xd, xd) == xd, ring, "", ring->display(x),
                              "idempotent matrix has idempotent diagonal", "diagonal not idempotent");
                }
            bool mat_nil = ring->nil_mask()[x];
            bool diag_nil = true;
            for (unsigned d = 0; d < k; ++d)
                if (!base->nil_mask()[triangular_entry(*ring, x, d, d)]) {
                    diag_nil = false;
                    break;
                }
            ck.expect(mat_nil == diag_nil, ring, "", ring->display(x),
                      "nilpotent iff all diagonal entries nilpotent",
                      mat_nil ? "matrix nil, diagonal not" : "diagonal nil, matrix not");
        }
    }
}

void check_t2(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_triangular_ring(*ring) || triangular_dim(*ring) != 2) continue;
        const RingPtr& base = triangular_base(*ring);
        auto base_ideals = all_ideals(base);
        for (const auto& i : base_ideals)
            for (const auto& j : base_ideals) {
                ck.instance();
                // S = [[I, R], [0, J]]
                std::vector<ElemIdx> elems;
                for (ElemIdx a : i.elements)
                    for (ElemIdx r = 0; r < base->size(); ++r)
                        for (ElemIdx b : j.elements)
                            elems.push_back(triangular_compose(*ring, {a, r, b}));
                std::sort(elems.begin(), elems.end());
                Ideal s = ideal_from_elements(ring, std::move(elems));
                bool lhs = ideal_is(s, Flavor::WeakNilClean);
                bool rhs = ideal_is(i, Flavor::WeakNilClean) && ideal_is(j, Flavor::WeakNilClean) &&
                           (ideal_is(i, Flavor::NilClean) || ideal_is(j, Flavor::NilClean));
                ck.expect(lhs == rhs, ring,
                          "[[<" + i.display_gens() + ">,R],[0,<" + j.display_gens() + ">]]", "",
                          "S WNC iff I, J WNC and one NC",
                          lhs ? "S WNC but component condition fails"
                              : "component condition holds but S not WNC");
            }
    }
}

void check_rm(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_idealization_ring(*ring)) continue;
        ck.instance();
        const RingPtr& base = idealization_base(*ring);
        for (ElemIdx x = 0; x < ring->size(); ++x) {
            auto [r, m] = idealization_split(*ring, x);
            bool idem = ring->mul(x, x) == x;
            bool idem_rhs = base->mul(r, r) == r && m == idealization_module(*ring)->zero();
            ck.expect(idem == idem_rhs, ring, "", ring->display(x),
                      "(r,m) idempotent iff r idempotent and m=0", "mismatch");
            bool nil = ring->nil_mask()[x];
            bool nil_rhs = base->nil_mask()[r];
            ck.expect(nil == nil_rhs, ring, "", ring->display(x),
                      "(r,m) nilpotent iff r nilpotent", "mismatch");
        }
    }
}

void check_rm1(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_idealization_ring(*ring)) continue;
        const RingPtr& base = idealization_base(*ring);
        const ModulePtr& mod = idealization_module(*ring);
        auto base_ideals = all_ideals(base);
        auto submods = mod->submodules();
        for (const auto& i : base_ideals)
            for (const auto& n : submods) {
                std::vector<ElemIdx> elems;
                for (ElemIdx a : i.elements)
                    for (ElemIdx mm : n) elems.push_back(idealization_compose(*ring, a, mm));
                std::sort(elems.begin(), elems.end());
                std::vector<bool> mask(ring->size(), false);
                for (ElemIdx x : elems) mask[x] = true;
                // I(N) only names an ideal when IM lands inside N
                if (!is_ideal_set(*ring, mask)) {
                    ck.vacuous();
                    continue;
                }
                ck.instance();
                Ideal in = ideal_from_elements(ring, std::move(elems));
                bool lhs = ideal_is(i, Flavor::WeakNilClean);
                bool rhs = ideal_is(in, Flavor::WeakNilClean);
                ck.expect(lhs == rhs, ring, "<" + i.display_gens() + ">(" + elems_str(*base, n) + ")",
                          "", "I WNC in R iff I(N) WNC in R(M)",
                          lhs ? "I WNC but I(N) not" : "I(N) WNC but I not");
            }
    }
}

void check_corner(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus)
        for (ElemIdx f : ring->idempotents()) {
            ck.instance();
            RingPtr c = corner_ring(ring, f);
            for (ElemIdx y = 0; y < c->size(); ++y) {
                ElemIdx a = corner_lift(*c, y);
                bool in_r = decompose(ring, a, Flavor::StronglyWeakNilClean).has_value();
                bool in_c = decompose(c, y, Flavor::StronglyWeakNilClean).has_value();
                ck.expect(in_r == in_c, ring, "f=" + ring->display(f), ring->display(a),
                          "strongly WNC in R iff strongly WNC in fRf",
                          in_r ? "in R but not in fRf" : "in fRf but not in R");
            }
        }
}

void check_morl(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_morita_ring(*ring)) continue;
        const MoritaSpec& s = morita_spec(*ring);
        for (const auto& i : ideals) {
            ck.instance();
            ContextProjection p = context_projections(i);
            std::vector<bool> in_a(s.A->size(), false), in_b(s.B->size(), false),
                in_m(s.M->size(), false), in_n(s.N->size(), false);
            for (ElemIdx a : p.p_A) in_a[a] = true;
            for (ElemIdx b : p.p_B) in_b[b] = true;
            for (ElemIdx m : p.p_M) in_m[m] = true;
            for (ElemIdx n : p.p_N) in_n[n] = true;
            // the ideal is exactly the box of its projections
            bool box = i.size() == p.p_A.size() * p.p_B.size() * p.p_M.size() * p.p_N.size();
            ck.expect(box, ring, i.display_gens(), "", "I = [[A1,M1],[N1,B1]]",
                      "I is not the box of its projections");
            ck.expect(is_ideal_set(*s.A, in_a), ring, i.display_gens(), "", "p_A(I) ideal of A",
                      "p_A not an ideal");
            ck.expect(is_ideal_set(*s.B, in_b), ring, i.display_gens(), "", "p_B(I) ideal of B",
                      "p_B not an ideal");
            auto contain = [&](bool ok, const char* which) {
                ck.expect(ok, ring, i.display_gens(), "", which, "containment fails");
            };
            bool m1n = true, n1m = true, a1m = true, b1n = true, mn1 = true, nm1 = true,
                 mb1 = true, na1 = true, m_sub = true, n_sub = true;
            for (ElemIdx m = 0; m < s.M->size(); ++m)
                for (ElemIdx n = 0; n < s.N->size(); ++n) {
                    if (in_m[m] && !in_a[s.pair_A[m][n]]) m1n = false;
                    if (in_n[n] && !in_b[s.pair_B[n][m]]) n1m = false;
                    if (in_n[n] && !in_a[s.pair_A[m][n]]) mn1 = false;
                    if (in_m[m] && !in_b[s.pair_B[n][m]]) nm1 = false;
                }
            for (ElemIdx m = 0; m < s.M->size(); ++m) {
                for (ElemIdx a = 0; a < s.A->size(); ++a)
                    if (in_a[a] && !in_m[s.M->left_act(a, m)]) a1m = false;
                for (ElemIdx b = 0; b < s.B->size(); ++b)
                    if (in_b[b] && !in_m[s.M->right_act(m, b)]) mb1 = false;
                if (in_m[m])
                    for (ElemIdx m2 = 0; m2 < s.M->size(); ++m2)
                        if (in_m[m2] && !in_m[s.M->add(m, m2)]) m_sub = false;
            }
            for (ElemIdx n = 0; n < s.N->size(); ++n) {
                for (ElemIdx b = 0; b < s.B->size(); ++b)
                    if (in_b[b] && !in_n[s.N->left_act(b, n)]) b1n = false;
                for (ElemIdx a = 0; a < s.A->size(); ++a)
                    if (in_a[a] && !in_n[s.N->right_act(n, a)]) na1 = false;
                if (in_n[n])
                    for (ElemIdx n2 = 0; n2 < s.N->size(); ++n2)
                        if (in_n[n2] && !in_n[s.N->add(n, n2)]) n_sub = false;
            }
            contain(m1n, "M1 N ⊆ A1");
            contain(n1m, "N1 M ⊆ B1");
            contain(a1m, "A1 M ⊆ M1");
            contain(b1n, "B1 N ⊆ N1");
            contain(mn1, "M N1 ⊆ A1");
            contain(nm1, "N M1 ⊆ B1");
            contain(mb1, "M B1 ⊆ M1");
            contain(na1, "N A1 ⊆ N1");
            contain(m_sub, "M1 closed under addition");
            contain(n_sub, "N1 closed under addition");
        }
    }
}

void check_morp(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_morita_ring(*ring)) continue;
        const MoritaSpec& s = morita_spec(*ring);
        for (const auto& i : ideals) {
            if (!ideal_is(i, Flavor::StronglyWeakNilClean)) {
                ck.vacuous();
                continue;
            }
            ck.instance();
            ContextProjection p = context_projections(i);
            Ideal a1 = ideal_from_elements(s.A, p.p_A);
            Ideal b1 = ideal_from_elements(s.B, p.p_B);
            ck.expect(ideal_is(a1, Flavor::StronglyWeakNilClean), ring, i.display_gens(), "",
                      "p_A(I) strongly WNC ideal of A", "not strongly WNC");
            ck.expect(ideal_is(b1, Flavor::StronglyWeakNilClean), ring, i.display_gens(), "",
                      "p_B(I) strongly WNC ideal of B", "not strongly WNC");
        }
    }
}

void check_morz(const Corpus& corpus, Check& ck) {
    for (const auto& [ring, ideals] : corpus) {
        if (!is_morita_ring(*ring)) continue;
        const MoritaSpec& s = morita_spec(*ring);
        if (s.kind != PairingKind::Zero) continue;
        auto a_ideals = all_ideals(s.A);
        auto b_ideals = all_ideals(s.B);
        for (const auto& a1 : a_ideals)
            for (const auto& b1 : b_ideals) {
                bool hyp = ideal_is(a1, Flavor::WeakNilClean) &&
                           ideal_is(b1, Flavor::WeakNilClean) &&
                           (ideal_is(a1, Flavor::StronglyNilClean) ||
                            ideal_is(b1, Flavor::StronglyNilClean));
                if (!hyp) {
                    ck.vacuous();
                    continue;
                }
                ck.instance();
                // I = [[A1, M], [N, B1]]; the Tang containments hold
                // automatically under zero pairing with full M1, N1
                std::vector<ElemIdx> elems;
                for (ElemIdx a : a1.elements)
                    for (ElemIdx m = 0; m < s.M->size(); ++m)
                        for (ElemIdx n = 0; n < s.N->size(); ++n)
                            for (ElemIdx b : b1.elements)
                                elems.push_back(morita_compose(*ring, {a, m, n, b}));
                std::sort(elems.begin(), elems.end());
                Ideal i = ideal_from_elements(ring, std::move(elems));
                ck.expect(ideal_is(i, Flavor::WeakNilClean), ring,
                          "[[<" + a1.display_gens() + ">,M],[N,<" + b1.display_gens() + ">]]", "",
                          "constructed context ideal is WNC", "not WNC");
            }
    }
}

struct StatementDef {
    const char* id;
    const char* description;
    const char* notes;
    void (*checker)(const Corpus&, Check&);
};

const std::vector<StatementDef>& catalog() {
    static const std::vector<StatementDef> defs = {
        {"STMT-CORNER",
         "An element of fRf is strongly weak nil clean in R iff it is strongly weak nil clean in fRf",
         "", check_corner},
        {"STMT-CSET",
         "R is weak nil clean iff a complete set of central idempotents exists with every <e_i> WNC "
         "and at most one not nil clean",
         "complete sets enumerated up to size 3", check_cset},
        {"STMT-D211",
         "In T_n(R), idempotent matrices have idempotent diagonals; a matrix is nilpotent iff all "
         "diagonal entries are nilpotent",
         "", check_d211},
        {"STMT-HOM", "Every homomorphic image of a weak nil clean ideal is weak nil clean",
         "homomorphic images realized as quotient projections", check_hom},
        {"STMT-JAC",
         "If R is weak nil clean then J(R) ⊆ Nil(R); commutative case J(R) = Nil(R)",
         "commutative equality read as the intended form of the garbled corollary sentence",
         check_jac},
        {"STMT-L1", "Every weak nil clean ideal is a weakly clean ideal", "", check_l1},
        {"STMT-LOCAL",
         "If R has no nontrivial idempotents, every proper weak nil clean ideal of R is nil", "",
         check_local},
        {"STMT-MAIN",
         "R is weak nil clean iff some central idempotent e has <e>, <1-e> WNC with one nil clean",
         "", check_main},
        {"STMT-MORL",
         "Ideals of a Morita context ring are exactly the boxes [[A1,M1],[N1,B1]] with the "
         "containment conditions",
         "forward containments only", check_morl},
        {"STMT-MORP",
         "Projections of a strongly weak nil clean context ideal are strongly WNC ideals of A and B",
         "", check_morp},
        {"STMT-MORZ",
         "Zero pairing: A1, B1 WNC with one strongly nil clean gives a WNC context ideal",
         "strongly nil clean ideal: every element x = e+n with en = ne", check_morz},
        {"STMT-PEIRCE",
         "I is WNC iff a complete central set exists with each e_i I WNC in e_i R and at most one "
         "not nil clean",
         "", check_peirce},
        {"STMT-PPP1", "If I is weak nil clean then I ∩ J(R) is a nil ideal", "", check_ppp1},
        {"STMT-PROD",
         "A finite product ideal is WNC iff each factor is WNC and at most one is not nil clean",
         "finite products only; the condition is known to fail for infinite products",
         check_prod},
        {"STMT-QUOT",
         "For nil I ⊆ I1: I1 is WNC in R iff I1/I is WNC in R/I", "", check_quot},
        {"STMT-RM", "(r,m) idempotent in R(M) iff r idempotent and m = 0; nilpotent iff r nilpotent",
         "", check_rm},
        {"STMT-RM1", "I is WNC in R iff I(N) is WNC in R(M) for submodules N", "", check_rm1},
        {"STMT-STRONG",
         "Strongly WNC ideals are strongly weakly clean with a-a^2 or a+a^2 nilpotent; converse "
         "under the nilpotency hypothesis",
         "part 2 checked in the constructive reading (hypothesis on the decomposition found)",
         check_strong},
        {"STMT-T111",
         "I is WNC iff every element decomposes with witnesses inside I itself", "", check_t111},
        {"STMT-T2",
         "In T_2(R), the ideal [[I,R],[0,J]] is WNC iff I and J are WNC and one is nil clean", "",
         check_t2},
        {"STMT-UNIQC", "Every idempotent in a uniquely weak nil clean ideal is central", "",
         check_uniqc},
    };
    return defs;
}

} // namespace

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : catalog()) v.push_back(d.id);
        return v;
    }();
    return ids;
}

std::string statement_description(const std::string& id) {
    for (const auto& d : catalog())
        if (id == d.id) return d.description;
    throw std::invalid_argument("unknown statement id: " + id);
}

TheoremReport run_statement(const std::string& id, const Corpus& corpus) {
    for (const auto& d : catalog()) {
        if (id != d.id) continue;
        TheoremReport report;
        report.id = d.id;
        report.description = d.description;
        report.notes = d.notes;
        Check ck{report};
        auto t0 = std::chrono::steady_clock::now();
        d.checker(corpus, ck);
        report.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }
    throw std::invalid_argument("unknown statement id: " + id);
}

TheoremReport run_statement(const std::string& id, const CorpusConfig& config) {
    return run_statement(id, build_corpus(config));
}

std::vector<TheoremReport> run_all(const Corpus& corpus) {
    std::vector<std::future<TheoremReport>> futures;
    for (const auto& id : statement_ids())
        futures.push_back(std::async(std::launch::async, [&corpus, id] {
            try {
                return run_statement(id, corpus);
            } catch (const std::exception& e) {
                TheoremReport r;
                r.id = id;
                r.description = statement_description(id);
                r.pass = false;
                r.counterexamples.push_back({"", "", "", "checker completes", e.what()});
                return r;
            }
        }));
    std::vector<TheoremReport> reports;
    for (auto& f : futures) reports.push_back(f.get());
    std::sort(reports.begin(), reports.end(),
              [](const TheoremReport& a, const TheoremReport& b) { return a.id < b.id; });
    return reports;
}

std::vector<TheoremReport> run_all(const CorpusConfig& config) {
    return run_all(build_corpus(config));
}

namespace {
nlohmann::json report_json(const TheoremReport& r, bool with_timing) {
    nlohmann::json j;
    j["id"] = r.id;
    j["description"] = r.description;
    j["instances"] = r.instances;
    j["vacuous"] = r.vacuous;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back({{"ring", c.ring},
                                        {"ideal", c.ideal},
                                        {"element", c.element},
                                        {"expected", c.expected},
                                        {"actual", c.actual}});
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (with_timing) j["wall_ms"] = r.wall_ms;
    return j;
}
} // namespace

std::string TheoremReport::to_json(bool with_timing) const {
    return report_json(*this, with_timing).dump(2);
}

std::string reports_to_json(const std::vector<TheoremReport>& reports, bool with_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, with_timing));
    return arr.dump(2);
}

std::string reports_to_table(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    out << "statement     verdict  instances  vacuous  time\n";
    for (const auto& r : reports) {
        std::string id = r.id;
        id.resize(13, ' ');
        std::string verdict = r.pass ? "pass" : "FAIL";
        verdict.resize(8, ' ');
        std::string inst = std::to_string(r.instances);
        inst.resize(10, ' ');
        std::string vac = std::to_string(r.vacuous);
        vac.resize(8, ' ');
        out << id << ' ' << verdict << ' ' << inst << ' ' << vac << ' '
            << static_cast<long long>(r.wall_ms) << " ms\n";
        for (const auto& c : r.counterexamples)
            out << "    counterexample: ring=" << c.ring << " ideal=" << c.ideal
                << " element=" << c.element << " expected=" << c.expected << " actual=" << c.actual
                << "\n";
    }
    return out.str();
}

} // namespace ringlab
