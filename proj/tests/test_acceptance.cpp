// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ringlab/cleanness.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/parser.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion5();
void criterion6();

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("CRITERION %d: %s - %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

// criterion 1: <2> in Z6 is weak nil clean but not nil clean, within 10 ms
void criterion1() {
    auto t0 = Clock::now();
    auto r = make_zn(6);
    Ideal i = ideal_generated_by(r, {2});
    bool wnc = classify_ideal(i, Flavor::WeakNilClean).holds;
    auto nc = classify_ideal(i, Flavor::NilClean);
    double ms = ms_since(t0);
    bool ok = wnc && !nc.holds && nc.failure_witness == 2 && ms < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Z6 ideal <2>: weak nil clean %s, nil clean %s (witness %s), %.2f ms",
                  wnc ? "yes" : "NO", nc.holds ? "YES" : "no",
                  nc.failure_witness ? r->display(*nc.failure_witness).c_str() : "-", ms);
    report(1, ok, buf);
}

// criterion 2: <3> in Z15 is weakly clean but not weak nil clean, within 10 ms
void criterion2() {
    auto t0 = Clock::now();
    auto r = make_zn(15);
    Ideal i = ideal_generated_by(r, {3});
    bool wc = classify_ideal(i, Flavor::WeaklyClean).holds;
    auto wnc = classify_ideal(i, Flavor::WeakNilClean);
    double ms = ms_since(t0);
    bool ok = wc && !wnc.holds && wnc.failure_witness == 3 && ms < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Z15 ideal <3>: weakly clean %s, weak nil clean %s (witness %s), %.2f ms",
                  wc ? "yes" : "NO", wnc.holds ? "YES" : "no",
                  wnc.failure_witness ? r->display(*wnc.failure_witness).c_str() : "-", ms);
    report(2, ok, buf);
}

// criterion 3: Z49 and Z121 are not weak nil clean rings, yet every proper
// ideal is weak nil clean; within 1 s
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (unsigned n : {49u, 121u}) {
        auto r = make_zn(n);
        bool ring_wnc = classify_ring(r, Flavor::WeakNilClean).holds;
        bool all_proper_wnc = true;
        for (const auto& i : all_ideals(r))
            if (i.is_proper() && !classify_ideal(i, Flavor::WeakNilClean).holds)
                all_proper_wnc = false;
        ok = ok && !ring_wnc && all_proper_wnc;
        detail += "Z" + std::to_string(n) + " ring " + (ring_wnc ? "WNC" : "not WNC") +
                  ", proper ideals " + (all_proper_wnc ? "all WNC" : "NOT all WNC") + "; ";
    }
    double ms = ms_since(t0);
    ok = ok && ms < 1000.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    report(3, ok, detail + buf);
}

// criteria 4 and 7 share the default-corpus runs
void criterion4_and_7() {
    auto t0 = Clock::now();
    Corpus corpus = build_corpus(CorpusConfig::defaults());
    auto reports = run_all(corpus);
    double ms = ms_since(t0);

    std::size_t passed = 0, nonvac_uniqc = 0, nonvac_local = 0;
    std::string failing;
    for (const auto& r : reports) {
        if (r.pass) ++passed;
        else failing += " " + r.id;
        if (r.id == "STMT-UNIQC") nonvac_uniqc = r.instances - r.vacuous;
        if (r.id == "STMT-LOCAL") nonvac_local = r.instances - r.vacuous;
    }
    bool ok = passed == 21 && reports.size() == 21 && nonvac_uniqc > 0 && nonvac_local > 0 &&
              ms < 300000.0;
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "default corpus (%zu rings): %zu/21 statements hold%s%s, "
                  "STMT-UNIQC %zu and STMT-LOCAL %zu non-vacuous instances, %.0f ms",
                  corpus.size(), passed, failing.empty() ? "" : ", failing:", failing.c_str(),
                  nonvac_uniqc, nonvac_local, ms);
    report(4, ok, buf);

    criterion5();
    criterion6();

    // criterion 7: a second full run serializes byte-identically once wall
    // times are stripped
    auto t1 = Clock::now();
    auto reports2 = run_all(build_corpus(CorpusConfig::defaults()));
    bool identical = reports_to_json(reports, false) == reports_to_json(reports2, false);
    char buf7[120];
    std::snprintf(buf7, sizeof buf7,
                  "repeated full run serializes %s without timing fields (%.0f ms)",
                  identical ? "byte-identically" : "DIFFERENTLY", ms_since(t1));
    report(7, identical, buf7);
}

// criterion 5: independent oracles agree with the library
void criterion5() {
    bool ok = true;
    std::string detail;

    // 5a: Jacobson radical against the one-sided quasi-regularity definition
    for (const char* spec :
         {"Z12", "T2(Z4)", "Morita(Z2,Z2,Z2,Z2,mul)", "Idealization(Z4, Z2)", "Z2 x Z9"}) {
        auto r = parse_ring_spec(spec);
        std::vector<ElemIdx> oracle;
        for (ElemIdx x = 0; x < r->size(); ++x) {
            bool quasi = true;
            for (ElemIdx a = 0; a < r->size() && quasi; ++a)
                if (!r->unit_mask()[r->sub(r->one(), r->mul(a, x))]) quasi = false;
            if (quasi) oracle.push_back(x);
        }
        if (r->jacobson() != oracle) {
            ok = false;
            detail += std::string("J mismatch in ") + spec + "; ";
        }
    }
    detail += "radical oracle agrees; ";

    // 5b: Newton iteration lifting against exhaustive idempotent search
    for (const char* spec : {"Z2", "Z3", "Z4", "Z8", "Z9", "Z12", "Z16", "Idealization(Z4, Z2)"}) {
        auto r = parse_ring_spec(spec);
        for (const auto& i : all_ideals(r)) {
            if (!is_nil_ideal(i)) continue;
            for (ElemIdx a = 0; a < r->size(); ++a) {
                if (!i.contains(r->sub(r->mul(a, a), a))) continue;
                ElemIdx e = lift_idempotent_mod_nil(r, i, a);
                bool found = false;
                for (ElemIdx cand : r->idempotents())
                    if (i.contains(r->sub(cand, a)) && cand == e) found = true;
                if (!(r->mul(e, e) == e && found)) {
                    ok = false;
                    detail += std::string("lift mismatch in ") + spec + "; ";
                }
            }
        }
    }
    detail += "lifting oracle agrees; ";

    // 5c: Morita multiplication pairing over Z2 against direct 2x2 matrix
    // arithmetic
    auto m2 = parse_ring_spec("Morita(Z2,Z2,Z2,Z2,mul)");
    using Mat = std::array<unsigned, 4>;
    auto as_mat = [&](ElemIdx x) {
        MoritaElem e = morita_split(*m2, x);
        return Mat{e.a, e.m, e.n, e.b};
    };
    auto mat_mul = [](Mat x, Mat y) {
        return Mat{(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2,
                   (x[2] * y[0] + x[3] * y[2]) % 2, (x[2] * y[1] + x[3] * y[3]) % 2};
    };
    for (ElemIdx x = 0; x < 16 && ok; ++x)
        for (ElemIdx y = 0; y < 16; ++y)
            if (as_mat(m2->mul(x, y)) != mat_mul(as_mat(x), as_mat(y))) {
                ok = false;
                detail += "matrix oracle mismatch; ";
                break;
            }
    detail += "matrix oracle agrees (256 products)";
    report(5, ok, detail);
}

// criterion 6: certificates round trip through JSON and every tampering is
// caught
void criterion6() {
    bool ok = true;
    std::size_t certs = 0, tampers = 0;
    std::string detail;
    const std::array<Flavor, 8> flavors{Flavor::Clean,         Flavor::WeaklyClean,
                                        Flavor::NilClean,      Flavor::WeakNilClean,
                                        Flavor::StronglyClean, Flavor::StronglyWeaklyClean,
                                        Flavor::StronglyNilClean, Flavor::StronglyWeakNilClean};
    for (const char* spec :
         {"Z6", "Z15", "Z12", "T2(Z3)", "Morita(Z2,Z2,Z2,Z2,mul)", "Idealization(Z4, Z2)"}) {
        auto r = parse_ring_spec(spec);
        if (r->size() < 2) continue;
        for (Flavor f : flavors)
            for (ElemIdx x = 0; x < r->size(); ++x) {
                auto c = decompose(r, x, f);
                if (!c) continue;
                ++certs;
                auto back = DecompositionCertificate::from_json(c->to_json());
                if (!verify_certificate(back) || back.e != c->e || back.w != c->w ||
                    back.sign != c->sign) {
                    ok = false;
                    detail += std::string("round trip failed in ") + spec + "; ";
                }
                auto expect_invalid = [&](DecompositionCertificate bad) {
                    ++tampers;
                    if (verify_certificate(bad)) {
                        ok = false;
                        detail += std::string("tamper accepted in ") + spec + "; ";
                    }
                };
                auto bad_e = *c;
                bad_e.e = (bad_e.e + 1) % r->size(); // breaks the sum
                expect_invalid(bad_e);
                auto bad_w = *c;
                bad_w.w = r->add(bad_w.w, r->one());
                expect_invalid(bad_w);
                // sign flips on a weak certificate with 2e = 0 rebuild a
                // genuinely valid decomposition, so only the detectable
                // flips count as tampering
                if (!(flavor_is_weak(f) && r->add(c->e, c->e) == r->zero())) {
                    auto bad_s = *c;
                    bad_s.sign = -bad_s.sign;
                    if (flavor_is_weak(f)) bad_s.type_tag = bad_s.sign > 0 ? "I" : "II";
                    expect_invalid(bad_s);
                }
            }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%s%zu certificates round tripped, %zu tamperings rejected",
                  detail.c_str(), certs, tampers);
    report(6, ok && certs > 0, buf);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4_and_7(); // also runs 5 and 6 so the lines stay ordered
    return failures == 0 ? 0 : 1;
}
