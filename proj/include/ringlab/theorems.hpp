#pragma once

#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Ring corpus over which statement checkers quantify.
struct CorpusConfig {
    unsigned zn_max = 50;             // Z_1 .. Z_zn_max
    unsigned product_max = 12;        // all pairs Z_a x Z_b, a,b <= product_max
    unsigned triangular_zn_max = 6;   // T2(Z_n), n <= triangular_zn_max
    unsigned idealization_n_max = 12; // Idealization(Z_n, Z_d), d | n
    std::vector<unsigned> morita_bases{2, 3, 4}; // zero and mul pairings, A=B=M=N=Z_k
    std::size_t ring_size_cap = 4096;

    std::string to_json() const;
    static CorpusConfig from_json(const std::string& text);
    static CorpusConfig defaults() { return {}; }
};

struct CorpusEntry {
    RingPtr ring;
    std::vector<Ideal> ideals; // full two-sided ideal lattice
};

using Corpus = std::vector<CorpusEntry>;

/// Deterministic ring list with precomputed element sets and ideal lattices.
Corpus build_corpus(const CorpusConfig& config);

struct Counterexample {
    std::string ring;
    std::string ideal;   // generator/element list, empty when n/a
    std::string element; // empty when n/a
    std::string expected;
    std::string actual;
};

struct TheoremReport {
    std::string id;
    std::string description;
    std::size_t instances = 0;
    std::size_t vacuous = 0;
    bool pass = true; // pass <=> zero counterexamples
    std::vector<Counterexample> counterexamples;
    std::string notes;
    double wall_ms = 0.0;

    std::string to_json(bool with_timing = true) const;
};

/// Catalog ids in report order.
const std::vector<std::string>& statement_ids();
std::string statement_description(const std::string& id);

/// Evaluates one statement as a universally quantified property over
/// corpus-built instances. Throws std::invalid_argument on unknown ids.
TheoremReport run_statement(const std::string& id, const Corpus& corpus);
TheoremReport run_statement(const std::string& id, const CorpusConfig& config);

/// Runs every catalog statement (in parallel), reports ordered by id.
/// Per-statement errors become failed reports; the batch never aborts.
std::vector<TheoremReport> run_all(const Corpus& corpus);
std::vector<TheoremReport> run_all(const CorpusConfig& config);

std::string reports_to_json(const std::vector<TheoremReport>& reports, bool with_timing = true);
std::string reports_to_table(const std::vector<TheoremReport>& reports);

} // namespace ringlab
