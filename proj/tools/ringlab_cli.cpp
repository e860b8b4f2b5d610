// Command line front end: classification, ideal listings, decomposition
// certificates and the statement harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/cleanness.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/parser.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

// Splits on commas outside (), [] nesting, so product/matrix displays work.
std::vector<std::string> split_elements(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ElemIdx parse_elem(const RingPtr& ring, const std::string& text) {
    auto e = ring->parse_element(text);
    if (!e)
        throw ValidationError("'" + text + "' is not an element of " + ring->spec_string());
    return *e;
}

Flavor parse_flavor(const std::string& name) {
    auto f = flavor_from_name(name);
    if (!f) {
        std::string known;
        for (const char* n :
             {"clean", "weakly_clean", "nil_clean", "weak_nil_clean", "strongly_clean",
              "strongly_weakly_clean", "strongly_nil_clean", "strongly_weak_nil_clean"})
            known += std::string(known.empty() ? "" : ", ") + n;
        throw ValidationError("unknown flavor '" + name + "' (known: " + known + ")");
    }
    return *f;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CorpusConfig load_corpus_config(const std::string& spec) {
    if (spec == "default") return CorpusConfig::defaults();
    return CorpusConfig::from_json(read_input(spec));
}

int emit_classification(const RingPtr& ring, const std::string& ideal_desc,
                        const IdealClassification& cls, Flavor flavor, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["ring"] = ring->spec_string();
        if (!ideal_desc.empty()) j["ideal"] = ideal_desc;
        j["flavor"] = flavor_name(flavor);
        j["restricted"] = cls.restricted;
        j["holds"] = cls.holds;
        if (!cls.holds && cls.failure_witness)
            j["failure_witness"] = ring->display(*cls.failure_witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ring->spec_string();
        if (!ideal_desc.empty()) std::cout << "  ideal <" << ideal_desc << ">";
        std::cout << "  " << flavor_name(flavor) << (cls.restricted ? " (restricted)" : "") << ": "
                  << (cls.holds ? "yes" : "no");
        if (!cls.holds && cls.failure_witness)
            std::cout << "  (no decomposition for " << ring->display(*cls.failure_witness) << ")";
        std::cout << "\n";
    }
    return cls.holds ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring cleanness toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global --cap/--format may follow the subcommand

    std::string ring_spec, gens_text, flavor_name_opt = "weak_nil_clean", element_text;
    std::string statement_id, corpus_spec = "default", format = "table", cert_path = "-";
    bool restricted = false, no_timing = false;
    std::size_t cap = default_size_cap();
    app.add_option("--cap", cap, "ring size cap");
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* cr = app.add_subcommand("classify-ring", "decide a cleanness flavor for a whole ring");
    cr->add_option("--ring", ring_spec, "ring expression")->required();
    cr->add_option("--flavor", flavor_name_opt, "cleanness flavor");

    auto* ci = app.add_subcommand("classify-ideal", "decide a cleanness flavor for an ideal");
    ci->add_option("--ring", ring_spec, "ring expression")->required();
    ci->add_option("--gens", gens_text, "ideal generators, comma separated")->required();
    ci->add_option("--flavor", flavor_name_opt, "cleanness flavor");
    ci->add_flag("--restricted", restricted, "require witnesses inside the ideal");

    auto* il = app.add_subcommand("ideals", "list every two-sided ideal");
    il->add_option("--ring", ring_spec, "ring expression")->required();

    auto* ce = app.add_subcommand("certify", "emit a decomposition certificate");
    ce->add_option("--ring", ring_spec, "ring expression")->required();
    ce->add_option("--element", element_text, "element to decompose")->required();
    ce->add_option("--flavor", flavor_name_opt, "cleanness flavor");
    ce->add_option("--gens", gens_text, "restrict witnesses to this ideal");

    auto* vc = app.add_subcommand("verify-cert", "check a certificate");
    vc->add_option("--cert", cert_path, "certificate file, - for stdin");

    auto* th = app.add_subcommand("theorems", "run statement checkers over a corpus");
    th->add_option("--statement", statement_id, "single statement id (default: all)");
    th->add_option("--corpus", corpus_spec, "'default' or a corpus config JSON file");
    th->add_flag("--no-timing", no_timing, "omit wall times from JSON output");

    auto* co = app.add_subcommand("corpus-info", "list the corpus rings");
    co->add_option("--corpus", corpus_spec, "'default' or a corpus config JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitTrue : kExitUsage;
    }

    try {
        set_default_size_cap(cap);

        if (cr->parsed()) {
            auto ring = parse_ring_spec(ring_spec);
            Flavor f = parse_flavor(flavor_name_opt);
            return emit_classification(ring, "", classify_ring(ring, f), f, format);
        }

        if (ci->parsed()) {
            auto ring = parse_ring_spec(ring_spec);
            Flavor f = parse_flavor(flavor_name_opt);
            std::vector<ElemIdx> gens;
            for (const auto& g : split_elements(gens_text)) gens.push_back(parse_elem(ring, g));
            Ideal i = ideal_generated_by(ring, gens);
            return emit_classification(ring, i.display_gens(), classify_ideal(i, f, restricted), f,
                                       format);
        }

        if (il->parsed()) {
            auto ring = parse_ring_spec(ring_spec);
            auto ideals = all_ideals(ring);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& i : ideals) {
                    nlohmann::json j;
                    j["generators"] = i.display_gens();
                    j["size"] = i.size();
                    nlohmann::json elems = nlohmann::json::array();
                    for (ElemIdx x : i.elements) elems.push_back(ring->display(x));
                    j["elements"] = std::move(elems);
                    arr.push_back(std::move(j));
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << ring->spec_string() << ": " << ideals.size() << " ideals\n";
                for (const auto& i : ideals) {
                    std::cout << "  <" << i.display_gens() << ">  size " << i.size() << "  {";
                    for (std::size_t k = 0; k < i.elements.size(); ++k)
                        std::cout << (k ? "," : "") << ring->display(i.elements[k]);
                    std::cout << "}\n";
                }
            }
            return kExitTrue;
        }

        if (ce->parsed()) {
            auto ring = parse_ring_spec(ring_spec);
            Flavor f = parse_flavor(flavor_name_opt);
            ElemIdx x = parse_elem(ring, element_text);
            std::optional<Ideal> restrict_ideal;
            if (!gens_text.empty()) {
                std::vector<ElemIdx> gens;
                for (const auto& g : split_elements(gens_text)) gens.push_back(parse_elem(ring, g));
                restrict_ideal = ideal_generated_by(ring, gens);
            }
            auto cert = decompose(ring, x, f, restrict_ideal ? &*restrict_ideal : nullptr);
            if (!cert) {
                std::cerr << "no " << flavor_name(f) << " decomposition for " << ring->display(x)
                          << " in " << ring->spec_string() << "\n";
                return kExitFalse;
            }
            std::cout << cert->to_json() << "\n";
            return kExitTrue;
        }

        if (vc->parsed()) {
            auto cert = DecompositionCertificate::from_json(read_input(cert_path));
            bool ok = verify_certificate(cert);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? kExitTrue : kExitFalse;
        }

        if (th->parsed()) {
            Corpus corpus = build_corpus(load_corpus_config(corpus_spec));
            std::vector<TheoremReport> reports;
            if (statement_id.empty())
                reports = run_all(corpus);
            else
                reports.push_back(run_statement(statement_id, corpus));
            if (format == "json")
                std::cout << reports_to_json(reports, !no_timing) << "\n";
            else
                std::cout << reports_to_table(reports);
            for (const auto& r : reports)
                if (!r.pass) return kExitFalse;
            return kExitTrue;
        }

        if (co->parsed()) {
            Corpus corpus = build_corpus(load_corpus_config(corpus_spec));
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& e : corpus)
                    arr.push_back({{"ring", e.ring->spec_string()},
                                   {"size", e.ring->size()},
                                   {"ideals", e.ideals.size()}});
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << corpus.size() << " rings\n";
                for (const auto& e : corpus)
                    std::cout << "  " << e.ring->spec_string() << "  size " << e.ring->size()
                              << "  ideals " << e.ideals.size() << "\n";
            }
            return kExitTrue;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
