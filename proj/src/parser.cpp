#include "ringlab/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringlab/ideal.hpp"

namespace ringlab {

BuildConfig BuildConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    BuildConfig cfg;
    cfg.module_tables_json = buf.str();
    return cfg;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const BuildConfig& config) : config_(config) {
        // whitespace-insensitive grammar; positions refer to the stripped text
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
        if (!config_.module_tables_json.empty())
            tables_ = nlohmann::json::parse(config_.module_tables_json);
    }

    RingPtr parse() {
        RingPtr r = ring();
        if (pos_ != text_.size()) err("trailing input");
        return r;
    }

private:
    [[noreturn]] void err(const std::string& msg) const { throw ParseError(pos_, msg); }

    bool eat(std::string_view lit) {
        if (text_.compare(pos_, lit.size(), lit) == 0) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            err(std::string("expected '") + c + "'");
        ++pos_;
    }

    unsigned integer() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            err("expected integer");
        unsigned v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) err("integer too large");
            ++pos_;
        }
        return v;
    }

    RingPtr ring() {
        std::vector<RingPtr> factors{primary()};
        // "x" binds products; module specs consume their own "x" so a ring
        // factor never starts mid-module.
        while (pos_ < text_.size() && text_[pos_] == 'x') {
            ++pos_;
            factors.push_back(primary());
        }
        return factors.size() == 1 ? factors[0] : direct_product(std::move(factors));
    }

    RingPtr primary() {
        if (eat("Quot(")) {
            RingPtr base = ring();
            expect(';');
            auto gens = element_list(base, ')');
            expect(')');
            Ideal i = ideal_generated_by(base, gens);
            return quotient_ring(base, i).ring;
        }
        if (eat("Corner(")) {
            RingPtr base = ring();
            expect(';');
            auto elems = element_list(base, ')');
            expect(')');
            if (elems.size() != 1) err("Corner takes exactly one element");
            return corner_ring(base, elems[0]);
        }
        if (eat("Idealization(")) {
            RingPtr base = ring();
            expect(',');
            ModulePtr m = module(base, nullptr);
            expect(')');
            return idealization(base, m);
        }
        if (eat("Morita(")) {
            RingPtr a = ring();
            expect(',');
            RingPtr b = ring();
            expect(',');
            MoritaSpec spec;
            spec.A = a;
            spec.B = b;
            spec.M = module(a, b);
            expect(',');
            spec.N = module(b, a);
            spec.kind = PairingKind::Zero;
            if (eat(",")) {
                if (eat("zero"))
                    spec.kind = PairingKind::Zero;
                else if (eat("mul"))
                    spec.kind = PairingKind::Mul;
                else
                    err("expected pairing 'zero' or 'mul'");
            }
            expect(')');
            return morita_ring(std::move(spec));
        }
        if (pos_ < text_.size() && text_[pos_] == 'T') {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                unsigned k = integer();
                expect('(');
                RingPtr base = ring();
                expect(')');
                return triangular_ring(k, base);
            }
            pos_ = save;
        }
        if (eat("Z")) {
            unsigned n = integer();
            if (n < 1) err("Z_n requires n >= 1");
            return make_zn(n);
        }
        err("expected ring spec");
    }

    // module := "Z" INT { "x" "Z" INT }, read greedily; explicit tables in
    // the config override the canonical residue action.
    ModulePtr module(const RingPtr& left, const RingPtr& right) {
        std::size_t start = pos_;
        std::vector<unsigned> factors;
        do {
            if (!eat("Z")) err("expected module spec");
            factors.push_back(integer());
        } while (pos_ < text_.size() && text_[pos_] == 'x' && (++pos_, true));
        std::string spec = text_.substr(start, pos_ - start);
        if (!tables_.is_null() && tables_.contains("modules") &&
            tables_["modules"].contains(spec)) {
            const auto& j = tables_["modules"][spec];
            std::vector<unsigned> carrier = j.at("carrier").get<std::vector<unsigned>>();
            auto left_t = j.value("left_action", std::vector<std::vector<ElemIdx>>{});
            auto right_t = j.value("right_action", std::vector<std::vector<ElemIdx>>{});
            RingPtr l = left_t.empty() ? nullptr : left;
            RingPtr r = right_t.empty() ? nullptr : right;
            return Bimodule::from_tables(std::move(carrier), std::move(l), std::move(r),
                                         std::move(left_t), std::move(right_t));
        }
        return Bimodule::canonical(std::move(factors), left, right);
    }

    // Comma-separated element displays; commas nested in ()/[] belong to a
    // single literal.
    std::vector<ElemIdx> element_list(const RingPtr& r, char terminator) {
        std::vector<ElemIdx> out;
        std::string cur;
        int depth = 0;
        auto flush = [&]() {
            if (cur.empty()) err("empty element literal");
            auto e = r->parse_element(cur);
            if (!e)
                throw ValidationError("'" + cur + "' is not an element of " + r->spec_string());
            out.push_back(*e);
            cur.clear();
        };
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (depth == 0 && c == terminator) {
                if (!cur.empty() || !out.empty()) flush();
                return out;
            }
            if (depth == 0 && c == ',') {
                flush();
                ++pos_;
                continue;
            }
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            cur.push_back(c);
            ++pos_;
        }
        err("unterminated element list");
    }

    std::string text_;
    std::size_t pos_ = 0;
    const BuildConfig& config_;
    nlohmann::json tables_;
};

} // namespace

RingPtr parse_ring_spec(std::string_view text, const BuildConfig& config) {
    return Parser(text, config).parse();
}

} // namespace ringlab
