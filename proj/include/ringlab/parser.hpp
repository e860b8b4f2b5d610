#pragma once

#include <string>
#include <string_view>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
    std::size_t position;
};

/// Optional side data for ring specs whose module actions are not the
/// canonical residue action. JSON shape:
///   {"modules": {"<module spec>": {"carrier": [d1,...],
///                                  "left_action": [[...]],
///                                  "right_action": [[...]]}}}
struct BuildConfig {
    std::string module_tables_json; // empty = canonical actions only

    static BuildConfig from_file(const std::string& path);
};

/// Parse a ring-spec string per the grammar:
///   ring   := "Z" INT | ring "x" ring | "T" INT "(" ring ")"
///           | "Quot(" ring ";" elems ")" | "Corner(" ring ";" elem ")"
///           | "Idealization(" ring "," module ")"
///           | "Morita(" ring "," ring "," module "," module ["," pairing] ")"
///   module := "Z" INT { "x" "Z" INT }
///   pairing := "zero" | "mul"
/// Whitespace-insensitive. Throws ParseError with position on syntax errors
/// and ValidationError on semantic ones (non-idempotent corner element,
/// non-commutative idealization base, module axiom failure).
RingPtr parse_ring_spec(std::string_view text, const BuildConfig& config = {});

} // namespace ringlab
