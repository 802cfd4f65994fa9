// Instance file format: `#` comment lines, one `n <int>` header, then either
// `facet v1 v2 ...` lines or `interval lo hi rank` lines (never both).

#ifndef SORTIC_INSTANCE_HPP
#define SORTIC_INSTANCE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "sortic/complex.hpp"
#include "sortic/interval.hpp"

namespace sortic {

struct ParsedInstance {
    std::string id;
    SimplicialComplex delta;
    std::optional<IntervalComplexSpec> spec;  // set for interval-form files
};

// Throws ParseError with 1-based line/column on malformed input.
ParsedInstance parse_instance(std::string_view text, std::string id = "instance");

std::string instance_to_text(const ParsedInstance& inst);

} // namespace sortic

#endif
