#pragma once

#include <iosfwd>
#include <string>

#include "hfam/family.hpp"

namespace hfam {

struct ParseOptions {
    bool strict = false;  // strict: duplicate set lines are an error
};

/// Family text format: an `n=<int>` header line, then one set per non-empty
/// line, either `{e1,e2,...}` with strictly ascending elements (`{}` for the
/// empty set) or a bare lowercase hex word. The two line styles may be mixed.
SetFamily read_family(std::istream& in, const ParseOptions& opts = {});
SetFamily parse_family(const std::string& text, const ParseOptions& opts = {});

void write_family(std::ostream& out, const SetFamily& family, bool hex = false);
std::string family_to_text(const SetFamily& family, bool hex = false);

/// One-line encoding used in reports: "n=<int>;<hex>,<hex>,...".
std::string family_to_compact(const SetFamily& family);
SetFamily family_from_compact(const std::string& text);

}  // namespace hfam
