#pragma once

#include <string_view>
#include <vector>

#include "hwfuzz/ast.hpp"

namespace hwfuzz {

// Parses the supported Verilog subset. Total: any input either yields
// modules or throws ParseError (syntax | unsupported-construct |
// duplicate-name | unresolved-identifier) with line/column and, for
// syntax errors, the expected-token set.
std::vector<SourceModule> parse(std::string_view source_text);

}  // namespace hwfuzz
