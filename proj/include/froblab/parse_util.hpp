#pragma once

#include <string>
#include <vector>

#include "froblab/budget.hpp"

namespace froblab {

/// Splits at `sep` occurrences that are not nested inside (), [] or {}.
std::vector<std::string> split_top_level(const std::string& s, char sep);

/// Whole-string integer parse; throws SpecError mentioning `context`.
int parse_int_strict(const std::string& s, const std::string& context);

}  // namespace froblab
