#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Classical string-similarity measures. All operate on code points and are pure.

namespace ngspell::baselines {

/// Letter followed by three digits, e.g. "R163".
std::string soundex(std::string_view word);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Throws std::invalid_argument when the lengths differ.
std::size_t hamming(std::string_view a, std::string_view b);

struct LcsResult {
    std::size_t length = 0;
    std::string witness; // one longest common subsequence
};

/// Longest common subsequence by dynamic programming. The traceback prefers the
/// diagonal move, then moving up (dropping a character of `a`), so the witness
/// is deterministic.
LcsResult lcs(std::string_view a, std::string_view b);

} // namespace ngspell::baselines
