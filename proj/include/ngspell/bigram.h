#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ngspell {

/// An adjacent pair of letters inside a normalized word.
struct LetterBigram {
    char32_t first = 0;
    char32_t second = 0;

    auto operator<=>(const LetterBigram&) const = default;

    std::uint64_t key() const noexcept
    {
        return (static_cast<std::uint64_t>(first) << 32) | static_cast<std::uint64_t>(second);
    }
    std::string str() const;

    /// Parses a two-code-point UTF-8 string; returns false on any other shape.
    static bool parse(std::string_view s, LetterBigram& out);
};

/// Distinct adjacent pairs of `word` in first-occurrence order. Empty when the
/// word is shorter than two code points.
std::vector<LetterBigram> letter_bigrams(std::string_view word);

} // namespace ngspell
