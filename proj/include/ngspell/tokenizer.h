#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ngspell {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0; // exclusive byte offset
    std::size_t size() const noexcept { return end - begin; }
    bool operator==(const Span&) const = default;
};

/// One whitespace/hyphen-delimited piece of the source text.
///
/// `core` is the surface with leading and trailing punctuation removed. When the
/// core consists of letters only, `normalized` is its case fold; otherwise
/// `normalized` is empty (numbers, "v2.0", "don't").
struct Token {
    std::string surface;
    std::string normalized;
    Span span;      // of the surface in the source
    Span core;      // of the core in the source
    std::size_t index = 0;
    bool checkable = false;     // word of two or more letters
    bool ends_sentence = false; // trailing punctuation contains . ! or ?

    /// Letters-only token of any length; these take part in n-gram contexts.
    bool is_word() const noexcept { return !normalized.empty(); }
};

struct TokenizedText {
    std::string source;
    std::vector<Token> tokens;

    std::size_t size() const noexcept { return tokens.size(); }
    const Token& operator[](std::size_t i) const { return tokens[i]; }
};

/// Splits on whitespace and hyphen/dash characters. Pure; safe to call concurrently.
TokenizedText tokenize(std::string_view text);

/// Normalized forms of up to `max_words` tokens before `index`, oldest first.
/// Stops at the start of the text, at a token that ends a sentence and at a
/// token that is not a word.
std::vector<std::string> context_before(const TokenizedText& t, std::size_t index, std::size_t max_words = 4);

/// Rebuilds the source from token surfaces and the gaps between their spans.
std::string reconstruct(const TokenizedText& t);

} // namespace ngspell
