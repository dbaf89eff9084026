#pragma once

#include <string>
#include <string_view>

namespace ngspell::text {

// UTF-8 helpers. Invalid byte sequences decode to U+FFFD, which is not a letter.

std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view cps);
void append_utf8(std::string& out, char32_t cp);

/// Decodes one code point starting at `pos` and advances `pos` past it.
char32_t next_code_point(std::string_view utf8, std::size_t& pos);

bool is_letter(char32_t cp);
bool is_alnum(char32_t cp);
bool is_space(char32_t cp);
bool is_upper(char32_t cp);
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

/// Case-folded copy of `word`.
std::string fold(std::string_view word);

/// `word` with its first letter uppercased when `like` starts with an uppercase letter.
std::string match_initial_case(std::string_view word, std::string_view like);

/// Number of code points.
std::size_t length(std::string_view utf8);

} // namespace ngspell::text
