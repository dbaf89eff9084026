#include "ngspell/text.h"

#include <clocale>
#include <cwctype>
#include <locale.h>
#include <wctype.h>

namespace ngspell::text {
namespace {

constexpr char32_t replacement = 0xFFFD;

// glibc's C.UTF-8 ctype tables cover all of Unicode; fall back to ASCII rules
// when the locale is not installed.
locale_t ctype_locale()
{
    static const locale_t loc = [] {
        locale_t l = newlocale(LC_CTYPE_MASK, "C.UTF-8", locale_t(0));
        if (!l)
            l = newlocale(LC_CTYPE_MASK, "C.utf8", locale_t(0));
        return l;
    }();
    return loc;
}

bool ascii_letter(char32_t cp) { return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z'); }

} // namespace

char32_t next_code_point(std::string_view s, std::size_t& pos)
{
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        ++pos;
        return replacement;
    }
    if (pos + extra >= s.size()) {
        ++pos;
        return replacement;
    }
    for (int i = 1; i <= extra; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return replacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += extra + 1;
    return cp;
}

std::u32string decode(std::string_view utf8)
{
    std::u32string out;
    out.reserve(utf8.size());
    std::size_t pos = 0;
    while (pos < utf8.size())
        out.push_back(next_code_point(utf8, pos));
    return out;
}

void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(std::u32string_view cps)
{
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps)
        append_utf8(out, cp);
    return out;
}

bool is_letter(char32_t cp)
{
    if (cp < 0x80)
        return ascii_letter(cp);
    if (cp == replacement)
        return false;
    auto loc = ctype_locale();
    return loc && iswalpha_l(static_cast<wint_t>(cp), loc);
}

bool is_alnum(char32_t cp)
{
    if (cp < 0x80)
        return ascii_letter(cp) || (cp >= '0' && cp <= '9');
    if (cp == replacement)
        return false;
    auto loc = ctype_locale();
    return loc && iswalnum_l(static_cast<wint_t>(cp), loc);
}

bool is_space(char32_t cp)
{
    if (cp < 0x80)
        return cp == ' ' || (cp >= '\t' && cp <= '\r');
    auto loc = ctype_locale();
    return cp == 0xA0 || (loc && iswspace_l(static_cast<wint_t>(cp), loc));
}

bool is_upper(char32_t cp)
{
    if (cp < 0x80)
        return cp >= 'A' && cp <= 'Z';
    auto loc = ctype_locale();
    return loc && iswupper_l(static_cast<wint_t>(cp), loc);
}

char32_t to_lower(char32_t cp)
{
    if (cp < 0x80)
        return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
    auto loc = ctype_locale();
    return loc ? static_cast<char32_t>(towlower_l(static_cast<wint_t>(cp), loc)) : cp;
}

char32_t to_upper(char32_t cp)
{
    if (cp < 0x80)
        return (cp >= 'a' && cp <= 'z') ? cp - 32 : cp;
    auto loc = ctype_locale();
    return loc ? static_cast<char32_t>(towupper_l(static_cast<wint_t>(cp), loc)) : cp;
}

std::string fold(std::string_view word)
{
    std::string out;
    out.reserve(word.size());
    std::size_t pos = 0;
    while (pos < word.size())
        append_utf8(out, to_lower(next_code_point(word, pos)));
    return out;
}

std::string match_initial_case(std::string_view word, std::string_view like)
{
    if (like.empty() || word.empty())
        return std::string(word);
    std::size_t pos = 0;
    if (!is_upper(next_code_point(like, pos)))
        return std::string(word);
    pos = 0;
    std::string out;
    append_utf8(out, to_upper(next_code_point(word, pos)));
    out.append(word.substr(pos));
    return out;
}

std::size_t length(std::string_view utf8)
{
    std::size_t n = 0;
    for (char c : utf8)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80)
            ++n;
    return n;
}

} // namespace ngspell::text
