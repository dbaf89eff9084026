#include "ngspell/baselines.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ngspell/text.h"

namespace ngspell::baselines {
namespace {

char soundex_digit(char lower)
{
    switch (lower) {
    case 'b': case 'f': case 'p': case 'v':
        return '1';
    case 'c': case 'g': case 'j': case 'k': case 'q': case 's': case 'x': case 'z':
        return '2';
    case 'd': case 't':
        return '3';
    case 'l':
        return '4';
    case 'm': case 'n':
        return '5';
    case 'r':
        return '6';
    default: // a e h i o u y w
        return '0';
    }
}

bool ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

} // namespace

std::string soundex(std::string_view word)
{
    if (word.empty())
        throw std::invalid_argument("soundex of an empty string");
    if (!std::all_of(word.begin(), word.end(), ascii_letter))
        throw std::invalid_argument("soundex accepts letters a-z only: '" + std::string(word) + "'");

    std::string digits;
    for (char c : word.substr(1)) {
        char d = soundex_digit(static_cast<char>(c | 0x20));
        if (digits.empty() || digits.back() != d)
            digits.push_back(d);
    }
    std::erase(digits, '0');
    digits.resize(3, '0');

    std::string code(1, static_cast<char>(word[0] & ~0x20));
    return code + digits;
}

std::size_t levenshtein(std::string_view a_utf8, std::string_view b_utf8)
{
    const auto a = text::decode(a_utf8), b = text::decode(b_utf8);
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::size_t hamming(std::string_view a_utf8, std::string_view b_utf8)
{
    const auto a = text::decode(a_utf8), b = text::decode(b_utf8);
    if (a.size() != b.size())
        throw std::invalid_argument("hamming distance needs strings of equal length (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

LcsResult lcs(std::string_view a_utf8, std::string_view b_utf8)
{
    const auto a = text::decode(a_utf8), b = text::decode(b_utf8);
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> table((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return table[i * (m + 1) + j]; };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            at(i, j) = a[i - 1] == b[j - 1] ? at(i - 1, j - 1) + 1 : std::max(at(i - 1, j), at(i, j - 1));

    std::u32string rev;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            rev.push_back(a[i - 1]);
            --i;
            --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(rev.begin(), rev.end());
    return {at(n, m), text::encode(rev)};
}

} // namespace ngspell::baselines
