#include "ngspell/bigram.h"

#include <algorithm>

#include "ngspell/text.h"

namespace ngspell {

std::string LetterBigram::str() const
{
    std::string out;
    text::append_utf8(out, first);
    text::append_utf8(out, second);
    return out;
}

bool LetterBigram::parse(std::string_view s, LetterBigram& out)
{
    auto cps = text::decode(s);
    if (cps.size() != 2)
        return false;
    out = {cps[0], cps[1]};
    return true;
}

std::vector<LetterBigram> letter_bigrams(std::string_view word)
{
    std::vector<LetterBigram> out;
    auto cps = text::decode(word);
    for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
        LetterBigram bg{cps[i], cps[i + 1]};
        if (std::find(out.begin(), out.end(), bg) == out.end())
            out.push_back(bg);
    }
    return out;
}

} // namespace ngspell
