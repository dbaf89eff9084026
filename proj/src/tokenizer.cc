#include "ngspell/tokenizer.h"

#include <algorithm>

#include "ngspell/text.h"

namespace ngspell {
namespace {

bool is_separator(char32_t cp)
{
    // ASCII hyphen plus the Unicode hyphen and dash block
    return text::is_space(cp) || cp == '-' || (cp >= 0x2010 && cp <= 0x2015);
}

bool is_sentence_end(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

void finish_token(std::string_view src, Token& tok)
{
    tok.surface.assign(src.substr(tok.span.begin, tok.span.size()));

    // walk code points, remembering the first and last alphanumeric
    std::size_t pos = tok.span.begin;
    std::size_t core_begin = std::string_view::npos, core_end = tok.span.begin;
    while (pos < tok.span.end) {
        std::size_t at = pos;
        char32_t cp = text::next_code_point(src, pos);
        if (text::is_alnum(cp)) {
            if (core_begin == std::string_view::npos)
                core_begin = at;
            core_end = pos;
        }
    }
    if (core_begin == std::string_view::npos) {
        // pure punctuation
        tok.core = {tok.span.begin, tok.span.begin};
    } else {
        tok.core = {core_begin, core_end};
    }

    for (pos = tok.core.end; pos < tok.span.end;)
        if (is_sentence_end(text::next_code_point(src, pos)))
            tok.ends_sentence = true;
    if (tok.core.size() == 0)
        return;

    std::string folded;
    std::size_t letters = 0;
    for (pos = tok.core.begin; pos < tok.core.end;) {
        char32_t cp = text::next_code_point(src, pos);
        if (!text::is_letter(cp))
            return;
        text::append_utf8(folded, text::to_lower(cp));
        ++letters;
    }
    tok.normalized = std::move(folded);
    tok.checkable = letters >= 2;
}

} // namespace

TokenizedText tokenize(std::string_view text)
{
    TokenizedText out;
    out.source.assign(text);
    std::string_view src = out.source;

    std::size_t pos = 0;
    bool in_token = false;
    Token cur;
    while (pos < src.size()) {
        std::size_t at = pos;
        char32_t cp = text::next_code_point(src, pos);
        if (is_separator(cp)) {
            if (in_token) {
                cur.span.end = at;
                finish_token(src, cur);
                cur.index = out.tokens.size();
                out.tokens.push_back(std::move(cur));
                cur = Token{};
                in_token = false;
            }
        } else if (!in_token) {
            in_token = true;
            cur.span.begin = at;
        }
    }
    if (in_token) {
        cur.span.end = src.size();
        finish_token(src, cur);
        cur.index = out.tokens.size();
        out.tokens.push_back(std::move(cur));
    }
    return out;
}

std::vector<std::string> context_before(const TokenizedText& t, std::size_t index, std::size_t max_words)
{
    std::vector<std::string> ctx;
    std::size_t j = std::min(index, t.tokens.size());
    while (j > 0 && ctx.size() < max_words) {
        const Token& prev = t.tokens[j - 1];
        if (!prev.is_word() || prev.ends_sentence)
            break;
        ctx.push_back(prev.normalized);
        --j;
    }
    std::reverse(ctx.begin(), ctx.end());
    return ctx;
}

std::string reconstruct(const TokenizedText& t)
{
    std::string out;
    out.reserve(t.source.size());
    std::size_t prev = 0;
    for (const auto& tok : t.tokens) {
        out.append(t.source, prev, tok.span.begin - prev);
        out += tok.surface;
        prev = tok.span.end;
    }
    out.append(t.source, prev, std::string::npos);
    return out;
}

} // namespace ngspell
