#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.h"
#include "ngspell/bigram.h"
#include "ngspell/errors.h"
#include "ngspell/ngram_index.h"

using namespace ngspell;
using ngspell::testing::example_fixture;

namespace {

LetterBigram bg(const char* s)
{
    LetterBigram b;
    REQUIRE(LetterBigram::parse(s, b));
    return b;
}

std::set<std::string> as_set(const std::vector<std::string>& v)
{
    return {v.begin(), v.end()};
}

NgramIndex load_text(const std::string& s)
{
    std::istringstream in(s);
    return NgramIndex::load(in);
}

std::size_t parse_error_line(const std::string& s)
{
    try {
        load_text(s);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("contains_unigram")
{
    const auto ix = example_fixture();
    CHECK(ix.contains_unigram("model"));
    CHECK_FALSE(ix.contains_unigram("modil"));
    CHECK_FALSE(ix.contains_unigram(""));
}

TEST_CASE("ngram_count: stored, absent and arity")
{
    const auto ix = example_fixture();
    CHECK(ix.ngram_count({"also", "work", "with", "plastic", "model"}) == 17);
    CHECK(ix.ngram_count({"also", "work", "with", "plastic", "radian"}) == 0);
    CHECK(ix.ngram_count({"model"}) == 50);
    CHECK(ix.ngram_count({"nothere"}) == 0);
    CHECK(ix.ngram_count({"plastic", "model"}) == 19);
    CHECK_THROWS_AS(ix.ngram_count({"a", "b", "c", "d", "e", "f"}), ArityError);
    CHECK_THROWS_AS(ix.ngram_count(std::span<const std::string>()), ArityError);
}

TEST_CASE("postings_for_bigram")
{
    NgramIndex::Builder b;
    for (auto w : {"mold", "modal", "model", "mom", "mother", "mole", "rode", "triode", "encode", "mode"})
        b.add({w}, 1);
    const auto ix = std::move(b).build();
    CHECK(as_set(ix.postings_for_bigram(bg("mo"))) ==
          std::set<std::string>{"mold", "modal", "model", "mom", "mother", "mole", "mode"});
    CHECK(as_set(ix.postings_for_bigram(bg("od"))) ==
          std::set<std::string>{"modal", "model", "mode", "rode", "triode", "encode"});
    CHECK(ix.postings_for_bigram(bg("zq")).empty());
}

TEST_CASE("letter_bigrams")
{
    auto strs = [](std::string_view w) {
        std::vector<std::string> out;
        for (const auto& b : letter_bigrams(w))
            out.push_back(b.str());
        return out;
    };
    CHECK(strs("modil") == std::vector<std::string>{"mo", "od", "di", "il"});
    CHECK(strs("a").empty());
    CHECK(strs("aaa") == std::vector<std::string>{"aa"});
    CHECK(strs("\xC3\xA9t\xC3\xA9") == std::vector<std::string>{"\xC3\xA9t", "t\xC3\xA9"});
}

TEST_CASE("postings invariant holds for every lexicon word and bigram")
{
    std::mt19937_64 rng(5);
    const auto lexicon = ngspell::testing::random_lexicon(rng, 400);
    const auto ix = ngspell::testing::lexicon_index(lexicon, rng);
    std::map<std::uint64_t, std::set<std::string>> expect;
    for (const auto& w : lexicon)
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            expect[LetterBigram{static_cast<char32_t>(w[i]), static_cast<char32_t>(w[i + 1])}.key()].insert(w);
    for (char a = 'a'; a <= 'h'; ++a)
        for (char c = 'a'; c <= 'h'; ++c) {
            LetterBigram b{static_cast<char32_t>(a), static_cast<char32_t>(c)};
            auto got = ix.postings(b);
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
            CHECK(as_set(ix.postings_for_bigram(b)) == expect[b.key()]);
        }
}

TEST_CASE("save and load round-trip")
{
    const auto ix = example_fixture();
    std::ostringstream out;
    ix.save(out);
    const std::string text = out.str();
    CHECK(text.rfind("NGIDX v1\n[1]\n", 0) == 0);
    const auto back = load_text(text);
    std::ostringstream again;
    back.save(again);
    CHECK(again.str() == text);
    for (std::size_t k = 1; k <= kMaxOrder; ++k)
        CHECK(back.entries(k) == ix.entries(k));
    CHECK(back.ngram_count({"also", "work", "with", "plastic", "model"}) == 17);
    CHECK(back.ngram_count({"plastic", "model", "kits"}) == 4);
    CHECK(as_set(back.postings_for_bigram(bg("mo"))) == as_set(ix.postings_for_bigram(bg("mo"))));
}

TEST_CASE("load: version gate")
{
    CHECK_THROWS_AS(load_text("NGIDX v2\n[1]\n1\tab\n[2]\n[3]\n[4]\n[5]\n"), UnsupportedVersionError);
    CHECK(parse_error_line("NGIDX v2\n") == 1);
    CHECK(parse_error_line("hello\n") == 1);
}

TEST_CASE("load: malformed lines name their line number")
{
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tab\nabc\tword\n[2]\n[3]\n[4]\n[5]\n") == 4);
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tab\n2\tcd\n[2]\n1\tab\n[3]\n[4]\n[5]\n") == 6);
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tab\n[2]\n1\tab cd\n[3]\n[4]\n[5]\n") == 5);
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tab\n[2]\n[3]\n[4]\n") == 7);
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tab\n3\tab\n[2]\n[3]\n[4]\n[5]\n") == 4);
    CHECK(parse_error_line("NGIDX v1\n[1]\n0\tab\n[2]\n[3]\n[4]\n[5]\n") == 3);
    CHECK(parse_error_line("NGIDX v1\n[1]\n3\tAB\n[2]\n[3]\n[4]\n[5]\n") == 3);
    CHECK(parse_error_line("NGIDX v1\n[2]\n[1]\n[3]\n[4]\n[5]\n") == 2);
    CHECK(parse_error_line("NGIDX v1\n[1]\n1\tab\n[2]\n[3]\n[4]\n[5]\n") == 0);
}

TEST_CASE("builder validates words and sums repeated adds")
{
    NgramIndex::Builder b;
    CHECK_THROWS_AS(b.add({"Upper"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add({"a1"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add({"a", "b", "c", "d", "e", "f"}, 1), ArityError);
    b.add({"ab"}, 2);
    b.add({"ab"}, 3);
    b.add({"ab", "cd"}, 1);
    CHECK_THROWS(NgramIndex::Builder(b).build());
    b.add({"cd"}, 1);
    const auto ix = std::move(b).build();
    CHECK(ix.ngram_count({"ab"}) == 5);
    CHECK(ix.ngram_count({"ab", "cd"}) == 1);
}
