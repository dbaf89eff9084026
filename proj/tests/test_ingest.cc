#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.h"
#include "ngspell/corpus_ingest.h"
#include "ngspell/errors.h"
#include "ngspell/tokenizer.h"

using namespace ngspell;

namespace {

NgramIndex from_text(const std::string& text, IngestOptions opts)
{
    std::vector<std::string> docs{text};
    return build_index_from_texts(docs, opts);
}

std::string saved(const NgramIndex& ix)
{
    std::ostringstream out;
    ix.save(out);
    return out.str();
}

} // namespace

TEST_CASE("ingest: hand-counted corpus")
{
    IngestOptions opts;
    opts.max_order = 2;
    const auto ix = from_text("the cat sat . the cat ran .", opts);
    CHECK(ix.lexicon_size() == 4);
    CHECK(ix.ngram_count({"the"}) == 2);
    CHECK(ix.ngram_count({"cat"}) == 2);
    CHECK(ix.ngram_count({"sat"}) == 1);
    CHECK(ix.ngram_count({"ran"}) == 1);
    CHECK(ix.entries(2) == 3);
    CHECK(ix.ngram_count({"the", "cat"}) == 2);
    CHECK(ix.ngram_count({"cat", "sat"}) == 1);
    CHECK(ix.ngram_count({"cat", "ran"}) == 1);
    CHECK(ix.entries(3) == 0);

    opts.min_count[1] = 2;
    const auto pruned = from_text("the cat sat . the cat ran .", opts);
    CHECK(pruned.entries(2) == 1);
    CHECK(pruned.ngram_count({"the", "cat"}) == 2);
}

TEST_CASE("ingest: sentence split")
{
    IngestOptions opts;
    const auto split = from_text("one two. three four", opts);
    CHECK(split.ngram_count({"two", "three"}) == 0);
    opts.sentence_split = false;
    const auto joined = from_text("one two. three four", opts);
    CHECK(joined.ngram_count({"two", "three"}) == 1);
    CHECK(joined.ngram_count({"one", "two", "three", "four"}) == 1);
}

TEST_CASE("ingest: non-words break n-grams and are not counted")
{
    const auto ix = from_text("red 42 fox don't run", {});
    CHECK(ix.lexicon_size() == 3);
    CHECK(ix.ngram_count({"red", "fox"}) == 0);
    CHECK(ix.entries(2) == 0);
}

TEST_CASE("ingest: unigram total equals letter-only word tokens")
{
    std::mt19937_64 rng(3);
    const std::vector<std::string> pieces = {"a", "I", "cat", "Cat.", "dog,", "x2", "end!", "--", "the"};
    std::string text;
    for (int i = 0; i < 2000; ++i)
        text += pieces[rng() % pieces.size()] + ' ';
    const auto ix = from_text(text, {});
    Count total = 0;
    ix.for_each(1, [&](auto, Count c) { total += c; });
    std::size_t words = 0;
    for (const auto& t : tokenize(text).tokens)
        words += t.is_word();
    CHECK(total == words);
}

TEST_CASE("ingest: deterministic and independent of workers")
{
    std::mt19937_64 rng(9);
    std::vector<std::string> docs;
    for (int d = 0; d < 5; ++d) {
        std::string text;
        for (int i = 0; i < 3000; ++i) {
            text += ngspell::testing::random_word(rng, 1, 4, 'e');
            text += (rng() % 13 == 0) ? ". " : " ";
        }
        docs.push_back(text);
    }
    IngestOptions opts;
    const std::string ref = saved(build_index_from_texts(docs, opts));
    CHECK(ref == saved(build_index_from_texts(docs, opts)));
    for (std::size_t p : {2u, 3u, 8u}) {
        opts.workers = p;
        CHECK(saved(build_index_from_texts(docs, opts)) == ref);
    }
}

TEST_CASE("ingest: errors")
{
    CHECK_THROWS_AS(build_index(std::span<const std::filesystem::path>(), {}), EmptyCorpusError);
    CHECK_THROWS_AS(from_text("42 ... !!", {}), EmptyCorpusError);
    std::vector<std::filesystem::path> missing{"/nonexistent/corpus.txt"};
    CHECK_THROWS_AS(build_index(missing, {}), IoError);
    IngestOptions bad;
    bad.max_order = 6;
    CHECK_THROWS(from_text("a b", bad));
}

TEST_CASE("ingest: files and in-memory texts agree")
{
    const auto dir = std::filesystem::temp_directory_path() / "ngspell_ingest_test";
    std::filesystem::create_directories(dir);
    const std::vector<std::string> docs = {"Alpha beta gamma. Beta gamma!", "gamma delta alpha beta"};
    std::vector<std::filesystem::path> paths;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        paths.push_back(dir / ("doc" + std::to_string(i) + ".txt"));
        std::ofstream(paths.back(), std::ios::binary) << docs[i];
    }
    CHECK(saved(build_index(paths, {})) == saved(build_index_from_texts(docs, {})));
    std::filesystem::remove_all(dir);
}
