#include <doctest.h>

#include <random>

#include "fixtures.h"
#include "ngspell/corpus_ingest.h"
#include "ngspell/corrector.h"

using namespace ngspell;
using namespace ngspell::testing;

namespace {

Nominee nominee(std::vector<std::string> context, std::string cand, Count freq)
{
    Nominee n;
    n.order = context.size() + 1;
    n.context = std::move(context);
    n.candidate = std::move(cand);
    n.frequency = freq;
    return n;
}

CandidateSet cands(std::initializer_list<const char*> words)
{
    CandidateSet s;
    for (auto w : words)
        s.candidates.push_back({w, 0, 0, 0, 0});
    return s;
}

} // namespace

TEST_CASE("build_nominees: context window")
{
    const auto ix = example_fixture();
    const auto n5 = build_nominees(tokenize(kExampleSentence), 5, cands({"model", "modal", "radian"}), ix);
    REQUIRE(n5.size() == 3);
    CHECK(n5[0].context == std::vector<std::string>{"also", "work", "with", "plastic"});
    CHECK(n5[0].words() == std::vector<std::string>{"also", "work", "with", "plastic", "model"});
    CHECK(n5[0].order == 5);
    CHECK(n5[0].frequency == 17);
    CHECK(n5[1].frequency == 2);
    CHECK(n5[2].frequency == 0);

    const auto n0 = build_nominees(tokenize("modil kits"), 0, cands({"model"}), ix);
    CHECK(n0[0].context.empty());
    CHECK(n0[0].order == 1);
    CHECK(n0[0].frequency == 50);

    const auto n2 = build_nominees(tokenize("they also modil"), 2, cands({"model"}), ix);
    CHECK(n2[0].context == std::vector<std::string>{"they", "also"});
    CHECK(n2[0].order == 3);

    const auto cut = build_nominees(tokenize("Done. plastic modil"), 2, cands({"model"}), ix);
    CHECK(cut[0].context == std::vector<std::string>{"plastic"});
    CHECK(cut[0].frequency == 19);
}

TEST_CASE("select_correction")
{
    const auto ix = example_fixture();
    const std::vector<std::string> ctx = {"also", "work", "with", "plastic"};

    SUBCASE("argmax over the nominees")
    {
        std::vector<Nominee> ns = {nominee(ctx, "modal", 2), nominee(ctx, "model", 17), nominee(ctx, "radian", 0),
                                   nominee(ctx, "mother", 0), nominee(ctx, "lading", 0)};
        Count best = 0;
        for (const auto& n : ns)
            best = std::max(best, n.frequency);
        const auto c = select_correction(ns, ix, false);
        CHECK(c.chosen == "model");
        CHECK(c.nominee_frequency == best);
        CHECK(c.order_used == 5);
        CHECK_FALSE(c.fallback_used);
    }
    SUBCASE("all zero without backoff falls back to the first candidate")
    {
        std::vector<Nominee> ns = {nominee(ctx, "radian", 0), nominee(ctx, "mother", 0)};
        const auto c = select_correction(ns, ix, false);
        CHECK(c.chosen == "radian");
        CHECK(c.fallback_used);
        CHECK(c.nominee_frequency == 0);
        CHECK(c.order_used == 0);
    }
    SUBCASE("ties go to the better ranked candidate")
    {
        std::vector<Nominee> ns = {nominee(ctx, "modal", 5), nominee(ctx, "model", 5)};
        CHECK(select_correction(ns, ix, false).chosen == "modal");
    }
    SUBCASE("backoff re-scores the whole set one order lower")
    {
        const std::vector<std::string> other = {"they", "work", "with", "plastic"};
        std::vector<Nominee> ns = {nominee(other, "modal", 0), nominee(other, "model", 0)};
        const auto off = select_correction(ns, ix, false);
        CHECK(off.fallback_used);
        const auto on = select_correction(ns, ix, true);
        CHECK(on.chosen == "model");
        CHECK(on.order_used == 2);
        CHECK(on.nominee_frequency == 19);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(select_correction(std::vector<Nominee>{}, ix, true), std::invalid_argument);
        std::vector<Nominee> mixed = {nominee(ctx, "model", 1), nominee({"plastic"}, "modal", 1)};
        CHECK_THROWS_AS(select_correction(mixed, ix, true), std::invalid_argument);
    }
}

TEST_CASE("correct_text: running example end to end")
{
    const auto ix = example_fixture();
    const auto r = correct_text(kExampleSentence, ix, 1);
    CHECK(r.corrected_text == kExampleCorrected);
    REQUIRE(r.corrections.size() == 1);
    CHECK(r.corrections[0].token_index == 5);
    CHECK(r.corrections[0].chosen == "model");
    CHECK(r.corrections[0].nominee_frequency == 17);
    CHECK(r.token_count == 7);

    CHECK(correct_text("They also work with plastic Modil, kits.", ix, 2).corrected_text ==
          "They also work with plastic Model, kits.");

    const auto clean = correct_text(kExampleCorrected, ix, 4);
    CHECK(clean.corrected_text == kExampleCorrected);
    CHECK(clean.corrections.empty());
}

TEST_CASE("correct_text: real-word pass")
{
    const auto ix = realword_fixture();
    CorrectorOptions opts;
    CHECK(correct_text("is vulnerable to fee risks", ix, 1, opts).corrected_text == "is vulnerable to fee risks");
    opts.realword = true;
    CHECK(correct_text("is vulnerable to fee risks", ix, 1, opts).corrected_text == "is vulnerable to few risks");
    CHECK(correct_text("Fill out the from.", ix, 1, opts).corrected_text == "Fill out the form.");
    CHECK(correct_text("fill out the form", ix, 1, opts).corrections.empty());

    // "to few" (9) against "to fee" (1) decides at the bigram order
    opts.tau = 9;
    CHECK(correct_text("is vulnerable to fee risks", ix, 1, opts).corrected_text == "is vulnerable to few risks");
    opts.tau = 9.5;
    const auto held = correct_text("is vulnerable to fee risks", ix, 1, opts);
    CHECK(held.corrected_text == "is vulnerable to fee risks");
    REQUIRE(held.corrections.size() == 1);
    CHECK_FALSE(held.corrections[0].chosen.has_value());
    CHECK(held.corrections[0].nominee_frequency == 7);
}

TEST_CASE("correct_text: identical report for any worker count")
{
    std::mt19937_64 rng(101);
    const auto lexicon = random_lexicon(rng, 200, 'f');
    std::string corpus;
    for (int i = 0; i < 20000; ++i)
        corpus += lexicon[rng() % 40 + (rng() % 4 == 0 ? 40 : 0)] + (i % 11 == 10 ? ". " : " ");
    std::vector<std::string> docs{corpus};
    const auto ix = build_index_from_texts(docs, {});
    std::string text;
    for (int i = 0; i < 5000; ++i)
        text += (rng() % 10 == 0 ? random_word(rng, 2, 6, 'f') : lexicon[rng() % 80]) + ' ';

    for (bool realword : {false, true}) {
        CorrectorOptions opts;
        opts.realword = realword;
        const auto ref = correct_text(text, ix, 1, opts);
        CHECK(ref.changed() > 0);
        for (std::size_t p : {2u, 4u, 8u}) {
            const auto r = correct_text(text, ix, p, opts);
            CHECK(r.corrected_text == ref.corrected_text);
            CHECK(r.corrections == ref.corrections);
        }
    }
}
