#include "ngspell/candidate_gen.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "ngspell/errors.h"
#include "ngspell/parallel.h"
#include "ngspell/text.h"

namespace ngspell {
namespace {

// (word id, shared bigram count), ascending by id.
using Scores = std::vector<std::pair<WordId, std::uint32_t>>;

Scores merge_scores(const Scores& a, const Scores& b)
{
    Scores out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

Scores from_postings(std::span<const WordId> ids)
{
    Scores s;
    s.reserve(ids.size());
    for (WordId id : ids)
        s.emplace_back(id, 1);
    return s;
}

struct Ranked {
    WordId id;
    std::uint32_t shared;
    std::uint32_t delta;
    Count freq;
};

bool ranked_before(const Ranked& a, const Ranked& b)
{
    if (a.shared != b.shared)
        return a.shared > b.shared;
    if (a.delta != b.delta)
        return a.delta < b.delta;
    if (a.freq != b.freq)
        return a.freq > b.freq;
    return a.id < b.id; // ids follow lexicographic order
}

} // namespace

bool ranks_before(const Candidate& a, const Candidate& b)
{
    if (a.shared_bigrams != b.shared_bigrams)
        return a.shared_bigrams > b.shared_bigrams;
    if (a.length_delta != b.length_delta)
        return a.length_delta < b.length_delta;
    if (a.frequency != b.frequency)
        return a.frequency > b.frequency;
    return a.word < b.word;
}

CandidateSet generate_candidates(std::string_view error_word, const NgramIndex& index, std::size_t k,
                                 std::size_t workers)
{
    if (k == 0)
        throw std::invalid_argument("candidate count k must be at least 1");
    const auto bigrams = letter_bigrams(error_word);
    if (bigrams.empty())
        throw DegenerateInputError("'" + std::string(error_word) + "' has no letter bigram");

    const auto parts = partition(bigrams.size(), workers);
    std::vector<Scores> partial(parts.size());
    run_partitioned(parts, [&](std::size_t w, Range r) {
        Scores acc;
        for (std::size_t i = r.begin; i < r.end; ++i)
            acc = merge_scores(acc, from_postings(index.postings(bigrams[i])));
        partial[w] = std::move(acc);
    });
    Scores scores;
    for (const auto& p : partial)
        scores = merge_scores(scores, p);

    const auto error_len = static_cast<std::int64_t>(text::length(error_word));
    std::vector<Ranked> ranked;
    ranked.reserve(scores.size());
    for (auto [id, shared] : scores) {
        auto delta = static_cast<std::int64_t>(index.word_length(id)) - error_len;
        ranked.push_back({id, shared, static_cast<std::uint32_t>(delta < 0 ? -delta : delta), index.unigram_count(id)});
    }
    const std::size_t top = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(top), ranked.end(), ranked_before);

    CandidateSet out;
    out.error_word.assign(error_word);
    out.candidates.reserve(top);
    for (std::size_t i = 0; i < top; ++i) {
        const Ranked& r = ranked[i];
        out.candidates.push_back({index.word(r.id), r.id, r.shared, r.delta, r.freq});
    }
    return out;
}

std::vector<std::string> single_edit_variants(std::string_view word)
{
    const std::u32string w = text::decode(word);
    std::set<std::u32string> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::u32string d = w;
        d.erase(i, 1);
        out.insert(std::move(d));
    }
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (char32_t c = 'a'; c <= 'z'; ++c) {
            std::u32string ins = w;
            ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(i), c);
            out.insert(std::move(ins));
        }
    for (std::size_t i = 0; i < w.size(); ++i)
        for (char32_t c = 'a'; c <= 'z'; ++c) {
            std::u32string sub = w;
            sub[i] = c;
            out.insert(std::move(sub));
        }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        std::u32string t = w;
        std::swap(t[i], t[i + 1]);
        out.insert(std::move(t));
    }
    out.erase(w);

    std::vector<std::string> result;
    result.reserve(out.size());
    for (const auto& v : out)
        result.push_back(text::encode(v));
    std::sort(result.begin(), result.end());
    return result;
}

CandidateSet generate_alternatives(std::string_view word, const NgramIndex& index, std::size_t k, std::size_t workers)
{
    CandidateSet set = generate_candidates(word, index, k + 1, workers);
    std::erase_if(set.candidates, [&](const Candidate& c) { return c.word == word; });
    if (set.candidates.size() > k)
        set.candidates.resize(k);

    const auto bigrams = letter_bigrams(word);
    const auto len = static_cast<std::int64_t>(text::length(word));
    for (auto& v : single_edit_variants(word)) {
        const auto id = index.find(v);
        if (!id || std::any_of(set.candidates.begin(), set.candidates.end(),
                               [&](const Candidate& c) { return c.id == *id; }))
            continue;
        std::uint32_t shared = 0;
        for (const auto& bg : letter_bigrams(v))
            shared += std::find(bigrams.begin(), bigrams.end(), bg) != bigrams.end();
        const auto delta = static_cast<std::int64_t>(index.word_length(*id)) - len;
        set.candidates.push_back(
            {std::move(v), *id, shared, static_cast<std::uint32_t>(delta < 0 ? -delta : delta), index.unigram_count(*id)});
    }
    std::sort(set.candidates.begin(), set.candidates.end(), ranks_before);
    return set;
}

} // namespace ngspell
