#include "ngspell/corpus_ingest.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ngspell/errors.h"
#include "ngspell/parallel.h"
#include "ngspell/tokenizer.h"

namespace ngspell {
namespace {

// Flattened k-id tuples with a count per tuple.
struct Grams {
    std::vector<WordId> keys;
    std::vector<Count> counts;
};

struct ShardCounts {
    std::vector<std::string> vocab; // local id -> word
    std::array<Grams, kMaxOrder> grams;
};

// Sorts tuples and sums the counts of equal ones.
Grams aggregate(const std::vector<WordId>& keys, const std::vector<Count>& counts, std::size_t k)
{
    const std::size_t n = counts.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(keys.begin() + a * k, keys.begin() + (a + 1) * k, keys.begin() + b * k,
                                            keys.begin() + (b + 1) * k);
    });
    Grams out;
    for (std::size_t i = 0; i < n; ++i) {
        auto src = keys.begin() + perm[i] * k;
        if (!out.counts.empty() && std::equal(src, src + k, out.keys.end() - k)) {
            out.counts.back() += counts[perm[i]];
        } else {
            out.keys.insert(out.keys.end(), src, src + k);
            out.counts.push_back(counts[perm[i]]);
        }
    }
    return out;
}

ShardCounts count_document(std::string_view text, const IngestOptions& opts)
{
    const TokenizedText toks = tokenize(text);
    ShardCounts shard;
    std::unordered_map<std::string_view, WordId> local;
    std::array<std::vector<WordId>, kMaxOrder> raw;

    std::vector<WordId> window; // most recent words of the current run
    for (const Token& tok : toks.tokens) {
        if (!tok.is_word()) {
            window.clear();
            continue;
        }
        auto [it, inserted] = local.emplace(tok.normalized, static_cast<WordId>(shard.vocab.size()));
        if (inserted)
            shard.vocab.push_back(tok.normalized);
        window.push_back(it->second);
        if (window.size() > opts.max_order)
            window.erase(window.begin());
        for (std::size_t k = 1; k <= window.size(); ++k)
            raw[k - 1].insert(raw[k - 1].end(), window.end() - k, window.end());
        if (opts.sentence_split && tok.ends_sentence)
            window.clear();
    }
    // `local` holds views into toks; it dies with this frame
    for (std::size_t k = 1; k <= opts.max_order; ++k) {
        std::vector<Count> ones(raw[k - 1].size() / k, 1);
        shard.grams[k - 1] = aggregate(raw[k - 1], ones, k);
        raw[k - 1] = {};
    }
    return shard;
}

NgramIndex merge_shards(std::vector<ShardCounts> shards, const IngestOptions& opts)
{
    // global lexicon in sorted order, with per-shard remapping
    std::vector<std::string> vocab;
    for (const auto& s : shards)
        vocab.insert(vocab.end(), s.vocab.begin(), s.vocab.end());
    std::sort(vocab.begin(), vocab.end());
    vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
    if (vocab.empty())
        throw EmptyCorpusError("corpus contains no words");

    std::array<Grams, kMaxOrder> merged;
    for (std::size_t k = 1; k <= opts.max_order; ++k) {
        std::vector<WordId> keys;
        std::vector<Count> counts;
        for (auto& s : shards) {
            std::vector<WordId> remap(s.vocab.size());
            for (std::size_t i = 0; i < s.vocab.size(); ++i)
                remap[i] = static_cast<WordId>(std::lower_bound(vocab.begin(), vocab.end(), s.vocab[i]) - vocab.begin());
            for (WordId id : s.grams[k - 1].keys)
                keys.push_back(remap[id]);
            counts.insert(counts.end(), s.grams[k - 1].counts.begin(), s.grams[k - 1].counts.end());
            s.grams[k - 1] = {};
        }
        merged[k - 1] = aggregate(keys, counts, k);
    }

    // prune higher orders, then keep unigrams that pass their threshold or occur
    // in a surviving higher-order gram
    std::vector<char> keep(vocab.size(), 0);
    std::array<Grams, kMaxOrder> kept;
    for (std::size_t k = 2; k <= opts.max_order; ++k) {
        const Grams& g = merged[k - 1];
        for (std::size_t i = 0; i < g.counts.size(); ++i) {
            if (g.counts[i] < opts.min_count[k - 1])
                continue;
            auto src = g.keys.begin() + i * k;
            kept[k - 1].keys.insert(kept[k - 1].keys.end(), src, src + k);
            kept[k - 1].counts.push_back(g.counts[i]);
            for (std::size_t j = 0; j < k; ++j)
                keep[src[j]] = 1;
        }
    }
    const Grams& uni = merged[0];
    for (std::size_t i = 0; i < uni.counts.size(); ++i)
        if (uni.counts[i] >= opts.min_count[0])
            keep[uni.keys[i]] = 1;

    std::vector<WordId> new_id(vocab.size(), 0);
    std::vector<std::string> words;
    std::vector<Count> unigram_counts;
    for (std::size_t i = 0; i < uni.counts.size(); ++i) {
        WordId old = uni.keys[i];
        if (!keep[old])
            continue;
        new_id[old] = static_cast<WordId>(words.size());
        words.push_back(std::move(vocab[old]));
        unigram_counts.push_back(uni.counts[i]);
    }

    std::array<NgramIndex::IdTable, kMaxOrder - 1> tables;
    for (std::size_t k = 2; k <= opts.max_order; ++k) {
        auto& t = tables[k - 2];
        t.keys.reserve(kept[k - 1].keys.size());
        for (WordId id : kept[k - 1].keys)
            t.keys.push_back(new_id[id]);
        t.counts = std::move(kept[k - 1].counts);
    }
    return NgramIndex::from_id_tables(std::move(words), std::move(unigram_counts), std::move(tables));
}

template <class Load>
NgramIndex build_sharded(std::size_t n, const IngestOptions& opts, Load&& load_document)
{
    opts.validate();
    if (n == 0)
        throw EmptyCorpusError("no corpus input given");
    std::vector<ShardCounts> shards(n);
    parallel_for(n, std::min(opts.workers, n), [&](std::size_t i) { shards[i] = count_document(load_document(i), opts); });
    return merge_shards(std::move(shards), opts);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read corpus file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading corpus file '" + path.string() + "'");
    return std::move(ss).str();
}

} // namespace

void IngestOptions::validate() const
{
    if (max_order < 1 || max_order > kMaxOrder)
        throw std::invalid_argument("max_order must be in 1..5");
    for (Count c : min_count)
        if (c < 1)
            throw std::invalid_argument("min_count thresholds must be at least 1");
    if (workers < 1)
        throw std::invalid_argument("worker count must be at least 1");
}

NgramIndex build_index(std::span<const std::filesystem::path> corpus_paths, const IngestOptions& opts)
{
    return build_sharded(corpus_paths.size(), opts, [&](std::size_t i) { return read_file(corpus_paths[i]); });
}

NgramIndex build_index_from_texts(std::span<const std::string> documents, const IngestOptions& opts)
{
    return build_sharded(documents.size(), opts, [&](std::size_t i) { return std::string_view(documents[i]); });
}

} // namespace ngspell
