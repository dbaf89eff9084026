#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ngspell/bigram.h"

namespace ngspell {

using Count = std::uint64_t;
using WordId = std::uint32_t;

inline constexpr std::size_t kMaxOrder = 5;

/// True for a non-empty, letters-only, case-folded string.
bool is_normalized_word(std::string_view word);

/// Immutable store of word n-gram counts (orders 1..5) with a character-bigram
/// inverted index over the unigram lexicon.
///
/// Lexicon ids follow lexicographic byte order of the words, so id-tuple order
/// of a k-gram table is also the lexicographic order of the word sequences.
/// All queries are const and safe to call concurrently.
class NgramIndex {
public:
    class Builder;

    NgramIndex() = default;
    NgramIndex(const NgramIndex&) = delete;
    NgramIndex& operator=(const NgramIndex&) = delete;
    NgramIndex(NgramIndex&&) noexcept = default;
    NgramIndex& operator=(NgramIndex&&) noexcept = default;

    bool contains_unigram(std::string_view word) const;
    std::optional<WordId> find(std::string_view word) const;

    /// Stored count of a 1..5 word sequence, or 0 when absent.
    /// Throws ArityError for length 0 or above 5.
    Count ngram_count(std::span<const std::string> words) const;
    Count ngram_count(std::span<const std::string_view> words) const;
    Count ngram_count(std::initializer_list<std::string_view> words) const;
    Count ngram_count_ids(std::span<const WordId> ids) const;

    /// Lexicon ids of every word containing `bg`, ascending.
    std::span<const WordId> postings(const LetterBigram& bg) const;
    std::vector<std::string> postings_for_bigram(const LetterBigram& bg) const;

    std::size_t lexicon_size() const noexcept { return words_.size(); }
    const std::string& word(WordId id) const { return words_[id]; }
    /// Length in code points.
    std::uint32_t word_length(WordId id) const { return lengths_[id]; }
    Count unigram_count(WordId id) const { return unigram_counts_[id]; }

    /// Number of stored entries of the given order (1..5).
    std::size_t entries(std::size_t order) const;
    std::size_t max_stored_order() const;

    /// Calls fn(span<const WordId>, Count) for each entry of `order` in key order.
    template <class Fn>
    void for_each(std::size_t order, Fn&& fn) const
    {
        if (order == 1) {
            for (WordId id = 0; id < words_.size(); ++id) {
                const WordId key[1] = {id};
                fn(std::span<const WordId>(key, 1), unigram_counts_[id]);
            }
            return;
        }
        const auto& t = tables_.at(order - 2);
        for (std::size_t i = 0; i < t.counts.size(); ++i)
            fn(std::span<const WordId>(t.keys.data() + i * order, order), t.counts[i]);
    }

    /// k ids per entry (flattened) with one count per entry.
    struct IdTable {
        std::vector<WordId> keys;
        std::vector<Count> counts;
    };

    /// Bulk construction from a strictly ascending lexicon of normalized words and
    /// per-order id tables (index 0 holds order 2). Tables may be unsorted; they
    /// must be duplicate-free, reference valid ids and hold positive counts.
    static NgramIndex from_id_tables(std::vector<std::string> words, std::vector<Count> unigram_counts,
                                     std::array<IdTable, kMaxOrder - 1> tables);

    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    static NgramIndex load(std::istream& in);
    static NgramIndex load(const std::filesystem::path& path);

private:
    using Table = IdTable; // keys sorted

    static NgramIndex assemble(std::vector<std::string> words, std::vector<Count> unigram_counts,
                               std::array<Table, kMaxOrder - 1> tables);
    static void sort_table(Table& t, std::size_t order);

    std::vector<std::string> words_;
    std::vector<std::uint32_t> lengths_;
    std::vector<Count> unigram_counts_;
    std::unordered_map<std::string_view, WordId> ids_; // views into words_
    std::array<Table, kMaxOrder - 1> tables_;
    std::unordered_map<std::uint64_t, std::vector<WordId>> postings_;

    friend class Builder;
};

/// Accumulates counts and produces an NgramIndex. Adding the same sequence twice
/// sums the counts. Every word of a stored k-gram (k >= 2) must also be added as
/// a unigram before build().
class NgramIndex::Builder {
public:
    void add(std::span<const std::string> words, Count count);
    void add(std::initializer_list<std::string_view> words, Count count);
    /// Adds an n-gram given as words joined by single spaces.
    void add_joined(std::size_t order, std::string_view joined, Count count);

    std::size_t size(std::size_t order) const { return counts_.at(order - 1).size(); }
    NgramIndex build() &&;

private:
    std::array<std::unordered_map<std::string, Count>, kMaxOrder> counts_;
};

} // namespace ngspell
