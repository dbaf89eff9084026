#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ngspell/bigram.h"
#include "ngspell/ngram_index.h"

namespace ngspell {

inline constexpr std::size_t kDefaultTopK = 5;

struct Candidate {
    std::string word;
    WordId id = 0;
    std::uint32_t shared_bigrams = 0; // distinct letter bigrams shared with the error word
    std::uint32_t length_delta = 0;   // |len(word) - len(error word)| in code points
    Count frequency = 0;              // unigram count

    bool operator==(const Candidate&) const = default;
};

/// Ranking order: more shared bigrams first, then smaller length delta, then
/// higher unigram count, then lexicographic order of the word.
bool ranks_before(const Candidate& a, const Candidate& b);

struct CandidateSet {
    std::string error_word;
    std::vector<Candidate> candidates; // best first, at most K
};

/// Top-k lexicon words by shared distinct letter bigrams with `error_word`.
///
/// One posting list is fetched per bigram of the error word; the lists are
/// split across `workers` threads, merged into partial score vectors and then
/// combined. The result does not depend on `workers`.
///
/// Throws DegenerateInputError when the word has no bigram and
/// std::invalid_argument when k or workers is zero.
CandidateSet generate_candidates(std::string_view error_word, const NgramIndex& index, std::size_t k = kDefaultTopK,
                                 std::size_t workers = 1);

/// Every string one Damerau edit away from `word` (delete a character, insert
/// a-z, substitute a-z, swap an adjacent pair), `word` itself excluded. Sorted.
std::vector<std::string> single_edit_variants(std::string_view word);

/// Candidates for an in-lexicon word, the word itself excluded: the top k by
/// shared bigrams plus every in-lexicon single-edit variant, in ranking order.
CandidateSet generate_alternatives(std::string_view word, const NgramIndex& index, std::size_t k = kDefaultTopK,
                                   std::size_t workers = 1);

} // namespace ngspell
