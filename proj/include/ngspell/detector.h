#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ngspell/candidate_gen.h"
#include "ngspell/ngram_index.h"
#include "ngspell/parallel.h"
#include "ngspell/tokenizer.h"

namespace ngspell {

enum class ErrorKind { NonWord, RealWordSuspect };

std::string_view to_string(ErrorKind kind);

struct DetectedError {
    std::size_t token_index = 0;
    ErrorKind kind = ErrorKind::NonWord;
    std::string word; // normalized

    bool operator==(const DetectedError&) const = default;
};

/// Flags every checkable token whose normalized form is not a unigram. Tokens
/// are block-partitioned over `workers`; each worker fills a private buffer and
/// the buffers are concatenated in worker order, so output is ascending by
/// token index for any worker count.
std::vector<DetectedError> detect_errors(const TokenizedText& tokens, const NgramIndex& index, std::size_t workers);

struct RealWordOptions {
    std::size_t min_context = 3; // minimum n-gram length, the word included
    double tau = 1.0;            // a candidate context count must reach this
    std::size_t k = kDefaultTopK;
};

// A checkable in-lexicon word w is a suspect when the longest context n-gram
// ending at w (at least min_context words, at most five) was never seen, yet
// swapping w for one of its candidates gives an n-gram counted at least tau times.
std::vector<DetectedError> detect_realword_suspects(const TokenizedText& tokens, const NgramIndex& index,
                                                    const RealWordOptions& opts, std::size_t workers = 1);

} // namespace ngspell
