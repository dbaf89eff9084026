#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngspell/candidate_gen.h"
#include "ngspell/detector.h"
#include "ngspell/ngram_index.h"
#include "ngspell/tokenizer.h"

namespace ngspell {

/// Preceding context plus one candidate, scored by its corpus count.
struct Nominee {
    std::vector<std::string> context; // 0..4 words, oldest first
    std::string candidate;
    std::size_t order = 1;            // context.size() + 1
    Count frequency = 0;              // count of context ++ candidate

    std::vector<std::string> words() const;
};

struct Correction {
    std::size_t token_index = 0;
    ErrorKind kind = ErrorKind::NonWord;
    std::string original;              // normalized form of the flagged token
    std::optional<std::string> chosen; // none when the token is left unchanged
    Count nominee_frequency = 0;       // count of the winning nominee at `order_used`
    std::size_t order_used = 0;        // 0 when no nominee had a positive count
    bool fallback_used = false;        // every nominee count was zero

    bool operator==(const Correction&) const = default;
};

/// One nominee per candidate, in candidate rank order. Contexts are taken from
/// the original, uncorrected tokens. Frequencies are looked up with one task
/// per nominee spread over `workers`.
std::vector<Nominee> build_nominees(const TokenizedText& tokens, std::size_t error_index, const CandidateSet& candidates,
                                    const NgramIndex& index, std::size_t workers = 1);

/// Picks the candidate of the maximum-frequency nominee; ties go to the better
/// ranked candidate. With `backoff`, when every nominee counts zero at its full
/// order the whole set is re-scored one order lower, down to bigrams. When all
/// counts stay zero the first-ranked candidate is chosen with fallback_used set.
/// Throws std::invalid_argument for an empty nominee list.
Correction select_correction(std::span<const Nominee> nominees, const NgramIndex& index, bool backoff);

struct CorrectorOptions {
    std::size_t k = kDefaultTopK;
    bool backoff = true;
    bool realword = false;
    double tau = 2.0;            // real-word acceptance ratio
    RealWordOptions detection{}; // real-word suspect rule
};

struct CorrectionReport {
    std::vector<Correction> corrections; // ascending token index
    std::string corrected_text;
    std::size_t token_count = 0;

    std::size_t changed() const;
};

/// Tokenize, detect, generate candidates and select corrections. Each error is
/// an independent task; tasks are block-partitioned over `workers`. The report
/// is identical for every worker count.
CorrectionReport correct_text(std::string_view text, const NgramIndex& index, std::size_t workers,
                              const CorrectorOptions& opts = {});

/// Applies chosen corrections to the source, keeping surrounding punctuation.
/// A replacement is capitalized when the original word started uppercase.
std::string apply_corrections(const TokenizedText& tokens, std::span<const Correction> corrections);

} // namespace ngspell
