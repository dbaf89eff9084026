#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ngspell/candidate_gen.h"
#include "ngspell/corrector.h"
#include "ngspell/detector.h"
#include "ngspell/ngram_index.h"
#include "ngspell/tokenizer.h"

namespace ngspell {

struct InjectionPlan {
    double rate = 0.01;          // fraction of eligible tokens to corrupt
    double realword_frac = 0.13; // fraction of corrupted tokens that become other lexicon words
    std::uint64_t seed = 0;

    void validate() const;
};

struct InjectedError {
    std::size_t position = 0; // token index
    std::string original;
    std::string corrupted;
    ErrorKind kind = ErrorKind::NonWord;

    bool operator==(const InjectedError&) const = default;
};

struct Injection {
    std::string text; // corrupted source
    std::vector<InjectedError> truth; // ascending position
    std::size_t eligible = 0;         // checkable in-lexicon tokens
    std::size_t planned_nonword = 0;
    std::size_t planned_realword = 0;
    std::size_t skipped_nonword = 0;  // no valid corruption found
    std::size_t skipped_realword = 0;
};

/// Corrupts round(rate * eligible) distinct eligible tokens chosen by a seeded
/// shuffle. The first round(count * realword_frac) picks become real-word slots
/// (replaced by an in-lexicon single-edit variant), the rest non-word slots (a
/// random single edit that is not in the lexicon, retried up to 20 times).
/// Slots without a valid corruption are skipped and counted. Corruptions always
/// have at least two letters, so they remain checkable.
Injection inject_errors(const TokenizedText& tokens, const NgramIndex& index, const InjectionPlan& plan);

struct KindStats {
    std::size_t injected = 0;
    std::size_t corrected = 0;
    std::size_t not_corrected = 0;
    std::size_t falsely_corrected = 0;
    std::size_t detected = 0; // flagged by the corrector, whatever the outcome

    double correction_rate() const;
    double detection_rate() const;
    bool operator==(const KindStats&) const = default;
};

struct EvaluationReport {
    KindStats total;
    KindStats nonword;
    KindStats realword;
    std::size_t collateral_changes = 0; // uninjected tokens the corrector altered
    std::size_t token_count = 0;
    std::size_t skipped_injections = 0;

    bool operator==(const EvaluationReport&) const = default;
};

/// Classifies each injected error by the final token: the original word means
/// corrected, the corrupted word means not corrected, anything else falsely
/// corrected. Throws std::invalid_argument when the corrected text does not
/// tokenize to the same number of tokens as the corrupted text.
EvaluationReport evaluate(const CorrectionReport& report, const Injection& injection);

/// Table-style summary with counts and whole-percent rates.
void write_report(std::ostream& out, const EvaluationReport& report);

/// Ground truth as `position<TAB>original<TAB>corrupted<TAB>kind` lines.
void write_truth(std::ostream& out, const std::vector<InjectedError>& truth);

} // namespace ngspell
