#include "ngspell/corrector.h"

#include <algorithm>
#include <stdexcept>

#include "ngspell/parallel.h"
#include "ngspell/text.h"

namespace ngspell {
namespace {

// Count of the last `order` words of a nominee.
Count suffix_count(const Nominee& n, std::size_t order, const NgramIndex& index)
{
    if (order == n.order)
        return n.frequency;
    std::vector<std::string_view> gram;
    for (std::size_t i = n.context.size() + 1 - order; i < n.context.size(); ++i)
        gram.push_back(n.context[i]);
    gram.push_back(n.candidate);
    return index.ngram_count(std::span<const std::string_view>(gram));
}

Correction correct_one(const TokenizedText& tokens, const DetectedError& err, const NgramIndex& index,
                       const CorrectorOptions& opts)
{
    Correction c;
    c.token_index = err.token_index;
    c.kind = err.kind;
    c.original = err.word;

    const CandidateSet cands = err.kind == ErrorKind::NonWord ? generate_candidates(err.word, index, opts.k)
                                                              : generate_alternatives(err.word, index, opts.k);
    if (cands.candidates.empty())
        return c;

    const auto nominees = build_nominees(tokens, err.token_index, cands, index);
    Correction sel = select_correction(nominees, index, opts.backoff);
    c.nominee_frequency = sel.nominee_frequency;
    c.order_used = sel.order_used;
    c.fallback_used = sel.fallback_used;
    if (err.kind == ErrorKind::NonWord) {
        c.chosen = std::move(sel.chosen);
        return c;
    }

    // a real-word suspect is only replaced when the winner clearly beats the
    // original word at the longest order where the original was seen at all
    if (sel.fallback_used)
        return c;
    const Nominee* winner = &nominees.front();
    for (const Nominee& n : nominees)
        if (n.candidate == *sel.chosen)
            winner = &n;
    Nominee own = *winner;
    own.candidate = err.word;
    own.frequency = index.ngram_count(own.words());
    for (std::size_t order = sel.order_used; order >= 2; --order) {
        const Count own_freq = suffix_count(own, order, index);
        if (own_freq == 0)
            continue;
        if (static_cast<double>(suffix_count(*winner, order, index)) < opts.tau * static_cast<double>(own_freq))
            return c;
        break;
    }
    c.chosen = std::move(sel.chosen);
    return c;
}

} // namespace

std::vector<std::string> Nominee::words() const
{
    std::vector<std::string> w = context;
    w.push_back(candidate);
    return w;
}

std::vector<Nominee> build_nominees(const TokenizedText& tokens, std::size_t error_index, const CandidateSet& candidates,
                                    const NgramIndex& index, std::size_t workers)
{
    const auto context = context_before(tokens, error_index, kMaxOrder - 1);
    std::vector<Nominee> out(candidates.candidates.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].context = context;
        out[i].candidate = candidates.candidates[i].word;
        out[i].order = context.size() + 1;
    }
    parallel_for(out.size(), std::max<std::size_t>(1, std::min(workers, out.size())),
                 [&](std::size_t i) { out[i].frequency = index.ngram_count(out[i].words()); });
    return out;
}

Correction select_correction(std::span<const Nominee> nominees, const NgramIndex& index, bool backoff)
{
    if (nominees.empty())
        throw std::invalid_argument("select_correction needs at least one nominee");
    const std::size_t full = nominees.front().order;
    for (const Nominee& n : nominees)
        if (n.order != full || n.context.size() + 1 != n.order)
            throw std::invalid_argument("nominees must share one context");

    Correction c;
    const std::size_t lowest = backoff ? std::min<std::size_t>(full, 2) : full;
    for (std::size_t order = full; order >= lowest; --order) {
        std::size_t best = 0;
        Count best_freq = 0;
        for (std::size_t i = 0; i < nominees.size(); ++i) {
            const Count f = suffix_count(nominees[i], order, index);
            if (f > best_freq) {
                best = i;
                best_freq = f;
            }
        }
        if (best_freq > 0) {
            c.chosen = nominees[best].candidate;
            c.nominee_frequency = best_freq;
            c.order_used = order;
            return c;
        }
        if (order == lowest)
            break;
    }
    c.chosen = nominees.front().candidate;
    c.fallback_used = true;
    return c;
}

std::size_t CorrectionReport::changed() const
{
    return static_cast<std::size_t>(
        std::count_if(corrections.begin(), corrections.end(), [](const Correction& c) { return c.chosen.has_value(); }));
}

std::string apply_corrections(const TokenizedText& tokens, std::span<const Correction> corrections)
{
    std::string out;
    out.reserve(tokens.source.size());
    std::size_t prev = 0;
    for (const Correction& c : corrections) {
        if (!c.chosen)
            continue;
        const Token& t = tokens[c.token_index];
        out.append(tokens.source, prev, t.core.begin - prev);
        out += text::match_initial_case(*c.chosen, std::string_view(tokens.source).substr(t.core.begin, t.core.size()));
        prev = t.core.end;
    }
    out.append(tokens.source, prev, std::string::npos);
    return out;
}

CorrectionReport correct_text(std::string_view text, const NgramIndex& index, std::size_t workers,
                              const CorrectorOptions& opts)
{
    if (workers == 0)
        throw std::invalid_argument("worker count must be at least 1");
    if (opts.k == 0)
        throw std::invalid_argument("candidate count k must be at least 1");
    if (opts.tau < 1.0)
        throw std::invalid_argument("tau must be at least 1");

    const TokenizedText tokens = tokenize(text);
    std::vector<DetectedError> errors = detect_errors(tokens, index, workers);
    if (opts.realword) {
        auto suspects = detect_realword_suspects(tokens, index, opts.detection, workers);
        std::vector<DetectedError> merged;
        merged.reserve(errors.size() + suspects.size());
        std::merge(errors.begin(), errors.end(), suspects.begin(), suspects.end(), std::back_inserter(merged),
                   [](const DetectedError& a, const DetectedError& b) { return a.token_index < b.token_index; });
        errors = std::move(merged);
    }

    CorrectionReport report;
    report.token_count = tokens.size();
    report.corrections.resize(errors.size());
    parallel_for(errors.size(), workers,
                 [&](std::size_t i) { report.corrections[i] = correct_one(tokens, errors[i], index, opts); });
    report.corrected_text = apply_corrections(tokens, report.corrections);
    return report;
}

} // namespace ngspell
