#include "ngspell/detector.h"

#include <stdexcept>

namespace ngspell {
namespace {

// Runs `scan` over each worker's token range and concatenates the results.
template <class Scan>
std::vector<DetectedError> scan_partitioned(std::size_t n, std::size_t workers, Scan&& scan)
{
    const Partition parts = partition(n, workers);
    std::vector<std::vector<DetectedError>> buffers(parts.size());
    run_partitioned(parts, [&](std::size_t w, Range r) {
        for (std::size_t i = r.begin; i < r.end; ++i)
            scan(i, buffers[w]);
    });
    std::vector<DetectedError> out;
    for (auto& b : buffers)
        out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    return out;
}

} // namespace

std::string_view to_string(ErrorKind kind)
{
    return kind == ErrorKind::NonWord ? "non-word" : "real-word";
}

std::vector<DetectedError> detect_errors(const TokenizedText& tokens, const NgramIndex& index, std::size_t workers)
{
    return scan_partitioned(tokens.size(), workers, [&](std::size_t i, std::vector<DetectedError>& out) {
        const Token& t = tokens[i];
        if (t.checkable && !index.contains_unigram(t.normalized))
            out.push_back({i, ErrorKind::NonWord, t.normalized});
    });
}

std::vector<DetectedError> detect_realword_suspects(const TokenizedText& tokens, const NgramIndex& index,
                                                    const RealWordOptions& opts, std::size_t workers)
{
    if (opts.tau < 1.0)
        throw std::invalid_argument("tau must be at least 1");
    return scan_partitioned(tokens.size(), workers, [&](std::size_t i, std::vector<DetectedError>& out) {
        const Token& t = tokens[i];
        if (!t.checkable || !index.contains_unigram(t.normalized))
            return;
        std::vector<std::string> gram = context_before(tokens, i, kMaxOrder - 1);
        if (gram.size() + 1 < opts.min_context)
            return;
        gram.push_back(t.normalized);
        if (index.ngram_count(gram) != 0)
            return;
        for (const Candidate& c : generate_alternatives(t.normalized, index, opts.k).candidates) {
            gram.back() = c.word;
            if (static_cast<double>(index.ngram_count(gram)) >= opts.tau) {
                out.push_back({i, ErrorKind::RealWordSuspect, t.normalized});
                return;
            }
        }
    });
}

} // namespace ngspell
