#include "ngspell/evaluator.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ngspell/text.h"

namespace ngspell {
namespace {

constexpr int kNonWordAttempts = 20;

// Unbiased draw from [0, n). std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries; this is.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::u32string random_edit(const std::u32string& w, std::mt19937_64& rng)
{
    std::u32string out = w;
    const auto letter = [&] { return static_cast<char32_t>('a' + uniform_below(rng, 26)); };
    switch (uniform_below(rng, 4)) {
    case 0:
        out.erase(uniform_below(rng, w.size()), 1);
        break;
    case 1: {
        auto pos = uniform_below(rng, w.size() + 1);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), letter());
        break;
    }
    case 2:
        out[uniform_below(rng, w.size())] = letter();
        break;
    default: {
        auto pos = uniform_below(rng, w.size() - 1);
        std::swap(out[pos], out[pos + 1]);
        break;
    }
    }
    return out;
}

std::size_t rounded(double x) { return static_cast<std::size_t>(std::llround(x)); }

std::string percent(std::size_t part, std::size_t whole)
{
    if (whole == 0)
        return "-";
    return std::to_string(std::llround(100.0 * static_cast<double>(part) / static_cast<double>(whole))) + "%";
}

} // namespace

void InjectionPlan::validate() const
{
    if (!(rate > 0.0 && rate <= 1.0))
        throw std::invalid_argument("injection rate must be in (0, 1]");
    if (!(realword_frac >= 0.0 && realword_frac <= 1.0))
        throw std::invalid_argument("real-word fraction must be in [0, 1]");
}

Injection inject_errors(const TokenizedText& tokens, const NgramIndex& index, const InjectionPlan& plan)
{
    plan.validate();
    Injection inj;

    std::vector<std::size_t> eligible;
    for (const Token& t : tokens.tokens)
        if (t.checkable && index.contains_unigram(t.normalized))
            eligible.push_back(t.index);
    inj.eligible = eligible.size();

    std::mt19937_64 rng(plan.seed);
    const std::size_t count = std::min(eligible.size(), rounded(plan.rate * static_cast<double>(eligible.size())));
    // partial Fisher-Yates: the first `count` slots are a uniform sample
    for (std::size_t i = 0; i < count; ++i)
        std::swap(eligible[i], eligible[i + uniform_below(rng, eligible.size() - i)]);
    inj.planned_realword = std::min(count, rounded(plan.realword_frac * static_cast<double>(count)));
    inj.planned_nonword = count - inj.planned_realword;

    for (std::size_t slot = 0; slot < count; ++slot) {
        const Token& tok = tokens[eligible[slot]];
        const bool realword = slot < inj.planned_realword;
        std::string corrupted;
        if (realword) {
            std::vector<std::string> options;
            for (auto& v : single_edit_variants(tok.normalized))
                if (text::length(v) >= 2 && index.contains_unigram(v))
                    options.push_back(std::move(v));
            if (options.empty()) {
                ++inj.skipped_realword;
                continue;
            }
            corrupted = options[uniform_below(rng, options.size())];
        } else {
            const std::u32string w = text::decode(tok.normalized);
            for (int attempt = 0; attempt < kNonWordAttempts; ++attempt) {
                std::u32string v = random_edit(w, rng);
                if (v == w || v.size() < 2)
                    continue;
                std::string s = text::encode(v);
                if (!index.contains_unigram(s)) {
                    corrupted = std::move(s);
                    break;
                }
            }
            if (corrupted.empty()) {
                ++inj.skipped_nonword;
                continue;
            }
        }
        inj.truth.push_back({tok.index, tok.normalized, std::move(corrupted),
                             realword ? ErrorKind::RealWordSuspect : ErrorKind::NonWord});
    }
    std::sort(inj.truth.begin(), inj.truth.end(),
              [](const InjectedError& a, const InjectedError& b) { return a.position < b.position; });

    std::string& out = inj.text;
    out.reserve(tokens.source.size() + inj.truth.size());
    std::size_t prev = 0;
    for (const InjectedError& e : inj.truth) {
        const Token& t = tokens[e.position];
        out.append(tokens.source, prev, t.core.begin - prev);
        out += text::match_initial_case(e.corrupted, std::string_view(tokens.source).substr(t.core.begin, t.core.size()));
        prev = t.core.end;
    }
    out.append(tokens.source, prev, std::string::npos);
    return inj;
}

double KindStats::correction_rate() const
{
    return injected == 0 ? 0.0 : static_cast<double>(corrected) / static_cast<double>(injected);
}

double KindStats::detection_rate() const
{
    return injected == 0 ? 0.0 : static_cast<double>(detected) / static_cast<double>(injected);
}

EvaluationReport evaluate(const CorrectionReport& report, const Injection& injection)
{
    const TokenizedText before = tokenize(injection.text);
    const TokenizedText after = tokenize(report.corrected_text);
    if (before.size() != after.size() || report.token_count != before.size())
        throw std::invalid_argument("corrected text has " + std::to_string(after.size()) + " tokens, corrupted text " +
                                    std::to_string(before.size()));

    std::unordered_set<std::size_t> flagged;
    for (const Correction& c : report.corrections)
        flagged.insert(c.token_index);

    EvaluationReport r;
    r.token_count = before.size();
    r.skipped_injections = injection.skipped_nonword + injection.skipped_realword;
    std::vector<char> injected(before.size(), 0);
    for (const InjectedError& e : injection.truth) {
        if (e.position >= before.size())
            throw std::invalid_argument("ground truth position " + std::to_string(e.position) + " out of range");
        injected[e.position] = 1;
        KindStats& k = e.kind == ErrorKind::NonWord ? r.nonword : r.realword;
        ++k.injected;
        const std::string& final_word = after[e.position].normalized;
        if (final_word == e.original)
            ++k.corrected;
        else if (final_word == e.corrupted)
            ++k.not_corrected;
        else
            ++k.falsely_corrected;
        if (flagged.contains(e.position))
            ++k.detected;
    }
    for (std::size_t i = 0; i < before.size(); ++i)
        if (!injected[i] && before[i].normalized != after[i].normalized)
            ++r.collateral_changes;

    r.total.injected = r.nonword.injected + r.realword.injected;
    r.total.corrected = r.nonword.corrected + r.realword.corrected;
    r.total.not_corrected = r.nonword.not_corrected + r.realword.not_corrected;
    r.total.falsely_corrected = r.nonword.falsely_corrected + r.realword.falsely_corrected;
    r.total.detected = r.nonword.detected + r.realword.detected;
    return r;
}

void write_report(std::ostream& out, const EvaluationReport& r)
{
    auto cell = [](std::size_t n, std::size_t whole) {
        std::ostringstream s;
        s << n << " (" << percent(n, whole) << ")";
        return s.str();
    };
    auto row = [&](const char* label, auto&& field) {
        out << std::left << std::setw(20) << label;
        for (const KindStats* k : {&r.total, &r.nonword, &r.realword})
            out << std::setw(16) << field(*k);
        out << '\n';
    };
    out << std::left << std::setw(20) << "" << std::setw(16) << "Total" << std::setw(16) << "Non-word"
        << std::setw(16) << "Real-word" << '\n';
    row("Injected errors", [](const KindStats& k) { return std::to_string(k.injected); });
    row("Corrected", [&](const KindStats& k) { return cell(k.corrected, k.injected); });
    row("Not corrected", [&](const KindStats& k) { return cell(k.not_corrected, k.injected); });
    row("Falsely corrected", [&](const KindStats& k) { return cell(k.falsely_corrected, k.injected); });
    row("Detected", [&](const KindStats& k) { return cell(k.detected, k.injected); });
    out << "Collateral changes  " << r.collateral_changes << " of " << r.token_count << " tokens\n";
    out << "Skipped injections  " << r.skipped_injections << '\n';
}

void write_truth(std::ostream& out, const std::vector<InjectedError>& truth)
{
    for (const InjectedError& e : truth)
        out << e.position << '\t' << e.original << '\t' << e.corrupted << '\t' << to_string(e.kind) << '\n';
}

} // namespace ngspell
