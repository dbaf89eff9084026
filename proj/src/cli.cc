#include "ngspell/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ngspell/baselines.h"
#include "ngspell/corpus_ingest.h"
#include "ngspell/corrector.h"
#include "ngspell/errors.h"
#include "ngspell/evaluator.h"
#include "ngspell/ngram_index.h"
#include "ngspell/parallel.h"

namespace ngspell {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    return read_all(in);
}

void write_file(const std::string& path, std::string_view data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw IoError("cannot write '" + path + "'");
}

// "k=v" with k in 1..5 and v >= 1
void apply_min_count(const std::string& arg, IngestOptions& opts)
{
    auto eq = arg.find('=');
    std::size_t order = 0;
    Count value = 0;
    bool ok = eq != std::string::npos;
    if (ok) {
        auto r1 = std::from_chars(arg.data(), arg.data() + eq, order);
        auto r2 = std::from_chars(arg.data() + eq + 1, arg.data() + arg.size(), value);
        ok = r1.ec == std::errc() && r1.ptr == arg.data() + eq && r2.ec == std::errc() &&
             r2.ptr == arg.data() + arg.size() && order >= 1 && order <= kMaxOrder && value >= 1;
    }
    if (!ok)
        throw UsageError("--min-count expects ORDER=COUNT with ORDER in 1..5 and COUNT >= 1, got '" + arg + "'");
    opts.min_count[order - 1] = value;
}

void write_records(std::ostream& out, const CorrectionReport& report)
{
    for (const Correction& c : report.corrections)
        out << c.token_index << '\t' << c.original << '\t' << c.chosen.value_or("-") << '\t' << to_string(c.kind)
            << '\t' << c.nominee_frequency << '\n';
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"n-gram context spell checker"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ngspell 1.0");

    // build-index
    std::vector<std::string> corpus;
    std::string index_out;
    IngestOptions ingest;
    std::vector<std::string> min_counts;
    bool no_sentence_split = false;
    std::size_t threads = default_workers();

    auto* build = app.add_subcommand("build-index", "count word n-grams of a corpus into an NGIDX file");
    build->add_option("--corpus", corpus, "corpus text files")->required()->expected(1, -1);
    build->add_option("--out", index_out, "output index path")->required();
    build->add_option("--max-order", ingest.max_order, "highest n-gram order")->check(CLI::Range(1, 5));
    build->add_option("--min-count", min_counts, "pruning threshold ORDER=COUNT (repeatable)");
    build->add_flag("--no-sentence-split", no_sentence_split, "let n-grams cross sentence ends");
    build->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    // check
    std::string index_path, input_path, output_path;
    CorrectorOptions copts;
    bool no_backoff = false;
    auto* check = app.add_subcommand("check", "detect and correct spelling errors");
    check->add_option("--index", index_path, "NGIDX index")->required();
    check->add_option("--input", input_path, "input text (default: standard input)");
    check->add_option("--output", output_path, "corrected text (default: standard output)");
    check->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    check->add_option("--k", copts.k, "candidates per error")->check(CLI::PositiveNumber);
    check->add_flag("--realword", copts.realword, "also flag and correct real-word errors");
    check->add_option("--tau", copts.tau, "real-word acceptance ratio")->check(CLI::Range(1.0, 1e18));
    check->add_flag("--no-backoff", no_backoff, "score nominees at their full order only");

    // evaluate
    std::string text_path, truth_path, corrupted_path;
    InjectionPlan plan;
    bool no_realword = false;
    auto* eval = app.add_subcommand("evaluate", "inject errors into clean text, correct them and report");
    eval->add_option("--index", index_path, "NGIDX index")->required();
    eval->add_option("--text", text_path, "clean text")->required();
    eval->add_option("--rate", plan.rate, "fraction of words to corrupt")->required();
    eval->add_option("--realword-frac", plan.realword_frac, "fraction of corruptions that are real words")->required();
    eval->add_option("--seed", plan.seed, "injection seed")->required();
    eval->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    eval->add_option("--k", copts.k, "candidates per error")->check(CLI::PositiveNumber);
    eval->add_option("--tau", copts.tau, "real-word acceptance ratio")->check(CLI::Range(1.0, 1e18));
    eval->add_flag("--no-backoff", no_backoff, "score nominees at their full order only");
    eval->add_flag("--no-realword", no_realword, "skip the real-word pass");
    eval->add_option("--truth", truth_path, "write ground truth TSV here");
    eval->add_option("--corrupted", corrupted_path, "write the corrupted text here");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "classical string measures");
    baseline->require_subcommand(1);
    std::string word_a, word_b;
    auto* soundex = baseline->add_subcommand("soundex", "Soundex code of a word");
    soundex->add_option("word", word_a)->required();
    auto* editdist = baseline->add_subcommand("editdist", "Levenshtein distance");
    editdist->add_option("a", word_a)->required();
    editdist->add_option("b", word_b)->required();
    auto* hamming = baseline->add_subcommand("hamming", "Hamming distance");
    hamming->add_option("a", word_a)->required();
    hamming->add_option("b", word_b)->required();
    auto* lcs = baseline->add_subcommand("lcs", "longest common subsequence");
    lcs->add_option("a", word_a)->required();
    lcs->add_option("b", word_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*build) {
            for (const auto& mc : min_counts)
                apply_min_count(mc, ingest);
            ingest.sentence_split = !no_sentence_split;
            ingest.workers = threads;
            std::vector<std::filesystem::path> paths(corpus.begin(), corpus.end());
            const NgramIndex ix = build_index(paths, ingest);
            ix.save(std::filesystem::path(index_out));
            for (std::size_t k = 1; k <= kMaxOrder; ++k)
                out << "order " << k << ": " << ix.entries(k) << '\n';
            return kExitOk;
        }

        copts.backoff = !no_backoff;

        if (*check) {
            const NgramIndex ix = NgramIndex::load(std::filesystem::path(index_path));
            const std::string text = input_path.empty() ? read_all(in) : read_file(input_path);
            const CorrectionReport report = correct_text(text, ix, threads, copts);
            if (output_path.empty()) {
                out << report.corrected_text;
                write_records(err, report);
            } else {
                write_file(output_path, report.corrected_text);
                write_records(out, report);
            }
            return kExitOk;
        }

        if (*eval) {
            copts.realword = !no_realword;
            const NgramIndex ix = NgramIndex::load(std::filesystem::path(index_path));
            const TokenizedText clean = tokenize(read_file(text_path));
            const Injection inj = inject_errors(clean, ix, plan);
            if (!truth_path.empty()) {
                std::ostringstream tsv;
                write_truth(tsv, inj.truth);
                write_file(truth_path, tsv.str());
            }
            if (!corrupted_path.empty())
                write_file(corrupted_path, inj.text);
            const CorrectionReport report = correct_text(inj.text, ix, threads, copts);
            write_report(out, evaluate(report, inj));
            return kExitOk;
        }

        if (*soundex) {
            out << baselines::soundex(word_a) << '\n';
        } else if (*editdist) {
            out << baselines::levenshtein(word_a, word_b) << '\n';
        } else if (*hamming) {
            out << baselines::hamming(word_a, word_b) << '\n';
        } else if (*lcs) {
            const auto r = baselines::lcs(word_a, word_b);
            out << r.length << '\t' << r.witness << '\n';
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

} // namespace ngspell
