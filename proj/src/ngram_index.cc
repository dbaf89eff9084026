#include "ngspell/ngram_index.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ngspell/errors.h"
#include "ngspell/text.h"

namespace ngspell {
namespace {

constexpr std::string_view kHeader = "NGIDX v1";

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

using WordIds = std::unordered_map<std::string, WordId, StringHash, std::equal_to<>>;

void check_arity(std::size_t n)
{
    if (n == 0 || n > kMaxOrder)
        throw ArityError("n-gram length must be in 1..5, got " + std::to_string(n));
}

// Compares the k-id keys at entries a and b.
bool key_less(const WordId* a, const WordId* b, std::size_t k)
{
    return std::lexicographical_compare(a, a + k, b, b + k);
}

std::vector<std::string_view> split_spaces(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(' ', start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

} // namespace

bool is_normalized_word(std::string_view word)
{
    if (word.empty())
        return false;
    std::size_t pos = 0;
    while (pos < word.size()) {
        char32_t cp = text::next_code_point(word, pos);
        if (!text::is_letter(cp) || text::to_lower(cp) != cp)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// queries

std::optional<WordId> NgramIndex::find(std::string_view word) const
{
    auto it = ids_.find(word);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

bool NgramIndex::contains_unigram(std::string_view word) const
{
    return !word.empty() && ids_.contains(word);
}

Count NgramIndex::ngram_count_ids(std::span<const WordId> ids) const
{
    check_arity(ids.size());
    const std::size_t k = ids.size();
    if (k == 1)
        return ids[0] < unigram_counts_.size() ? unigram_counts_[ids[0]] : 0;
    const Table& t = tables_[k - 2];
    std::size_t lo = 0, hi = t.counts.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (key_less(t.keys.data() + mid * k, ids.data(), k))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < t.counts.size() && std::equal(ids.begin(), ids.end(), t.keys.data() + lo * k))
        return t.counts[lo];
    return 0;
}

Count NgramIndex::ngram_count(std::span<const std::string_view> words) const
{
    check_arity(words.size());
    std::array<WordId, kMaxOrder> ids{};
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto id = find(words[i]);
        if (!id)
            return 0;
        ids[i] = *id;
    }
    return ngram_count_ids(std::span<const WordId>(ids.data(), words.size()));
}

Count NgramIndex::ngram_count(std::span<const std::string> words) const
{
    check_arity(words.size());
    std::array<std::string_view, kMaxOrder> views{};
    std::copy(words.begin(), words.end(), views.begin());
    return ngram_count(std::span<const std::string_view>(views.data(), words.size()));
}

Count NgramIndex::ngram_count(std::initializer_list<std::string_view> words) const
{
    return ngram_count(std::span<const std::string_view>(words.begin(), words.size()));
}

std::span<const WordId> NgramIndex::postings(const LetterBigram& bg) const
{
    auto it = postings_.find(bg.key());
    if (it == postings_.end())
        return {};
    return it->second;
}

std::vector<std::string> NgramIndex::postings_for_bigram(const LetterBigram& bg) const
{
    std::vector<std::string> out;
    for (WordId id : postings(bg))
        out.push_back(words_[id]);
    return out;
}

std::size_t NgramIndex::entries(std::size_t order) const
{
    check_arity(order);
    return order == 1 ? words_.size() : tables_[order - 2].counts.size();
}

std::size_t NgramIndex::max_stored_order() const
{
    for (std::size_t k = kMaxOrder; k >= 2; --k)
        if (!tables_[k - 2].counts.empty())
            return k;
    return words_.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// construction

void NgramIndex::sort_table(Table& t, std::size_t k)
{
    std::vector<std::size_t> perm(t.counts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return key_less(t.keys.data() + a * k, t.keys.data() + b * k, k);
    });
    Table sorted;
    sorted.keys.reserve(t.keys.size());
    sorted.counts.reserve(t.counts.size());
    for (std::size_t i : perm) {
        sorted.keys.insert(sorted.keys.end(), t.keys.begin() + i * k, t.keys.begin() + (i + 1) * k);
        sorted.counts.push_back(t.counts[i]);
    }
    t = std::move(sorted);
}

NgramIndex NgramIndex::assemble(std::vector<std::string> words, std::vector<Count> unigram_counts,
                                std::array<Table, kMaxOrder - 1> tables)
{
    NgramIndex ix;
    ix.words_ = std::move(words);
    ix.unigram_counts_ = std::move(unigram_counts);
    ix.tables_ = std::move(tables);
    ix.lengths_.reserve(ix.words_.size());
    ix.ids_.reserve(ix.words_.size());
    for (WordId id = 0; id < ix.words_.size(); ++id) {
        const std::string& w = ix.words_[id];
        ix.lengths_.push_back(static_cast<std::uint32_t>(text::length(w)));
        ix.ids_.emplace(std::string_view(w), id);
        // ids ascend, so every posting list comes out sorted and duplicate-free
        for (const auto& bg : letter_bigrams(w))
            ix.postings_[bg.key()].push_back(id);
    }
    return ix;
}

NgramIndex NgramIndex::from_id_tables(std::vector<std::string> words, std::vector<Count> unigram_counts,
                                      std::array<IdTable, kMaxOrder - 1> tables)
{
    if (words.size() != unigram_counts.size())
        throw std::invalid_argument("lexicon and unigram counts differ in length");
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!is_normalized_word(words[i]))
            throw std::invalid_argument("not a normalized word: '" + words[i] + "'");
        if (i > 0 && !(words[i - 1] < words[i]))
            throw std::invalid_argument("lexicon must be strictly ascending");
        if (unigram_counts[i] == 0)
            throw std::invalid_argument("n-gram counts must be positive");
    }
    for (std::size_t k = 2; k <= kMaxOrder; ++k) {
        Table& t = tables[k - 2];
        if (t.keys.size() != t.counts.size() * k)
            throw std::invalid_argument("order " + std::to_string(k) + " table has mismatched key/count sizes");
        for (WordId id : t.keys)
            if (id >= words.size())
                throw std::invalid_argument("order " + std::to_string(k) + " table references unknown word id");
        for (Count c : t.counts)
            if (c == 0)
                throw std::invalid_argument("n-gram counts must be positive");
        sort_table(t, k);
        for (std::size_t i = 1; i < t.counts.size(); ++i)
            if (std::equal(t.keys.begin() + (i - 1) * k, t.keys.begin() + i * k, t.keys.begin() + i * k))
                throw std::invalid_argument("duplicate order " + std::to_string(k) + " entry");
    }
    return assemble(std::move(words), std::move(unigram_counts), std::move(tables));
}

void NgramIndex::Builder::add(std::span<const std::string> words, Count count)
{
    check_arity(words.size());
    if (count == 0)
        throw std::invalid_argument("n-gram counts must be positive");
    std::string joined;
    for (const auto& w : words) {
        if (!is_normalized_word(w))
            throw std::invalid_argument("not a normalized word: '" + w + "'");
        if (!joined.empty())
            joined.push_back(' ');
        joined += w;
    }
    counts_[words.size() - 1][joined] += count;
}

void NgramIndex::Builder::add(std::initializer_list<std::string_view> words, Count count)
{
    std::vector<std::string> v(words.begin(), words.end());
    add(std::span<const std::string>(v), count);
}

void NgramIndex::Builder::add_joined(std::size_t order, std::string_view joined, Count count)
{
    check_arity(order);
    if (count == 0)
        throw std::invalid_argument("n-gram counts must be positive");
    counts_[order - 1][std::string(joined)] += count;
}

NgramIndex NgramIndex::Builder::build() &&
{
    std::vector<std::pair<std::string, Count>> uni(counts_[0].begin(), counts_[0].end());
    std::sort(uni.begin(), uni.end());
    std::vector<std::string> words;
    std::vector<Count> counts;
    words.reserve(uni.size());
    counts.reserve(uni.size());
    WordIds ids;
    ids.reserve(uni.size());
    for (auto& [w, c] : uni) {
        ids.emplace(w, static_cast<WordId>(words.size()));
        words.push_back(std::move(w));
        counts.push_back(c);
    }

    std::array<Table, kMaxOrder - 1> tables;
    for (std::size_t k = 2; k <= kMaxOrder; ++k) {
        Table& t = tables[k - 2];
        t.keys.reserve(counts_[k - 1].size() * k);
        t.counts.reserve(counts_[k - 1].size());
        for (const auto& [joined, c] : counts_[k - 1]) {
            auto parts = split_spaces(joined);
            if (parts.size() != k)
                throw std::invalid_argument("n-gram '" + joined + "' is not of order " + std::to_string(k));
            for (auto part : parts) {
                auto it = ids.find(std::string(part));
                if (it == ids.end())
                    throw std::invalid_argument("word '" + std::string(part) + "' of n-gram '" + joined +
                                                "' has no unigram entry");
                t.keys.push_back(it->second);
            }
            t.counts.push_back(c);
        }
        sort_table(t, k);
    }
    counts_ = {};
    return assemble(std::move(words), std::move(counts), std::move(tables));
}

// ---------------------------------------------------------------------------
// NGIDX v1 text format

void NgramIndex::save(std::ostream& out) const
{
    std::string buf;
    buf.reserve(1 << 20);
    auto flush = [&](bool force) {
        if (force || buf.size() > (1u << 20) - 256) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    };
    buf += kHeader;
    buf += '\n';
    char num[24];
    for (std::size_t k = 1; k <= kMaxOrder; ++k) {
        buf += '[';
        buf += std::to_string(k);
        buf += "]\n";
        for_each(k, [&](std::span<const WordId> key, Count c) {
            auto res = std::to_chars(num, num + sizeof num, c);
            buf.append(num, res.ptr);
            buf += '\t';
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i)
                    buf += ' ';
                buf += words_[key[i]];
            }
            buf += '\n';
            flush(false);
        });
    }
    flush(true);
    if (!out)
        throw IoError("failed writing index");
}

void NgramIndex::save(const std::filesystem::path& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    save(out);
    out.close();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

NgramIndex NgramIndex::load(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ParseError(1, "empty file, expected header '" + std::string(kHeader) + "'");
    ++line_no;
    if (line != kHeader) {
        if (line.rfind("NGIDX v", 0) == 0)
            throw UnsupportedVersionError(line_no, "unsupported index version '" + line + "'");
        throw ParseError(line_no, "malformed header '" + line + "'");
    }

    std::size_t order = 0; // current section, 0 = before [1]
    std::vector<std::string> uni_words;
    std::vector<Count> uni_counts;
    WordIds ids;
    std::array<Table, kMaxOrder - 1> tables;
    std::array<std::vector<std::size_t>, kMaxOrder - 1> table_lines;

    // Sorts the unigram section and assigns ids; called when [2] opens.
    auto finish_unigrams = [&] {
        std::vector<std::size_t> perm(uni_words.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return uni_words[a] < uni_words[b]; });
        std::vector<std::string> words;
        std::vector<Count> counts;
        words.reserve(perm.size());
        counts.reserve(perm.size());
        for (std::size_t i : perm) {
            words.push_back(std::move(uni_words[i]));
            counts.push_back(uni_counts[i]);
        }
        ids.clear();
        for (WordId id = 0; id < words.size(); ++id)
            ids.emplace(words[id], id);
        uni_words = std::move(words);
        uni_counts = std::move(counts);
    };

    std::unordered_map<std::string, std::size_t> uni_seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '[') {
            const std::string expected = "[" + std::to_string(order + 1) + "]";
            if (order >= kMaxOrder || line != expected)
                throw ParseError(line_no, "unexpected section marker '" + line + "'" +
                                              (order < kMaxOrder ? ", expected '" + expected + "'" : ""));
            ++order;
            if (order == 2)
                finish_unigrams();
            continue;
        }
        if (order == 0)
            throw ParseError(line_no, "entry before section marker [1]");
        if (line.empty())
            throw ParseError(line_no, "empty line");

        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(line_no, "missing TAB between count and words");
        std::string_view count_str(line.data(), tab);
        Count count = 0;
        auto [ptr, ec] = std::from_chars(count_str.data(), count_str.data() + count_str.size(), count);
        if (count_str.empty() || ec != std::errc() || ptr != count_str.data() + count_str.size())
            throw ParseError(line_no, "invalid count '" + std::string(count_str) + "'");
        if (count == 0)
            throw ParseError(line_no, "count must be positive");

        auto parts = split_spaces(std::string_view(line).substr(tab + 1));
        if (parts.size() != order)
            throw ParseError(line_no, "expected " + std::to_string(order) + " word(s) in section [" +
                                          std::to_string(order) + "], found " + std::to_string(parts.size()));
        for (auto w : parts)
            if (!is_normalized_word(w))
                throw ParseError(line_no, "invalid word '" + std::string(w) + "'");

        if (order == 1) {
            auto [it, inserted] = uni_seen.emplace(std::string(parts[0]), line_no);
            if (!inserted)
                throw ParseError(line_no, "duplicate entry (first at line " + std::to_string(it->second) + ")");
            uni_words.emplace_back(parts[0]);
            uni_counts.push_back(count);
            continue;
        }
        Table& t = tables[order - 2];
        for (auto w : parts) {
            auto it = ids.find(w);
            if (it == ids.end())
                throw ParseError(line_no, "word '" + std::string(w) + "' has no unigram entry");
            t.keys.push_back(it->second);
        }
        t.counts.push_back(count);
        table_lines[order - 2].push_back(line_no);
    }
    if (order < kMaxOrder)
        throw ParseError(line_no + 1, "missing section marker [" + std::to_string(order + 1) + "]");

    for (std::size_t k = 2; k <= kMaxOrder; ++k) {
        Table& t = tables[k - 2];
        auto& lines = table_lines[k - 2];
        std::vector<std::size_t> perm(t.counts.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return key_less(t.keys.data() + a * k, t.keys.data() + b * k, k);
        });
        for (std::size_t i = 1; i < perm.size(); ++i) {
            const WordId* a = t.keys.data() + perm[i - 1] * k;
            const WordId* b = t.keys.data() + perm[i] * k;
            if (std::equal(a, a + k, b)) {
                auto first = std::min(lines[perm[i - 1]], lines[perm[i]]);
                auto second = std::max(lines[perm[i - 1]], lines[perm[i]]);
                throw ParseError(second, "duplicate entry (first at line " + std::to_string(first) + ")");
            }
        }
        lines = {};
        sort_table(t, k);
    }
    return assemble(std::move(uni_words), std::move(uni_counts), std::move(tables));
}

NgramIndex NgramIndex::load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open index '" + path.string() + "'");
    return load(in);
}

} // namespace ngspell
