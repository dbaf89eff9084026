#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ngspell/ngram_index.h"

namespace ngspell {

struct IngestOptions {
    std::size_t max_order = kMaxOrder;
    std::array<Count, kMaxOrder> min_count{1, 1, 1, 1, 1}; // per order, index 0 = unigrams
    bool sentence_split = true;
    std::size_t workers = 1;

    void validate() const;
};

/// Counts word n-grams of orders 1..max_order over every corpus file. N-grams
/// never span a non-word token or a file boundary, nor a sentence end when
/// sentence_split is set. Output is a pure function of the corpus bytes and the
/// options, independent of `workers`.
///
/// Throws IoError for an unreadable path, EmptyCorpusError when the corpus
/// holds no words.
NgramIndex build_index(std::span<const std::filesystem::path> corpus_paths, const IngestOptions& opts);

/// Same as build_index with in-memory documents in place of files.
NgramIndex build_index_from_texts(std::span<const std::string> documents, const IngestOptions& opts);

} // namespace ngspell
