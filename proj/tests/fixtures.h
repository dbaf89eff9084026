#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ngspell/ngram_index.h"

namespace ngspell::testing {

// The running example: the lexicon holds the four posting lists retrieved for
// "modil" plus the words of "they also work with plastic modil kits".
// "also work with plastic model" is the unique highest nominee (17), the modal
// variant is seen twice, the others never.
NgramIndex example_fixture();

inline const char* const kExampleSentence = "they also work with plastic modil kits";
inline const char* const kExampleCorrected = "they also work with plastic model kits";

// Real-word fixture around "fee risks" / "few risks": the context
// "vulnerable to few risks" is common, the "fee" variant unseen.
NgramIndex realword_fixture();

// Random lowercase words over a small alphabet so bigrams overlap heavily.
std::vector<std::string> random_lexicon(std::mt19937_64& rng, std::size_t size, char max_letter = 'h');

// Index holding the lexicon as unigrams with random counts.
NgramIndex lexicon_index(const std::vector<std::string>& lexicon, std::mt19937_64& rng);

std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, char max_letter);

} // namespace ngspell::testing
