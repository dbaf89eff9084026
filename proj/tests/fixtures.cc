#include "fixtures.h"

#include <algorithm>
#include <set>

namespace ngspell::testing {

NgramIndex example_fixture()
{
    NgramIndex::Builder b;
    const std::vector<std::pair<const char*, Count>> lexicon = {
        // "mo"
        {"mold", 6}, {"modal", 10}, {"model", 50}, {"mom", 8}, {"mother", 40}, {"mole", 3},
        // "od"
        {"mode", 12}, {"rode", 9}, {"triode", 1}, {"encode", 4},
        // "di"
        {"lading", 2}, {"ladino", 1}, {"radian", 5}, {"radiant", 3}, {"din", 2}, {"parading", 1},
        // "il"
        {"rail", 7}, {"peril", 4}, {"derail", 2}, {"aril", 1}, {"bail", 3}, {"broil", 2},
        // sentence words
        {"they", 90}, {"also", 60}, {"work", 30}, {"with", 80}, {"plastic", 20}, {"kits", 5},
    };
    for (auto [w, c] : lexicon)
        b.add({w}, c);
    b.add({"also", "work", "with", "plastic", "model"}, 17);
    b.add({"also", "work", "with", "plastic", "modal"}, 2);
    b.add({"plastic", "model", "kits"}, 4);
    b.add({"plastic", "model"}, 19);
    b.add({"plastic", "modal"}, 2);
    return std::move(b).build();
}

NgramIndex realword_fixture()
{
    NgramIndex::Builder b;
    for (auto w : {"the", "content", "of", "computer", "is", "vulnerable", "to", "few", "fee", "feed", "risks", "fill",
                   "out", "form", "from"})
        b.add({w}, 5);
    b.add({"is", "vulnerable", "to", "few", "risks"}, 6);
    b.add({"is", "vulnerable", "to", "few"}, 7);
    b.add({"vulnerable", "to", "few"}, 7);
    b.add({"to", "few"}, 9);
    b.add({"to", "fee"}, 1);
    b.add({"fill", "out", "the", "form"}, 9);
    b.add({"out", "the", "form"}, 9);
    b.add({"the", "form"}, 12);
    return std::move(b).build();
}

std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, char max_letter)
{
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> letter('a', max_letter);
    std::string w(len(rng), 'a');
    for (char& c : w)
        c = static_cast<char>(letter(rng));
    return w;
}

std::vector<std::string> random_lexicon(std::mt19937_64& rng, std::size_t size, char max_letter)
{
    std::set<std::string> words;
    while (words.size() < size)
        words.insert(random_word(rng, 2, 9, max_letter));
    return {words.begin(), words.end()};
}

NgramIndex lexicon_index(const std::vector<std::string>& lexicon, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Count> count(1, 50);
    NgramIndex::Builder b;
    for (const auto& w : lexicon)
        b.add({std::string_view(w)}, count(rng));
    return std::move(b).build();
}

} // namespace ngspell::testing
