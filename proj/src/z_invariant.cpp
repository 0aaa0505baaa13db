#include "gausskit/z_invariant.hpp"

#include "gausskit/s_invariant.hpp"

namespace gausskit {

void ClassSumMod2::toggle(std::string key) {
    auto it = odd_keys.find(key);
    if (it != odd_keys.end())
        odd_keys.erase(it);
    else
        odd_keys.insert(std::move(key));
}

GaussPhrase phrase_for_letter(const GaussWord& word, Letter letter) {
    GaussWord::Site site = word.letter_site(letter);
    return GaussPhrase({site.y, site.x + site.z});
}

GaussPhrase trivial_phrase(const GaussWord& word) {
    return GaussPhrase({std::string(), word.letters()});
}

ClassSumMod2 compute_z(const GaussWord& word) {
    ClassSumMod2 sum;
    for (Letter letter : word.distinct_letters())
        sum.toggle(unordered_key(phrase_for_letter(word, letter)));
    if (word.rank() % 2 == 1)
        sum.toggle(unordered_key(trivial_phrase(word)));
    return sum;
}

ClassSumMod2 compute_z_o(const GaussWord& word) {
    ClassSumMod2 sum;
    for (Letter letter : word.distinct_letters())
        sum.toggle(mixed_key(phrase_for_letter(word, letter)));
    if (word.rank() % 2 == 1)
        sum.toggle(mixed_key(trivial_phrase(word)));
    return sum;
}

} // namespace gausskit
