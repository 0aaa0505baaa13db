#ifndef GAUSSKIT_COVERINGS_HPP
#define GAUSSKIT_COVERINGS_HPP

#include <string>
#include <utility>
#include <vector>

#include "gausskit/words.hpp"

namespace gausskit {

/// Per-letter parity of a word: a letter A in w = xAyAz is odd when y has
/// odd length. Every Gauss word has an even number of odd-parity letters.
class ParityTable {
public:
    struct Entry {
        Letter letter;
        bool odd;
    };

    explicit ParityTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    const std::vector<Entry>& entries() const { return entries_; }
    bool odd(Letter letter) const; // throws MissingLetterError
    std::string odd_letters() const;
    std::string even_letters() const;
    int odd_count() const;

private:
    std::vector<Entry> entries_; // order of first occurrence
};

ParityTable parity(const GaussWord& word);

/// The word with every odd-parity letter deleted.
GaussWord cover(const GaussWord& word);

/// Wraps the first occurrence of each odd-parity letter A as XAX with a
/// fresh letter, in order of first occurrence; fresh letters are taken in
/// canonical-alphabet order after the largest letter in use.
/// cover(lift(w)) == w exactly. Throws CapacityError if letters run out.
GaussWord lift(const GaussWord& word);

/// The cover tower w_0 = w, w_{i+1} = cover(w_i) up to its fixed point.
/// height is the number of strict steps (an upper bound on the homotopy
/// stabilization height); base is the fixed word; tower lists
/// w_0 .. w_height.
struct CoverTower {
    int height = 0;
    GaussWord base;
    std::vector<GaussWord> tower;
};

CoverTower syntactic_height(const GaussWord& word);

/// i-fold lift; cover applied i times returns the original exactly.
GaussWord lift_family(const GaussWord& word, int i);

} // namespace gausskit

#endif
