#ifndef GAUSSKIT_WORDS_HPP
#define GAUSSKIT_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gausskit/errors.hpp"

namespace gausskit {

/// Letters are single ASCII alphanumeric tokens.
using Letter = char;

/// Canonical alphabet, in order: 'A'-'Z', 'a'-'z', '0'-'9'. 62 letters total.
std::string_view canonical_alphabet();

/// True if c is a valid letter token.
bool is_letter_token(char c);

/// Index of c in the canonical alphabet, or -1.
int alphabet_index(char c);

/// A word in which every distinct letter occurs exactly twice.
/// Immutable after construction; the empty word is valid.
class GaussWord {
public:
    GaussWord() = default;

    /// Validating constructor. Throws BadTokenError or NonGaussError.
    explicit GaussWord(std::string letters);

    /// Parses the external word format. "-" denotes the empty word.
    static GaussWord parse(std::string_view text);

    const std::string& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    int rank() const { return static_cast<int>(letters_.size() / 2); }
    bool empty() const { return letters_.empty(); }

    /// Decomposition w = x·A·y·A·z at the two occurrences of A.
    struct Site {
        std::string x, y, z;
    };

    /// Throws MissingLetterError if the letter does not occur.
    Site letter_site(Letter letter) const;

    /// Distinct letters in order of first occurrence.
    std::string distinct_letters() const;

    /// External form: the letters, or "-" for the empty word.
    std::string str() const;

    friend bool operator==(const GaussWord&, const GaussWord&) = default;

private:
    std::string letters_;
};

/// An ordered sequence of components (each possibly empty) whose
/// concatenation is a Gauss word. Immutable after construction.
class GaussPhrase {
public:
    /// Single empty component.
    GaussPhrase() : components_(1) {}

    /// Validating constructor. Throws BadTokenError or NonGaussError.
    explicit GaussPhrase(std::vector<std::string> components);

    /// Parses `component ('|' component)*`; "-" alone is the empty word.
    static GaussPhrase parse(std::string_view text);

    /// Embeds a word as a 1-component phrase.
    static GaussPhrase from_word(const GaussWord& word);

    const std::vector<std::string>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    const std::string& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

    /// All letters in order, separators dropped.
    std::string concat() const;

    std::size_t length() const;
    int rank() const { return static_cast<int>(length() / 2); }

    /// Components joined by '|'. The 1-component empty phrase yields "".
    std::string str() const;

    /// Like str() but prints "-" for the 1-component empty phrase.
    std::string display() const;

    /// The word view of a 1-component phrase. Throws ArityError otherwise.
    GaussWord as_word() const;

    friend bool operator==(const GaussPhrase&, const GaussPhrase&) = default;

private:
    struct Unchecked {};
    GaussPhrase(std::vector<std::string> components, Unchecked)
        : components_(std::move(components)) {}

    std::vector<std::string> components_;

    friend GaussPhrase canonicalize(const GaussPhrase&);
};

/// Distinct letters renamed to the canonical alphabet in order of first
/// occurrence, reading components left to right. Idempotent; two phrases
/// with equal component counts are isomorphic iff their canonical forms
/// are equal letter-for-letter.
GaussPhrase canonicalize(const GaussPhrase& phrase);
GaussWord canonicalize(const GaussWord& word);

/// str() of the canonical form; used as a state key by the search oracle.
std::string canonical_key(const GaussPhrase& phrase);

bool is_isomorphic(const GaussPhrase& a, const GaussPhrase& b);
bool is_isomorphic(const GaussWord& a, const GaussWord& b);

} // namespace gausskit

#endif
