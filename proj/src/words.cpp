#include "gausskit/words.hpp"

#include <algorithm>
#include <array>

namespace gausskit {

namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

std::array<int, 256> build_index_table() {
    std::array<int, 256> table{};
    table.fill(-1);
    for (std::size_t i = 0; i < kAlphabet.size(); ++i)
        table[static_cast<unsigned char>(kAlphabet[i])] = static_cast<int>(i);
    return table;
}

const std::array<int, 256>& index_table() {
    static const std::array<int, 256> table = build_index_table();
    return table;
}

void check_tokens(std::string_view letters) {
    for (char c : letters)
        if (!is_letter_token(c))
            throw BadTokenError("invalid token '" + std::string(1, c) +
                                "' (letters are [A-Za-z0-9])");
}

void check_double_occurrence(std::string_view letters) {
    std::array<int, 256> counts{};
    for (char c : letters)
        ++counts[static_cast<unsigned char>(c)];
    for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c] != 0 && counts[c] != 2)
            throw NonGaussError("letter '" + std::string(1, static_cast<char>(c)) +
                                "' occurs " + std::to_string(counts[c]) +
                                " times, expected exactly 2");
}

} // namespace

std::string_view canonical_alphabet() { return kAlphabet; }

bool is_letter_token(char c) { return alphabet_index(c) >= 0; }

int alphabet_index(char c) { return index_table()[static_cast<unsigned char>(c)]; }

GaussWord::GaussWord(std::string letters) : letters_(std::move(letters)) {
    check_tokens(letters_);
    check_double_occurrence(letters_);
}

GaussWord GaussWord::parse(std::string_view text) {
    if (text == "-")
        return GaussWord();
    return GaussWord(std::string(text));
}

GaussWord::Site GaussWord::letter_site(Letter letter) const {
    auto first = letters_.find(letter);
    if (first == std::string::npos)
        throw MissingLetterError("letter '" + std::string(1, letter) +
                                 "' does not occur in word");
    auto second = letters_.find(letter, first + 1);
    return Site{letters_.substr(0, first),
                letters_.substr(first + 1, second - first - 1),
                letters_.substr(second + 1)};
}

std::string GaussWord::distinct_letters() const {
    std::string seen;
    for (char c : letters_)
        if (seen.find(c) == std::string::npos)
            seen.push_back(c);
    return seen;
}

std::string GaussWord::str() const { return letters_.empty() ? "-" : letters_; }

GaussPhrase::GaussPhrase(std::vector<std::string> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw NonGaussError("a phrase has at least one component");
    for (const auto& comp : components_)
        check_tokens(comp);
    check_double_occurrence(concat());
}

GaussPhrase GaussPhrase::parse(std::string_view text) {
    if (text == "-")
        return GaussPhrase();
    std::vector<std::string> comps(1);
    for (char c : text) {
        if (c == '|')
            comps.emplace_back();
        else
            comps.back().push_back(c);
    }
    return GaussPhrase(std::move(comps));
}

GaussPhrase GaussPhrase::from_word(const GaussWord& word) {
    return GaussPhrase({word.letters()});
}

std::string GaussPhrase::concat() const {
    std::string all;
    for (const auto& comp : components_)
        all += comp;
    return all;
}

std::size_t GaussPhrase::length() const {
    std::size_t total = 0;
    for (const auto& comp : components_)
        total += comp.size();
    return total;
}

std::string GaussPhrase::str() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0)
            out.push_back('|');
        out += components_[i];
    }
    return out;
}

std::string GaussPhrase::display() const {
    std::string s = str();
    return s.empty() ? "-" : s;
}

GaussWord GaussPhrase::as_word() const {
    if (components_.size() != 1)
        throw ArityError("phrase has " + std::to_string(components_.size()) +
                         " components, expected 1");
    return GaussWord(components_[0]);
}

GaussPhrase canonicalize(const GaussPhrase& phrase) {
    std::array<char, 256> rename{};
    rename.fill(0);
    std::size_t next = 0;
    std::vector<std::string> comps = phrase.components();
    for (auto& comp : comps) {
        for (char& c : comp) {
            char& slot = rename[static_cast<unsigned char>(c)];
            if (slot == 0) {
                if (next >= kAlphabet.size())
                    throw CapacityError("rank exceeds the 62-letter alphabet");
                slot = kAlphabet[next++];
            }
            c = slot;
        }
    }
    return GaussPhrase(std::move(comps), GaussPhrase::Unchecked{});
}

GaussWord canonicalize(const GaussWord& word) {
    return canonicalize(GaussPhrase::from_word(word)).as_word();
}

std::string canonical_key(const GaussPhrase& phrase) {
    return canonicalize(phrase).str();
}

bool is_isomorphic(const GaussPhrase& a, const GaussPhrase& b) {
    return a.component_count() == b.component_count() &&
           canonicalize(a).components() == canonicalize(b).components();
}

bool is_isomorphic(const GaussWord& a, const GaussWord& b) {
    return is_isomorphic(GaussPhrase::from_word(a), GaussPhrase::from_word(b));
}

} // namespace gausskit
