#ifndef GAUSSKIT_S_INVARIANT_HPP
#define GAUSSKIT_S_INVARIANT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gausskit/words.hpp"

namespace gausskit {

/// Element of K_n = (Z/2)^n, indexed by phrase components. Ordered by the
/// first differing coordinate, 0 before 1.
class BitVector {
public:
    explicit BitVector(int n) : bits_(static_cast<std::size_t>(n), 0) {}
    BitVector(std::initializer_list<int> bits);

    int size() const { return static_cast<int>(bits_.size()); }
    bool get(int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
    void set(int i, bool value) { bits_[static_cast<std::size_t>(i)] = value ? 1 : 0; }
    void flip(int i) { bits_[static_cast<std::size_t>(i)] ^= 1; }

    /// Coordinatewise sum mod 2 (equals the difference).
    BitVector plus(const BitVector& other) const;

    bool is_zero() const;
    std::string to01() const;
    std::vector<int> to_ints() const;

    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Orbit of K_n under c_v : x -> v - x mod 2. Singleton when v = 0,
/// a two-element set otherwise; representative is the order-minimum.
struct Orbit {
    BitVector representative;
    std::optional<BitVector> partner;
};

/// The full partition of K_n into c_v-orbits, representatives ascending.
/// Exponential in v.size(); rejects n > 16 with a CapacityError.
std::vector<Orbit> orbit_map(const BitVector& v);

/// Linking vector of the span [begin, end) of the given component: bit i
/// counts, mod 2, the letters occurring once in the span whose partner
/// occurrence lies in component i. Throws SpanError on bad coordinates.
BitVector linking_vector(const GaussPhrase& phrase, int comp, int begin, int end);

/// Linking vector of a whole component.
BitVector component_linking_vector(const GaussPhrase& phrase, int comp);

/// Linking vector of the span between the two occurrences of a letter that
/// appears twice within one component. Throws MissingLetterError or
/// SplitLetterError.
BitVector letter_linking_vector(const GaussPhrase& phrase, Letter letter);

/// One component's slice of the S (or S_m) invariant: the component
/// linking vector plus an ascending list of marked vectors. As a matrix:
/// the linking vector is row 0 and the marked vectors the remaining rows.
struct SComponent {
    BitVector linking;
    std::vector<BitVector> rows;

    std::vector<std::vector<int>> matrix() const;
    std::string encode() const; // rows as 0/1 strings joined by ';'
    friend bool operator==(const SComponent&, const SComponent&) = default;
};

/// The S invariant: one SComponent per phrase component, where the marked
/// vectors are representatives of the c_l-orbits hit by an odd number of
/// twice-in-component letters (the zero orbit excluded).
struct SValue {
    std::vector<SComponent> components;

    std::string encode() const; // components joined by '/'
    std::vector<std::vector<std::vector<int>>> matrices() const;
    friend bool operator==(const SValue&, const SValue&) = default;
};

SValue compute_S(const GaussPhrase& phrase);

/// Swaps the two components and both coordinates everywhere, then
/// re-normalizes orbit representatives and row order so the result is
/// again a canonical matrix form. Equals compute_S of the swapped phrase.
/// Throws ArityError unless the value has exactly two components.
SValue transpose_S(const SValue& s);

/// Canonical byte encoding of S modulo transposition; invariant under
/// swapping the two components. Throws ArityError.
std::string unordered_key(const SValue& s);
std::string unordered_key(const GaussPhrase& phrase);

/// The mixed-homotopy invariant of 2-component phrases: the closed side
/// keeps the orbit quotient, the open side records raw linking vectors
/// (nonzero, odd multiplicity) with no quotient.
struct SMValue {
    SComponent first;
    SComponent second;

    std::string encode() const;
    std::vector<std::vector<std::vector<int>>> matrices() const;
    friend bool operator==(const SMValue&, const SMValue&) = default;
};

SMValue compute_S_m(const GaussPhrase& phrase);

/// encode(compute_S_m(phrase)); the class key used by the z_o sum.
std::string mixed_key(const GaussPhrase& phrase);

} // namespace gausskit

#endif
