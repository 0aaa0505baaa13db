#ifndef GAUSSKIT_Z_INVARIANT_HPP
#define GAUSSKIT_Z_INVARIANT_HPP

#include <set>
#include <string>

#include "gausskit/words.hpp"

namespace gausskit {

/// A formal sum, mod 2, of homotopy-class keys: the set of keys with odd
/// multiplicity. Addition is symmetric difference; empty means zero.
struct ClassSumMod2 {
    std::set<std::string> odd_keys;

    void toggle(std::string key);
    bool nonzero() const { return !odd_keys.empty(); }

    friend bool operator==(const ClassSumMod2&, const ClassSumMod2&) = default;
};

inline bool is_nonzero(const ClassSumMod2& sum) { return sum.nonzero(); }

/// For w = xAyAz, the 2-component phrase y|xz.
GaussPhrase phrase_for_letter(const GaussWord& word, Letter letter);

/// The 2-component phrase with empty first component: |w.
GaussPhrase trivial_phrase(const GaussWord& word);

/// The computable image of the z invariant, keyed by the S invariant
/// modulo transposition: sums key(p(w,A)) over all letters A plus rank
/// copies of key(|w), all mod 2. Nonzero certifies that w is not
/// homotopically trivial; zero is inconclusive.
ClassSumMod2 compute_z(const GaussWord& word);

/// The open-homotopy analogue, keyed by the S_m invariant (first
/// component closed, second open). Nonzero certifies that w is not
/// open-homotopically trivial.
ClassSumMod2 compute_z_o(const GaussWord& word);

} // namespace gausskit

#endif
