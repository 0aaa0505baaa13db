#ifndef GAUSSKIT_MOVES_HPP
#define GAUSSKIT_MOVES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gausskit/words.hpp"

namespace gausskit {

/// Which components admit the shift move, and whether components may be
/// permuted. All-closed is homotopy, all-open is open homotopy, first
/// closed/rest open is mixed homotopy, all-closed with permutation is
/// unordered homotopy.
class HomotopyPolicy {
public:
    static HomotopyPolicy all_closed();
    static HomotopyPolicy all_open();
    static HomotopyPolicy mixed();
    static HomotopyPolicy unordered();
    static HomotopyPolicy custom(std::set<int> closed_components, bool allow_permutation);

    /// Parses "closed", "open", "mixed" or "unordered".
    static HomotopyPolicy parse(std::string_view name);

    bool closed(int component) const; // 0-based
    bool allow_permutation() const { return allow_permutation_; }
    const std::string& name() const { return name_; }

private:
    enum class Kind { AllClosed, AllOpen, FirstClosed, Custom };
    HomotopyPolicy(Kind kind, bool permute, std::string name, std::set<int> closed = {})
        : kind_(kind), allow_permutation_(permute), name_(std::move(name)),
          closed_(std::move(closed)) {}

    Kind kind_;
    bool allow_permutation_;
    std::string name_;
    std::set<int> closed_;
};

enum class MoveKind { Shift, Swap, H1, H2, H2a, H3, H3a, H3b, H3c };

bool is_h3_family(MoveKind kind);

/// One site of a pattern pair: the component and either the offset of the
/// pair's first letter (matches) or the gap where the pair is inserted
/// (insertions). Offsets and gaps are 0-based within the component.
struct PairSite {
    int comp = 0;
    int pos = 0;
    friend auto operator<=>(const PairSite&, const PairSite&) = default;
};

/// One applicable rewrite with its site.
///
/// For H1/H2/H2a, `reverse` false is the reducing direction and true the
/// inserting one. For the H3 family, `reverse` records which side of the
/// pattern was matched; application reverses the three matched pairs in
/// place either way. For Shift, `reverse` true rotates right instead of
/// left.
struct Move {
    MoveKind kind = MoveKind::Shift;
    bool reverse = false;
    int comp = 0;                 // Shift: component; Swap: left component
    std::vector<PairSite> sites;  // H-moves, in pattern order

    friend bool operator==(const Move&, const Move&) = default;
};

/// Text form, `KIND@component:positions`. Positions are 1-based into the
/// phrase string (separators counted); for insertions they point at where
/// the inserted pairs' first letters land in the result. Inserting
/// directions carry a '+' suffix, right-side/right-rotation directions a
/// "'" suffix. Examples: `SHIFT@2`, `SWAP@1-2`, `H2@1:1,4`, `H3c@1:2,4,6`,
/// `H1+@1:3`.
std::string serialize_move(const Move& move, const GaussPhrase& context);

/// Inverse of serialize_move. Throws IllegalMoveError on bad input.
Move parse_move(std::string_view line, const GaussPhrase& context);

/// The move undoing `move` on the phrase that `move` produced.
Move inverse_move(const Move& move);

/// Every legal instantiation of every enabled move kind on the phrase.
/// Shift only on non-empty closed components; Swap (adjacent component
/// transpositions) only when the policy permits permutation; pattern pairs
/// never straddle a component separator. Reducing directions are always
/// included, inserting ones only when include_insertions. With
/// include_derived false only Shift/Swap/H1/H2/H3 are enumerated.
std::vector<Move> enumerate_moves(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                  bool include_insertions, bool include_derived = true);

/// Applies a move after re-checking its legality. Throws IllegalMoveError.
GaussPhrase apply_move(const GaussPhrase& phrase, const Move& move);

/// A canonicalized single-move successor together with the serialized move
/// (against the source phrase) that produced it.
struct Neighbor {
    std::string key;       // canonical_key of the successor
    std::string move_line; // smallest serialized move reaching it
    friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

/// All canonical forms one legal move away, deduplicated and sorted.
/// Insertions are included only when the resulting rank stays within
/// rank_cap. The phrase is not required to be canonical itself.
std::vector<Neighbor> neighbor_moves(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                     int rank_cap, bool include_derived = true);

/// neighbor_moves without the move lines.
std::vector<GaussPhrase> neighbors(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                   int rank_cap);

} // namespace gausskit

#endif
