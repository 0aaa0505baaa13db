#include "gausskit/moves.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace gausskit {

HomotopyPolicy HomotopyPolicy::all_closed() {
    return HomotopyPolicy(Kind::AllClosed, false, "closed");
}
HomotopyPolicy HomotopyPolicy::all_open() {
    return HomotopyPolicy(Kind::AllOpen, false, "open");
}
HomotopyPolicy HomotopyPolicy::mixed() {
    return HomotopyPolicy(Kind::FirstClosed, false, "mixed");
}
HomotopyPolicy HomotopyPolicy::unordered() {
    return HomotopyPolicy(Kind::AllClosed, true, "unordered");
}
HomotopyPolicy HomotopyPolicy::custom(std::set<int> closed_components, bool allow_permutation) {
    return HomotopyPolicy(Kind::Custom, allow_permutation, "custom", std::move(closed_components));
}

HomotopyPolicy HomotopyPolicy::parse(std::string_view name) {
    if (name == "closed")
        return all_closed();
    if (name == "open")
        return all_open();
    if (name == "mixed")
        return mixed();
    if (name == "unordered")
        return unordered();
    throw ConfigError("unknown policy '" + std::string(name) +
                      "' (expected closed|open|mixed|unordered)");
}

bool HomotopyPolicy::closed(int component) const {
    switch (kind_) {
    case Kind::AllClosed:
        return true;
    case Kind::AllOpen:
        return false;
    case Kind::FirstClosed:
        return component == 0;
    case Kind::Custom:
        return closed_.count(component) > 0;
    }
    return false;
}

bool is_h3_family(MoveKind kind) {
    return kind == MoveKind::H3 || kind == MoveKind::H3a || kind == MoveKind::H3b ||
           kind == MoveKind::H3c;
}

namespace {

const char* kind_name(MoveKind kind) {
    switch (kind) {
    case MoveKind::Shift:
        return "SHIFT";
    case MoveKind::Swap:
        return "SWAP";
    case MoveKind::H1:
        return "H1";
    case MoveKind::H2:
        return "H2";
    case MoveKind::H2a:
        return "H2a";
    case MoveKind::H3:
        return "H3";
    case MoveKind::H3a:
        return "H3a";
    case MoveKind::H3b:
        return "H3b";
    case MoveKind::H3c:
        return "H3c";
    }
    return "?";
}

// String offset of each component's first letter in str().
std::vector<int> component_starts(const GaussPhrase& p) {
    std::vector<int> starts;
    starts.reserve(p.components().size());
    int at = 0;
    for (const auto& comp : p.components()) {
        starts.push_back(at);
        at += static_cast<int>(comp.size()) + 1;
    }
    return starts;
}

struct ScanPair {
    PairSite site;
    char a, b;
};

// Adjacent letter pairs lying inside a single component, in phrase order.
std::vector<ScanPair> adjacent_pairs(const GaussPhrase& p) {
    std::vector<ScanPair> pairs;
    for (int c = 0; c < p.component_count(); ++c) {
        const std::string& w = p.component(c);
        for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
            pairs.push_back({{c, i}, w[i], w[i + 1]});
    }
    return pairs;
}

bool sites_disjoint(const PairSite& s, const PairSite& t) {
    if (s.comp != t.comp)
        return true;
    return s.pos + 1 < t.pos || t.pos + 1 < s.pos;
}

struct H3Class {
    MoveKind kind;
    bool reverse;
};

// Decides which H3-family pattern (and side) three disjoint pairs realize.
// The pairs must involve exactly three letters, each shared by two pairs.
std::optional<H3Class> classify_h3(char a1, char b1, char a2, char b2, char a3, char b3) {
    if (a1 == b1 || a2 == b2 || a3 == b3)
        return std::nullopt;
    auto shared = [](char x, char y, char u, char v) -> char {
        char hit = 0;
        if (x == u || x == v)
            hit = x;
        if (y == u || y == v) {
            if (hit)
                return 0; // both letters shared: not a triangle
            hit = y;
        }
        return hit;
    };
    char s12 = shared(a1, b1, a2, b2);
    char s13 = shared(a1, b1, a3, b3);
    char s23 = shared(a2, b2, a3, b3);
    if (!s12 || !s13 || !s23)
        return std::nullopt;
    if (s12 == s13 || s12 == s23 || s13 == s23)
        return std::nullopt;
    int slot12_1 = (a1 == s12) ? 0 : 1;
    int slot12_2 = (a2 == s12) ? 0 : 1;
    int slot13_3 = (a3 == s13) ? 0 : 1;
    int code = slot12_1 * 4 + slot12_2 * 2 + slot13_3;
    switch (code) {
    case 0:
        return H3Class{MoveKind::H3, false};
    case 1:
        return H3Class{MoveKind::H3c, false};
    case 2:
        return H3Class{MoveKind::H3a, false};
    case 3:
        return H3Class{MoveKind::H3b, false};
    case 4:
        return H3Class{MoveKind::H3b, true};
    case 5:
        return H3Class{MoveKind::H3a, true};
    case 6:
        return H3Class{MoveKind::H3c, true};
    case 7:
        return H3Class{MoveKind::H3, true};
    }
    return std::nullopt;
}

std::string fresh_letters(const GaussPhrase& p, int count) {
    std::string all = p.concat();
    std::array<bool, 256> used{};
    for (char c : all)
        used[static_cast<unsigned char>(c)] = true;
    std::string out;
    for (char c : canonical_alphabet()) {
        if (!used[static_cast<unsigned char>(c)]) {
            out.push_back(c);
            if (static_cast<int>(out.size()) == count)
                return out;
        }
    }
    throw CapacityError("no unused letter left in the 62-letter alphabet");
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw IllegalMoveError(what);
}

void check_pair_site(const GaussPhrase& p, const PairSite& s, bool gap) {
    require(s.comp >= 0 && s.comp < p.component_count(), "component out of range");
    int len = static_cast<int>(p.component(s.comp).size());
    if (gap)
        require(s.pos >= 0 && s.pos <= len, "insertion gap out of range");
    else
        require(s.pos >= 0 && s.pos + 1 < len, "pair position out of range");
}

} // namespace

std::string serialize_move(const Move& move, const GaussPhrase& context) {
    std::string out = kind_name(move.kind);
    if (move.kind == MoveKind::Shift) {
        if (move.reverse)
            out.push_back('\'');
        out += "@" + std::to_string(move.comp + 1);
        return out;
    }
    if (move.kind == MoveKind::Swap) {
        out += "@" + std::to_string(move.comp + 1) + "-" + std::to_string(move.comp + 2);
        return out;
    }
    bool insertion = !is_h3_family(move.kind) && move.reverse;
    if (insertion)
        out.push_back('+');
    else if (move.reverse)
        out.push_back('\'');
    auto starts = component_starts(context);
    out += "@" + std::to_string(move.sites.at(0).comp + 1) + ":";
    for (std::size_t i = 0; i < move.sites.size(); ++i) {
        const PairSite& s = move.sites[i];
        int pos = starts.at(static_cast<std::size_t>(s.comp)) + s.pos + 1;
        if (insertion)
            pos += 2 * static_cast<int>(i); // earlier inserted pairs shift later ones
        if (i > 0)
            out.push_back(',');
        out += std::to_string(pos);
    }
    return out;
}

Move parse_move(std::string_view line, const GaussPhrase& context) {
    auto at = line.find('@');
    require(at != std::string_view::npos, "move line has no '@': " + std::string(line));
    std::string head(line.substr(0, at));
    std::string tail(line.substr(at + 1));

    Move move;
    bool insertion = false;
    if (!head.empty() && head.back() == '+') {
        insertion = true;
        move.reverse = true;
        head.pop_back();
    } else if (!head.empty() && head.back() == '\'') {
        move.reverse = true;
        head.pop_back();
    }
    static const std::pair<const char*, MoveKind> kinds[] = {
        {"SHIFT", MoveKind::Shift}, {"SWAP", MoveKind::Swap}, {"H1", MoveKind::H1},
        {"H2a", MoveKind::H2a},     {"H2", MoveKind::H2},     {"H3a", MoveKind::H3a},
        {"H3b", MoveKind::H3b},     {"H3c", MoveKind::H3c},   {"H3", MoveKind::H3},
    };
    bool found = false;
    for (auto& [name, kind] : kinds) {
        if (head == name) {
            move.kind = kind;
            found = true;
            break;
        }
    }
    require(found, "unknown move kind '" + head + "'");
    require(!insertion || (move.kind == MoveKind::H1 || move.kind == MoveKind::H2 ||
                           move.kind == MoveKind::H2a),
            "'+' applies only to H1/H2/H2a");

    auto parse_int = [](std::string_view s) {
        require(!s.empty(), "empty number in move line");
        int value = 0;
        for (char c : s) {
            require(c >= '0' && c <= '9', "bad number in move line");
            value = value * 10 + (c - '0');
        }
        return value;
    };

    if (move.kind == MoveKind::Shift) {
        move.comp = parse_int(tail) - 1;
        return move;
    }
    if (move.kind == MoveKind::Swap) {
        auto dash = tail.find('-');
        require(dash != std::string::npos, "SWAP needs the form SWAP@i-j");
        int left = parse_int(std::string_view(tail).substr(0, dash));
        int right = parse_int(std::string_view(tail).substr(dash + 1));
        require(right == left + 1, "SWAP transposes adjacent components");
        move.comp = left - 1;
        return move;
    }

    auto colon = tail.find(':');
    require(colon != std::string::npos, "H-move needs the form KIND@c:positions");
    int declared_comp = parse_int(std::string_view(tail).substr(0, colon)) - 1;
    std::vector<int> positions;
    std::string_view rest = std::string_view(tail).substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        positions.push_back(parse_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    std::size_t want = move.kind == MoveKind::H1 ? 1 : is_h3_family(move.kind) ? 3 : 2;
    require(positions.size() == want, "wrong number of positions for " + head);

    auto starts = component_starts(context);
    auto locate = [&](int strpos, bool gap) -> PairSite {
        int idx = strpos - 1;
        require(idx >= 0, "position out of range");
        for (int c = 0; c < context.component_count(); ++c) {
            int start = starts[static_cast<std::size_t>(c)];
            int len = static_cast<int>(context.component(c).size());
            int last = gap ? start + len : start + len - 1;
            if (idx >= start && idx <= last)
                return PairSite{c, idx - start};
        }
        throw IllegalMoveError("position " + std::to_string(strpos) +
                               " does not address a letter of the phrase");
    };
    for (std::size_t i = 0; i < positions.size(); ++i) {
        int pos = positions[i];
        if (insertion)
            pos -= 2 * static_cast<int>(i);
        move.sites.push_back(locate(pos, insertion));
    }
    require(move.sites[0].comp == declared_comp, "component field does not match first site");
    move.comp = declared_comp;
    return move;
}

Move inverse_move(const Move& move) {
    Move inv = move;
    switch (move.kind) {
    case MoveKind::Shift:
        inv.reverse = !move.reverse;
        return inv;
    case MoveKind::Swap:
        return inv;
    case MoveKind::H3:
    case MoveKind::H3a:
    case MoveKind::H3b:
    case MoveKind::H3c:
        inv.reverse = !move.reverse;
        return inv;
    case MoveKind::H1:
        inv.reverse = !move.reverse;
        return inv;
    case MoveKind::H2:
    case MoveKind::H2a: {
        inv.reverse = !move.reverse;
        const PairSite& s1 = move.sites.at(0);
        PairSite& s2 = inv.sites.at(1);
        // Deleting shifts the second site left by the first pair's length
        // when both lie in one component; inserting shifts it right.
        if (s2.comp == s1.comp)
            s2.pos += move.reverse ? 2 : -2;
        return inv;
    }
    }
    return inv;
}

GaussPhrase apply_move(const GaussPhrase& phrase, const Move& move) {
    std::vector<std::string> comps = phrase.components();
    int n = phrase.component_count();

    auto pair_at = [&](const PairSite& s) -> std::pair<char, char> {
        check_pair_site(phrase, s, false);
        const std::string& w = comps[static_cast<std::size_t>(s.comp)];
        return {w[static_cast<std::size_t>(s.pos)], w[static_cast<std::size_t>(s.pos) + 1]};
    };
    auto erase_pair = [&](const PairSite& s) {
        comps[static_cast<std::size_t>(s.comp)].erase(static_cast<std::size_t>(s.pos), 2);
    };
    auto insert_pair = [&](const PairSite& s, char x, char y) {
        check_pair_site(phrase, s, true);
        std::string two{x, y};
        comps[static_cast<std::size_t>(s.comp)].insert(static_cast<std::size_t>(s.pos), two);
    };

    switch (move.kind) {
    case MoveKind::Shift: {
        require(move.comp >= 0 && move.comp < n, "component out of range");
        std::string& w = comps[static_cast<std::size_t>(move.comp)];
        require(!w.empty(), "shift on empty component");
        if (move.reverse)
            std::rotate(w.begin(), w.end() - 1, w.end());
        else
            std::rotate(w.begin(), w.begin() + 1, w.end());
        break;
    }
    case MoveKind::Swap: {
        require(move.comp >= 0 && move.comp + 1 < n, "swap components out of range");
        std::swap(comps[static_cast<std::size_t>(move.comp)],
                  comps[static_cast<std::size_t>(move.comp) + 1]);
        break;
    }
    case MoveKind::H1: {
        require(move.sites.size() == 1, "H1 has one site");
        if (move.reverse) {
            char x = fresh_letters(phrase, 1)[0];
            insert_pair(move.sites[0], x, x);
        } else {
            auto [a, b] = pair_at(move.sites[0]);
            require(a == b, "H1 site is not an AA pair");
            erase_pair(move.sites[0]);
        }
        break;
    }
    case MoveKind::H2:
    case MoveKind::H2a: {
        require(move.sites.size() == 2, "H2/H2a have two sites");
        const PairSite& s1 = move.sites[0];
        const PairSite& s2 = move.sites[1];
        if (move.reverse) {
            require(s1 <= s2, "insertion sites out of order");
            std::string fresh = fresh_letters(phrase, 2);
            char x = fresh[0], y = fresh[1];
            // Insert the later pair first so the earlier gap stays valid.
            if (move.kind == MoveKind::H2)
                insert_pair(s2, y, x);
            else
                insert_pair(s2, x, y);
            insert_pair(s1, x, y);
        } else {
            require(s1 < s2 && sites_disjoint(s1, s2), "H2/H2a sites must be disjoint, in order");
            auto [a1, b1] = pair_at(s1);
            auto [a2, b2] = pair_at(s2);
            require(a1 != b1, "H2/H2a pairs need distinct letters");
            if (move.kind == MoveKind::H2)
                require(a2 == b1 && b2 == a1, "H2 expects AB..BA");
            else
                require(a2 == a1 && b2 == b1, "H2a expects AB..AB");
            erase_pair(s2);
            erase_pair(s1);
        }
        break;
    }
    case MoveKind::H3:
    case MoveKind::H3a:
    case MoveKind::H3b:
    case MoveKind::H3c: {
        require(move.sites.size() == 3, "H3-family moves have three sites");
        const PairSite& s1 = move.sites[0];
        const PairSite& s2 = move.sites[1];
        const PairSite& s3 = move.sites[2];
        require(s1 < s2 && s2 < s3, "H3 sites must be ascending");
        require(sites_disjoint(s1, s2) && sites_disjoint(s2, s3) && sites_disjoint(s1, s3),
                "H3 sites must be disjoint");
        auto [a1, b1] = pair_at(s1);
        auto [a2, b2] = pair_at(s2);
        auto [a3, b3] = pair_at(s3);
        auto cls = classify_h3(a1, b1, a2, b2, a3, b3);
        require(cls.has_value(), "sites do not form an H3 pattern");
        require(cls->kind == move.kind && cls->reverse == move.reverse,
                std::string("sites realize ") + kind_name(cls->kind) +
                    (cls->reverse ? "'" : "") + ", not the requested move");
        for (const PairSite& s : move.sites) {
            std::string& w = comps[static_cast<std::size_t>(s.comp)];
            std::swap(w[static_cast<std::size_t>(s.pos)], w[static_cast<std::size_t>(s.pos) + 1]);
        }
        break;
    }
    }
    return GaussPhrase(std::move(comps));
}

std::vector<Move> enumerate_moves(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                  bool include_insertions, bool include_derived) {
    std::vector<Move> moves;
    int n = phrase.component_count();

    for (int c = 0; c < n; ++c) {
        if (!policy.closed(c) || phrase.component(c).empty())
            continue;
        moves.push_back(Move{MoveKind::Shift, false, c, {}});
        // Right rotation is a distinct single move only on length >= 3.
        if (phrase.component(c).size() >= 3)
            moves.push_back(Move{MoveKind::Shift, true, c, {}});
    }
    if (policy.allow_permutation())
        for (int c = 0; c + 1 < n; ++c)
            moves.push_back(Move{MoveKind::Swap, false, c, {}});

    auto pairs = adjacent_pairs(phrase);
    for (const auto& p : pairs)
        if (p.a == p.b)
            moves.push_back(Move{MoveKind::H1, false, p.site.comp, {p.site}});

    std::vector<ScanPair> distinct;
    for (const auto& p : pairs)
        if (p.a != p.b)
            distinct.push_back(p);

    for (std::size_t i = 0; i < distinct.size(); ++i) {
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            if (!sites_disjoint(distinct[i].site, distinct[j].site))
                continue;
            const auto& pi = distinct[i];
            const auto& pj = distinct[j];
            if (pj.a == pi.b && pj.b == pi.a)
                moves.push_back(Move{MoveKind::H2, false, pi.site.comp, {pi.site, pj.site}});
            else if (include_derived && pj.a == pi.a && pj.b == pi.b)
                moves.push_back(Move{MoveKind::H2a, false, pi.site.comp, {pi.site, pj.site}});
        }
    }

    for (std::size_t i = 0; i < distinct.size(); ++i) {
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            if (!sites_disjoint(distinct[i].site, distinct[j].site))
                continue;
            for (std::size_t k = j + 1; k < distinct.size(); ++k) {
                if (!sites_disjoint(distinct[j].site, distinct[k].site) ||
                    !sites_disjoint(distinct[i].site, distinct[k].site))
                    continue;
                auto cls = classify_h3(distinct[i].a, distinct[i].b, distinct[j].a, distinct[j].b,
                                       distinct[k].a, distinct[k].b);
                if (!cls)
                    continue;
                if (!include_derived && cls->kind != MoveKind::H3)
                    continue;
                moves.push_back(Move{cls->kind, cls->reverse, distinct[i].site.comp,
                                     {distinct[i].site, distinct[j].site, distinct[k].site}});
            }
        }
    }

    if (include_insertions) {
        std::vector<PairSite> gaps;
        for (int c = 0; c < n; ++c)
            for (int g = 0; g <= static_cast<int>(phrase.component(c).size()); ++g)
                gaps.push_back(PairSite{c, g});
        for (const auto& g : gaps)
            moves.push_back(Move{MoveKind::H1, true, g.comp, {g}});
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            for (std::size_t j = i; j < gaps.size(); ++j) {
                moves.push_back(Move{MoveKind::H2, true, gaps[i].comp, {gaps[i], gaps[j]}});
                if (include_derived)
                    moves.push_back(Move{MoveKind::H2a, true, gaps[i].comp, {gaps[i], gaps[j]}});
            }
        }
    }
    return moves;
}

std::vector<Neighbor> neighbor_moves(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                     int rank_cap, bool include_derived) {
    bool insertions = phrase.rank() + 1 <= rank_cap;
    std::vector<Neighbor> out;
    for (const Move& move : enumerate_moves(phrase, policy, insertions, include_derived)) {
        if (move.reverse && !is_h3_family(move.kind)) {
            int grown = phrase.rank() + (move.kind == MoveKind::H1 ? 1 : 2);
            if (grown > rank_cap)
                continue;
        }
        out.push_back(Neighbor{canonical_key(apply_move(phrase, move)),
                               serialize_move(move, phrase)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Neighbor& a, const Neighbor& b) { return a.key == b.key; }),
              out.end());
    return out;
}

std::vector<GaussPhrase> neighbors(const GaussPhrase& phrase, const HomotopyPolicy& policy,
                                   int rank_cap) {
    std::vector<GaussPhrase> out;
    for (const Neighbor& nb : neighbor_moves(phrase, policy, rank_cap))
        out.push_back(GaussPhrase::parse(nb.key));
    return out;
}

} // namespace gausskit
