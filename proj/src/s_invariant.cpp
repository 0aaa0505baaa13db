#include "gausskit/s_invariant.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gausskit {

BitVector::BitVector(std::initializer_list<int> bits) {
    for (int b : bits)
        bits_.push_back(b ? 1 : 0);
}

BitVector BitVector::plus(const BitVector& other) const {
    BitVector out = *this;
    for (int i = 0; i < out.size(); ++i)
        if (other.get(i))
            out.flip(i);
    return out;
}

bool BitVector::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string BitVector::to01() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_)
        out.push_back(b ? '1' : '0');
    return out;
}

std::vector<int> BitVector::to_ints() const {
    std::vector<int> out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_)
        out.push_back(b);
    return out;
}

std::vector<Orbit> orbit_map(const BitVector& v) {
    int n = v.size();
    if (n > 16)
        throw CapacityError("orbit_map enumerates 2^n vectors; n > 16 rejected");
    std::vector<Orbit> orbits;
    std::vector<bool> seen(static_cast<std::size_t>(1) << n, false);
    for (std::size_t code = 0; code < seen.size(); ++code) {
        if (seen[code])
            continue;
        BitVector x(n);
        for (int i = 0; i < n; ++i)
            x.set(i, (code >> i) & 1);
        BitVector y = v.plus(x); // c_v(x) = v - x = v + x mod 2
        std::size_t ycode = 0;
        for (int i = 0; i < n; ++i)
            if (y.get(i))
                ycode |= static_cast<std::size_t>(1) << i;
        seen[code] = true;
        seen[ycode] = true;
        if (y == x)
            orbits.push_back(Orbit{x, std::nullopt});
        else
            orbits.push_back(Orbit{std::min(x, y), std::max(x, y)});
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        return a.representative < b.representative;
    });
    return orbits;
}

namespace {

// comp index of each letter's two occurrences, or -1 markers.
struct Occurrences {
    std::array<int, 256> first_comp;
    std::array<int, 256> second_comp;
    std::array<int, 256> first_pos; // offset within component
    std::array<int, 256> second_pos;

    explicit Occurrences(const GaussPhrase& p) {
        first_comp.fill(-1);
        second_comp.fill(-1);
        first_pos.fill(-1);
        second_pos.fill(-1);
        for (int c = 0; c < p.component_count(); ++c) {
            const std::string& w = p.component(c);
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                auto u = static_cast<unsigned char>(w[static_cast<std::size_t>(i)]);
                if (first_comp[u] < 0) {
                    first_comp[u] = c;
                    first_pos[u] = i;
                } else {
                    second_comp[u] = c;
                    second_pos[u] = i;
                }
            }
        }
    }
};

BitVector span_linking_vector(const GaussPhrase& phrase, const Occurrences& occ, int comp,
                              int begin, int end) {
    int n = phrase.component_count();
    BitVector v(n);
    const std::string& w = phrase.component(comp);
    std::array<int, 256> in_span{};
    for (int i = begin; i < end; ++i)
        ++in_span[static_cast<unsigned char>(w[static_cast<std::size_t>(i)])];
    for (int i = begin; i < end; ++i) {
        auto u = static_cast<unsigned char>(w[static_cast<std::size_t>(i)]);
        if (in_span[u] != 1)
            continue;
        // The partner occurrence is whichever of the two lies outside the span.
        int partner_comp = (occ.first_comp[u] == comp && occ.first_pos[u] == i)
                               ? occ.second_comp[u]
                               : occ.first_comp[u];
        v.flip(partner_comp);
    }
    return v;
}

} // namespace

BitVector linking_vector(const GaussPhrase& phrase, int comp, int begin, int end) {
    if (comp < 0 || comp >= phrase.component_count())
        throw SpanError("component index out of range");
    int len = static_cast<int>(phrase.component(comp).size());
    if (begin < 0 || end < begin || end > len)
        throw SpanError("span [" + std::to_string(begin) + "," + std::to_string(end) +
                        ") not inside component of length " + std::to_string(len));
    Occurrences occ(phrase);
    return span_linking_vector(phrase, occ, comp, begin, end);
}

BitVector component_linking_vector(const GaussPhrase& phrase, int comp) {
    return linking_vector(phrase, comp, 0, static_cast<int>(phrase.component(comp).size()));
}

BitVector letter_linking_vector(const GaussPhrase& phrase, Letter letter) {
    Occurrences occ(phrase);
    auto u = static_cast<unsigned char>(letter);
    if (occ.first_comp[u] < 0)
        throw MissingLetterError("letter '" + std::string(1, letter) + "' does not occur");
    if (occ.first_comp[u] != occ.second_comp[u])
        throw SplitLetterError("letter '" + std::string(1, letter) +
                               "' occurs in two different components");
    return span_linking_vector(phrase, occ, occ.first_comp[u], occ.first_pos[u] + 1,
                               occ.second_pos[u]);
}

std::vector<std::vector<int>> SComponent::matrix() const {
    std::vector<std::vector<int>> m;
    m.push_back(linking.to_ints());
    for (const BitVector& row : rows)
        m.push_back(row.to_ints());
    return m;
}

std::string SComponent::encode() const {
    std::string out = linking.to01();
    for (const BitVector& row : rows) {
        out.push_back(';');
        out += row.to01();
    }
    return out;
}

std::string SValue::encode() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0)
            out.push_back('/');
        out += components[i].encode();
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> SValue::matrices() const {
    std::vector<std::vector<std::vector<int>>> out;
    for (const SComponent& c : components)
        out.push_back(c.matrix());
    return out;
}

namespace {

std::vector<BitVector> odd_vectors(std::map<BitVector, int>& counts) {
    std::vector<BitVector> rows;
    for (const auto& [vec, count] : counts)
        if (count % 2 == 1 && !vec.is_zero())
            rows.push_back(vec);
    return rows; // map iteration is already ascending
}

SComponent closed_component(const GaussPhrase& phrase, const Occurrences& occ, int comp) {
    BitVector l = component_linking_vector(phrase, comp);
    std::map<BitVector, int> counts;
    for (int u = 0; u < 256; ++u) {
        if (occ.first_comp[u] != comp || occ.second_comp[u] != comp)
            continue;
        BitVector lv = span_linking_vector(phrase, occ, comp, occ.first_pos[u] + 1,
                                           occ.second_pos[u]);
        // Orbit representative under c_l: the smaller of {lv, lv + l}.
        ++counts[std::min(lv, lv.plus(l))];
    }
    return SComponent{std::move(l), odd_vectors(counts)};
}

SComponent open_component(const GaussPhrase& phrase, const Occurrences& occ, int comp) {
    BitVector l = component_linking_vector(phrase, comp);
    std::map<BitVector, int> counts;
    for (int u = 0; u < 256; ++u) {
        if (occ.first_comp[u] != comp || occ.second_comp[u] != comp)
            continue;
        ++counts[span_linking_vector(phrase, occ, comp, occ.first_pos[u] + 1, occ.second_pos[u])];
    }
    return SComponent{std::move(l), odd_vectors(counts)};
}

BitVector swap2(const BitVector& v) {
    BitVector out(2);
    out.set(0, v.get(1));
    out.set(1, v.get(0));
    return out;
}

SComponent transpose_component(const SComponent& c) {
    BitVector l = swap2(c.linking);
    std::vector<BitVector> rows;
    for (const BitVector& row : c.rows) {
        BitVector r = swap2(row);
        rows.push_back(std::min(r, r.plus(l)));
    }
    std::sort(rows.begin(), rows.end());
    return SComponent{std::move(l), std::move(rows)};
}

} // namespace

SValue compute_S(const GaussPhrase& phrase) {
    Occurrences occ(phrase);
    SValue s;
    for (int c = 0; c < phrase.component_count(); ++c)
        s.components.push_back(closed_component(phrase, occ, c));
    return s;
}

SValue transpose_S(const SValue& s) {
    if (s.components.size() != 2)
        throw ArityError("transposition is defined for 2-component values");
    return SValue{{transpose_component(s.components[1]), transpose_component(s.components[0])}};
}

std::string unordered_key(const SValue& s) {
    return std::min(s.encode(), transpose_S(s).encode());
}

std::string unordered_key(const GaussPhrase& phrase) {
    if (phrase.component_count() != 2)
        throw ArityError("unordered_key requires a 2-component phrase");
    return unordered_key(compute_S(phrase));
}

std::string SMValue::encode() const {
    return first.encode() + "/" + second.encode();
}

std::vector<std::vector<std::vector<int>>> SMValue::matrices() const {
    return {first.matrix(), second.matrix()};
}

SMValue compute_S_m(const GaussPhrase& phrase) {
    if (phrase.component_count() != 2)
        throw ArityError("S_m requires a 2-component phrase");
    Occurrences occ(phrase);
    return SMValue{closed_component(phrase, occ, 0), open_component(phrase, occ, 1)};
}

std::string mixed_key(const GaussPhrase& phrase) {
    return compute_S_m(phrase).encode();
}

} // namespace gausskit
