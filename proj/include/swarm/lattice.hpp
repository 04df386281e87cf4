#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace swarm {

// Lattice coordinate of a cell relative to the chosen origin cell.
// x follows the bitmap row index (increasing downward), y the column index.
struct Tag {
    int x = 0;
    int y = 0;

    friend constexpr Tag operator+(Tag a, Tag b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Tag operator-(Tag a, Tag b) { return {a.x - b.x, a.y - b.y}; }
    auto operator<=>(const Tag&) const = default;
};

// The six neighbor offsets of a cell (i,j), in canonical order:
// (i-1,j), (i-1,j+1), (i,j+1), (i+1,j), (i+1,j-1), (i,j-1).
// Every deterministic neighbor scan (localization slots, census walks,
// scaling passes) uses exactly this order.
inline constexpr std::array<Tag, 6> kNeighborOffsets = {{
    {-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1},
}};

constexpr std::array<Tag, 6> neighbor_tags(Tag t) {
    std::array<Tag, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = t + kNeighborOffsets[i];
    return out;
}

constexpr bool tags_adjacent(Tag a, Tag b) {
    for (Tag o : kNeighborOffsets)
        if (a + o == b) return true;
    return false;
}

// Embedded position of a lattice cell, in world units (multiples of d).
struct LatticePoint {
    double px = 0.0;
    double py = 0.0;
};

inline constexpr double kRowSpacing = 0.86602540378443864676;  // sqrt(3)/2

// Skewed embedding of the grid onto the triangular lattice: row x is offset
// sideways by x/2 cells, rows are sqrt(3)/2 apart. Any two lattice-adjacent
// tags embed exactly d apart; the nearest non-adjacent pair is sqrt(3)*d.
inline LatticePoint embed(Tag t, double d) {
    return {d * (static_cast<double>(t.y) + 0.5 * static_cast<double>(t.x)),
            d * static_cast<double>(t.x) * kRowSpacing};
}

inline double lattice_distance(Tag a, Tag b, double d) {
    const LatticePoint pa = embed(a, d);
    const LatticePoint pb = embed(b, d);
    return std::hypot(pa.px - pb.px, pa.py - pb.py);
}

struct TagHash {
    std::size_t operator()(Tag t) const {
        const std::uint64_t k =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.x)) << 32) |
            static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.y));
        std::uint64_t z = k + 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

}  // namespace swarm
