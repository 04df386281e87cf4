#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "swarm/bitmap.hpp"
#include "swarm/lattice.hpp"

namespace swarm {

struct DisconnectedShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewRobotsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CannotScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OpenBoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One row of the gene table: cell coordinate, membership flag, and the
// number of in-shape cells among its six lattice neighbors.
struct GeneEntry {
    Tag tag;
    std::uint8_t flag = 0;
    std::uint8_t nn = 0;

    auto operator<=>(const GeneEntry&) const = default;
};

// The compiled shape table. Entries exist for every bitmap cell (flag 0 and
// flag 1 alike); lookups outside the bitmap bounds report flag 0, nn 0.
class Gene {
  public:
    Gene() = default;
    static Gene from_entries(std::vector<GeneEntry> entries);

    const GeneEntry* lookup(Tag t) const;
    int flag(Tag t) const;
    int nn(Tag t) const;

    Tag origin() const { return {0, 0}; }
    int total_ones() const { return total_ones_; }
    std::size_t size() const { return entries_.size(); }

    // Entries sorted ascending by (x, y).
    const std::vector<GeneEntry>& entries() const { return entries_; }
    std::vector<Tag> flag_one_tags() const;

    // Hop distance from `from` to every flag-1 cell, walking flag-1 cells
    // only. Cells unreachable from `from` are absent.
    std::unordered_map<Tag, int, TagHash> hop_distances(Tag from) const;

    // Canonical text form: "origin 0 0", "ones N", then one "x y flag nn"
    // line per entry in (x, y) order. Byte-identical across runs.
    std::string serialize() const;
    static Gene deserialize(const std::string& text);

    bool operator==(const Gene& other) const { return entries_ == other.entries_; }

  private:
    std::vector<GeneEntry> entries_;  // sorted by (x, y)
    std::unordered_map<Tag, std::size_t, TagHash> index_;
    int total_ones_ = 0;
};

// Grid index (row, col) of the cell mapped to Tag (0,0): the central cell
// when it holds a 1, otherwise the 1 nearest to the center (ties broken by
// smaller row, then smaller column). Throws NoShapeError on an all-zero grid.
std::pair<int, int> choose_origin(const Bitmap& bitmap);

// Compiles a bitmap into the gene table. Requires a connected 1-set (under
// the six-neighbor lattice adjacency) of at least three cells.
Gene compile_gene(const Bitmap& bitmap);

// Repeatedly deletes boundary 1s (cells with fewer than six in-shape
// neighbors) in ascending (x, y) scan order until exactly n ones remain.
// Deletions that would disconnect the remaining 1-set or leave a cell with
// zero in-shape neighbors are skipped. nn values are recomputed for the
// reduced shape. Throws CannotScaleError when no admissible deletion
// sequence reaches n.
Gene generate_scaled_gene(const Gene& gene, int n);

// Number of in-shape cells on or inside a closed cycle of lattice-adjacent
// tags. Consecutive duplicates are ignored; the cycle must close back to its
// first tag. Throws OpenBoundaryError otherwise.
int census_from_boundary(const Gene& gene, const std::vector<Tag>& boundary_tags);

bool tags_connected(const std::vector<Tag>& tags);

}  // namespace swarm
