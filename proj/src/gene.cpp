#include "swarm/gene.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

namespace swarm {

Gene Gene::from_entries(std::vector<GeneEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const GeneEntry& a, const GeneEntry& b) { return a.tag < b.tag; });
    Gene g;
    g.entries_ = std::move(entries);
    g.index_.reserve(g.entries_.size());
    for (std::size_t i = 0; i < g.entries_.size(); ++i) {
        g.index_[g.entries_[i].tag] = i;
        if (g.entries_[i].flag) ++g.total_ones_;
    }
    return g;
}

const GeneEntry* Gene::lookup(Tag t) const {
    const auto it = index_.find(t);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

int Gene::flag(Tag t) const {
    const GeneEntry* e = lookup(t);
    return e ? e->flag : 0;
}

int Gene::nn(Tag t) const {
    const GeneEntry* e = lookup(t);
    return e ? e->nn : 0;
}

std::vector<Tag> Gene::flag_one_tags() const {
    std::vector<Tag> out;
    out.reserve(static_cast<std::size_t>(total_ones_));
    for (const auto& e : entries_)
        if (e.flag) out.push_back(e.tag);
    return out;
}

std::unordered_map<Tag, int, TagHash> Gene::hop_distances(Tag from) const {
    std::unordered_map<Tag, int, TagHash> dist;
    if (flag(from) != 1) return dist;
    dist[from] = 0;
    std::deque<Tag> queue{from};
    while (!queue.empty()) {
        const Tag t = queue.front();
        queue.pop_front();
        for (Tag n : neighbor_tags(t)) {
            if (flag(n) == 1 && !dist.contains(n)) {
                dist[n] = dist[t] + 1;
                queue.push_back(n);
            }
        }
    }
    return dist;
}

std::string Gene::serialize() const {
    std::ostringstream out;
    out << "origin 0 0\n";
    out << "ones " << total_ones_ << "\n";
    for (const auto& e : entries_)
        out << e.tag.x << ' ' << e.tag.y << ' ' << int(e.flag) << ' ' << int(e.nn) << '\n';
    return out.str();
}

Gene Gene::deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word) || word != "origin") throw ParseError("gene: missing origin header");
    int ox = 0, oy = 0;
    if (!(in >> ox >> oy)) throw ParseError("gene: bad origin header");
    long declared = -1;
    if (!(in >> word) || word != "ones" || !(in >> declared))
        throw ParseError("gene: missing ones header");
    std::vector<GeneEntry> entries;
    int x, y, f, nn;
    while (in >> x >> y >> f >> nn) {
        if ((f != 0 && f != 1) || nn < 0 || nn > 6) throw ParseError("gene: bad entry");
        entries.push_back({{x, y}, static_cast<std::uint8_t>(f), static_cast<std::uint8_t>(nn)});
    }
    Gene g = from_entries(std::move(entries));
    if (g.total_ones() != declared) throw ParseError("gene: ones header mismatch");
    return g;
}

std::pair<int, int> choose_origin(const Bitmap& bitmap) {
    const int cr = bitmap.rows / 2;
    const int cc = bitmap.cols / 2;
    if (bitmap.at(cr, cc) == 1) return {cr, cc};

    // Central cell is empty: fall back to the in-shape cell nearest to it in
    // embedded distance, ties by smaller row then smaller column.
    long best_r = -1, best_c = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int r = 0; r < bitmap.rows; ++r) {
        for (int c = 0; c < bitmap.cols; ++c) {
            if (bitmap.at(r, c) != 1) continue;
            const double dd = lattice_distance({r, c}, {cr, cc}, 1.0);
            if (dd < best_d - 1e-12) {
                best_d = dd;
                best_r = r;
                best_c = c;
            }
        }
    }
    if (best_r < 0) throw NoShapeError("bitmap has no 1s");
    return {static_cast<int>(best_r), static_cast<int>(best_c)};
}

namespace {

bool connected_under_lattice(const std::vector<Tag>& tags) {
    if (tags.empty()) return true;
    std::unordered_set<Tag, TagHash> members(tags.begin(), tags.end());
    std::unordered_set<Tag, TagHash> seen;
    std::deque<Tag> queue{tags.front()};
    seen.insert(tags.front());
    while (!queue.empty()) {
        const Tag t = queue.front();
        queue.pop_front();
        for (Tag n : neighbor_tags(t)) {
            if (members.contains(n) && seen.insert(n).second) queue.push_back(n);
        }
    }
    return seen.size() == members.size();
}

}  // namespace

bool tags_connected(const std::vector<Tag>& tags) { return connected_under_lattice(tags); }

Gene compile_gene(const Bitmap& bitmap) {
    const auto [orow, ocol] = choose_origin(bitmap);

    std::vector<GeneEntry> entries;
    entries.reserve(static_cast<std::size_t>(bitmap.rows) * bitmap.cols);
    std::vector<Tag> ones;
    for (int r = 0; r < bitmap.rows; ++r) {
        for (int c = 0; c < bitmap.cols; ++c) {
            const Tag t{r - orow, c - ocol};
            int nn = 0;
            for (Tag o : kNeighborOffsets) {
                const int nr = r + o.x, nc = c + o.y;
                if (bitmap.in_bounds(nr, nc) && bitmap.at(nr, nc) == 1) ++nn;
            }
            const std::uint8_t flag = bitmap.at(r, c);
            entries.push_back({t, flag, static_cast<std::uint8_t>(nn)});
            if (flag) ones.push_back(t);
        }
    }

    if (static_cast<int>(ones.size()) < 3)
        throw TooFewRobotsError("shape needs at least 3 ones, found " +
                                std::to_string(ones.size()));
    if (!connected_under_lattice(ones))
        throw DisconnectedShapeError("bitmap 1-set is not connected on the lattice");
    return Gene::from_entries(std::move(entries));
}

namespace {

int in_shape_neighbors(const std::unordered_set<Tag, TagHash>& ones, Tag t) {
    int count = 0;
    for (Tag n : neighbor_tags(t))
        if (ones.contains(n)) ++count;
    return count;
}

bool deletion_admissible(const std::unordered_set<Tag, TagHash>& ones, Tag candidate) {
    // Removing `candidate` must keep the rest connected and must not leave
    // any remaining cell with zero in-shape neighbors.
    std::unordered_set<Tag, TagHash> rest = ones;
    rest.erase(candidate);
    if (rest.empty()) return false;
    for (Tag t : rest)
        if (in_shape_neighbors(rest, t) == 0 && rest.size() > 1) return false;
    std::vector<Tag> rest_v(rest.begin(), rest.end());
    return connected_under_lattice(rest_v);
}

}  // namespace

Gene generate_scaled_gene(const Gene& gene, int n) {
    if (n < 3) throw CannotScaleError("target count below minimum seed count of 3");
    if (n > gene.total_ones())
        throw CannotScaleError("target count exceeds current shape population");
    if (n == gene.total_ones()) return gene;

    std::set<Tag> sorted_ones;  // ascending (x, y) scan order
    for (Tag t : gene.flag_one_tags()) sorted_ones.insert(t);
    std::unordered_set<Tag, TagHash> ones(sorted_ones.begin(), sorted_ones.end());

    int remaining = gene.total_ones();
    while (remaining > n) {
        bool deleted = false;
        for (Tag t : std::vector<Tag>(sorted_ones.begin(), sorted_ones.end())) {
            if (remaining == n) break;
            if (in_shape_neighbors(ones, t) == 6) continue;  // interior cell
            if (!deletion_admissible(ones, t)) continue;
            ones.erase(t);
            sorted_ones.erase(t);
            --remaining;
            deleted = true;
        }
        if (remaining == n) break;
        if (!deleted)
            throw CannotScaleError("no admissible boundary deletion reaches target count");
    }

    std::vector<GeneEntry> entries;
    entries.reserve(gene.size());
    for (const GeneEntry& e : gene.entries()) {
        const std::uint8_t flag = ones.contains(e.tag) ? 1 : 0;
        entries.push_back({e.tag, flag,
                           static_cast<std::uint8_t>(in_shape_neighbors(ones, e.tag))});
    }
    return Gene::from_entries(std::move(entries));
}

int census_from_boundary(const Gene& gene, const std::vector<Tag>& boundary_tags) {
    // Collapse consecutive duplicates (a slow walker reports the same cell
    // for many ticks).
    std::vector<Tag> cycle;
    for (Tag t : boundary_tags)
        if (cycle.empty() || !(cycle.back() == t)) cycle.push_back(t);
    if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle.pop_back();
    if (cycle.size() < 2) throw OpenBoundaryError("census boundary too short");

    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Tag a = cycle[i];
        const Tag b = cycle[(i + 1) % cycle.size()];
        if (!(a == b) && !tags_adjacent(a, b))
            throw OpenBoundaryError("census boundary is not a lattice-adjacent cycle");
    }

    std::unordered_set<Tag, TagHash> wall(cycle.begin(), cycle.end());

    int min_x = cycle.front().x, max_x = min_x;
    int min_y = cycle.front().y, max_y = min_y;
    for (Tag t : cycle) {
        min_x = std::min(min_x, t.x);
        max_x = std::max(max_x, t.x);
        min_y = std::min(min_y, t.y);
        max_y = std::max(max_y, t.y);
    }
    --min_x, --min_y, ++max_x, ++max_y;

    // Flood the outside of the wall across the inflated bounding box; what
    // is never reached lies inside the cycle.
    std::unordered_set<Tag, TagHash> outside;
    std::deque<Tag> queue{{min_x, min_y}};
    outside.insert({min_x, min_y});
    while (!queue.empty()) {
        const Tag t = queue.front();
        queue.pop_front();
        for (Tag ngb : neighbor_tags(t)) {
            if (ngb.x < min_x || ngb.x > max_x || ngb.y < min_y || ngb.y > max_y) continue;
            if (wall.contains(ngb) || outside.contains(ngb)) continue;
            outside.insert(ngb);
            queue.push_back(ngb);
        }
    }

    int count = 0;
    for (int x = min_x; x <= max_x; ++x) {
        for (int y = min_y; y <= max_y; ++y) {
            const Tag t{x, y};
            if (outside.contains(t)) continue;
            if (!wall.contains(t) && gene.flag(t) != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace swarm
