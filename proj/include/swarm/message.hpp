#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "swarm/gene.hpp"
#include "swarm/lattice.hpp"

namespace swarm {

inline constexpr std::uint32_t kNoRobot = 0xffffffffu;

enum class RobotState : std::uint8_t {
    Queued,
    Search,
    Inactive,
    Active,
    Quasi,
    Stable,
    Danger,
    Leader,
};

const char* to_string(RobotState s);

enum class MessageKind : std::uint8_t {
    Heartbeat,
    ElectionId,
    GeneChunk,
    NewShapeNotice,
};

// Per-tick beacon from every robot: state, plus lattice tag and TS once the
// robot is placed.
struct HeartbeatPayload {
    RobotState state = RobotState::Queued;
    bool has_tag = false;
    Tag tag{};
    std::uint32_t ts = 0;

    bool operator==(const HeartbeatPayload&) const = default;
};

// Minimum candidate id known to the sender. Queued robots use it to agree
// on the release order, Danger robots to elect their leader.
struct ElectionPayload {
    std::uint32_t candidate = kNoRobot;

    bool operator==(const ElectionPayload&) const = default;
};

// One slice of a gene table flood. Chunks are keyed by (leader, epoch) so
// that repeats of older floods are ignored.
struct GeneChunkPayload {
    std::uint32_t leader = kNoRobot;
    std::uint32_t epoch = 0;
    std::uint8_t index = 0;
    std::uint8_t count = 1;
    std::vector<GeneEntry> entries;

    bool operator==(const GeneChunkPayload&) const = default;
};

// Announces a regenerated shape: how to re-anchor old tags onto the new
// gene (new_tag = old_tag + (anchor_new - anchor_old)) and which two robots
// the leader picked as co-seeds.
struct NewShapePayload {
    std::uint32_t leader = kNoRobot;
    std::uint32_t epoch = 0;
    std::uint8_t chunk_count = 0;
    std::uint16_t total_ones = 0;
    Tag anchor_old{};
    Tag anchor_new{};
    std::uint8_t seed_count = 0;
    std::uint32_t seed_id[2] = {kNoRobot, kNoRobot};
    Tag seed_tag[2] = {{}, {}};

    bool operator==(const NewShapePayload&) const = default;
};

struct Message {
    std::uint32_t sender_id = kNoRobot;
    MessageKind kind = MessageKind::Heartbeat;
    std::variant<HeartbeatPayload, ElectionPayload, GeneChunkPayload, NewShapePayload> payload;

    const HeartbeatPayload* heartbeat() const { return std::get_if<HeartbeatPayload>(&payload); }
    const ElectionPayload* election() const { return std::get_if<ElectionPayload>(&payload); }
    const GeneChunkPayload* gene_chunk() const { return std::get_if<GeneChunkPayload>(&payload); }
    const NewShapePayload* new_shape() const { return std::get_if<NewShapePayload>(&payload); }

    bool operator==(const Message&) const = default;
};

// How many gene entries fit in one frame under the 120-byte budget.
inline constexpr std::size_t kGeneChunkEntries = 32;
inline constexpr std::size_t kMaxFrameBytes = 120;

// Length-prefixed little-endian frame:
//   u8  frame length (bytes after this one)
//   u32 sender id
//   u8  kind
//   payload, by kind:
//     Heartbeat:      u8 state, u8 has_tag, i16 x, i16 y, u16 ts
//     ElectionId:     u32 candidate
//     GeneChunk:      u32 leader, u32 epoch, u8 index, u8 count, u8 n,
//                     n * (i8 x, i8 y, u8 flag<<4|nn)
//     NewShapeNotice: u32 leader, u32 epoch, u8 chunk_count, u16 ones,
//                     i16 anchor_old.x/y, i16 anchor_new.x/y, u8 seed_count,
//                     2 * (u32 id, i16 x, i16 y)
std::vector<std::uint8_t> encode_message(const Message& m);

// Returns nothing for truncated, oversized, or malformed frames.
std::optional<Message> decode_message(const std::vector<std::uint8_t>& frame);

// Splits a gene into flood chunks (entries in canonical order).
std::vector<GeneChunkPayload> make_gene_chunks(const Gene& gene, std::uint32_t leader,
                                               std::uint32_t epoch);

// Rebuilds a gene from a complete chunk set; nothing if indexes are missing
// or inconsistent.
std::optional<Gene> assemble_gene(const std::vector<GeneChunkPayload>& chunks);

}  // namespace swarm
