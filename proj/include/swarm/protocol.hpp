#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swarm/gene.hpp"
#include "swarm/lattice.hpp"
#include "swarm/message.hpp"

namespace swarm {

// Tunable protocol constants. All timers are in ticks; distances derive
// from the lattice spacing d.
struct ProtocolParams {
    double d = 3.3;

    // Sensed robots at distance <= neighbor_factor * d count as nearest
    // neighbors (true neighbors sit at d, next-nearest at sqrt(3)*d).
    double neighbor_factor = 1.5;

    int queue_release_interval = 50;
    int quasi_wait = 20;
    int election_timeout = 128;

    // Heartbeat records go stale after this many ticks without a refresh.
    int heartbeat_staleness = 10;

    // A searcher abandons a claimed slot it cannot reach in this many ticks
    // and will not retry the same slot for slot_cooldown ticks.
    int pending_slot_timeout = 150;
    int slot_cooldown = 300;

    // Residual thresholds (fractions of d) for slot geometry checks.
    double candidate_residual = 0.60;
    double commit_residual = 0.05;

    // Leader pacing: ticks of Leader heartbeats before the census walk
    // starts, walk tick budget, and how many times the gene flood repeats.
    int leader_announce_ticks = 12;
    int census_walk_budget = 20000;
    int gene_repeat_rounds = 5;

    double neighbor_threshold() const { return neighbor_factor * d; }

    bool operator==(const ProtocolParams&) const = default;
};

// What a robot senses about one in-range robot this tick: physical distance
// is always available, the heartbeat only if this tick's broadcast got
// through.
struct SensedNeighbor {
    std::uint32_t id = kNoRobot;
    double distance = 0.0;
    std::optional<HeartbeatPayload> last_heartbeat;
};

enum class MotionKind : std::uint8_t { Halt, EdgeFollow, MoveToward };

struct MotionCommand {
    MotionKind kind = MotionKind::Halt;
    // EdgeFollow: +1 orbits clockwise. MoveToward: embedded lattice target.
    int orbit_direction = +1;
    LatticePoint target{};

    static MotionCommand halt() { return {}; }
    static MotionCommand edge_follow() { return {MotionKind::EdgeFollow, +1, {}}; }
    static MotionCommand move_toward(LatticePoint p) { return {MotionKind::MoveToward, +1, p}; }
};

// Last heartbeat remembered for a sensed robot, plus the latch used to spot
// an Active -> Stable transition even across lost heartbeats.
struct NeighborRecord {
    HeartbeatPayload hb;
    long last_heard = 0;
    bool active_to_stable = false;

    bool operator==(const NeighborRecord&) const = default;
};

struct PendingGene {
    std::uint32_t leader = kNoRobot;
    std::uint32_t epoch = 0;
    bool notice_seen = false;
    NewShapePayload notice{};
    std::map<int, GeneChunkPayload> chunks;

    bool complete() const {
        return notice_seen && static_cast<int>(chunks.size()) == notice.chunk_count;
    }
    bool operator==(const PendingGene&) const = default;
};

enum class LeaderPhase : std::uint8_t { Announce, Census, Share, Done };

struct CensusMemory {
    LeaderPhase phase = LeaderPhase::Announce;
    int phase_ticks = 0;
    std::vector<Tag> boundary;       // starts with the leader's own tag
    std::uint32_t anchor_id = kNoRobot;  // robot whose re-sighting closes the walk
    bool anchor_out_of_sight = false;
    int census_count = 0;
    int share_round = 0;
    std::size_t share_cursor = 0;

    bool operator==(const CensusMemory&) const = default;
};

// Complete per-robot protocol state. step() is a pure function of this
// value plus the tick's inputs.
struct RobotMemory {
    std::uint32_t id = kNoRobot;
    RobotState state = RobotState::Queued;
    ProtocolParams params;
    std::shared_ptr<const Gene> gene;

    std::optional<Tag> tag;
    std::uint32_t ts = 0;
    int nn_target = -1;

    // Queued
    long queued_since = -1;
    long last_smaller_queued = -1;

    // Search
    std::optional<Tag> pending_slot;
    long pending_since = -1;
    std::map<Tag, long> slot_backoff;  // slot -> earliest tick to retry

    // Inactive
    bool activation_latch = false;

    // Quasi
    int quasi_timer = 0;

    // Danger election
    std::uint32_t election_candidate = kNoRobot;
    long election_quiet_since = -1;

    // Leader
    CensusMemory census;
    std::uint32_t leader_epoch = 0;
    std::shared_ptr<const Gene> scaled_gene;
    NewShapePayload pending_notice{};

    // Regeneration bookkeeping
    bool regen_pending = false;  // a leader is at work; suppress Danger
    std::optional<PendingGene> incoming_gene;
    std::optional<std::pair<Tag, std::uint32_t>> seed_assignment;  // tag, ts

    std::map<std::uint32_t, NeighborRecord> neighbor_table;
    std::vector<Message> relay_queue;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen_floods_hint;  // (leader, epoch) handled

    std::uint64_t malformed_messages = 0;
    std::string fatal_diagnostic;  // e.g. census found a fragment too small to rescale

    bool placed() const {
        return state != RobotState::Queued && state != RobotState::Search;
    }

    bool operator==(const RobotMemory& other) const;
};

struct StepResult {
    RobotMemory memory;
    std::vector<Message> outbox;
    MotionCommand motion = MotionCommand::halt();
};

// Advances one robot by one synchronous round. Pure: identical inputs yield
// identical outputs, all randomness-free.
StepResult step(const RobotMemory& memory, const std::vector<Message>& inbox,
                const std::vector<SensedNeighbor>& sensed, long tick);

// TS for a robot that just placed itself: one past the largest TS among its
// placed nearest neighbors.
std::uint32_t assign_ts(const RobotMemory& memory, const std::vector<SensedNeighbor>& sensed);

// Slot selection for a searching robot. Candidate slots are unoccupied
// flag-1 tags adjacent to sensed placed robots whose implied distances match
// the measured ones; the winner is the slot beside the minimum-TS Active
// robot (ties in canonical neighbor order). Returns nothing while no slot
// fits.
std::optional<Tag> localize(const RobotMemory& memory, const std::vector<SensedNeighbor>& sensed,
                            long tick);

// Count of placed nearest neighbors (fresh heartbeat record with a tag,
// physical distance within the neighbor threshold).
int placed_neighbor_count(const RobotMemory& memory, const std::vector<SensedNeighbor>& sensed);

bool legal_transition(RobotState from, RobotState to);

}  // namespace swarm
