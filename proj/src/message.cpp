#include "swarm/message.hpp"

#include <algorithm>
#include <map>

namespace swarm {

const char* to_string(RobotState s) {
    switch (s) {
        case RobotState::Queued: return "Queued";
        case RobotState::Search: return "Search";
        case RobotState::Inactive: return "Inactive";
        case RobotState::Active: return "Active";
        case RobotState::Quasi: return "Quasi";
        case RobotState::Stable: return "Stable";
        case RobotState::Danger: return "Danger";
        case RobotState::Leader: return "Leader";
    }
    return "?";
}

namespace {

struct Writer {
    std::vector<std::uint8_t> buf;

    void u8(std::uint8_t v) { buf.push_back(v); }
    void u16(std::uint16_t v) {
        buf.push_back(static_cast<std::uint8_t>(v & 0xff));
        buf.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
    }
    void i16(int v) { u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v))); }
    void i8(int v) { buf.push_back(static_cast<std::uint8_t>(static_cast<std::int8_t>(v))); }
};

struct Reader {
    const std::vector<std::uint8_t>& buf;
    std::size_t pos = 0;
    bool ok = true;

    std::uint8_t u8() {
        if (pos + 1 > buf.size()) { ok = false; return 0; }
        return buf[pos++];
    }
    std::uint16_t u16() {
        if (pos + 2 > buf.size()) { ok = false; return 0; }
        std::uint16_t v = static_cast<std::uint16_t>(buf[pos] | (buf[pos + 1] << 8));
        pos += 2;
        return v;
    }
    std::uint32_t u32() {
        if (pos + 4 > buf.size()) { ok = false; return 0; }
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[pos + i]) << (8 * i);
        pos += 4;
        return v;
    }
    int i16() { return static_cast<std::int16_t>(u16()); }
    int i8() { return static_cast<std::int8_t>(u8()); }
};

}  // namespace

std::vector<std::uint8_t> encode_message(const Message& m) {
    Writer w;
    w.u8(0);  // length placeholder
    w.u32(m.sender_id);
    w.u8(static_cast<std::uint8_t>(m.kind));
    switch (m.kind) {
        case MessageKind::Heartbeat: {
            const auto& p = std::get<HeartbeatPayload>(m.payload);
            w.u8(static_cast<std::uint8_t>(p.state));
            w.u8(p.has_tag ? 1 : 0);
            w.i16(p.tag.x);
            w.i16(p.tag.y);
            w.u16(static_cast<std::uint16_t>(std::min<std::uint32_t>(p.ts, 0xffff)));
            break;
        }
        case MessageKind::ElectionId: {
            w.u32(std::get<ElectionPayload>(m.payload).candidate);
            break;
        }
        case MessageKind::GeneChunk: {
            const auto& p = std::get<GeneChunkPayload>(m.payload);
            w.u32(p.leader);
            w.u32(p.epoch);
            w.u8(p.index);
            w.u8(p.count);
            w.u8(static_cast<std::uint8_t>(p.entries.size()));
            for (const GeneEntry& e : p.entries) {
                w.i8(e.tag.x);
                w.i8(e.tag.y);
                w.u8(static_cast<std::uint8_t>((e.flag << 4) | (e.nn & 0x0f)));
            }
            break;
        }
        case MessageKind::NewShapeNotice: {
            const auto& p = std::get<NewShapePayload>(m.payload);
            w.u32(p.leader);
            w.u32(p.epoch);
            w.u8(p.chunk_count);
            w.u16(p.total_ones);
            w.i16(p.anchor_old.x);
            w.i16(p.anchor_old.y);
            w.i16(p.anchor_new.x);
            w.i16(p.anchor_new.y);
            w.u8(p.seed_count);
            for (int i = 0; i < 2; ++i) {
                w.u32(p.seed_id[i]);
                w.i16(p.seed_tag[i].x);
                w.i16(p.seed_tag[i].y);
            }
            break;
        }
    }
    w.buf[0] = static_cast<std::uint8_t>(w.buf.size() - 1);
    if (w.buf.size() > kMaxFrameBytes) throw std::length_error("message frame over 120 bytes");
    return w.buf;
}

std::optional<Message> decode_message(const std::vector<std::uint8_t>& frame) {
    if (frame.empty() || frame.size() > kMaxFrameBytes) return std::nullopt;
    if (frame[0] != frame.size() - 1) return std::nullopt;
    Reader r{frame, 1};
    Message m;
    m.sender_id = r.u32();
    const std::uint8_t kind = r.u8();
    if (kind > static_cast<std::uint8_t>(MessageKind::NewShapeNotice)) return std::nullopt;
    m.kind = static_cast<MessageKind>(kind);
    switch (m.kind) {
        case MessageKind::Heartbeat: {
            HeartbeatPayload p;
            const std::uint8_t st = r.u8();
            if (st > static_cast<std::uint8_t>(RobotState::Leader)) return std::nullopt;
            p.state = static_cast<RobotState>(st);
            p.has_tag = r.u8() != 0;
            p.tag.x = r.i16();
            p.tag.y = r.i16();
            p.ts = r.u16();
            m.payload = p;
            break;
        }
        case MessageKind::ElectionId: {
            m.payload = ElectionPayload{r.u32()};
            break;
        }
        case MessageKind::GeneChunk: {
            GeneChunkPayload p;
            p.leader = r.u32();
            p.epoch = r.u32();
            p.index = r.u8();
            p.count = r.u8();
            const std::uint8_t n = r.u8();
            if (n > kGeneChunkEntries) return std::nullopt;
            p.entries.reserve(n);
            for (int i = 0; i < n; ++i) {
                GeneEntry e;
                e.tag.x = r.i8();
                e.tag.y = r.i8();
                const std::uint8_t packed = r.u8();
                e.flag = packed >> 4;
                e.nn = packed & 0x0f;
                if (e.flag > 1 || e.nn > 6) return std::nullopt;
                p.entries.push_back(e);
            }
            m.payload = std::move(p);
            break;
        }
        case MessageKind::NewShapeNotice: {
            NewShapePayload p;
            p.leader = r.u32();
            p.epoch = r.u32();
            p.chunk_count = r.u8();
            p.total_ones = r.u16();
            p.anchor_old.x = r.i16();
            p.anchor_old.y = r.i16();
            p.anchor_new.x = r.i16();
            p.anchor_new.y = r.i16();
            p.seed_count = r.u8();
            if (p.seed_count > 2) return std::nullopt;
            for (int i = 0; i < 2; ++i) {
                p.seed_id[i] = r.u32();
                p.seed_tag[i].x = r.i16();
                p.seed_tag[i].y = r.i16();
            }
            m.payload = p;
            break;
        }
    }
    if (!r.ok || r.pos != frame.size()) return std::nullopt;
    return m;
}

std::vector<GeneChunkPayload> make_gene_chunks(const Gene& gene, std::uint32_t leader,
                                               std::uint32_t epoch) {
    const auto& entries = gene.entries();
    const std::size_t count = (entries.size() + kGeneChunkEntries - 1) / kGeneChunkEntries;
    std::vector<GeneChunkPayload> chunks;
    chunks.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        GeneChunkPayload p;
        p.leader = leader;
        p.epoch = epoch;
        p.index = static_cast<std::uint8_t>(i);
        p.count = static_cast<std::uint8_t>(count);
        const std::size_t begin = i * kGeneChunkEntries;
        const std::size_t end = std::min(begin + kGeneChunkEntries, entries.size());
        p.entries.assign(entries.begin() + begin, entries.begin() + end);
        chunks.push_back(std::move(p));
    }
    return chunks;
}

std::optional<Gene> assemble_gene(const std::vector<GeneChunkPayload>& chunks) {
    if (chunks.empty()) return std::nullopt;
    const std::uint8_t count = chunks.front().count;
    std::map<int, const GeneChunkPayload*> by_index;
    for (const auto& c : chunks) {
        if (c.count != count || c.index >= count) return std::nullopt;
        by_index[c.index] = &c;
    }
    if (by_index.size() != count) return std::nullopt;
    std::vector<GeneEntry> entries;
    for (const auto& [idx, chunk] : by_index)
        entries.insert(entries.end(), chunk->entries.begin(), chunk->entries.end());
    return Gene::from_entries(std::move(entries));
}

}  // namespace swarm
