#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aucmpc/common.hpp"

namespace aucmpc {

// Transport addresses. The three servers own fixed ids; data owners are 3+k.
using NodeId = u8;
inline constexpr NodeId kS0 = 0;
inline constexpr NodeId kS1 = 1;
inline constexpr NodeId kS2 = 2;
inline constexpr NodeId kOwnerBase = 3;

enum class Role : u8 { S0 = 0, S1 = 1, S2 = 2 };
inline NodeId node_of(Role r) { return static_cast<NodeId>(r); }

// Wire / accounting tags, one per protocol or session message kind.
enum class Tag : u8 {
    SEED = 1,
    HELLO,
    DATA,
    MUL,
    MUX,
    MC,
    PC,
    CMP,
    DIV,
    TIE,
    SORT,
    AUPR,
    RESULT,
};

const char* tag_name(Tag t);

struct TagStats {
    u64 invocations = 0;
    u64 rounds_last = 0;    // rounds of the most recent invocation
    u64 rounds_total = 0;
    u64 bytes = 0;          // online payload+header bytes sent under this tag
    u64 setup_bytes = 0;    // input-independent randomness distribution
    u64 messages = 0;

    friend bool operator==(const TagStats&, const TagStats&) = default;
};

// Per-endpoint communication ledger. A round is one message wave on the
// input-dependent dependency chain of the active protocol invocation;
// unsolicited randomness distribution from the helper is tallied in
// setup_bytes and does not advance the round counter, matching the round
// convention the complexity table uses.
class Transcript {
public:
    void begin(Tag t);
    void end();
    bool in_invocation() const { return !stack_.empty(); }
    Tag active_tag() const;

    void count_round();
    void add_bytes(NodeId peer, Tag t, size_t n, bool setup);

    // Rounds of one invocation of the tagged protocol. Throws on a tag
    // that has never completed an invocation.
    u64 round_count(Tag t) const;

    const TagStats& stats(Tag t) const;
    bool has(Tag t) const { return per_tag_.count(t) != 0; }
    u64 bytes_to(NodeId peer) const;
    u64 total_bytes() const;

    std::map<Tag, TagStats> snapshot() const { return per_tag_; }

private:
    std::map<Tag, TagStats> per_tag_;
    std::map<NodeId, u64> bytes_to_peer_;
    std::vector<Tag> stack_;
    u64 rounds_open_ = 0;  // rounds accumulated by the current top invocation
};

struct Message {
    Tag tag{};
    std::vector<u8> payload;
};

// One ordered point-to-point link. Implementations: in-process queue, TCP.
class Link {
public:
    virtual ~Link() = default;
    virtual void send(Tag tag, std::span<const u8> payload) = 0;
    virtual Message recv() = 0;
    virtual void close() = 0;
};

// Fixed framing shared by both backends: 4-byte LE payload length, 1-byte tag.
inline constexpr size_t kFrameHeaderBytes = 5;

class PartyEndpoint {
public:
    explicit PartyEndpoint(NodeId self) : self_(self) {}

    NodeId self() const { return self_; }
    void attach(NodeId peer, std::unique_ptr<Link> link);
    bool has_link(NodeId peer) const { return links_.count(peer) != 0; }

    // Sends under the active invocation tag (or an explicit one).
    void send(NodeId to, std::span<const u8> payload, bool setup = false);
    void send(NodeId to, Tag tag, std::span<const u8> payload, bool setup = false);
    std::vector<u8> recv(NodeId from);            // expects the active tag
    std::vector<u8> recv(NodeId from, Tag expect);

    void close_all();

    Transcript& transcript() { return transcript_; }
    const Transcript& transcript() const { return transcript_; }

private:
    Link& link(NodeId peer);

    NodeId self_;
    std::map<NodeId, std::unique_ptr<Link>> links_;
    Transcript transcript_;
};

// Builds fully-wired in-process endpoints backed by FIFO queues. Add every
// node before handing endpoints to their threads.
class InProcNetwork {
public:
    PartyEndpoint& add_node(NodeId id);
    PartyEndpoint& endpoint(NodeId id);

private:
    struct Pipes;
    std::map<NodeId, std::unique_ptr<PartyEndpoint>> endpoints_;
};

// TCP backend. Address strings are "host:port".
int tcp_listen(const std::string& host_port);
u16 tcp_listen_port(int listen_fd);
std::unique_ptr<Link> tcp_accept_link(int listen_fd, NodeId& peer_out);
std::unique_ptr<Link> tcp_connect_link(const std::string& host_port, NodeId self);

// Accepts connections until every expected node id has introduced itself.
void tcp_accept_peers(PartyEndpoint& ep, int listen_fd, std::vector<NodeId> expected);
// Connects with retries while the peer's listener comes up.
std::unique_ptr<Link> tcp_connect_retry(const std::string& host_port, NodeId self,
                                        int attempts = 100);

}  // namespace aucmpc
