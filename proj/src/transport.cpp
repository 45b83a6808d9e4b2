#include "aucmpc/transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

namespace aucmpc {

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::SEED: return "SEED";
        case Tag::HELLO: return "HELLO";
        case Tag::DATA: return "DATA";
        case Tag::MUL: return "MUL";
        case Tag::MUX: return "MUX";
        case Tag::MC: return "MC";
        case Tag::PC: return "PC";
        case Tag::CMP: return "CMP";
        case Tag::DIV: return "DIV";
        case Tag::TIE: return "TIE";
        case Tag::SORT: return "SORT";
        case Tag::AUPR: return "AUPR";
        case Tag::RESULT: return "RESULT";
    }
    return "?";
}

// --- Transcript -----------------------------------------------------------

void Transcript::begin(Tag t) {
    if (stack_.empty()) {
        rounds_open_ = 0;
        per_tag_[t].invocations++;
    }
    stack_.push_back(t);
}

void Transcript::end() {
    if (stack_.empty()) throw std::logic_error("Transcript::end without begin");
    Tag t = stack_.front();
    stack_.pop_back();
    if (stack_.empty()) {
        auto& s = per_tag_[t];
        s.rounds_last = rounds_open_;
        s.rounds_total += rounds_open_;
        rounds_open_ = 0;
    }
}

Tag Transcript::active_tag() const {
    if (stack_.empty()) throw std::logic_error("no active protocol invocation");
    return stack_.front();  // outermost tag owns nested traffic
}

void Transcript::count_round() {
    if (!stack_.empty()) ++rounds_open_;
}

void Transcript::add_bytes(NodeId peer, Tag t, size_t n, bool setup) {
    auto& s = per_tag_[t];
    if (setup)
        s.setup_bytes += n;
    else
        s.bytes += n;
    s.messages++;
    bytes_to_peer_[peer] += n;
}

u64 Transcript::round_count(Tag t) const {
    auto it = per_tag_.find(t);
    if (it == per_tag_.end() || it->second.invocations == 0)
        throw std::invalid_argument(std::string("no completed invocation of tag ") + tag_name(t));
    return it->second.rounds_last;
}

const TagStats& Transcript::stats(Tag t) const {
    auto it = per_tag_.find(t);
    if (it == per_tag_.end())
        throw std::invalid_argument(std::string("unknown tag ") + tag_name(t));
    return it->second;
}

u64 Transcript::bytes_to(NodeId peer) const {
    auto it = bytes_to_peer_.find(peer);
    return it == bytes_to_peer_.end() ? 0 : it->second;
}

u64 Transcript::total_bytes() const {
    u64 total = 0;
    for (auto& [peer, n] : bytes_to_peer_) total += n;
    return total;
}

// --- Endpoint --------------------------------------------------------------

void PartyEndpoint::attach(NodeId peer, std::unique_ptr<Link> link) {
    links_[peer] = std::move(link);
}

Link& PartyEndpoint::link(NodeId peer) {
    auto it = links_.find(peer);
    if (it == links_.end())
        throw TransportError("no link to node " + std::to_string(int(peer)));
    return *it->second;
}

void PartyEndpoint::send(NodeId to, std::span<const u8> payload, bool setup) {
    send(to, transcript_.active_tag(), payload, setup);
}

void PartyEndpoint::send(NodeId to, Tag tag, std::span<const u8> payload, bool setup) {
    if (to == self_) throw std::invalid_argument("cannot send to self");
    link(to).send(tag, payload);
    transcript_.add_bytes(to, tag, payload.size() + kFrameHeaderBytes, setup);
}

std::vector<u8> PartyEndpoint::recv(NodeId from) {
    return recv(from, transcript_.active_tag());
}

std::vector<u8> PartyEndpoint::recv(NodeId from, Tag expect) {
    Message m = link(from).recv();
    if (m.tag != expect)
        throw ProtocolError(std::string("expected tag ") + tag_name(expect) + " from node " +
                            std::to_string(int(from)) + ", got " + tag_name(m.tag));
    return std::move(m.payload);
}

void PartyEndpoint::close_all() {
    for (auto& [peer, l] : links_) l->close();
}

// --- In-process backend -----------------------------------------------------

namespace {

struct Pipe {
    std::mutex m;
    std::condition_variable cv;
    std::deque<Message> q;
    bool closed = false;
};

class InProcLink final : public Link {
public:
    InProcLink(std::shared_ptr<Pipe> out, std::shared_ptr<Pipe> in)
        : out_(std::move(out)), in_(std::move(in)) {}

    void send(Tag tag, std::span<const u8> payload) override {
        std::lock_guard lk(out_->m);
        if (out_->closed) throw TransportError("send on closed link");
        out_->q.push_back(Message{tag, {payload.begin(), payload.end()}});
        out_->cv.notify_one();
    }

    Message recv() override {
        std::unique_lock lk(in_->m);
        in_->cv.wait(lk, [&] { return !in_->q.empty() || in_->closed; });
        if (in_->q.empty()) throw TransportError("recv on closed link");
        Message m = std::move(in_->q.front());
        in_->q.pop_front();
        return m;
    }

    void close() override {
        for (auto& p : {out_, in_}) {
            std::lock_guard lk(p->m);
            p->closed = true;
            p->cv.notify_all();
        }
    }

private:
    std::shared_ptr<Pipe> out_, in_;
};

}  // namespace

PartyEndpoint& InProcNetwork::add_node(NodeId id) {
    auto [it, inserted] = endpoints_.emplace(id, std::make_unique<PartyEndpoint>(id));
    if (!inserted) throw std::invalid_argument("node already added");
    // Wire a duplex pipe pair to every existing node.
    for (auto& [peer, ep] : endpoints_) {
        if (peer == id) continue;
        auto a2b = std::make_shared<Pipe>();
        auto b2a = std::make_shared<Pipe>();
        it->second->attach(peer, std::make_unique<InProcLink>(a2b, b2a));
        ep->attach(id, std::make_unique<InProcLink>(b2a, a2b));
    }
    return *it->second;
}

PartyEndpoint& InProcNetwork::endpoint(NodeId id) {
    auto it = endpoints_.find(id);
    if (it == endpoints_.end()) throw std::invalid_argument("unknown node");
    return *it->second;
}

// --- TCP backend -------------------------------------------------------------

namespace {

void write_all(int fd, const u8* p, size_t n) {
    while (n > 0) {
        ssize_t w = ::write(fd, p, n);
        if (w <= 0) throw TransportError("tcp write failed");
        p += w;
        n -= static_cast<size_t>(w);
    }
}

void read_all(int fd, u8* p, size_t n) {
    while (n > 0) {
        ssize_t r = ::read(fd, p, n);
        if (r <= 0) throw TransportError("tcp read failed (peer closed?)");
        p += r;
        n -= static_cast<size_t>(r);
    }
}

class TcpLink final : public Link {
public:
    explicit TcpLink(int fd) : fd_(fd) {}
    ~TcpLink() override { close(); }

    void send(Tag tag, std::span<const u8> payload) override {
        if (fd_ < 0) throw TransportError("send on closed link");
        std::vector<u8> frame(kFrameHeaderBytes + payload.size());
        u32 len = static_cast<u32>(payload.size());
        frame[0] = static_cast<u8>(len);
        frame[1] = static_cast<u8>(len >> 8);
        frame[2] = static_cast<u8>(len >> 16);
        frame[3] = static_cast<u8>(len >> 24);
        frame[4] = static_cast<u8>(tag);
        if (!payload.empty())
            std::memcpy(frame.data() + kFrameHeaderBytes, payload.data(), payload.size());
        write_all(fd_, frame.data(), frame.size());
    }

    Message recv() override {
        if (fd_ < 0) throw TransportError("recv on closed link");
        u8 hdr[kFrameHeaderBytes];
        read_all(fd_, hdr, sizeof(hdr));
        u32 len = u32(hdr[0]) | u32(hdr[1]) << 8 | u32(hdr[2]) << 16 | u32(hdr[3]) << 24;
        Message m;
        m.tag = static_cast<Tag>(hdr[4]);
        m.payload.resize(len);
        if (len > 0) read_all(fd_, m.payload.data(), len);
        return m;
    }

    void close() override {
        if (fd_ >= 0) {
            ::shutdown(fd_, SHUT_RDWR);
            ::close(fd_);
            fd_ = -1;
        }
    }

private:
    int fd_;
};

std::pair<std::string, std::string> split_host_port(const std::string& hp) {
    auto pos = hp.rfind(':');
    if (pos == std::string::npos) throw ConfigError("address must be host:port: " + hp);
    return {hp.substr(0, pos), hp.substr(pos + 1)};
}

int resolve_and(const std::string& host_port, bool listen) {
    auto [host, port] = split_host_port(host_port);
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    if (listen) hints.ai_flags = AI_PASSIVE;
    addrinfo* res = nullptr;
    int rc = getaddrinfo(host.empty() ? nullptr : host.c_str(), port.c_str(), &hints, &res);
    if (rc != 0) throw TransportError("getaddrinfo: " + std::string(gai_strerror(rc)));
    int fd = -1;
    for (addrinfo* ai = res; ai; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) continue;
        int one = 1;
        setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        if (listen) {
            if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 16) == 0) break;
        } else {
            if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        }
        ::close(fd);
        fd = -1;
    }
    freeaddrinfo(res);
    if (fd < 0)
        throw TransportError((listen ? "cannot listen on " : "cannot connect to ") + host_port);
    int one = 1;
    setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return fd;
}

}  // namespace

int tcp_listen(const std::string& host_port) { return resolve_and(host_port, true); }

u16 tcp_listen_port(int listen_fd) {
    sockaddr_storage ss{};
    socklen_t len = sizeof(ss);
    if (getsockname(listen_fd, reinterpret_cast<sockaddr*>(&ss), &len) != 0)
        throw TransportError("getsockname failed");
    if (ss.ss_family == AF_INET)
        return ntohs(reinterpret_cast<sockaddr_in*>(&ss)->sin_port);
    return ntohs(reinterpret_cast<sockaddr_in6*>(&ss)->sin6_port);
}

std::unique_ptr<Link> tcp_accept_link(int listen_fd, NodeId& peer_out) {
    int fd = ::accept(listen_fd, nullptr, nullptr);
    if (fd < 0) throw TransportError("accept failed");
    int one = 1;
    setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    u8 hello = 0;
    read_all(fd, &hello, 1);
    peer_out = hello;
    return std::make_unique<TcpLink>(fd);
}

std::unique_ptr<Link> tcp_connect_link(const std::string& host_port, NodeId self) {
    int fd = resolve_and(host_port, false);
    u8 hello = self;
    write_all(fd, &hello, 1);
    return std::make_unique<TcpLink>(fd);
}

void tcp_accept_peers(PartyEndpoint& ep, int listen_fd, std::vector<NodeId> expected) {
    while (!expected.empty()) {
        NodeId who = 0;
        auto link = tcp_accept_link(listen_fd, who);
        auto it = std::find(expected.begin(), expected.end(), who);
        if (it == expected.end())
            throw TransportError("unexpected peer node " + std::to_string(int(who)));
        expected.erase(it);
        ep.attach(who, std::move(link));
    }
}

std::unique_ptr<Link> tcp_connect_retry(const std::string& host_port, NodeId self,
                                        int attempts) {
    for (int attempt = 0;; ++attempt) {
        try {
            return tcp_connect_link(host_port, self);
        } catch (const TransportError&) {
            if (attempt >= attempts) throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
    }
}

}  // namespace aucmpc
