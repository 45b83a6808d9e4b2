#pragma once

#include <optional>

#include "aucmpc/prng.hpp"
#include "aucmpc/transport.hpp"

namespace aucmpc {

// Common-randomness streams shared by the two proxies, one per protocol so
// draws in different protocols never interleave.
struct CommonStreams {
    PairStream mux, mc, cmp, div, pc, tie, sort, aupr;

    explicit CommonStreams(const Seed& s)
        : mux(s, "MUX"), mc(s, "MC"), cmp(s, "CMP"), div(s, "DIV"), pc(s, "PC"),
          tie(s, "TIE"), sort(s, "SORT"), aupr(s, "AUPR") {}
};

// Per-party session context: role, transport endpoint, the S0-S1 common
// streams (proxies only) and a private stream (the helper's working
// randomness; proxies use theirs for little beyond tests).
struct Party {
    Role role;
    PartyEndpoint* net = nullptr;
    std::optional<CommonStreams> commons;
    PairStream priv;

    Party(Role r, PartyEndpoint& ep, std::optional<Seed> common_seed, const Seed& priv_seed)
        : role(r), net(&ep), priv(priv_seed, "PRIVATE") {
        if (common_seed) commons.emplace(*common_seed);
        if (is_proxy() && !commons) throw ConfigError("proxy requires a common seed");
    }

    bool is_proxy() const { return role != Role::S2; }
    bool is_helper() const { return role == Role::S2; }

    // 0 for S0, 1 for S1. The additive-share index i in the protocol listings.
    u64 pid() const {
        if (!is_proxy()) throw std::logic_error("pid() on helper");
        return static_cast<u64>(role);
    }

    NodeId peer_proxy() const {
        if (!is_proxy()) throw std::logic_error("peer_proxy() on helper");
        return role == Role::S0 ? kS1 : kS0;
    }

    PairStream& common(Tag t) {
        if (!commons) throw std::logic_error("no common streams on this party");
        switch (t) {
            case Tag::MUX: return commons->mux;
            case Tag::MC: return commons->mc;
            case Tag::CMP: return commons->cmp;
            case Tag::DIV: return commons->div;
            case Tag::PC: return commons->pc;
            case Tag::TIE: return commons->tie;
            case Tag::SORT: return commons->sort;
            case Tag::AUPR: return commons->aupr;
            default: throw std::logic_error("no common stream for this tag");
        }
    }

    Transcript& tr() { return net->transcript(); }

    // Round counters follow the proxies' dependency chain; the helper's
    // transcript tracks bytes and invocations only.
    void round() {
        if (is_proxy()) net->transcript().count_round();
    }
};

// Marks one protocol invocation; nested invocations fold into the outer tag.
class ScopedTag {
public:
    ScopedTag(Party& p, Tag t) : p_(p) { p_.tr().begin(t); }
    ~ScopedTag() { p_.tr().end(); }
    ScopedTag(const ScopedTag&) = delete;
    ScopedTag& operator=(const ScopedTag&) = delete;

private:
    Party& p_;
};

}  // namespace aucmpc
