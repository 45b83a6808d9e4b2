#pragma once

#include <map>
#include <optional>

#include "aucmpc/owner.hpp"
#include "aucmpc/party.hpp"
#include "aucmpc/sort.hpp"

namespace aucmpc {

// Parameters every participant must agree on; verified by a hello exchange
// before any share moves.
struct SessionConfig {
    Metric metric = Metric::AurocTie;
    u64 delta = 1;
    u64 F = 10000;
    size_t n_owners = 1;

    void validate() const;
};

struct ServerResult {
    u64 result_share = 0;  // proxies only
    LeakageReport leakage;
};

// Full server-side session over an endpoint already wired to the two other
// servers and n_owners owner nodes. S0 generates (or is given) the common
// seed and sends it to S1.
ServerResult run_server(PartyEndpoint& ep, Role role, const SessionConfig& cfg,
                        const Seed& priv_seed,
                        std::optional<Seed> common_seed = std::nullopt);

struct OwnerOutcome {
    std::string value;  // decimal string, four fractional digits
    u64 scale = 0;
};

// Owner-side session over an endpoint wired to S0 and S1.
OwnerOutcome run_owner(PartyEndpoint& ep, u32 owner_id, const OwnerDataset& ds,
                       const SessionConfig& cfg, PairStream& rng);

// Runs servers and owners on in-process transport, one thread each.
struct LocalSessionOutput {
    std::vector<OwnerOutcome> owners;
    std::array<std::map<Tag, TagStats>, 3> server_transcripts;
    std::vector<std::map<Tag, TagStats>> owner_transcripts;
    LeakageReport leakage;  // S0's view

    const std::string& value() const { return owners.at(0).value; }
};

LocalSessionOutput run_local_session(const std::vector<OwnerDataset>& datasets,
                                     const SessionConfig& cfg, const Seed& base_seed);

// Derives the per-party seeds a local session uses from one base seed.
struct SessionSeeds {
    Seed common, s0_priv, s1_priv, s2_priv;
    std::vector<Seed> owner;
};
SessionSeeds derive_session_seeds(const Seed& base, size_t n_owners);

}  // namespace aucmpc
