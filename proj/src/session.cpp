#include "aucmpc/session.hpp"

#include <thread>

#include "aucmpc/wire.hpp"

namespace aucmpc {

void SessionConfig::validate() const {
    if (delta == 0 || delta % 2 == 0) throw ConfigError("delta must be odd and >= 1");
    if (F < 10) throw ConfigError("precision scale F must be >= 10");
    if (n_owners == 0) throw ConfigError("need at least one data owner");
}

namespace {

std::vector<u8> hello_bytes(const SessionConfig& cfg) {
    WireWriter w;
    w.u8v(static_cast<u8>(cfg.metric));
    w.u64v(cfg.delta);
    w.u64v(cfg.F);
    w.u64v(cfg.n_owners);
    return w.take();
}

void check_hello(const std::vector<u8>& got, const SessionConfig& cfg, const char* who) {
    if (got != hello_bytes(cfg))
        throw ConfigError(std::string("session parameters disagree with ") + who);
}

}  // namespace

ServerResult run_server(PartyEndpoint& ep, Role role, const SessionConfig& cfg,
                        const Seed& priv_seed, std::optional<Seed> common_seed) {
    cfg.validate();

    // Seed exchange: S0 -> S1, 32 raw bytes.
    std::optional<Seed> common;
    if (role == Role::S0) {
        common = common_seed ? *common_seed : random_seed();
        ep.send(kS1, Tag::SEED, *common);
    } else if (role == Role::S1) {
        auto raw = ep.recv(kS0, Tag::SEED);
        if (raw.size() != 32) throw ProtocolError("bad seed length");
        Seed s;
        std::copy(raw.begin(), raw.end(), s.begin());
        common = s;
    }

    // Pairwise parameter agreement.
    auto hello = hello_bytes(cfg);
    for (NodeId peer : {kS0, kS1, kS2})
        if (peer != node_of(role)) ep.send(peer, Tag::HELLO, hello);
    for (NodeId peer : {kS0, kS1, kS2})
        if (peer != node_of(role))
            check_hello(ep.recv(peer, Tag::HELLO), cfg, "peer server");

    // Collect owner payloads (proxies) and agree on the public list sizes.
    std::vector<SharePayload> payloads;
    std::vector<u64> sizes(cfg.n_owners);
    if (role != Role::S2) {
        for (size_t k = 0; k < cfg.n_owners; ++k) {
            NodeId owner = static_cast<NodeId>(kOwnerBase + k);
            auto hello_raw = ep.recv(owner, Tag::HELLO);
            WireReader hr(hello_raw);
            u32 oid = hr.u32v();
            u64 m = hr.u64v();
            u64 f = hr.u64v();
            u64 delta = hr.u64v();
            Metric metric = static_cast<Metric>(hr.u8v());
            hr.expect_done();
            if (oid != k) throw ConfigError("owner id mismatch");
            if (f != cfg.F || metric != cfg.metric || delta != cfg.delta)
                throw ConfigError("owner session parameters disagree");
            auto data_raw = ep.recv(owner, Tag::DATA);
            auto payload = payload_from_wire(data_raw);
            if (payload.records.size() != m || m == 0)
                throw ProtocolError("owner payload size mismatch");
            sizes[k] = m;
            payloads.push_back(std::move(payload));
        }
        // Proxies cross-check the public sizes; S0 forwards them to the helper.
        WireWriter w;
        w.u64s(sizes);
        auto sizes_msg = w.take();
        ep.send(node_of(role == Role::S0 ? Role::S1 : Role::S0), Tag::HELLO, sizes_msg);
        if (ep.recv(node_of(role == Role::S0 ? Role::S1 : Role::S0), Tag::HELLO) != sizes_msg)
            throw ConfigError("proxies saw different owner list sizes");
        if (role == Role::S0) ep.send(kS2, Tag::HELLO, sizes_msg);
    } else {
        auto sizes_raw = ep.recv(kS0, Tag::HELLO);
        WireReader r(sizes_raw);
        for (auto& m : sizes) m = r.u64v();
        r.expect_done();
    }

    Party party(role, ep, common, priv_seed);

    std::vector<std::vector<SecRecord>> lists(cfg.n_owners);
    for (size_t k = 0; k < cfg.n_owners; ++k) {
        lists[k].resize(sizes[k]);
        if (role != Role::S2) {
            for (size_t j = 0; j < sizes[k]; ++j) {
                lists[k][j].con.v = payloads[k].records[j].first;
                lists[k][j].label.v = payloads[k].records[j].second;
            }
        }
    }

    ServerResult out;
    auto global = merge_many(party, std::move(lists), cfg.delta, &out.leakage);

    Sec result{};
    switch (cfg.metric) {
        case Metric::Auroc:
            result = auroc_no_ties(party, global, cfg.F);
            break;
        case Metric::AurocTie:
            mark_ties(party, global);
            result = auroc_with_ties(party, global, cfg.F);
            break;
        case Metric::Aupr:
            mark_ties(party, global);
            result = aupr(party, global, cfg.F);
            break;
    }
    out.result_share = result.v;

    if (role != Role::S2) {
        WireWriter w;
        w.u64v(result.v);
        auto msg = w.take();
        for (size_t k = 0; k < cfg.n_owners; ++k)
            ep.send(static_cast<NodeId>(kOwnerBase + k), Tag::RESULT, msg);
    }
    return out;
}

OwnerOutcome run_owner(PartyEndpoint& ep, u32 owner_id, const OwnerDataset& ds,
                       const SessionConfig& cfg, PairStream& rng) {
    cfg.validate();
    auto [p0, p1] = outsource(ds, cfg.metric, cfg.F, rng);

    WireWriter h;
    h.u32v(owner_id);
    h.u64v(p0.records.size());
    h.u64v(cfg.F);
    h.u64v(cfg.delta);
    h.u8v(static_cast<u8>(cfg.metric));
    auto hello = h.take();
    ep.send(kS0, Tag::HELLO, hello);
    ep.send(kS0, Tag::DATA, payload_to_wire(p0));
    ep.send(kS1, Tag::HELLO, hello);
    ep.send(kS1, Tag::DATA, payload_to_wire(p1));

    u64 s0 = WireReader(ep.recv(kS0, Tag::RESULT)).u64v();
    u64 s1 = WireReader(ep.recv(kS1, Tag::RESULT)).u64v();
    return {decode_result(s0, s1, cfg.F), cfg.F};
}

SessionSeeds derive_session_seeds(const Seed& base, size_t n_owners) {
    PairStream d(base, "DERIVE");
    auto next = [&d] {
        Seed s;
        for (auto& b : s) b = static_cast<u8>(d.next_below(256));
        return s;
    };
    SessionSeeds out{next(), next(), next(), next(), {}};
    for (size_t k = 0; k < n_owners; ++k) out.owner.push_back(next());
    return out;
}

LocalSessionOutput run_local_session(const std::vector<OwnerDataset>& datasets,
                                     const SessionConfig& cfg_in, const Seed& base_seed) {
    SessionConfig cfg = cfg_in;
    cfg.n_owners = datasets.size();
    cfg.validate();
    auto seeds = derive_session_seeds(base_seed, cfg.n_owners);

    InProcNetwork net;
    for (NodeId id : {kS0, kS1, kS2}) net.add_node(id);
    for (size_t k = 0; k < cfg.n_owners; ++k)
        net.add_node(static_cast<NodeId>(kOwnerBase + k));

    LocalSessionOutput out;
    out.owners.resize(cfg.n_owners);
    out.owner_transcripts.resize(cfg.n_owners);
    std::array<ServerResult, 3> server_results;
    std::vector<std::exception_ptr> errors(3 + cfg.n_owners);

    auto server_fn = [&](int idx, Role role, std::optional<Seed> common) {
        try {
            server_results[static_cast<size_t>(idx)] =
                run_server(net.endpoint(static_cast<NodeId>(idx)), role, cfg,
                           idx == 0   ? seeds.s0_priv
                           : idx == 1 ? seeds.s1_priv
                                      : seeds.s2_priv,
                           common);
        } catch (...) {
            errors[static_cast<size_t>(idx)] = std::current_exception();
            net.endpoint(static_cast<NodeId>(idx)).close_all();
        }
    };
    auto owner_fn = [&](size_t k) {
        try {
            PairStream rng(seeds.owner[k], "OUTSRC");
            out.owners[k] = run_owner(net.endpoint(static_cast<NodeId>(kOwnerBase + k)),
                                      static_cast<u32>(k), datasets[k], cfg, rng);
        } catch (...) {
            errors[3 + k] = std::current_exception();
            net.endpoint(static_cast<NodeId>(kOwnerBase + k)).close_all();
        }
    };

    std::vector<std::thread> threads;
    threads.emplace_back(server_fn, 0, Role::S0, std::optional<Seed>(seeds.common));
    threads.emplace_back(server_fn, 1, Role::S1, std::nullopt);
    threads.emplace_back(server_fn, 2, Role::S2, std::nullopt);
    for (size_t k = 0; k < cfg.n_owners; ++k) threads.emplace_back(owner_fn, k);
    for (auto& t : threads) t.join();
    // A party that fails closes its links and peers die on dead receives;
    // surface the root cause, not the knock-on transport error.
    std::exception_ptr fallback;
    for (auto& e : errors) {
        if (!e) continue;
        if (!fallback) fallback = e;
        try {
            std::rethrow_exception(e);
        } catch (const TransportError&) {
        } catch (...) {
            std::rethrow_exception(e);
        }
    }
    if (fallback) std::rethrow_exception(fallback);

    for (int i = 0; i < 3; ++i)
        out.server_transcripts[static_cast<size_t>(i)] =
            net.endpoint(static_cast<NodeId>(i)).transcript().snapshot();
    for (size_t k = 0; k < cfg.n_owners; ++k)
        out.owner_transcripts[k] =
            net.endpoint(static_cast<NodeId>(kOwnerBase + k)).transcript().snapshot();
    out.leakage = std::move(server_results[0].leakage);
    return out;
}

}  // namespace aucmpc
