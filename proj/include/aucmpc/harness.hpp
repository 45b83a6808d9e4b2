#pragma once

#include <array>
#include <functional>
#include <thread>

#include "aucmpc/party.hpp"

namespace aucmpc {

struct TrioSeeds {
    Seed common;
    Seed helper;
    Seed p0;
    Seed p1;

    static TrioSeeds deterministic(u8 salt) {
        TrioSeeds s{};
        s.common.fill(salt);
        s.helper.fill(static_cast<u8>(salt + 1));
        s.p0.fill(static_cast<u8>(salt + 2));
        s.p1.fill(static_cast<u8>(salt + 3));
        return s;
    }
};

// Three in-process parties wired by FIFO queues, reusable across runs so
// randomness streams keep advancing like one long session.
class Trio {
public:
    explicit Trio(const TrioSeeds& seeds = TrioSeeds::deterministic(7)) {
        net_.add_node(kS0);
        net_.add_node(kS1);
        net_.add_node(kS2);
        parties_.emplace_back(Role::S0, net_.endpoint(kS0), seeds.common, seeds.p0);
        parties_.emplace_back(Role::S1, net_.endpoint(kS1), seeds.common, seeds.p1);
        parties_.emplace_back(Role::S2, net_.endpoint(kS2), std::nullopt, seeds.helper);
    }

    Party& party(int i) { return parties_[static_cast<size_t>(i)]; }
    InProcNetwork& network() { return net_; }

    // Runs fn(party) concurrently on all three roles and returns the three
    // results in role order. Exceptions from any thread are rethrown.
    template <typename Fn>
    auto run(Fn fn) {
        using R = std::invoke_result_t<Fn, Party&>;
        std::array<R, 3> results{};
        std::array<std::exception_ptr, 3> errors{};
        std::array<std::thread, 3> threads;
        for (int i = 0; i < 3; ++i) {
            threads[static_cast<size_t>(i)] = std::thread([&, i] {
                try {
                    results[static_cast<size_t>(i)] = fn(parties_[static_cast<size_t>(i)]);
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                    // Unblock peers stuck on receives.
                    parties_[static_cast<size_t>(i)].net->close_all();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return results;
    }

private:
    InProcNetwork net_;
    std::vector<Party> parties_;
};

// Reconstructs a pair of proxy share words over Z_L.
inline u64 open64(u64 s0, u64 s1) { return s0 + s1; }

}  // namespace aucmpc
