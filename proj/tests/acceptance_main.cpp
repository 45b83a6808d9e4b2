// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// gated criterion fails. An optional argv[1] selects a single criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aucmpc/harness.hpp"
#include "aucmpc/oracle.hpp"
#include "aucmpc/session.hpp"

using namespace aucmpc;

namespace {

Seed seed_of(u8 v) {
    Seed s{};
    s.fill(v);
    return s;
}

u64 parse_scaled(const std::string& decimal4, u64 F) {
    // "0.6930" -> 6930 at F = 10^4; general F handled via rounding back
    auto dot = decimal4.find('.');
    u64 whole = std::stoull(decimal4.substr(0, dot));
    u64 frac = std::stoull(decimal4.substr(dot + 1));
    return static_cast<u64>((u128(whole) * 10000 + frac) * F / 10000);
}

std::string fmt_con(u64 v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "0.%04llu", static_cast<unsigned long long>(v));
    return buf;
}

// Ensures both classes in a slice without changing its size.
void fix_classes(OwnerDataset& ds) {
    bool pos = false, neg = false;
    for (auto& r : ds.rows) (r.label ? pos : neg) = true;
    if (!pos) ds.rows.front().label = 1;
    if (!neg) ds.rows.back().label = 0;
}

std::vector<PlainSample> plain_of(const std::vector<OwnerDataset>& slices, u64 F) {
    std::vector<PlainSample> out;
    for (auto& s : slices)
        for (auto& r : s.rows) out.push_back({encode_pcv(r.pcv, F), r.label});
    return out;
}

struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;
};

// --- criterion 1: DREAM reproduction -----------------------------------------

std::string dream_path() {
    if (const char* env = std::getenv("AUCMPC_DREAM_CSV")) return env;
    for (const char* cand : {"data/dream_snail.csv", "../data/dream_snail.csv",
                             "../../data/dream_snail.csv"}) {
        std::ifstream probe(cand);
        if (probe) return cand;
    }
    return {};
}

Outcome criterion1() {
    Outcome out;
    auto path = dream_path();
    if (path.empty()) {
        out.skipped = true;
        out.detail =
            "DREAM csv not present; place the team-Snail submission joined with the "
            "truth labels at data/dream_snail.csv or set AUCMPC_DREAM_CSV";
        return out;
    }
    auto ds = ingest_csv_file(path);
    std::ostringstream d;
    d << path << " with " << ds.rows.size() << " samples";

    SessionConfig cfg;
    auto start = std::chrono::steady_clock::now();
    cfg.metric = Metric::AurocTie;
    auto roc = run_local_session({ds}, cfg, seed_of(101)).value();
    cfg.metric = Metric::Aupr;
    auto pr = run_local_session({ds}, cfg, seed_of(102)).value();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    u64 roc_i = parse_scaled(roc, cfg.F), pr_i = parse_scaled(pr, cfg.F);
    bool roc_ok = roc == "0.6930" || (roc_i >= 6929 && roc_i <= 6931);
    bool pr_ok = pr == "0.8440" || (pr_i >= 8439 && pr_i <= 8441);
    d << "; auroc-tie=" << roc << " (want 0.6930), aupr=" << pr << " (want 0.8440), "
      << secs << "s";
    out.pass = roc_ok && pr_ok && secs < 60.0;
    out.detail = d.str();
    return out;
}

// --- criterion 2: oracle equivalence ------------------------------------------

Outcome criterion2() {
    Outcome out;
    const u64 F = 10000;
    PairStream rng(seed_of(2), "ACC2");
    Rational worst_tie = 0, worst_pr = 0;
    size_t total_m = 0;

    for (int t = 0; t < 100; ++t) {
        size_t owners = 1 + static_cast<size_t>(t % 8);
        size_t m = 20 + rng.next_below(181);  // up to 200 samples
        total_m += m;

        // tied dataset, slices first so oracle and session see identical rows
        std::vector<OwnerDataset> tied(owners);
        {
            u64 cur = 9000 + rng.next_below(1000);
            for (size_t j = 0; j < m; ++j) {
                if (rng.next_below(100) < 55) cur -= 1 + rng.next_below(3);
                tied[j % owners].rows.push_back(
                    {fmt_con(cur), static_cast<u8>(rng.next_bit())});
            }
            for (auto& s : tied) fix_classes(s);
        }
        // tie-free dataset: strictly decreasing confidences
        std::vector<OwnerDataset> free(owners);
        {
            u64 cur = 9999;
            for (size_t j = 0; j < m; ++j) {
                free[j % owners].rows.push_back(
                    {fmt_con(cur), static_cast<u8>(rng.next_bit())});
                cur -= 1 + rng.next_below(4);
            }
            for (auto& s : free) fix_classes(s);
        }

        SessionConfig cfg;
        cfg.F = F;
        Seed run_seed = seed_of(static_cast<u8>(t));

        cfg.metric = Metric::AurocTie;
        u64 got_tie = parse_scaled(run_local_session(tied, cfg, run_seed).value(), F);
        auto err_tie = scaled_abs_error(got_tie, F, plain_auroc_tie(plain_of(tied, F)));
        if (err_tie > worst_tie) worst_tie = err_tie;
        if (err_tie > Rational(1, F)) {
            out.pass = false;
            out.detail = "auroc-tie off by more than 1/F on dataset " + std::to_string(t);
            return out;
        }

        cfg.metric = Metric::Aupr;
        u64 got_pr = parse_scaled(run_local_session(tied, cfg, run_seed).value(), F);
        auto err_pr = scaled_abs_error(got_pr, F, plain_aupr(plain_of(tied, F)));
        if (err_pr > worst_pr) worst_pr = err_pr;
        if (err_pr > Rational(10, F)) {
            out.pass = false;
            out.detail = "aupr off by more than 10/F on dataset " + std::to_string(t);
            return out;
        }

        cfg.metric = Metric::Auroc;
        u64 got_roc = parse_scaled(run_local_session(free, cfg, run_seed).value(), F);
        i64 want = scaled_floor(plain_auroc_no_tie(plain_of(free, F)), F);
        if (static_cast<i64>(got_roc) != want) {
            out.pass = false;
            out.detail = "tie-free auroc not exact on dataset " + std::to_string(t);
            return out;
        }
    }
    std::ostringstream d;
    d << "100 datasets (" << total_m << " samples, 1-8 owners); worst |err|: auroc-tie "
      << worst_tie << " (<=1/F), aupr " << worst_pr << " (<=10/F), tie-free auroc exact";
    out.detail = d.str();
    return out;
}

// --- criterion 3: extreme ties --------------------------------------------------

Outcome criterion3() {
    Outcome out;
    OwnerDataset pos_first, neg_first;
    for (int i = 0; i < 10; ++i) {
        pos_first.rows.push_back({"0.5", i < 5});
        neg_first.rows.push_back({"0.5", i >= 5});
    }
    SessionConfig cfg;
    cfg.metric = Metric::Auroc;
    auto a = run_local_session({pos_first}, cfg, seed_of(31)).value();
    auto b = run_local_session({neg_first}, cfg, seed_of(32)).value();
    cfg.metric = Metric::AurocTie;
    auto c = run_local_session({pos_first}, cfg, seed_of(33)).value();
    auto d = run_local_session({neg_first}, cfg, seed_of(34)).value();
    out.pass = a == "1.0000" && b == "0.0000" && c == "0.5000" && d == "0.5000";
    out.detail = "no-tie engine: " + a + " / " + b + " (want 1.0000 / 0.0000); with-tie: " +
                 c + " / " + d + " (want 0.5000 / 0.5000)";
    return out;
}

// --- criterion 4: protocol unit properties ---------------------------------------

Outcome criterion4() {
    Outcome out;
    std::ostringstream d;

    auto mux_rep = brute_force_mux_check(10000, seed_of(41));
    d << "mux " << mux_rep.instances << " random";
    if (!mux_rep.pass()) {
        out.pass = false;
        out.detail = "mux failures";
        return out;
    }

    // compare: 10^4 random pairs within the |x-y| < K domain
    {
        Trio trio(TrioSeeds::deterministic(42));
        PairStream rng(seed_of(42), "ACC4CMP");
        const size_t n = 10000;
        std::vector<u64> xs(n), ys(n);
        std::vector<Sec> x0(n), x1(n), y0(n), y1(n);
        for (size_t j = 0; j < n; ++j) {
            xs[j] = rng.next_below(u64(1) << 62);
            ys[j] = rng.next_below(u64(1) << 62);
            x0[j].v = rng.next_u64();
            x1[j].v = xs[j] - x0[j].v;
            y0[j].v = rng.next_u64();
            y1[j].v = ys[j] - y0[j].v;
        }
        auto res = trio.run([&](Party& p) -> std::vector<Sec> {
            if (p.role == Role::S0) return compare_vec(p, x0, y0);
            if (p.role == Role::S1) return compare_vec(p, x1, y1);
            std::vector<Sec> dummy(n);
            return compare_vec(p, dummy, dummy);
        });
        for (size_t j = 0; j < n; ++j)
            if (open64(res[0][j].v, res[1][j].v) != (xs[j] >= ys[j] ? 0u : 1u)) {
                out.pass = false;
                out.detail = "compare random failure";
                return out;
            }
        d << "; compare 10^4 random";
    }

    // modulus conversion: 10^4 random, share splits wrap about half the time
    {
        Trio trio(TrioSeeds::deterministic(43));
        PairStream rng(seed_of(43), "ACC4MC");
        const size_t n = 10000;
        std::vector<u64> xs(n);
        std::vector<Sec> x0(n), x1(n);
        for (size_t j = 0; j < n; ++j) {
            xs[j] = rng.next_element(RingId::K);
            x0[j].v = rng.next_element(RingId::K);
            x1[j].v = (xs[j] - x0[j].v) & (kK - 1);
        }
        auto res = trio.run([&](Party& p) -> std::vector<Sec> {
            if (p.role == Role::S0) return modulus_conversion_vec(p, x0);
            if (p.role == Role::S1) return modulus_conversion_vec(p, x1);
            std::vector<Sec> dummy(n);
            return modulus_conversion_vec(p, dummy);
        });
        for (size_t j = 0; j < n; ++j)
            if (open64(res[0][j].v, res[1][j].v) != xs[j]) {
                out.pass = false;
                out.detail = "modulus conversion failure";
                return out;
            }
        d << "; mc 10^4 random";
    }

    // private compare: exhaustive at 8 bits, including the y = 2^l - 1 edge
    {
        Trio trio(TrioSeeds::deterministic(44));
        PairStream rng(seed_of(44), "ACC4PC");
        std::vector<u64> rs, ys;
        std::vector<u8> ns;
        for (u64 r = 0; r < 256; ++r)
            for (u64 y = 0; y < 256; ++y)
                for (u8 nb = 0; nb < 2; ++nb) {
                    rs.push_back(r);
                    ys.push_back(y);
                    ns.push_back(nb);
                }
        const unsigned ell = 8;
        std::vector<u8> bits0(rs.size() * ell), bits1(rs.size() * ell);
        for (size_t j = 0; j < rs.size(); ++j) {
            auto [b0, b1] = share_bits(rs[j], ell, rng);
            std::copy(b0.shares.begin(), b0.shares.end(), bits0.begin() + j * ell);
            std::copy(b1.shares.begin(), b1.shares.end(), bits1.begin() + j * ell);
        }
        auto res = trio.run([&](Party& p) -> std::vector<u8> {
            if (p.role == Role::S0) return private_compare_vec(p, bits0, ys, ns, ell);
            if (p.role == Role::S1) return private_compare_vec(p, bits1, ys, ns, ell);
            return private_compare_helper(p, rs.size(), ell);
        });
        for (size_t j = 0; j < rs.size(); ++j) {
            u8 want = ns[j] ^ (rs[j] > ys[j] ? 1 : 0);
            if ((res[0][j] ^ res[1][j]) != want || res[2][j] != want) {
                out.pass = false;
                out.detail = "private compare failure at reduced width";
                return out;
            }
        }
        d << "; pc exhaustive l=8 (131072)";
    }

    // compare: exhaustive sweep over [0, 2^12)^2
    {
        auto rep = brute_force_compare_check(4096, seed_of(45));
        if (!rep.pass()) {
            out.pass = false;
            out.detail = "compare exhaustive sweep failures: " + std::to_string(rep.failures);
            return out;
        }
        d << "; compare exhaustive 2^24";
    }

    // divide: exact floors over x,y in [1,10^3] and 10^4 large random
    {
        auto rep = brute_force_divide_check(1000, 10000, seed_of(46));
        if (!rep.pass()) {
            out.pass = false;
            out.detail = "divide sweep failures";
            return out;
        }
        d << "; divide exact floor 10^6 pairs";
    }

    out.detail = d.str();
    return out;
}

// --- criterion 5: rounds and communication ---------------------------------------

Outcome criterion5() {
    Outcome out;
    struct Shot {
        std::array<std::map<Tag, TagStats>, 3> snap;
    };
    auto run_once = [&](u8 salt, u64 xv, u64 yv, u64 bv, u64 kv) {
        Trio trio(TrioSeeds::deterministic(salt));
        PairStream rng(seed_of(salt), "ACC5");
        auto mk = [&](u64 v, u64 mask = ~u64(0)) {
            std::pair<Sec, Sec> s;
            s.first.v = rng.next_u64() & mask;
            s.second.v = (v - s.first.v) & mask;
            return s;
        };
        auto x = mk(xv), y = mk(yv), b = mk(bv), k = mk(kv, kK - 1);
        trio.run([&](Party& p) -> int {
            Sec sx, sy, sb, sk;
            if (p.role == Role::S0) {
                sx = x.first; sy = y.first; sb = b.first; sk = k.first;
            } else if (p.role == Role::S1) {
                sx = x.second; sy = y.second; sb = b.second; sk = k.second;
            }
            mux(p, sx, sy, sb);
            modulus_conversion(p, sk);
            compare(p, sx, sy);
            divide(p, sx, sy, u64(1) << 20, 10000);
            mul(p, sx, sy);
            return 0;
        });
        Shot s;
        for (int i = 0; i < 3; ++i) s.snap[i] = trio.party(i).tr().snapshot();
        return s;
    };

    auto a = run_once(51, 123456, 999, 1, 77);
    auto b = run_once(52, 42, 4242424242ull, 0, kK - 1);

    // Table rounds at both proxies
    for (int i = 0; i < 2; ++i) {
        auto& s = a.snap[i];
        if (s.at(Tag::MUX).rounds_last != 2 || s.at(Tag::MC).rounds_last != 3 ||
            s.at(Tag::CMP).rounds_last != 5 || s.at(Tag::DIV).rounds_last != 2) {
            out.pass = false;
            out.detail = "per-invocation round counts do not match the table";
            return out;
        }
    }
    // data independence of communication
    for (int i = 0; i < 3; ++i)
        for (Tag t : {Tag::MUX, Tag::MC, Tag::CMP, Tag::DIV, Tag::MUL})
            if (a.snap[i].at(t).bytes != b.snap[i].at(t).bytes ||
                a.snap[i].at(t).setup_bytes != b.snap[i].at(t).setup_bytes) {
                out.pass = false;
                out.detail = "per-invocation bytes depend on inputs";
                return out;
            }

    // measured wire bits per invocation vs the published cost formulas (reported)
    auto wire_bits = [&](Tag t) {
        u64 payload = 0;
        for (int i = 0; i < 3; ++i) {
            auto& st = a.snap[i].at(t);
            payload += st.bytes + st.setup_bytes - kFrameHeaderBytes * st.messages;
        }
        return payload * 8;
    };
    const u64 ell = 64, logp = 7;
    std::ostringstream d;
    d << "rounds mux/mc/cmp/div = 2/3/5/2; bytes input-independent; measured online+setup bits "
      << "(cost formula): mux " << wire_bits(Tag::MUX) << " (6l=" << 6 * ell << "), mc "
      << wire_bits(Tag::MC) << " (4l*logP+6l=" << 4 * ell * logp + 6 * ell << "), cmp "
      << wire_bits(Tag::CMP) << " (4l*logP+11l=" << 4 * ell * logp + 11 * ell << "), div "
      << wire_bits(Tag::DIV) << " (6l=" << 6 * ell << ")";
    out.detail = d.str();
    return out;
}

// --- criterion 6: sorting ----------------------------------------------------------

Outcome criterion6() {
    Outcome out;
    Trio trio(TrioSeeds::deterministic(61));
    PairStream rng(seed_of(61), "ACC6");

    struct PlainRec {
        u64 con, label;
    };
    auto share_list = [&](const std::vector<PlainRec>& plain) {
        std::array<std::vector<SecRecord>, 2> s;
        s[0].resize(plain.size());
        s[1].resize(plain.size());
        for (size_t j = 0; j < plain.size(); ++j) {
            u64 c0 = rng.next_u64(), l0 = rng.next_u64();
            s[0][j].con.v = c0;
            s[1][j].con.v = plain[j].con - c0;
            s[0][j].label.v = l0;
            s[1][j].label.v = plain[j].label - l0;
        }
        return s;
    };

    // 10^3 random pairs, each merged under every delta in {1,3,5,11}
    const int pairs = 1000;
    for (int t = 0; t < pairs; ++t) {
        size_t n1 = 1 + rng.next_below(12), n2 = 1 + rng.next_below(12);
        std::vector<PlainRec> a(n1), b(n2);
        for (auto& r : a) r = {rng.next_below(40), rng.next_bit()};
        for (auto& r : b) r = {rng.next_below(40), rng.next_bit()};
        auto desc = [](const PlainRec& x, const PlainRec& y) { return x.con > y.con; };
        std::sort(a.begin(), a.end(), desc);
        std::sort(b.begin(), b.end(), desc);
        std::vector<PlainRec> want(a);
        want.insert(want.end(), b.begin(), b.end());
        std::stable_sort(want.begin(), want.end(), desc);

        for (u64 delta : {1, 3, 5, 11}) {
            auto s1 = share_list(a), s2 = share_list(b);
            auto res = trio.run([&](Party& p) -> std::vector<SecRecord> {
                if (p.role == Role::S0) return merge_pair(p, s1[0], s2[0], delta);
                if (p.role == Role::S1) return merge_pair(p, s1[1], s2[1], delta);
                return merge_pair(p, std::vector<SecRecord>(n1),
                                  std::vector<SecRecord>(n2), delta);
            });
            for (size_t j = 0; j < want.size(); ++j)
                if (open64(res[0][j].con.v, res[1][j].con.v) != want[j].con) {
                    out.pass = false;
                    out.detail = "merge mismatch vs plain sort (delta " +
                                 std::to_string(delta) + ")";
                    return out;
                }
        }
    }

    // unbalanced distribution {12,18,32,58,107,258,507,1008} scaled by 10
    for (u64 delta : {1, 3, 5, 11}) {
        std::vector<size_t> sizes{1, 2, 3, 6, 11, 26, 51, 101};
        std::vector<std::vector<PlainRec>> plains;
        std::vector<PlainRec> all;
        for (size_t m : sizes) {
            std::vector<PlainRec> l(m);
            for (auto& r : l) r = {rng.next_below(10000), rng.next_bit()};
            std::sort(l.begin(), l.end(),
                      [](const PlainRec& x, const PlainRec& y) { return x.con > y.con; });
            all.insert(all.end(), l.begin(), l.end());
            plains.push_back(std::move(l));
        }
        std::stable_sort(all.begin(), all.end(),
                         [](const PlainRec& x, const PlainRec& y) { return x.con > y.con; });
        std::vector<std::vector<SecRecord>> l0, l1, ld;
        for (auto& pl : plains) {
            auto s = share_list(pl);
            l0.push_back(s[0]);
            l1.push_back(s[1]);
            ld.emplace_back(pl.size());
        }
        auto res = trio.run([&](Party& p) -> std::vector<SecRecord> {
            if (p.role == Role::S0) return merge_many(p, l0, delta);
            if (p.role == Role::S1) return merge_many(p, l1, delta);
            return merge_many(p, ld, delta);
        });
        for (size_t j = 0; j < all.size(); ++j)
            if (open64(res[0][j].con.v, res[1][j].con.v) != all[j].con) {
                out.pass = false;
                out.detail = "unbalanced merge_many mismatch";
                return out;
            }
    }

    // 16 lists x 64 records reduce to one globally descending list
    {
        std::vector<std::vector<PlainRec>> plains;
        std::vector<PlainRec> all;
        for (int k = 0; k < 16; ++k) {
            std::vector<PlainRec> l(64);
            for (auto& r : l) r = {rng.next_below(10000), rng.next_bit()};
            std::sort(l.begin(), l.end(),
                      [](const PlainRec& x, const PlainRec& y) { return x.con > y.con; });
            all.insert(all.end(), l.begin(), l.end());
            plains.push_back(std::move(l));
        }
        std::stable_sort(all.begin(), all.end(),
                         [](const PlainRec& x, const PlainRec& y) { return x.con > y.con; });
        std::vector<std::vector<SecRecord>> l0, l1, ld;
        for (auto& pl : plains) {
            auto s = share_list(pl);
            l0.push_back(s[0]);
            l1.push_back(s[1]);
            ld.emplace_back(pl.size());
        }
        auto res = trio.run([&](Party& p) -> std::vector<SecRecord> {
            if (p.role == Role::S0) return merge_many(p, l0, 1);
            if (p.role == Role::S1) return merge_many(p, l1, 1);
            return merge_many(p, ld, 1);
        });
        for (size_t j = 0; j < all.size(); ++j)
            if (open64(res[0][j].con.v, res[1][j].con.v) != all[j].con) {
                out.pass = false;
                out.detail = "16x64 merge_many out of order";
                return out;
            }
    }

    // final AUC invariant under delta (full sessions)
    {
        OwnerDataset ds;
        u64 cur = 9000;
        for (int j = 0; j < 40; ++j) {
            if (rng.next_below(2)) cur -= rng.next_below(3);
            ds.rows.push_back({fmt_con(cur), static_cast<u8>(j % 3 == 0)});
        }
        std::vector<OwnerDataset> slices(4);
        for (size_t j = 0; j < ds.rows.size(); ++j) slices[j % 4].rows.push_back(ds.rows[j]);
        for (auto& s : slices) fix_classes(s);
        SessionConfig cfg;
        cfg.metric = Metric::AurocTie;
        std::string ref;
        for (u64 delta : {1, 3, 5, 11}) {
            cfg.delta = delta;
            auto v = run_local_session(slices, cfg, seed_of(62)).value();
            if (ref.empty()) ref = v;
            if (v != ref) {
                out.pass = false;
                out.detail = "AUC changed across delta";
                return out;
            }
        }
    }

    // closed-form interleaving count vs exhaustive enumeration
    std::function<u64(u64, u64)> walk = [&](u64 i, u64 j) -> u64 {
        if (i == 0 && j == 0) return 1;
        u64 total = 0;
        if (i > 0) total += walk(i - 1, j);
        if (j > 0) total += walk(i, j - 1);
        return total;
    };
    for (u64 n1 = 1; n1 <= 6; ++n1)
        for (u64 n2 = 1; n2 <= n1; ++n2) {
            auto got = possible_merge_count(n1, n2);
            if (!got.exact || static_cast<u64>(got.value) != walk(n1, n2)) {
                out.pass = false;
                out.detail = "possible_merge_count formula mismatch";
                return out;
            }
        }
    if (static_cast<u64>(possible_merge_count(2, 2).value) != 6) {
        out.pass = false;
        out.detail = "(2,2) must give 6";
        return out;
    }

    out.detail =
        "1000 random merges x delta {1,3,5,11} equal plain sort; unbalanced "
        "{1,2,3,6,11,26,51,101} and 16x64 merges globally sorted; AUC invariant under "
        "delta; merge-count formula matches enumeration up to size 6 ((2,2)=6)";
    return out;
}

// --- criterion 7: liveness smoke benchmark -------------------------------------------

Outcome criterion7() {
    Outcome out;
    PairStream rng(seed_of(71), "ACC7");
    std::vector<OwnerDataset> owners(16);
    for (auto& ds : owners) {
        u64 cur = 9500;
        for (int j = 0; j < 64; ++j) {
            if (rng.next_below(2)) cur -= rng.next_below(4);
            ds.rows.push_back({fmt_con(cur), static_cast<u8>(j % 3 == 0)});
        }
        fix_classes(ds);
    }
    SessionConfig cfg;
    cfg.metric = Metric::AurocTie;
    auto start = std::chrono::steady_clock::now();
    auto res = run_local_session(owners, cfg, seed_of(72));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.pass = secs < 300.0;
    std::ostringstream d;
    d << "16 owners x 64 samples, auroc-tie=" << res.value() << ", " << secs
      << "s (< 300s); wall-clock scaling tables are not desk-reproducible and are excluded";
    out.detail = d.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "DREAM reproduction", criterion1},
        {2, "oracle equivalence suite", criterion2},
        {3, "extreme-tie behavior", criterion3},
        {4, "protocol unit properties", criterion4},
        {5, "round counts and communication", criterion5},
        {6, "sorting", criterion6},
        {7, "scalability smoke benchmark", criterion7},
    };

    bool all_ok = true;
    for (const auto& e : entries) {
        if (only != 0 && e.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* verdict = o.skipped ? "SKIP" : o.pass ? "PASS" : "FAIL";
        std::printf("%s criterion %d (%s): %s [%.1fs]\n", verdict, e.id, e.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass && !o.skipped) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
