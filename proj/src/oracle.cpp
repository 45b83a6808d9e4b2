#include "aucmpc/oracle.hpp"

#include <algorithm>

#include "aucmpc/harness.hpp"
#include "aucmpc/protocols.hpp"

namespace aucmpc {

namespace {

void sort_desc(std::vector<PlainSample>& v) {
    std::stable_sort(v.begin(), v.end(),
                     [](const PlainSample& a, const PlainSample& b) { return a.con > b.con; });
}

std::pair<i64, i64> class_counts(const std::vector<PlainSample>& v) {
    i64 pos = 0, neg = 0;
    for (auto& s : v) (s.label ? pos : neg)++;
    return {pos, neg};
}

}  // namespace

Rational plain_auroc_no_tie(std::vector<PlainSample> samples) {
    sort_desc(samples);
    auto [pos, neg] = class_counts(samples);
    if (pos == 0 || neg == 0) throw std::invalid_argument("oracle: both classes required");
    for (size_t j = 0; j + 1 < samples.size(); ++j)
        if (samples[j].con == samples[j + 1].con)
            throw std::invalid_argument("oracle: tie present in no-tie oracle");
    i64 tp = 0, num = 0;
    for (auto& s : samples) {
        if (s.label)
            ++tp;
        else
            num += tp;  // FP steps by one exactly at negatives
    }
    return Rational(num, pos * neg);
}

Rational plain_auroc_tie(std::vector<PlainSample> samples) {
    sort_desc(samples);
    auto [pos, neg] = class_counts(samples);
    if (pos == 0 || neg == 0) throw std::invalid_argument("oracle: both classes required");
    i64 tp = 0, fp = 0, p_tp = 0, p_fp = 0;
    i64 num = 0;  // accumulates 2*pTP*dFP + dTP*dFP over change points
    for (size_t j = 0; j < samples.size(); ++j) {
        (samples[j].label ? tp : fp)++;
        bool change = j + 1 == samples.size() || samples[j].con != samples[j + 1].con;
        if (change) {
            num += 2 * p_tp * (fp - p_fp) + (tp - p_tp) * (fp - p_fp);
            p_tp = tp;
            p_fp = fp;
        }
    }
    return Rational(num, 2 * pos * neg);
}

Rational plain_aupr(std::vector<PlainSample> samples) {
    sort_desc(samples);
    auto [pos, neg] = class_counts(samples);
    (void)neg;
    if (pos == 0) throw std::invalid_argument("oracle: at least one positive required");
    i64 tp = 0, p_tp = 0;
    Rational p_pc = 1;
    Rational area = 0;
    for (size_t j = 0; j < samples.size(); ++j) {
        if (samples[j].label) ++tp;
        bool change = j + 1 == samples.size() || samples[j].con != samples[j + 1].con;
        if (change) {
            Rational pc(tp, static_cast<i64>(j + 1));
            Rational d_recall(tp - p_tp, pos);
            area += (p_pc + pc) * d_recall / 2;
            p_pc = pc;
            p_tp = tp;
        }
    }
    return area;
}

i64 scaled_floor(const Rational& r, u64 F) {
    using boost::multiprecision::cpp_int;
    cpp_int n = numerator(r) * F;
    cpp_int d = denominator(r);
    cpp_int q = n / d;  // inputs are non-negative here
    return q.convert_to<i64>();
}

Rational scaled_abs_error(u64 secure_value, u64 F, const Rational& oracle) {
    Rational got(secure_value, F);
    Rational diff = got - oracle;
    return diff < 0 ? Rational(-diff) : diff;
}

// --- brute-force sweeps ---------------------------------------------------------

namespace {

struct SharedVec {
    std::vector<Sec> s0, s1;
};

SharedVec share_all(std::span<const u64> values, PairStream& rng) {
    SharedVec out;
    out.s0.resize(values.size());
    out.s1.resize(values.size());
    for (size_t j = 0; j < values.size(); ++j) {
        u64 a = rng.next_u64();
        out.s0[j].v = a;
        out.s1[j].v = values[j] - a;
    }
    return out;
}

}  // namespace

BruteForceReport brute_force_protocol_check(const std::string& protocol, u64 bound,
                                            const Seed& salt) {
    if (protocol == "compare") return brute_force_compare_check(bound, salt);
    if (protocol == "mux") return brute_force_mux_check(bound, salt);
    if (protocol == "divide") return brute_force_divide_check(bound, 10000, salt);
    throw std::invalid_argument("no brute-force check for protocol '" + protocol + "'");
}

BruteForceReport brute_force_compare_check(u64 bound, const Seed& salt) {
    BruteForceReport rep{"compare", 0, 0};
    Trio trio(TrioSeeds{salt, salt, salt, salt});
    PairStream rng(salt, "BF-CMP");
    std::vector<u64> ys(bound);
    for (u64 y = 0; y < bound; ++y) ys[y] = y;
    for (u64 x = 0; x < bound; ++x) {
        std::vector<u64> xs(bound, x);
        auto sx = share_all(xs, rng);
        auto sy = share_all(ys, rng);
        auto res = trio.run([&](Party& p) -> std::vector<Sec> {
            if (p.role == Role::S0) return compare_vec(p, sx.s0, sy.s0);
            if (p.role == Role::S1) return compare_vec(p, sx.s1, sy.s1);
            std::vector<Sec> dummy(xs.size());
            return compare_vec(p, dummy, dummy);
        });
        for (u64 y = 0; y < bound; ++y) {
            ++rep.instances;
            u64 got = open64(res[0][y].v, res[1][y].v);
            u64 want = x >= y ? 0 : 1;
            if (got != want) ++rep.failures;
        }
    }
    return rep;
}

BruteForceReport brute_force_mux_check(u64 cases, const Seed& salt) {
    BruteForceReport rep{"mux", 0, 0};
    Trio trio(TrioSeeds{salt, salt, salt, salt});
    PairStream rng(salt, "BF-MUX");
    std::vector<u64> xs(cases), ys(cases), bs(cases);
    for (u64 j = 0; j < cases; ++j) {
        xs[j] = rng.next_u64();
        ys[j] = rng.next_u64();
        bs[j] = rng.next_bit();
    }
    auto sx = share_all(xs, rng);
    auto sy = share_all(ys, rng);
    auto sb = share_all(bs, rng);
    auto res = trio.run([&](Party& p) -> std::vector<Sec> {
        if (p.role == Role::S0) return mux_vec(p, sx.s0, sy.s0, sb.s0);
        if (p.role == Role::S1) return mux_vec(p, sx.s1, sy.s1, sb.s1);
        std::vector<Sec> dummy(xs.size());
        return mux_vec(p, dummy, dummy, dummy);
    });
    for (u64 j = 0; j < cases; ++j) {
        ++rep.instances;
        u64 got = open64(res[0][j].v, res[1][j].v);
        if (got != (bs[j] ? ys[j] : xs[j])) ++rep.failures;
    }
    return rep;
}

BruteForceReport brute_force_divide_check(u64 bound, u64 scale, const Seed& salt) {
    BruteForceReport rep{"divide", 0, 0};
    Trio trio(TrioSeeds{salt, salt, salt, salt});
    PairStream rng(salt, "BF-DIV");
    std::vector<u64> ys(bound);
    for (u64 y = 0; y < bound; ++y) ys[y] = y + 1;
    for (u64 x = 1; x <= bound; ++x) {
        std::vector<u64> xs(bound, x);
        auto sx = share_all(xs, rng);
        auto sy = share_all(ys, rng);
        auto res = trio.run([&](Party& p) -> std::vector<Sec> {
            if (p.role == Role::S0) return divide_vec(p, sx.s0, sy.s0, bound, scale);
            if (p.role == Role::S1) return divide_vec(p, sx.s1, sy.s1, bound, scale);
            std::vector<Sec> dummy(xs.size());
            return divide_vec(p, dummy, dummy, bound, scale);
        });
        for (u64 j = 0; j < bound; ++j) {
            ++rep.instances;
            u64 got = open64(res[0][j].v, res[1][j].v);
            u64 want = static_cast<u64>(u128(x) * scale / ys[j]);
            if (got != want) ++rep.failures;
        }
    }
    return rep;
}

}  // namespace aucmpc
