#include "aucmpc/engine.hpp"

#include "aucmpc/wire.hpp"

namespace aucmpc {

// --- tie detection -------------------------------------------------------------

std::vector<Sec> detect_ties(Party& p, std::span<const Sec> cons) {
    const size_t m = cons.size();
    if (m == 0) throw std::invalid_argument("detect_ties: empty list");
    if (m == 1) return {sec_from_pub(p, 1)};
    ScopedTag tag(p, Tag::TIE);
    const size_t nd = m - 1;  // successive differences

    if (p.is_helper()) {
        auto m0 = p.net->recv(kS0);
        auto m1 = p.net->recv(kS1);
        if (m0.size() != m1.size() || m0.size() % 8 != 0)
            throw ProtocolError("tie detection: size mismatch");
        WireReader r0(m0), r1(m1);
        const size_t total = m0.size() / 8;
        WireWriter h0, h1;
        for (size_t j = 0; j < total; ++j) {
            u64 bit = (r0.u64v() ^ r1.u64v()) != 0 ? 1 : 0;
            u64 s0 = p.priv.next_u64();
            h0.u64v(s0);
            h1.u64v(bit - s0);
        }
        p.net->send(kS0, h0.take());
        p.net->send(kS1, h1.take());
        std::vector<Sec> marks(m);
        return marks;
    }

    auto& cs = p.common(Tag::TIE);
    const u64 i = p.pid();

    // Masked differences: S0 negates so zero diffs XOR to zero, both XOR a
    // common pad and permute the bit positions of every word.
    std::vector<u64> masked(nd);
    for (size_t j = 0; j < nd; ++j) {
        u64 d = cons[j].v - cons[j + 1].v;
        if (i == 0) d = 0 - d;
        u64 pad = cs.next_u64();
        auto sigma = cs.next_permutation(kEll);
        masked[j] = permute_bits(sigma, d ^ pad);
    }
    auto pi = cs.next_permutation(static_cast<u32>(nd));

    // Dummy load: count in [ceil(m/4), ceil(m/2)], common positions, and a
    // mix of zero and non-zero pairs so the helper cannot count real ties.
    const u64 lo = (m + 3) / 4, hi = (m + 1) / 2;
    const size_t dummies = static_cast<size_t>(lo + cs.next_below(hi - lo + 1));
    const size_t total = nd + dummies;
    auto placement = cs.next_permutation(static_cast<u32>(total));

    std::vector<u64> wire(total);
    std::vector<u64> dummy_vals(dummies);
    for (size_t d = 0; d < dummies; ++d) {
        u64 v = cs.next_u64();
        u8 zero = cs.next_bit();
        u64 delta = cs.next_u64();
        if (delta == 0) delta = 1;
        // zero dummy: both proxies place v (XOR = 0); non-zero: S1 offsets.
        dummy_vals[d] = (zero || i == 0) ? v : (v ^ delta);
    }
    for (size_t k = 0; k < total; ++k) {
        u32 src = placement[k];
        wire[k] = src < nd ? masked[pi[src]] : dummy_vals[src - nd];
    }

    WireWriter w;
    w.u64s(wire);
    p.net->send(kS2, w.take());
    p.round();
    auto reply = p.net->recv(kS2);
    p.round();
    WireReader rr(reply);
    std::vector<u64> got(total);
    for (auto& v : got) v = rr.u64v();

    std::vector<Sec> marks(m);
    for (size_t k = 0; k < total; ++k) {
        u32 src = placement[k];
        if (src < nd) marks[pi[src]].v = got[k];
    }
    marks[m - 1] = sec_from_pub(p, 1);
    return marks;
}

void mark_ties(Party& p, std::vector<SecRecord>& recs) {
    std::vector<Sec> cons(recs.size());
    for (size_t j = 0; j < recs.size(); ++j) cons[j] = recs[j].con;
    auto marks = detect_ties(p, cons);
    for (size_t j = 0; j < recs.size(); ++j) recs[j].tie = marks[j];
}

// --- AUROC -----------------------------------------------------------------------

Sec auroc_no_ties(Party& p, std::span<const SecRecord> recs, u64 F) {
    const size_t m = recs.size();
    if (m == 0) throw std::invalid_argument("auroc: empty list");
    Sec tp{}, rank{}, p_fp{}, acc{};
    Sec fp{};
    for (const auto& rec : recs) {
        tp = sec_add(p, tp, rec.label);
        rank = sec_add_pub(p, rank, 1);
        fp = sec_sub(p, rank, tp);
        Sec area = mul(p, tp, sec_sub(p, fp, p_fp));
        acc = sec_add(p, acc, area);
        p_fp = fp;
    }
    Sec denom = mul(p, tp, fp);
    return divide(p, acc, denom, u64(m) * u64(m), F);
}

Sec auroc_with_ties(Party& p, std::span<const SecRecord> recs, u64 F, AnchorTrace* trace) {
    const size_t m = recs.size();
    if (m == 0) throw std::invalid_argument("auroc: empty list");
    Sec tp{}, rank{}, p_fp{}, p_tp{}, n1{}, n2{};
    Sec fp{};
    for (const auto& rec : recs) {
        tp = sec_add(p, tp, rec.label);
        rank = sec_add_pub(p, rank, 1);
        fp = sec_sub(p, rank, tp);
        Sec d_fp = sec_sub(p, fp, p_fp);
        // rectangle: previous TP level times the FP step, gated by the mark
        Sec area = mul(p, p_tp, d_fp);
        area = mul(p, area, rec.tie);
        n1 = sec_add(p, n1, area);
        // triangle: TP step times FP step, gated by the mark
        Sec tri = mul(p, sec_sub(p, tp, p_tp), d_fp);
        tri = mul(p, tri, rec.tie);
        n2 = sec_add(p, n2, tri);
        p_fp = mux(p, p_fp, fp, rec.tie);
        p_tp = mux(p, p_tp, tp, rec.tie);
        if (trace) trace->after_record.emplace_back(p_tp, p_fp);
    }
    Sec num = sec_add(p, sec_mul_pub(p, n1, 2), n2);
    Sec denom = sec_mul_pub(p, mul(p, tp, fp), 2);
    return divide(p, num, denom, 2 * u64(m) * u64(m), F);
}

// --- AUPR ------------------------------------------------------------------------

Sec aupr(Party& p, std::span<const SecRecord> recs, u64 F, bool rank_axis) {
    const size_t m = recs.size();
    if (m == 0) throw std::invalid_argument("aupr: empty list");

    std::vector<Sec> tp(m), rank(m);
    Sec tp_acc{}, rank_acc{};
    for (size_t j = 0; j < m; ++j) {
        tp_acc = sec_add(p, tp_acc, recs[j].label);
        rank_acc = sec_add_pub(p, rank_acc, 1);
        tp[j] = tp_acc;
        rank[j] = rank_acc;
    }

    // Per-rank precision at scale F, computed under a common permutation so
    // the helper serves the divisions in shuffled order.
    std::vector<Sec> prec(m);
    {
        std::vector<u32> pi;
        std::vector<Sec> tp_in(m), rank_in(m);
        if (p.is_proxy()) {
            pi = p.common(Tag::AUPR).next_permutation(static_cast<u32>(m));
            for (size_t t = 0; t < m; ++t) {
                tp_in[t] = tp[pi[t]];
                rank_in[t] = rank[pi[t]];
            }
        }
        auto out = divide_vec(p, tp_in, rank_in, m, F);
        if (p.is_proxy())
            for (size_t t = 0; t < m; ++t) prec[pi[t]] = out[t];
    }

    Sec p_pc = sec_from_pub(p, F);  // precision anchor starts at 1.0
    Sec p_x{};                      // previous TP (or rank) at a change point
    Sec n1{}, n2{};
    for (size_t j = 0; j < m; ++j) {
        Sec x_now = rank_axis ? rank[j] : tp[j];
        Sec dx = sec_sub(p, x_now, p_x);
        Sec area = mul(p, p_pc, dx);
        area = mul(p, area, recs[j].tie);
        n1 = sec_add(p, n1, area);
        Sec tri = mul(p, dx, sec_sub(p, prec[j], p_pc));
        tri = mul(p, tri, recs[j].tie);
        n2 = sec_add(p, n2, tri);
        p_pc = mux(p, p_pc, prec[j], recs[j].tie);
        p_x = mux(p, p_x, x_now, recs[j].tie);
    }
    Sec num = sec_add(p, sec_mul_pub(p, n1, 2), n2);
    Sec denom = sec_mul_pub(p, tp[m - 1], 2);
    // num already carries scale F, so the closing division applies scale 1.
    return divide(p, num, denom, 2 * F * u64(m), 1);
}

}  // namespace aucmpc
