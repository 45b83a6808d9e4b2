#include "aucmpc/protocols.hpp"

#include "aucmpc/wire.hpp"

namespace aucmpc {

// --- MUX ----------------------------------------------------------------------

std::vector<Sec> mux_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y,
                         std::span<const Sec> b) {
    if (x.size() != y.size() || x.size() != b.size())
        throw std::invalid_argument("mux_vec: size mismatch");
    const size_t n = x.size();
    if (n == 0) return {};
    ScopedTag tag(p, Tag::MUX);

    if (p.is_helper()) {
        auto m0 = p.net->recv(kS0);
        auto m1 = p.net->recv(kS1);
        WireReader r0(m0), r1(m1);
        WireWriter h0, h1;
        for (size_t j = 0; j < n; ++j) {
            u64 m2 = r0.u64v(), m3 = r0.u64v();
            u64 m5 = r1.u64v(), m6 = r1.u64v();
            u64 z = m2 * m5 + m3 * m6;
            u64 s0 = p.priv.next_u64();
            h0.u64v(s0);
            h1.u64v(z - s0);
        }
        p.net->send(kS0, h0.take());
        p.net->send(kS1, h1.take());
        return std::vector<Sec>(n);
    }

    auto& cs = p.common(Tag::MUX);
    const u64 i = p.pid();
    std::vector<u64> keep(n);
    WireWriter out;
    for (size_t j = 0; j < n; ++j) {
        u64 r0 = cs.next_u64(), r1 = cs.next_u64(), r2 = cs.next_u64(), r3 = cs.next_u64();
        u64 xv = x[j].v, yv = y[j].v, bv = b[j].v;
        u64 diff = xv - yv;
        if (i == 0) {
            keep[j] = xv - bv * diff + r1 * bv + r2 * diff + r2 * r3;
            out.u64v(bv + r0);    // M2
            out.u64v(diff + r3);  // M3
        } else {
            keep[j] = xv - bv * diff + r0 * diff + r0 * r1 + r3 * bv;
            out.u64v(diff + r1);  // M5
            out.u64v(bv + r2);    // M6
        }
    }
    p.net->send(kS2, out.take());
    p.round();
    auto reply = p.net->recv(kS2);
    p.round();
    WireReader rr(reply);
    std::vector<Sec> z(n);
    for (size_t j = 0; j < n; ++j) z[j].v = keep[j] - rr.u64v();
    return z;
}

Sec mux(Party& p, Sec x, Sec y, Sec b) {
    return mux_vec(p, std::span(&x, 1), std::span(&y, 1), std::span(&b, 1))[0];
}

// --- Modulus conversion ---------------------------------------------------------

std::vector<Sec> modulus_conversion_vec(Party& p, std::span<const Sec> x_k) {
    const size_t n = x_k.size();
    if (n == 0) return {};
    ScopedTag tag(p, Tag::MC);

    if (p.is_helper()) {
        // Deal r, its Z_K shares, its bit shares over Z_67 and boolean shares
        // of the wrap of the r-shares. None of this depends on x.
        WireWriter w0, w1;
        for (size_t j = 0; j < n; ++j) {
            u64 r = p.priv.next_element(RingId::K);
            u64 r0 = p.priv.next_element(RingId::K);
            u64 r1 = (r - r0) & (kK - 1);
            u8 wrap = (r0 + r1 >= kK) ? 1 : 0;
            auto [bits0, bits1] = share_bits(r, kEll, p.priv);
            u8 wb0 = p.priv.next_bit();
            u8 wb1 = wrap ^ wb0;
            w0.u64v(r0);
            w0.bytes(bits0.shares);
            w0.u8v(wb0);
            w1.u64v(r1);
            w1.bytes(bits1.shares);
            w1.u8v(wb1);
        }
        p.net->send(kS0, w0.take(), /*setup=*/true);
        p.net->send(kS1, w1.take(), /*setup=*/true);
        private_compare_helper(p, n, kEll);
        return std::vector<Sec>(n);
    }

    auto& cs = p.common(Tag::MC);
    const u64 i = p.pid();
    std::vector<u8> n_common(n);
    for (size_t j = 0; j < n; ++j) n_common[j] = cs.next_bit();

    auto setup_raw = p.net->recv(kS2);
    WireReader setup(setup_raw);
    std::vector<u64> r_share(n);
    std::vector<u8> r_bits(n * kEll), w_share(n);
    std::vector<u64> y_share(n);
    for (size_t j = 0; j < n; ++j) {
        r_share[j] = setup.u64v();
        auto bits = setup.bytes(kEll);
        std::copy(bits.begin(), bits.end(), r_bits.begin() + j * kEll);
        w_share[j] = setup.u8v();
        y_share[j] = (x_k[j].v + r_share[j]) & (kK - 1);
    }

    WireWriter yw;
    yw.u64s(y_share);
    p.net->send(p.peer_proxy(), yw.take());
    auto peer_raw = p.net->recv(p.peer_proxy());
    p.round();
    WireReader peer(peer_raw);
    std::vector<u64> y(n);
    std::vector<u8> wrap_y(n);
    for (size_t j = 0; j < n; ++j) {
        u64 other = peer.u64v();
        y[j] = (y_share[j] + other) & (kK - 1);
        wrap_y[j] = (y_share[j] + other >= kK) ? 1 : 0;
    }

    auto nb = private_compare_vec(p, r_bits, y, n_common, kEll);

    std::vector<Sec> out(n);
    for (size_t j = 0; j < n; ++j) {
        u8 beta = nb[j];
        if (i == 0) beta ^= n_common[j];  // unmask: shares now hold (r > y)
        u8 c = static_cast<u8>(w_share[j] ^ beta);
        u64 y_l = y_share[j] + (i == 0 ? u64(wrap_y[j]) * kK : 0);
        out[j].v = y_l - (r_share[j] + u64(c) * kK);
    }
    return out;
}

Sec modulus_conversion(Party& p, Sec x_k) {
    return modulus_conversion_vec(p, std::span(&x_k, 1))[0];
}

// --- Compare ---------------------------------------------------------------------

std::vector<Sec> compare_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y) {
    if (x.size() != y.size()) throw std::invalid_argument("compare_vec: size mismatch");
    const size_t n = x.size();
    if (n == 0) return {};
    ScopedTag tag(p, Tag::CMP);

    if (p.is_helper()) {
        modulus_conversion_vec(p, x);  // token pass-through, sizes only
        auto m0 = p.net->recv(kS0);
        auto m1 = p.net->recv(kS1);
        WireReader r0(m0), r1(m1);
        WireWriter h0, h1;
        for (size_t j = 0; j < n; ++j) {
            u64 a00 = r0.u64v(), a01 = r0.u64v();
            u64 a10 = r1.u64v(), a11 = r1.u64v();
            u64 av[2] = {a00 + a10, a01 + a11};
            u64 bit[2];
            for (int t = 0; t < 2; ++t) {
                if (av[t] != 0 && av[t] != kK)
                    throw ProtocolError("compare: masked value is neither 0 nor K");
                bit[t] = av[t] / kK;
            }
            for (int t = 0; t < 2; ++t) {
                u64 s0 = p.priv.next_u64();
                h0.u64v(s0);
                h1.u64v(bit[t] - s0);
            }
        }
        p.net->send(kS0, h0.take());
        p.net->send(kS1, h1.take());
        return std::vector<Sec>(n);
    }

    auto& cs = p.common(Tag::CMP);
    const u64 i = p.pid();
    std::vector<u8> f(n);
    for (size_t j = 0; j < n; ++j) f[j] = cs.next_bit();

    std::vector<Sec> d_k(n);
    for (size_t j = 0; j < n; ++j) d_k[j].v = (x[j].v - y[j].v) & (kK - 1);
    auto d_l = modulus_conversion_vec(p, d_k);

    WireWriter aw;
    for (size_t j = 0; j < n; ++j) {
        u64 z = x[j].v - y[j].v - d_l[j].v;  // share of K * msb(x - y)
        aw.u64v(i * u64(f[j]) * kK - z);
        aw.u64v(i * u64(1 - f[j]) * kK - z);
    }
    p.net->send(kS2, aw.take());
    p.round();
    auto reply = p.net->recv(kS2);
    p.round();
    WireReader rr(reply);
    std::vector<Sec> out(n);
    for (size_t j = 0; j < n; ++j) {
        u64 h0 = rr.u64v(), h1 = rr.u64v();
        out[j].v = f[j] == 0 ? h0 : h1;
    }
    return out;
}

Sec compare(Party& p, Sec x, Sec y) {
    return compare_vec(p, std::span(&x, 1), std::span(&y, 1))[0];
}

// --- Division ---------------------------------------------------------------------

std::vector<Sec> divide_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y,
                            u64 upper, u64 scale) {
    if (x.size() != y.size()) throw std::invalid_argument("divide_vec: size mismatch");
    if (upper == 0 || scale == 0) throw std::invalid_argument("divide_vec: bad parameters");
    const size_t n = x.size();
    if (n == 0) return {};
    ScopedTag tag(p, Tag::DIV);

    if (p.is_helper()) {
        auto m0 = p.net->recv(kS0);
        auto m1 = p.net->recv(kS1);
        WireReader r0(m0), r1(m1);
        WireWriter h0, h1;
        for (size_t j = 0; j < n; ++j) {
            u64 a0 = r0.u64v(), b0 = r0.u64v();
            u64 a1 = r1.u64v(), b1 = r1.u64v();
            u64 a = a0 + a1, b = b0 + b1;
            if (b == 0) throw ProtocolError("divide: zero denominator");
            // a*scale needs a double-width intermediate; shares stay 64-bit.
            u64 c = static_cast<u64>(u128(a) * scale / b);
            u64 s0 = p.priv.next_u64();
            h0.u64v(s0);
            h1.u64v(c - s0);
        }
        p.net->send(kS0, h0.take());
        p.net->send(kS1, h1.take());
        return std::vector<Sec>(n);
    }

    // Masks: r1 uniform in [1, B), r0 = q*r1 with q >= 1 and r0 < B, where
    // B = floor(L / 2*upper). The quotient the helper computes is then
    // x*scale/y + q*scale exactly, and q*scale cancels on the way out.
    const u64 bound = static_cast<u64>((u128(1) << 64) / (u128(2) * upper));
    if (bound < 2) throw std::invalid_argument("divide_vec: upper bound too large");
    auto& cs = p.common(Tag::DIV);
    std::vector<u64> q(n);
    WireWriter out;
    for (size_t j = 0; j < n; ++j) {
        u64 r1 = 1 + cs.next_below(bound - 1);
        u64 qmax = (bound - 1) / r1;
        q[j] = 1 + cs.next_below(qmax);
        u64 r0 = q[j] * r1;
        out.u64v(r1 * x[j].v + r0 * y[j].v);
        out.u64v(r1 * y[j].v);
    }
    p.net->send(kS2, out.take());
    p.round();
    auto reply = p.net->recv(kS2);
    p.round();
    WireReader rr(reply);
    std::vector<Sec> z(n);
    const u64 i = p.pid();
    for (size_t j = 0; j < n; ++j) {
        u64 c = rr.u64v();
        z[j].v = (i == 1) ? c - q[j] * scale : c;
    }
    return z;
}

Sec divide(Party& p, Sec x, Sec y, u64 upper, u64 scale) {
    return divide_vec(p, std::span(&x, 1), std::span(&y, 1), upper, scale)[0];
}

}  // namespace aucmpc
