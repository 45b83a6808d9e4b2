#pragma once

#include <span>
#include <vector>

#include "aucmpc/common.hpp"

namespace aucmpc {

// Little-endian payload packing. All multi-byte integers on the wire are LE.
class WireWriter {
public:
    void u8v(u8 v) { buf_.push_back(v); }
    void u32v(u32 v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<u8>(v >> (8 * i)));
    }
    void u64v(u64 v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<u8>(v >> (8 * i)));
    }
    void bytes(std::span<const u8> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void u64s(std::span<const u64> vs) {
        for (u64 v : vs) u64v(v);
    }

    std::vector<u8> take() { return std::move(buf_); }

private:
    std::vector<u8> buf_;
};

class WireReader {
public:
    explicit WireReader(std::span<const u8> data) : data_(data) {}

    u8 u8v() { return take(1)[0]; }
    u32 u32v() {
        auto b = take(4);
        return u32(b[0]) | u32(b[1]) << 8 | u32(b[2]) << 16 | u32(b[3]) << 24;
    }
    u64 u64v() {
        auto b = take(8);
        u64 v = 0;
        for (int i = 0; i < 8; ++i) v |= u64(b[i]) << (8 * i);
        return v;
    }
    std::vector<u8> bytes(size_t n) {
        auto b = take(n);
        return {b.begin(), b.end()};
    }
    std::vector<u64> u64s(size_t n) {
        std::vector<u64> out(n);
        for (auto& v : out) v = u64v();
        return out;
    }
    bool done() const { return pos_ == data_.size(); }
    void expect_done() const {
        if (!done()) throw ProtocolError("trailing bytes in message");
    }

private:
    std::span<const u8> take(size_t n) {
        if (pos_ + n > data_.size()) throw ProtocolError("message too short");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::span<const u8> data_;
    size_t pos_ = 0;
};

}  // namespace aucmpc
