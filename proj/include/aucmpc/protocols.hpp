#pragma once

#include "aucmpc/primitives.hpp"

namespace aucmpc {

// The four distinguishing protocols. Every function must be entered by all
// three parties of a session in the same order; helper inputs are dummy
// tokens of the right size. Per-invocation online rounds (proxy view):
// mux 2, modulus_conversion 3, compare 5, divide 2.

// z = x - b(x-y): x when b = 0, y when b = 1. b must reconstruct to a bit;
// that is a documented precondition, not a runtime check.
std::vector<Sec> mux_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y,
                         std::span<const Sec> b);
Sec mux(Party& p, Sec x, Sec y, Sec b);

// Converts shares over Z_K (share words < K) to fresh shares over Z_L of the
// same integer.
std::vector<Sec> modulus_conversion_vec(Party& p, std::span<const Sec> x_k);
Sec modulus_conversion(Party& p, Sec x_k);

// 0 if x >= y, 1 otherwise, as arithmetic shares of a bit over Z_L.
// Requires |x - y| < K when reconstructed.
std::vector<Sec> compare_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y);
Sec compare(Party& p, Sec x, Sec y);

// Exact floor(x*scale/y) for 0 <= x <= upper, 1 <= y <= upper. upper and
// scale are public. y = 0 is a documented precondition violation the
// protocol cannot detect privately (the helper will fault on it).
std::vector<Sec> divide_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y,
                            u64 upper, u64 scale);
Sec divide(Party& p, Sec x, Sec y, u64 upper, u64 scale);

}  // namespace aucmpc
