#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "aucmpc/common.hpp"
#include "aucmpc/prng.hpp"

namespace aucmpc {

using Rational = boost::multiprecision::cpp_rational;

// Plaintext sample for the reference computations. The oracles only look at
// the ordering and tie structure of con, so fixed-point confidences are fine.
struct PlainSample {
    u64 con = 0;
    int label = 0;
};

// All three oracles are exact rational arithmetic end to end; acceptance
// tolerances therefore measure only the secure path's fixed-point floors.

// Eq-style ROC area without ties. Throws if any two cons collide or only one
// class is present.
Rational plain_auroc_no_tie(std::vector<PlainSample> samples);

// Trapezoid ROC area over the points where the confidence changes.
Rational plain_auroc_tie(std::vector<PlainSample> samples);

// Trapezoid precision/recall area over confidence change points.
Rational plain_aupr(std::vector<PlainSample> samples);

// Scaled references for comparing against a secure result at scale F.
i64 scaled_floor(const Rational& r, u64 F);

// Absolute difference |secure/F - oracle| as an exact rational.
Rational scaled_abs_error(u64 secure_value, u64 F, const Rational& oracle);

struct BruteForceReport {
    std::string protocol;
    u64 instances = 0;
    u64 failures = 0;
    bool pass() const { return failures == 0; }
};

// Exhaustive sweeps of the secure protocols against plain semantics under
// random sharings. bound caps the swept domain per operand.
BruteForceReport brute_force_compare_check(u64 bound, const Seed& salt);
BruteForceReport brute_force_mux_check(u64 cases, const Seed& salt);
BruteForceReport brute_force_divide_check(u64 bound, u64 scale, const Seed& salt);

// Dispatch by protocol name: "compare" and "divide" sweep [0,bound) x
// [0,bound) resp. [1,bound]^2; "mux" runs bound random selections.
BruteForceReport brute_force_protocol_check(const std::string& protocol, u64 bound,
                                            const Seed& salt);

}  // namespace aucmpc
