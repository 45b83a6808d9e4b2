#include "aucmpc/sort.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace aucmpc {

// --- merge counting ---------------------------------------------------------

namespace {

constexpr u128 kU128Max = ~u128(0);

// C(n, k) with saturation detection.
std::pair<bool, u128> binom_u128(u64 n, u64 k) {
    if (k > n) return {true, 0};
    if (k > n - k) k = n - k;
    u128 v = 1;
    for (u64 t = 1; t <= k; ++t) {
        u64 factor = n - k + t;
        if (v > kU128Max / factor) return {false, kU128Max};
        v = v * factor / t;  // exact: v holds C(n-k+t-1, t-1) * ... stays integral
    }
    return {true, v};
}

double log10_binom(u64 n, u64 k) {
    if (k > n) return -INFINITY;
    if (k > n - k) k = n - k;
    double acc = 0;  // lgamma is not thread-safe; sum the factor logs instead
    for (u64 t = 1; t <= k; ++t) acc += std::log10(double(n - k + t)) - std::log10(double(t));
    return acc;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + int(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

}  // namespace

std::string MergeCount::str() const {
    if (exact) return u128_str(value);
    std::ostringstream os;
    os << "~1e" << static_cast<long long>(log10_value + 0.5);
    return os.str();
}

MergeCount possible_merge_count(u64 n1, u64 n2) {
    if (n2 == 0 || n1 < n2) throw std::invalid_argument("possible_merge_count: need n1 >= n2 >= 1");
    MergeCount out;
    double lmax = 0;
    for (u64 i = 0; i < n2; ++i) {
        auto [ok_a, a] = binom_u128(n1 + 1, i + 1);
        auto [ok_b, b] = binom_u128(n2 - 1, i);
        bool ok = ok_a && ok_b && (b == 0 || a <= kU128Max / (b ? b : 1));
        if (out.exact && ok) {
            u128 term = a * b;
            if (out.value > kU128Max - term)
                out.exact = false;
            else
                out.value += term;
        } else {
            out.exact = false;
        }
        lmax = std::max(lmax, log10_binom(n1 + 1, i + 1) + log10_binom(n2 - 1, i));
    }
    out.log10_value = out.exact && out.value > 0
                          ? std::log10(static_cast<double>(out.value))
                          : lmax;  // dominated by the largest term
    return out;
}

std::string LeakageReport::to_json() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < merges.size(); ++i) {
        const auto& m = merges[i];
        os << (i ? ",\n " : "\n ") << "{\"merge\": " << i << ", \"n1\": " << m.n1
           << ", \"n2\": " << m.n2 << ", \"delta\": " << m.delta_param
           << ", \"shuffles\": " << m.shuffles << ", \"candidate_interleavings\": \""
           << m.candidates.str() << "\", \"revealed_bits\": [";
        for (size_t b = 0; b < m.revealed_bits.size(); ++b)
            os << (b ? "," : "") << int(m.revealed_bits[b]);
        os << "]}";
    }
    os << "\n]\n";
    return os.str();
}

// --- shuffling ---------------------------------------------------------------

void shuffle_step(Party& p, std::vector<SecRecord>& list1, std::vector<SecRecord>& list2) {
    if (list2.empty()) throw std::invalid_argument("shuffle_step: empty second list");
    if (list1.size() < list2.size())
        throw std::invalid_argument("shuffle_step: list1 must not be shorter");
    const size_t n = list2.size();

    std::vector<Sec> c1(n), c2(n);
    for (size_t k = 0; k < n; ++k) {
        c1[k] = list1[k].con;
        c2[k] = list2[k].con;
    }
    auto bits = compare_vec(p, c1, c2);  // 1 iff list2's entry is larger

    // One MUX batch covers (max con, min con, max label, min label).
    std::vector<Sec> x(4 * n), y(4 * n), b(4 * n);
    for (size_t k = 0; k < n; ++k) {
        x[k] = list1[k].con;
        y[k] = list2[k].con;
        x[n + k] = list2[k].con;
        y[n + k] = list1[k].con;
        x[2 * n + k] = list1[k].label;
        y[2 * n + k] = list2[k].label;
        x[3 * n + k] = list2[k].label;
        y[3 * n + k] = list1[k].label;
        b[k] = b[n + k] = b[2 * n + k] = b[3 * n + k] = bits[k];
    }
    auto z = mux_vec(p, x, y, b);
    for (size_t k = 0; k < n; ++k) {
        list1[k].con = z[k];
        list2[k].con = z[n + k];
        list1[k].label = z[2 * n + k];
        list2[k].label = z[3 * n + k];
    }
}

// --- merging -------------------------------------------------------------------

namespace {

u64 largest_odd_le(u64 n) { return (n == 0) ? 1 : (n % 2 == 1 ? n : n - 1); }

}  // namespace

std::vector<SecRecord> merge_pair(Party& p, std::vector<SecRecord> a,
                                  std::vector<SecRecord> b, u64 delta, MergeLeak* leak) {
    if (delta == 0 || delta % 2 == 0)
        throw std::invalid_argument("merge_pair: delta must be odd and positive");
    if (a.size() < b.size()) std::swap(a, b);  // the longer list leads
    if (leak) {
        leak->n1 = a.size();
        leak->n2 = b.size();
        leak->delta_param = delta;
        if (!b.empty()) leak->candidates = possible_merge_count(a.size(), b.size());
    }
    if (b.empty()) return a;

    std::deque<SecRecord> l1(a.begin(), a.end()), l2(b.begin(), b.end());
    std::vector<SecRecord> out;
    out.reserve(l1.size() + l2.size());

    while (!l1.empty() && !l2.empty()) {
        if (l2.size() > l1.size()) std::swap(l1, l2);
        const u64 d_eff = std::min(delta, largest_odd_le(l2.size()));

        // Shuffling: after the aligned max/min pass the head of l1 is the
        // global maximum.
        std::vector<SecRecord> v1(l1.begin(), l1.end()), v2(l2.begin(), l2.end());
        shuffle_step(p, v1, v2);
        std::copy(v1.begin(), v1.end(), l1.begin());
        std::copy(v2.begin(), v2.end(), l2.begin());
        if (leak) leak->shuffles++;

        out.push_back(l1.front());
        l1.pop_front();

        // delta-1 selection moves on revealed head comparisons.
        for (u64 s = 1; s < d_eff && !l1.empty() && !l2.empty(); ++s) {
            Sec c = compare(p, l1.front().con, l2.front().con);
            bool second_larger = reveal_bit(p, c, Tag::SORT);
            if (leak) leak->revealed_bits.push_back(second_larger ? 1 : 0);
            auto& src = second_larger ? l2 : l1;
            out.push_back(src.front());
            src.pop_front();
        }
    }
    auto& rest = l1.empty() ? l2 : l1;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<SecRecord> merge_many(Party& p, std::vector<std::vector<SecRecord>> lists,
                                  u64 delta, LeakageReport* report) {
    if (lists.empty()) throw std::invalid_argument("merge_many: no lists");
    while (lists.size() > 1) {
        std::vector<std::vector<SecRecord>> next;
        next.reserve((lists.size() + 1) / 2);
        for (size_t i = 0; i + 1 < lists.size(); i += 2) {
            MergeLeak leak;
            next.push_back(
                merge_pair(p, std::move(lists[i]), std::move(lists[i + 1]), delta,
                           report ? &leak : nullptr));
            if (report) report->merges.push_back(std::move(leak));
        }
        if (lists.size() % 2 == 1) next.push_back(std::move(lists.back()));
        lists = std::move(next);
    }
    return std::move(lists.front());
}

}  // namespace aucmpc
