#include "aucmpc/owner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "aucmpc/primitives.hpp"
#include "aucmpc/wire.hpp"

namespace aucmpc {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Auroc: return "auroc";
        case Metric::AurocTie: return "auroc-tie";
        case Metric::Aupr: return "aupr";
    }
    return "?";
}

Metric parse_metric(const std::string& s) {
    if (s == "auroc") return Metric::Auroc;
    if (s == "auroc-tie") return Metric::AurocTie;
    if (s == "aupr") return Metric::Aupr;
    throw ConfigError("unknown metric '" + s + "' (expected auroc, auroc-tie or aupr)");
}

namespace {

// Validates a decimal confidence string and returns (digits, frac_len) with
// the decimal point removed, or throws.
std::pair<std::string, size_t> split_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty pcv");
    std::string digits;
    size_t frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("pcv has two decimal points");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            digits.push_back(c);
            if (seen_dot) ++frac_len;
        } else {
            throw std::invalid_argument(std::string("invalid character '") + c + "' in pcv");
        }
    }
    if (!seen_digit) throw std::invalid_argument("pcv has no digits");
    return {digits, frac_len};
}

}  // namespace

u64 encode_pcv(const std::string& pcv, u64 F) {
    auto [digits, frac_len] = split_decimal(pcv);
    // Exact value is digits / 10^frac_len. Fold digits beyond 18 places into
    // a sticky bit; they cannot move a half-up rounding at sane F.
    u128 num = 0, den = 1;
    bool sticky = false;
    size_t used_frac = 0;
    size_t int_len = digits.size() - frac_len;
    for (size_t i = 0; i < digits.size(); ++i) {
        bool fractional = i >= int_len;
        if (fractional && used_frac >= 18) {
            sticky = sticky || digits[i] != '0';
            continue;
        }
        num = num * 10 + static_cast<unsigned>(digits[i] - '0');
        if (fractional) {
            den *= 10;
            ++used_frac;
        }
    }
    if (num > den || (num == den && sticky))
        throw std::invalid_argument("pcv out of range [0,1]: " + pcv);
    u128 scaled = num * F;
    u128 q = scaled / den, rem = scaled % den;
    if (rem * 2 >= den) ++q;  // half up
    return static_cast<u64>(q);
}

OwnerDataset ingest_csv(std::istream& in) {
    OwnerDataset ds;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'pcv,label'");
        std::string pcv = line.substr(0, comma);
        std::string label = line.substr(comma + 1);
        if (label != "0" && label != "1")
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": label must be 0 or 1, got '" + label + "'");
        try {
            encode_pcv(pcv, 10);  // format and range check only
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        ds.rows.push_back({pcv, static_cast<u8>(label == "1" ? 1 : 0)});
    }
    if (ds.rows.empty()) throw std::invalid_argument("empty dataset");
    return ds;
}

OwnerDataset ingest_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return ingest_csv(in);
}

std::vector<OwnerSample> encode_dataset(const OwnerDataset& ds, u64 F) {
    std::vector<OwnerSample> out;
    out.reserve(ds.rows.size());
    for (auto& r : ds.rows) out.push_back({encode_pcv(r.pcv, F), r.label});
    std::stable_sort(out.begin(), out.end(),
                     [](const OwnerSample& a, const OwnerSample& b) { return a.con > b.con; });
    return out;
}

std::pair<SharePayload, SharePayload> outsource(const OwnerDataset& ds, Metric metric,
                                                u64 F, PairStream& rng) {
    auto samples = encode_dataset(ds, F);
    size_t pos = 0;
    for (auto& s : samples) pos += s.label;
    if (metric != Metric::Aupr && (pos == 0 || pos == samples.size()))
        throw std::invalid_argument("single-class dataset cannot be scored with ROC metrics");
    if (metric == Metric::Aupr && pos == 0)
        throw std::invalid_argument("PR metric needs at least one positive label");

    SharePayload p0, p1;
    p0.records.reserve(samples.size());
    p1.records.reserve(samples.size());
    for (auto& s : samples) {
        auto [c0, c1] = make_shares({s.con, RingId::L}, rng);
        auto [l0, l1] = make_shares({s.label, RingId::L}, rng);
        p0.records.emplace_back(c0.element.value, l0.element.value);
        p1.records.emplace_back(c1.element.value, l1.element.value);
    }
    return {p0, p1};
}

std::vector<u8> payload_to_wire(const SharePayload& p) {
    WireWriter w;
    w.u64v(p.records.size());
    for (auto& [con, label] : p.records) {
        w.u64v(con);
        w.u64v(label);
    }
    return w.take();
}

SharePayload payload_from_wire(std::span<const u8> data) {
    WireReader r(data);
    u64 n = r.u64v();
    SharePayload p;
    p.records.reserve(n);
    for (u64 j = 0; j < n; ++j) {
        u64 con = r.u64v();
        u64 label = r.u64v();
        p.records.emplace_back(con, label);
    }
    r.expect_done();
    return p;
}

std::string decode_result(u64 share0, u64 share1, u64 F) {
    u64 v = share0 + share1;
    if (v > F) throw ProtocolError("reconstructed result exceeds scale; protocol corrupted");
    // Exactly four fractional digits regardless of F.
    u128 t = (u128(v) * 10000 * 2 + F) / (u128(2) * F);
    std::ostringstream os;
    os << static_cast<u64>(t / 10000) << '.';
    u64 frac = static_cast<u64>(t % 10000);
    os << char('0' + frac / 1000) << char('0' + frac / 100 % 10) << char('0' + frac / 10 % 10)
       << char('0' + frac % 10);
    return os.str();
}

}  // namespace aucmpc
