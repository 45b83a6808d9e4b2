#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aucmpc/prng.hpp"

namespace aucmpc {

enum class Metric : u8 { Auroc = 0, AurocTie = 1, Aupr = 2 };

const char* metric_name(Metric m);
Metric parse_metric(const std::string& s);

// Raw rows as read from disk: decimal confidence in [0,1] plus a bit label.
struct OwnerDataset {
    struct Row {
        std::string pcv;
        u8 label;
    };
    std::vector<Row> rows;
};

// Lines of "pcv,label". Errors carry 1-based line numbers.
OwnerDataset ingest_csv(std::istream& in);
OwnerDataset ingest_csv_file(const std::string& path);

// round(pcv * F), half away from zero, from the exact decimal string.
u64 encode_pcv(const std::string& pcv, u64 F);

struct OwnerSample {
    u64 con = 0;
    u8 label = 0;
};

// Fixed-point encoding of a dataset, sorted descending by confidence.
std::vector<OwnerSample> encode_dataset(const OwnerDataset& ds, u64 F);

// The two per-proxy share streams of one owner's sorted list.
struct SharePayload {
    std::vector<std::pair<u64, u64>> records;  // (con share, label share)
};

// Splits the encoded dataset into additive shares. Rejects datasets whose
// plain labels cannot support the metric (single-class for the ROC metrics,
// no positives for PR) while the labels are still visible.
std::pair<SharePayload, SharePayload> outsource(const OwnerDataset& ds, Metric metric,
                                                u64 F, PairStream& rng);

// Wire format: record count (8-byte LE), then per record two 8-byte LE words.
std::vector<u8> payload_to_wire(const SharePayload& p);
SharePayload payload_from_wire(std::span<const u8> data);

// Reconstructs a result share pair and renders value/F with exactly four
// fractional digits. A value above F means the protocol went wrong.
std::string decode_result(u64 share0, u64 share1, u64 F);

}  // namespace aucmpc
