// Command-line entry points for the three servers, the data owners, and a
// single-process local mode that runs the whole session in threads.

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "aucmpc/session.hpp"

using namespace aucmpc;
using nlohmann::json;

namespace {

struct Options {
    std::string role;
    std::string metric = "auroc-tie";
    u64 delta = 1;
    u64 precision = 10000;
    u64 owners = 1;
    u32 owner_id = 0;
    std::string seed_hex;
    std::vector<std::string> inputs;
    std::string listen;
    std::string connect_s0, connect_s1;
    std::string leakage_path;
    std::string output_path;
};

void write_output(const Options& opt, const std::string& value, u64 scale) {
    json j{{"metric", opt.metric}, {"value", value}, {"scale", scale}};
    if (!opt.leakage_path.empty()) j["leakage_report"] = opt.leakage_path;
    std::string text = j.dump() + "\n";
    if (opt.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output_path);
        out << text;
    }
}

void write_leakage(const std::string& path, const LeakageReport& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << report.to_json();
}

int run_local(const Options& opt) {
    if (opt.inputs.empty()) throw ConfigError("local mode needs at least one --input");
    std::vector<OwnerDataset> datasets;
    for (auto& path : opt.inputs) datasets.push_back(ingest_csv_file(path));
    SessionConfig cfg;
    cfg.metric = parse_metric(opt.metric);
    cfg.delta = opt.delta;
    cfg.F = opt.precision;
    Seed base = opt.seed_hex.empty() ? random_seed() : parse_seed_hex(opt.seed_hex);
    auto out = run_local_session(datasets, cfg, base);
    write_leakage(opt.leakage_path, out.leakage);
    write_output(opt, out.value(), cfg.F);
    return 0;
}

int run_server_role(const Options& opt, Role role) {
    SessionConfig cfg;
    cfg.metric = parse_metric(opt.metric);
    cfg.delta = opt.delta;
    cfg.F = opt.precision;
    cfg.n_owners = opt.owners;

    PartyEndpoint ep(node_of(role));
    std::vector<NodeId> owner_ids;
    for (size_t k = 0; k < cfg.n_owners; ++k)
        owner_ids.push_back(static_cast<NodeId>(kOwnerBase + k));

    if (role == Role::S0) {
        if (opt.listen.empty()) throw ConfigError("s0 needs --listen");
        int lfd = tcp_listen(opt.listen);
        auto expected = owner_ids;
        expected.push_back(kS1);
        expected.push_back(kS2);
        tcp_accept_peers(ep, lfd, expected);
    } else if (role == Role::S1) {
        if (opt.listen.empty() || opt.connect_s0.empty())
            throw ConfigError("s1 needs --listen and --connect-s0");
        ep.attach(kS0, tcp_connect_retry(opt.connect_s0, kS1));
        int lfd = tcp_listen(opt.listen);
        auto expected = owner_ids;
        expected.push_back(kS2);
        tcp_accept_peers(ep, lfd, expected);
    } else {
        if (opt.connect_s0.empty() || opt.connect_s1.empty())
            throw ConfigError("s2 needs --connect-s0 and --connect-s1");
        ep.attach(kS0, tcp_connect_retry(opt.connect_s0, kS2));
        ep.attach(kS1, tcp_connect_retry(opt.connect_s1, kS2));
    }

    Seed base = opt.seed_hex.empty() ? random_seed() : parse_seed_hex(opt.seed_hex);
    auto seeds = derive_session_seeds(base, 0);
    Seed priv = role == Role::S0 ? seeds.s0_priv : role == Role::S1 ? seeds.s1_priv : seeds.s2_priv;
    std::optional<Seed> common;
    if (role == Role::S0) common = seeds.common;

    auto result = run_server(ep, role, cfg, priv, common);
    if (role == Role::S0) write_leakage(opt.leakage_path, result.leakage);
    ep.close_all();
    return 0;
}

int run_owner_role(const Options& opt) {
    if (opt.inputs.size() != 1) throw ConfigError("owner mode needs exactly one --input");
    if (opt.connect_s0.empty() || opt.connect_s1.empty())
        throw ConfigError("owner needs --connect-s0 and --connect-s1");
    SessionConfig cfg;
    cfg.metric = parse_metric(opt.metric);
    cfg.delta = opt.delta;
    cfg.F = opt.precision;
    cfg.n_owners = opt.owners;

    auto ds = ingest_csv_file(opt.inputs[0]);
    NodeId self = static_cast<NodeId>(kOwnerBase + opt.owner_id);
    PartyEndpoint ep(self);
    ep.attach(kS0, tcp_connect_retry(opt.connect_s0, self));
    ep.attach(kS1, tcp_connect_retry(opt.connect_s1, self));

    Seed base = opt.seed_hex.empty() ? random_seed() : parse_seed_hex(opt.seed_hex);
    PairStream rng(base, "OUTSRC");
    auto outcome = run_owner(ep, opt.owner_id, ds, cfg, rng);
    write_output(opt, outcome.value, outcome.scale);
    ep.close_all();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-party secure computation of ROC and PR areas over shared scores"};
    Options opt;

    app.add_option("--role", opt.role, "owner, s0, s1, s2 or local")->required();
    app.add_option("--metric", opt.metric, "auroc, auroc-tie or aupr");
    app.add_option("--delta", opt.delta, "odd merge privacy parameter (default 1)");
    app.add_option("--precision", opt.precision, "fixed-point scale F (default 10000)");
    app.add_option("--owners", opt.owners, "number of data owners (servers)");
    app.add_option("--owner-id", opt.owner_id, "this owner's index, 0-based");
    app.add_option("--seed", opt.seed_hex, "64 hex chars; deterministic randomness");
    app.add_option("--input", opt.inputs, "csv file of pcv,label lines (repeatable in local mode)");
    app.add_option("--listen", opt.listen, "host:port to listen on");
    app.add_option("--connect-s0", opt.connect_s0, "host:port of S0");
    app.add_option("--connect-s1", opt.connect_s1, "host:port of S1");
    app.add_option("--leakage-report", opt.leakage_path, "path for the merge leakage report");
    app.add_option("--output", opt.output_path, "path for the result json (owner/local)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.role == "local") return run_local(opt);
        if (opt.role == "owner") return run_owner_role(opt);
        if (opt.role == "s0") return run_server_role(opt, Role::S0);
        if (opt.role == "s1") return run_server_role(opt, Role::S1);
        if (opt.role == "s2") return run_server_role(opt, Role::S2);
        std::cerr << "unknown role '" << opt.role << "'\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
