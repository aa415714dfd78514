#include "fpl/gbcache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fpl {

namespace {

std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

nlohmann::json report_to_json(const FedderReport& r) {
    return nlohmann::json::parse(fedder_report_json(r));
}

FedderReport report_from_json(const nlohmann::json& j) {
    FedderReport r;
    r.graph_id = j.value("graph", "");
    r.n = j.value("n", 0);
    r.p = j.value("p", 2u);
    std::string v = j.value("verdict", "timeout");
    r.verdict = v == "fpure" ? Verdict::FPure : v == "not_fpure" ? Verdict::NotFPure
                                                                 : Verdict::Timeout;
    if (j.contains("witness_poly")) r.witness_poly = j["witness_poly"].get<std::string>();
    if (j.contains("witness_term")) r.witness_term = j["witness_term"].get<std::string>();
    if (j.contains("colon_gb_size")) r.colon_gb_size = j["colon_gb_size"].get<size_t>();
    r.order = j.value("order", "grevlex");
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    r.effort = j.value("effort", uint64_t{0});
    if (j.contains("components"))
        for (const auto& c : j["components"]) r.components.push_back(report_from_json(c));
    return r;
}

}  // namespace

std::string GBCache::fedder_key(const Graph& g, uint32_t p, const std::string& order) {
    std::ostringstream os;
    os << "fedder;p=" << p << ";order=" << order << ";n=" << g.n() << ";edges=";
    for (auto [u, v] : g.edges()) os << u << "-" << v << ",";
    return fnv1a_hex(os.str());
}

std::optional<CachedFedder> GBCache::load(const std::string& key) const {
    std::ifstream in(std::filesystem::path(dir_) / (key + ".json"));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (...) {
        return std::nullopt;
    }
    CachedFedder entry;
    entry.report = report_from_json(j.at("report"));
    if (j.contains("colon_gb"))
        for (const auto& s : j["colon_gb"]) entry.colon_gb.push_back(s.get<std::string>());
    return entry;
}

void GBCache::store(const std::string& key, const CachedFedder& entry) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json j;
    j["report"] = report_to_json(entry.report);
    j["colon_gb"] = entry.colon_gb;
    std::ofstream out(std::filesystem::path(dir_) / (key + ".json"));
    out << j.dump(1) << "\n";
}

FedderRun fedder_run(const Graph& g, uint32_t p, uint64_t budget, const std::string& graph_id,
                     OrderKind base_order, const GBCache* cache) {
    std::string order = base_order == OrderKind::Lex ? "lex" : "grevlex";
    std::string key;
    if (cache) {
        key = GBCache::fedder_key(g, p, order);
        if (auto hit = cache->load(key)) {
            FedderRun run{hit->report, hit->colon_gb};
            run.report.graph_id = graph_id;
            return run;
        }
    }
    FedderRun run;
    run.report = fedder_core(g, p, budget, graph_id, base_order, &run.colon_gb);
    if (cache && run.report.verdict != Verdict::Timeout)
        cache->store(key, CachedFedder{run.report, run.colon_gb});
    return run;
}

}  // namespace fpl
