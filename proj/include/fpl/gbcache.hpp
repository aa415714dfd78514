#pragma once

#include <optional>
#include <string>

#include "fpl/bei.hpp"

// On-disk cache for Fedder runs: the reduced colon basis (when the run
// computed it in full) plus the report, keyed by (ideal hash, order, p).

namespace fpl {

struct CachedFedder {
    FedderReport report;
    std::vector<std::string> colon_gb;  // reduced basis of J^{[p]} : J, if computed
};

class GBCache {
  public:
    explicit GBCache(std::string dir) : dir_(std::move(dir)) {}

    static std::string fedder_key(const Graph& g, uint32_t p, const std::string& order);

    std::optional<CachedFedder> load(const std::string& key) const;
    void store(const std::string& key, const CachedFedder& entry) const;

  private:
    std::string dir_;
};

// fedder_is_fpure wrapper that also returns the full colon basis when it was
// computed (empty for early not-F-pure exits and timeouts).
struct FedderRun {
    FedderReport report;
    std::vector<std::string> colon_gb;
};
FedderRun fedder_run(const Graph& g, uint32_t p, uint64_t budget, const std::string& graph_id,
                     OrderKind base_order = OrderKind::GrevLex, const GBCache* cache = nullptr);

}  // namespace fpl
