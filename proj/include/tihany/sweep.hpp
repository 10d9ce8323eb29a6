#ifndef TIHANY_SWEEP_HPP
#define TIHANY_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tihany/graph.hpp"
#include "tihany/solvers.hpp"

namespace tihany {

/// One batch of seeded instances from a named generator family.
struct FamilyRequest {
    std::string family;
    int count = 1;
    std::uint64_t seed = 1;
};

struct SweepConfig {
    std::vector<FamilyRequest> families;
    std::vector<std::string> corpus_paths;  // graph6 files, one graph per line
    int all_connected_upto = 0;             // also sweep all connected graphs with n <= this (<= 7)
    int kmax = 5;
    Budget budget;                          // per coloring search
    bool lemma_suite = true;                // record the coloring-class witness check
    int elt_max_n = 16;                     // hunt: partition checks only below this size

    void validate() const;
    static SweepConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// All registered family names, in the order gen accepts them.
const std::vector<std::string>& family_names();

struct GeneratedInstance {
    std::string id;
    std::string family;
    std::uint64_t seed = 0;
    Graph graph;
};

/// Deterministic: same (family, seed, count) gives the same graphs.
std::vector<GeneratedInstance> generate_family(const std::string& family, std::uint64_t seed,
                                               int count);

/// Generated families plus ingested corpora, sorted by id.
std::vector<GeneratedInstance> collect_instances(const SweepConfig& config);

/// Report document layout:
///   { "config": ..., "instances": [...], "summary": {...}, "timings": {...} }
/// Everything outside "timings" is a pure function of the config, so replays
/// are byte-identical up to that one section.
struct SweepReport {
    nlohmann::json doc;

    int exit_code() const;  // 0 clean, 2 violation, 3 unknowns
    const nlohmann::json& summary() const { return doc.at("summary"); }
};

SweepReport run_sweep(const SweepConfig& config);

struct HuntResult {
    SweepReport report;
    nlohmann::json counterexamples;  // array; empty on success
    int exit_code = 0;
};

/// Sweep plus exhaustive split searches: for each claw-free instance with
/// chi > omega and n <= elt_max_n, every (s,t), s,t >= 2, s+t = chi+1, must
/// admit a partition (S,T) with chi(S) >= s and chi(T) >= t.
HuntResult hunt(const SweepConfig& config);

/// Certificate dump for one instance of a report.  Throws invalid_argument on
/// an unknown id.
std::string explain(const nlohmann::json& report_doc, const std::string& id);

}  // namespace tihany

#endif
