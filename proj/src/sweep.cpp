#include "tihany/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tihany/analysis.hpp"
#include "tihany/corpus.hpp"
#include "tihany/engine.hpp"
#include "tihany/families.hpp"
#include "tihany/graph6.hpp"

namespace tihany {

namespace {

using nlohmann::json;
using Rng = std::mt19937_64;

int ri(Rng& r, int lo, int hi) { return lo + int(r() % std::uint64_t(hi - lo + 1)); }

// ---- seeded generators -----------------------------------------------------

Graph gen_icosahedron(Rng& r) {
    int level = ri(r, 0, 2);
    Graph base = icosahedron_graph(level);
    std::vector<int> sizes(base.n());
    for (int& s : sizes) s = ri(r, 0, 3) == 0 ? 2 : 1;  // keep most blow-ups modest
    ThickeningSpec t{base, sizes, {}, {}};
    if (level == 2)
        for (Edge e : icosahedron_fprime())
            if (ri(r, 0, 1)) {
                t.f.push_back(e);
                t.patterns.push_back(reduced_pattern(e, sizes[e.first], sizes[e.second]));
            }
    return thicken(t).graph;
}

Graph gen_fuzzy_interval(Rng& r) {
    static const std::vector<IntervalSpec> specs{
        {true, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
        {true, 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},
        {true, 6, {{0, 2}, {2, 4}, {5, 0}}},
        {true, 9, {{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 0}}},
        {false, 7, {{0, 3}, {2, 5}, {4, 6}}},
    };
    const IntervalSpec& spec = specs[ri(r, 0, int(specs.size()) - 1)];
    std::vector<int> sizes(spec.points);
    for (int& s : sizes) s = ri(r, 1, 2);
    std::vector<int> fuzzy;
    if (ri(r, 0, 1)) fuzzy.push_back(ri(r, 0, int(spec.intervals.size()) - 1));
    return fuzzy_interval(spec, fuzzy, sizes).graph;
}

Graph gen_ring_of_five(Rng& r) {
    RingOfFiveSpec s;
    for (int i = 0; i < 6; ++i) s.v_sizes[i] = ri(r, 0, 1);
    for (int i = 1; i <= 5; ++i) {
        int j = i % 5 + 1;
        if (s.v_sizes[i] > 0 && s.v_sizes[j] > 0 && ri(r, 0, 1)) s.v_adjacency.push_back({i, 0, 0});
    }
    return ring_of_five(s);
}

Graph gen_mantled(Rng& r) {
    MantledSpec s;
    for (int i = 0; i < 3; ++i) {
        s.upper_sizes[i] = ri(r, 0, 2);
        s.lower_sizes[i] = ri(r, 0, 2);
    }
    return mantled_lk33(s);
}

Graph gen_lk33(Rng&) { return l_k33(); }
Graph gen_rotator(Rng&) { return rotator_graph(); }
Graph gen_twister(Rng&) { return twister_graph(); }

Graph gen_triangle(Rng& r, bool cyclic) {
    TriangleChainSpec s;
    s.cyclic = cyclic;
    s.n = cyclic ? 5 : ri(r, 1, 3);
    for (int i = 0; i < s.n; ++i) {
        s.r_sizes.push_back(ri(r, 1, 2));
        s.extra_even.push_back(ri(r, 0, 1));
        s.attach_r.push_back(ri(r, 0, 1) == 1);
    }
    TriangleChainResult res = triangle_chain(s);
    if (!res.chain) throw std::runtime_error("triangle chain: " + res.violated);
    return res.chain->graph;
}

ThreeCliqued random_term(Rng& r) {
    switch (ri(r, 0, 2)) {
        case 0:
            return {Graph::make(3, {{0, 1}, {0, 2}, {1, 2}}), VertexSet::of(3, {0}),
                    VertexSet::of(3, {1}), VertexSet::of(3, {2})};
        case 1:
            return {Graph::make(1, {}), VertexSet::of(1, {0}), VertexSet(1), VertexSet(1)};
        default:
            return {Graph::make(2, {{0, 1}}), VertexSet::of(2, {0}), VertexSet::of(2, {1}),
                    VertexSet(2)};
    }
}

Graph gen_hex_chain(Rng& r) {
    std::vector<ThreeCliqued> terms;
    int k = ri(r, 2, 3);
    for (int i = 0; i < k; ++i) terms.push_back(random_term(r));
    return hex_chain(terms).graph;
}

Graph gen_tc1(Rng&) {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.push_back({i, j});
    return tc1(Graph::make(6, e), 0, 1, 2).tc.graph;
}

Graph gen_tc2(Rng&) {
    IntervalSpec spec{true, 9, {{0, 2}, {3, 5}, {6, 8}}};
    return tc2(spec, {{std::pair{0, 2}, {3, 5}, {6, 8}}}).tc.graph;
}

Graph gen_tc3(Rng& r) {
    int n = ri(r, 2, 3);
    std::vector<Vertex> removed;
    switch (ri(r, 0, 2)) {
        case 0:
            break;
        case 1:
            if (n == 3) removed.push_back(2 * n + 2 + ri(r, 0, n - 1));  // one c, keeps |C\X| >= 2
            break;
        default:
            removed.push_back(ri(r, 1, n));  // one a_i, i >= 1
            break;
    }
    return tc3(n, removed).tc.graph;
}

Graph gen_tc4(Rng& r) {
    ThreeCliqued tri{Graph::make(3, {{0, 1}, {0, 2}, {1, 2}}), VertexSet::of(3, {0}),
                     VertexSet::of(3, {1}), VertexSet::of(3, {2})};
    std::vector<ThreeCliqued> terms(std::size_t(ri(r, 2, 3)), tri);
    return tc4(hex_chain(terms)).tc.graph;
}

Graph gen_tc5(Rng& r) {
    int variant = ri(r, 1, 2);
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Vertex> removed;
        int hi = variant == 1 ? 3 : 5;
        for (Vertex v = 2; v <= hi; ++v)
            if (ri(r, 0, 2) == 0) removed.push_back(v);
        try {
            return tc5(variant, removed, ri(r, 0, 1) == 1, ri(r, 0, 1) == 1).tc.graph;
        } catch (const std::invalid_argument&) {
        }
    }
    return tc5(variant, {}, true, true).tc.graph;
}

Graph gen_strips(Rng& r) {
    Strip tiny{Graph::make(3, {{0, 2}, {1, 2}}), {0, 1}};
    Strip s = [&]() -> Strip {
        switch (ri(r, 1, 5)) {
            case 1:
                return strip_z1({1, 2, 3, 3}, {}, {1, ri(r, 1, 2), ri(r, 1, 2), 1});
            case 2: {
                std::vector<int> sizes(8, 1);
                for (int i : {1, 2, 4, 5, 6, 7}) sizes[i] = ri(r, 1, 2);
                return strip_z2(2, {}, sizes);
            }
            case 3: {
                std::vector<std::vector<int>> att;
                int k = ri(r, 1, 3);
                for (int i = 0; i < k; ++i) {
                    std::vector<int> sub;
                    for (int h = 1; h <= 3; ++h)
                        if (ri(r, 0, 1)) sub.push_back(h);
                    if (sub.empty()) sub.push_back(ri(r, 1, 3));
                    att.push_back(sub);
                }
                int verts = 4;  // line graph of the path itself
                for (const auto& a : att) verts += int(a.size());
                return strip_z3(att, false, std::vector<int>(verts, 1));
            }
            case 4: {
                std::vector<int> sizes(9, 1);
                sizes[5] = 2;
                sizes[7] = 2;
                return strip_z4(sizes);
            }
            default: {
                std::vector<int> sizes(12, 1);
                bool fuzz = ri(r, 0, 1) == 1;
                if (fuzz) sizes[8] = 2;
                return strip_z5({}, fuzz, sizes);
            }
        }
    }();
    return strip_compose({{s, {0, 1}}, {tiny, {0, 1}}});
}

using GenFn = Graph (*)(Rng&);

const std::vector<std::pair<std::string, GenFn>>& registry() {
    static const std::vector<std::pair<std::string, GenFn>> fams{
        {"icosahedron", gen_icosahedron},
        {"fuzzy_interval", gen_fuzzy_interval},
        {"ring_of_five", gen_ring_of_five},
        {"mantled_lk33", gen_mantled},
        {"l_k33", gen_lk33},
        {"rotator", gen_rotator},
        {"twister", gen_twister},
        {"triangle_path", [](Rng& r) { return gen_triangle(r, false); }},
        {"triangle_cycle", [](Rng& r) { return gen_triangle(r, true); }},
        {"hex_chain", gen_hex_chain},
        {"tc1", gen_tc1},
        {"tc2", gen_tc2},
        {"tc3", gen_tc3},
        {"tc4", gen_tc4},
        {"tc5", gen_tc5},
        {"strips", gen_strips},
    };
    return fams;
}

GenFn lookup(const std::string& family) {
    for (const auto& [name, fn] : registry())
        if (name == family) return fn;
    throw std::invalid_argument("unknown family: " + family);
}

std::string pad(int v, int width) {
    std::string s = std::to_string(v);
    return std::string(std::size_t(std::max(0, width - int(s.size()))), '0') + s;
}

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

json budget_json(const Budget& b) {
    return {{"node_limit", b.node_limit}, {"time_limit", b.time_limit}};
}

}  // namespace

// ---- config ----------------------------------------------------------------

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

void SweepConfig::validate() const {
    if (kmax < 1) throw std::invalid_argument("config: kmax must be >= 1");
    budget.validate();
    if (all_connected_upto < 0 || all_connected_upto > 7)
        throw std::invalid_argument("config: all_connected_upto must be 0..7");
    if (elt_max_n < 1 || elt_max_n > 16)
        throw std::invalid_argument("config: elt_max_n must be 1..16");
    for (const auto& f : this->families) {
        if (f.count < 1) throw std::invalid_argument("config: count must be positive");
        lookup(f.family);
    }
}

SweepConfig SweepConfig::from_json(const json& j) {
    SweepConfig c;
    for (const auto& f : j.value("families", json::array())) {
        FamilyRequest req;
        req.family = f.at("family").get<std::string>();
        req.count = f.value("count", 1);
        req.seed = f.value("seed", std::uint64_t(1));
        c.families.push_back(std::move(req));
    }
    for (const auto& p : j.value("corpus", json::array()))
        c.corpus_paths.push_back(p.get<std::string>());
    c.all_connected_upto = j.value("all_connected_upto", 0);
    c.kmax = j.value("kmax", 5);
    if (j.contains("budget")) {
        c.budget.node_limit = j["budget"].value("node_limit", c.budget.node_limit);
        c.budget.time_limit = j["budget"].value("time_limit", c.budget.time_limit);
    }
    c.lemma_suite = j.value("lemma_suite", true);
    c.elt_max_n = j.value("elt_max_n", 16);
    c.validate();
    return c;
}

json SweepConfig::to_json() const {
    json fams = json::array();
    for (const auto& f : families)
        fams.push_back({{"family", f.family}, {"count", f.count}, {"seed", f.seed}});
    return {{"families", fams},
            {"corpus", corpus_paths},
            {"all_connected_upto", all_connected_upto},
            {"kmax", kmax},
            {"budget", budget_json(budget)},
            {"lemma_suite", lemma_suite},
            {"elt_max_n", elt_max_n}};
}

// ---- instance collection ---------------------------------------------------

std::vector<GeneratedInstance> generate_family(const std::string& family, std::uint64_t seed,
                                               int count) {
    GenFn fn = lookup(family);
    std::vector<GeneratedInstance> out;
    for (int i = 0; i < count; ++i) {
        Rng r(seed * 0x9e3779b97f4a7c15ULL + std::uint64_t(i) + 1);
        Graph g;
        bool ok = false;
        for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
            try {
                g = fn(r);
                ok = g.n() <= 24;  // instance size cap; oversized draws are redrawn
            } catch (const std::exception&) {
            }
        }
        if (!ok) throw std::runtime_error("generate_family: " + family + " kept failing");
        out.push_back({family + "-" + std::to_string(seed) + "-" + pad(i, 4), family, seed,
                       std::move(g)});
    }
    return out;
}

std::vector<GeneratedInstance> collect_instances(const SweepConfig& config) {
    config.validate();
    std::vector<GeneratedInstance> out;
    for (const auto& f : config.families)
        for (auto& inst : generate_family(f.family, f.seed, f.count))
            out.push_back(std::move(inst));
    for (const auto& path : config.corpus_paths) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read corpus file: " + path);
        std::string line;
        int idx = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            out.push_back({"file-" + basename_of(path) + "-" + pad(idx, 5), "corpus", 0,
                           graph6_decode(line)});
            ++idx;
        }
    }
    for (int n = 1; n <= config.all_connected_upto; ++n) {
        int idx = 0;
        for (Graph& g : connected_graphs_up_to_iso(n))
            out.push_back({"conn" + std::to_string(n) + "-" + pad(idx++, 4), "connected_corpus", 0,
                           std::move(g)});
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratedInstance& a, const GeneratedInstance& b) { return a.id < b.id; });
    return out;
}

// ---- sweep -----------------------------------------------------------------

int SweepReport::exit_code() const {
    if (!doc.at("summary").at("violations").empty()) return 2;
    if (!doc.at("summary").at("unknowns").empty()) return 3;
    return 0;
}

SweepReport run_sweep(const SweepConfig& config) {
    std::vector<GeneratedInstance> instances = collect_instances(config);
    json records = json::array();
    json violations = json::array();
    json unknowns = json::array();
    json timings = json::object();
    int max_min_tihany = 0;

    for (const GeneratedInstance& inst : instances) {
        auto t0 = std::chrono::steady_clock::now();
        const Graph& g = inst.graph;
        json rec;
        rec["id"] = inst.id;
        rec["family"] = inst.family;
        rec["seed"] = inst.seed;
        rec["graph6"] = graph6_encode(g);
        rec["n"] = g.n();
        rec["claw_free"] = !find_claw(g).has_value();
        rec["omega"] = clique_number(g).omega;
        rec["alpha"] = stability_number(g).omega;

        ChiResult chi = chromatic_number(g, config.budget);
        if (!chi.known) {
            rec["chi"] = nullptr;
            rec["chi_gt_omega"] = nullptr;
            rec["min_tihany"] = nullptr;
            unknowns.push_back({{"id", inst.id},
                                {"what", "chromatic_number"},
                                {"budget", budget_json(config.budget)}});
        } else {
            rec["chi"] = chi.chi;
            bool scope = chi.chi > rec["omega"].get<int>();
            rec["chi_gt_omega"] = scope;
            rec["min_tihany"] = nullptr;
            if (rec["claw_free"].get<bool>() && scope) {
                MinTihany mt = find_min_tihany(g, config.kmax, config.budget);
                switch (mt.status) {
                    case MinTihany::Status::Found:
                        rec["min_tihany"] = {{"size", mt.cert.clique.size()},
                                             {"clique", mt.cert.clique.to_vector()},
                                             {"chi_after", mt.cert.chi_after}};
                        max_min_tihany = std::max(max_min_tihany, mt.cert.clique.size());
                        break;
                    case MinTihany::Status::None:
                        violations.push_back({{"id", inst.id},
                                              {"what", "no_tihany_clique"},
                                              {"kmax", config.kmax},
                                              {"graph6", rec["graph6"]}});
                        break;
                    case MinTihany::Status::Unknown:
                        unknowns.push_back({{"id", inst.id},
                                            {"what", "min_tihany"},
                                            {"budget", budget_json(config.budget)}});
                        break;
                }
                if (config.lemma_suite) {
                    // spot check on the least clique: a vertex complete to K in
                    // every class of any (chi-|K|)-coloring of G minus K
                    VertexSet k(g.n());
                    auto es = g.edges();
                    if (!es.empty()) {
                        k.add(es.front().first);
                        k.add(es.front().second);
                    } else {
                        k.add(0);
                    }
                    LemmaBasic lb = check_lemma_basic(g, k, config.budget);
                    switch (lb.outcome) {
                        case LemmaBasic::Outcome::Vacuous:
                            rec["lemma_classes"] = "vacuous";
                            break;
                        case LemmaBasic::Outcome::Ok:
                            rec["lemma_classes"] = "ok";
                            break;
                        case LemmaBasic::Outcome::Violation:
                            rec["lemma_classes"] = "violation";
                            violations.push_back({{"id", inst.id},
                                                  {"what", "coloring_class_witness"},
                                                  {"clique", k.to_vector()},
                                                  {"graph6", rec["graph6"]}});
                            break;
                        case LemmaBasic::Outcome::Unknown:
                            rec["lemma_classes"] = "unknown";
                            unknowns.push_back({{"id", inst.id},
                                                {"what", "lemma_classes"},
                                                {"budget", budget_json(config.budget)}});
                            break;
                    }
                }
            }
        }
        records.push_back(std::move(rec));
        timings[inst.id] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    SweepReport report;
    report.doc = {{"config", config.to_json()},
                  {"instances", std::move(records)},
                  {"summary",
                   {{"instances", instances.size()},
                    {"violations", std::move(violations)},
                    {"unknowns", std::move(unknowns)},
                    {"max_min_tihany_size", max_min_tihany}}},
                  {"timings", std::move(timings)}};
    return report;
}

// ---- hunt ------------------------------------------------------------------

HuntResult hunt(const SweepConfig& config) {
    HuntResult out;
    out.report = run_sweep(config);
    out.counterexamples = json::array();
    json& unknowns = out.report.doc["summary"]["unknowns"];

    for (json& rec : out.report.doc["instances"]) {
        if (!rec["claw_free"].get<bool>()) continue;
        if (rec["chi"].is_null() || !rec["chi_gt_omega"].get<bool>()) continue;
        if (rec["n"].get<int>() > config.elt_max_n) continue;
        Graph g = graph6_decode(rec["graph6"].get<std::string>());
        int chi = rec["chi"].get<int>();
        int checked = 0;
        for (int s = 2; s + 2 <= chi + 1; ++s) {
            int t = chi + 1 - s;
            try {
                auto part = elt_partition_exists(g, s, t, config.budget);
                ++checked;
                if (!part) {
                    out.counterexamples.push_back({{"id", rec["id"]},
                                                   {"graph6", rec["graph6"]},
                                                   {"chi", chi},
                                                   {"s", s},
                                                   {"t", t},
                                                   {"what", "no_split"}});
                }
            } catch (const std::runtime_error&) {
                unknowns.push_back({{"id", rec["id"]},
                                    {"what", "split_search"},
                                    {"s", s},
                                    {"t", t},
                                    {"budget", budget_json(config.budget)}});
            }
        }
        rec["splits_checked"] = checked;
    }
    out.exit_code = out.counterexamples.empty() ? out.report.exit_code() : 2;
    return out;
}

// ---- explain ---------------------------------------------------------------

std::string explain(const json& report_doc, const std::string& id) {
    const json* found = nullptr;
    for (const json& rec : report_doc.at("instances"))
        if (rec.at("id") == id) {
            found = &rec;
            break;
        }
    if (!found) throw std::invalid_argument("explain: no instance with id " + id);
    const json& rec = *found;

    std::ostringstream os;
    os << "instance " << id << " (family " << rec.at("family").get<std::string>() << ", n "
       << rec.at("n").get<int>() << ")\n";
    if (!rec.at("claw_free").get<bool>()) {
        os << "out of scope: not claw-free\n";
        return os.str();
    }
    if (rec.at("chi").is_null()) {
        os << "unknown: chromatic number search ran out of budget\n";
        return os.str();
    }
    int chi = rec.at("chi").get<int>();
    int omega = rec.at("omega").get<int>();
    os << "chi=" << chi << " omega=" << omega << " alpha=" << rec.at("alpha").get<int>() << "\n";
    if (!rec.at("chi_gt_omega").get<bool>()) {
        os << "out of scope: chi=omega\n";
        return os.str();
    }
    if (rec.at("min_tihany").is_null()) {
        os << "no Tihany clique recorded (violation or exhausted budget; see summary)\n";
        return os.str();
    }
    const json& mt = rec.at("min_tihany");
    Graph g = graph6_decode(rec.at("graph6").get<std::string>());
    VertexSet k(g.n());
    os << "K={";
    bool first = true;
    for (int v : mt.at("clique")) {
        os << (first ? "" : ",") << "v" << v;
        first = false;
        k.add(v);
    }
    os << "}, chi " << chi << " -> " << mt.at("chi_after").get<int>() << ", Tihany\n";
    CliqueClassification cls = classify_clique(g, k);
    if (cls.partition.c.empty())
        os << "certified dense brace: no vertex is complete to K\n";
    else if (cls.dense)
        os << "certified dense: the common neighborhood of K is a clique\n";
    else if (cls.good)
        os << "certified good: the common neighborhood of K is an antimatching\n";
    else
        os << "certified by exhaustive search: G minus K has no " << (chi - k.size())
           << "-coloring\n";
    return os.str();
}

}  // namespace tihany
