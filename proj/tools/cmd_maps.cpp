#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "phw/maps.hpp"
#include "phw/rng.hpp"

#include "commands.hpp"
#include "manifest.hpp"

namespace phwcli {

namespace {

nlohmann::ordered_json report_json(const phw::ComponentReport& rep) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const phw::ComponentInfo& c : rep.components) {
        nlohmann::ordered_json cj;
        cj["vertices"] = c.vertices;
        cj["edges"] = c.edges;
        cj["faces"] = c.faces;
        cj["euler"] = c.euler;
        cj["genus"] = c.genus;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["component_count"] = rep.component_count;
    j["face_count"] = rep.face_count;
    j["euler_total"] = rep.euler_total;
    j["total_genus"] = rep.total_genus;
    j["isolated_vertices"] = rep.isolated_vertices;
    j["largest_edges"] = rep.largest_edges;
    j["largest_vertices"] = rep.largest_vertices;
    return j;
}

// smallest n the tuple fits in (0 for an empty tuple)
std::uint32_t max_point(const phw::TranspositionTuple& t) {
    std::uint32_t m = 0;
    for (const auto& [x, y] : t.taus)
        m = std::max({m, x, y});
    return m;
}

} // namespace

int run_maps_analyze(const MapsAnalyzeArgs& a) {
    std::uint32_t n = a.n;
    if (n == 0) {
        // infer the degree from the tuple itself
        const std::uint32_t probe = max_point(phw::parse_tuple(UINT32_MAX, a.tuple));
        if (probe == 0)
            throw std::invalid_argument("maps analyze: empty tuple requires --n");
        n = probe;
    }
    const phw::TranspositionTuple t = phw::parse_tuple(n, a.tuple);

    RunManifest man;
    man.command = "maps analyze";
    man.add_flag("--tuple", a.tuple);
    man.add_flag("--n", std::to_string(n));

    const phw::HurwitzMap m(t);
    nlohmann::ordered_json out;
    out["n"] = n;
    out["ell"] = t.ell();
    out["pure"] = phw::is_pure(t);
    nlohmann::ordered_json rep = report_json(phw::component_report(m));
    for (auto& [key, value] : rep.items())
        out[key] = value;
    out["manifest"] = man.to_json();
    std::cout << out.dump() << "\n";
    return 0;
}

int run_maps_sample(const MapsSampleArgs& a) {
    RunManifest man;
    man.command = "maps sample";
    man.add_flag("--n", std::to_string(a.n));
    man.add_flag("--ell", std::to_string(a.ell));
    man.add_flag("--count", std::to_string(a.count));
    man.add_flag("--pure", a.pure ? "true" : "false");
    man.add_flag("--max-tries", std::to_string(a.max_tries));
    man.add_flag("--seed", std::to_string(a.seed));
    man.seed = a.seed;

    const auto t0 = std::chrono::steady_clock::now();
    phw::Rng rng(a.seed);
    std::vector<phw::TranspositionTuple> sample;
    sample.reserve(a.count);
    std::uint64_t tries_total = 0;
    for (std::uint64_t i = 0; i < a.count; ++i) {
        if (a.pure) {
            const phw::PureTupleResult r =
                phw::random_pure_tuple(a.n, a.ell, rng, a.max_tries);
            tries_total += r.tries;
            if (!r.tuple)
                throw std::runtime_error(
                    "maps sample: rejection sampling exhausted " +
                    std::to_string(a.max_tries) + " tries at draw " + std::to_string(i));
            sample.push_back(*r.tuple);
        } else {
            sample.push_back(phw::random_tuple(a.n, a.ell, rng));
            ++tries_total;
        }
    }
    const phw::MapStatistics st = phw::map_statistics(sample);

    nlohmann::ordered_json out;
    out["n"] = a.n;
    out["ell"] = a.ell;
    out["pure"] = a.pure;
    out["count"] = st.samples;
    out["tries_total"] = tries_total;
    out["mean_isolated"] = st.mean_isolated;
    out["mean_isolated_fraction"] = st.mean_isolated_fraction;
    out["mean_largest_edge_fraction"] = st.mean_largest_edge_fraction;
    out["mean_largest_vertex_scaled"] = st.mean_largest_vertex_scaled;
    out["isolated_counts"] = st.isolated_counts;
    out["largest_edge_counts"] = st.largest_edge_counts;
    out["largest_vertex_counts"] = st.largest_vertex_counts;
    out["manifest"] = man.to_json();

    std::ofstream file;
    std::ostream* outp = &std::cout;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file)
            throw std::runtime_error("cannot open output file '" + a.output + "'");
        outp = &file;
    }
    *outp << out.dump() << "\n";
    outp->flush();
    std::cerr << "maps sample: " << st.samples << " maps (" << tries_total
              << " draws) in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
    return 0;
}

} // namespace phwcli
