#include <chrono>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "phw/measures.hpp"
#include "phw/mh.hpp"
#include "phw/partition.hpp"
#include "phw/rng.hpp"
#include "phw/rsk.hpp"

#include "commands.hpp"
#include "manifest.hpp"

namespace phwcli {

namespace {

nlohmann::ordered_json partition_json(const phw::Partition& p) {
    return nlohmann::ordered_json(p.parts());
}

/* Stream selector: a named file or stdout. Keeping the ofstream alive in the
 * caller's scope avoids dangling references. */
std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int run_sample_plancherel(const PlancherelArgs& a) {
    RunManifest man;
    man.command = "sample plancherel";
    man.add_flag("--n", std::to_string(a.n));
    man.add_flag("--count", std::to_string(a.count));
    man.add_flag("--method", a.method);
    man.add_flag("--seed", std::to_string(a.seed));
    man.seed = a.seed;

    phw::PlancherelMethod method;
    if (a.method == "rsk")
        method = phw::PlancherelMethod::Rsk;
    else if (a.method == "growth")
        method = phw::PlancherelMethod::Growth;
    else
        throw std::invalid_argument("sample plancherel: unknown method '" + a.method + "'");

    std::ofstream file;
    std::ostream& out = open_output(a.output, file);
    const auto t0 = std::chrono::steady_clock::now();

    out << man.to_json().dump() << "\n";
    phw::Rng rng(a.seed);
    for (std::uint64_t i = 0; i < a.count; ++i) {
        const phw::Partition p = phw::plancherel_sample(a.n, rng, method);
        nlohmann::ordered_json line;
        line["record"] = "sample";
        line["index"] = i;
        line["partition"] = partition_json(p);
        out << line.dump() << "\n";
    }
    out.flush();
    std::cerr << "sample plancherel: " << a.count << " draws of n=" << a.n << " in "
              << seconds_since(t0) << " s\n";
    return 0;
}

int run_sample_mh(const MhArgs& a) {
    RunManifest man;
    man.command = "sample plancherel-hurwitz";
    man.add_flag("--n", std::to_string(a.n));
    man.add_flag("--ell", std::to_string(a.ell));
    man.add_flag("--steps", std::to_string(a.steps));
    man.add_flag("--burnin", std::to_string(a.burnin));
    man.add_flag("--thin", std::to_string(a.thin));
    man.add_flag("--variant", a.variant);
    man.add_flag("--seed", std::to_string(a.seed));
    man.seed = a.seed;

    phw::MeasureSpec spec;
    spec.n = a.n;
    spec.ell = a.ell;
    if (a.variant == "full")
        spec.variant = phw::MeasureVariant::Full;
    else if (a.variant == "positive-half")
        spec.variant = phw::MeasureVariant::PositiveHalf;
    else
        throw std::invalid_argument("sample plancherel-hurwitz: unknown variant '" +
                                    a.variant + "'");

    phw::ChainConfig cfg;
    cfg.steps = a.steps;
    cfg.burnin = a.burnin;
    cfg.thin = a.thin;
    cfg.seed = a.seed;

    std::ofstream file;
    std::ostream& out = open_output(a.output, file);
    const auto t0 = std::chrono::steady_clock::now();

    out << man.to_json().dump() << "\n";
    const phw::MhResult res = phw::mh_sample(spec, cfg, [&](const phw::MhSample& s) {
        nlohmann::ordered_json line;
        line["record"] = "sample";
        line["step"] = s.step;
        line["partition"] = partition_json(s.state);
        line["C"] = s.content;
        line["logw"] = s.logw;
        out << line.dump() << "\n";
    });
    out.flush();
    std::cerr << "sample plancherel-hurwitz: " << res.emitted << " states emitted, "
              << res.accepts << "/" << res.proposals << " proposals accepted in "
              << seconds_since(t0) << " s\n";
    return 0;
}

} // namespace phwcli
