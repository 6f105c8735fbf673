#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "phw/limit_shape.hpp"
#include "phw/partition.hpp"
#include "phw/profile.hpp"

#include "commands.hpp"
#include "manifest.hpp"

namespace phwcli {

namespace {

// plot mesh: x ∈ [−3, 3] in steps of 1/40 (241 rows)
constexpr int kMeshSteps = 240;

double mesh_x(int i) { return -3.0 + static_cast<double>(i) / 40.0; }

phw::Partition partition_from_line(const nlohmann::json& j, std::size_t lineno) {
    if (!j.contains("partition") || !j["partition"].is_array())
        throw std::invalid_argument("profile: line " + std::to_string(lineno) +
                                    " has no partition array");
    std::vector<std::uint32_t> parts;
    for (const auto& v : j["partition"]) {
        if (!v.is_number_unsigned())
            throw std::invalid_argument("profile: line " + std::to_string(lineno) +
                                        " has a non-integer part");
        parts.push_back(v.get<std::uint32_t>());
    }
    return phw::Partition(std::move(parts));
}

// ψ of λ at the mesh, normalised by |λ|; optionally with λ₁ removed but the
// original √n scaling kept
std::vector<double> mesh_psi(const phw::Partition& lambda, bool exclude_first) {
    const std::uint64_t n = lambda.size();
    phw::Partition shape = lambda;
    if (exclude_first && !lambda.empty()) {
        std::vector<std::uint32_t> rest(lambda.parts().begin() + 1, lambda.parts().end());
        shape = phw::Partition(std::move(rest));
    }
    const phw::Profile prof(shape, n);
    std::vector<double> psi(kMeshSteps + 1);
    for (int i = 0; i <= kMeshSteps; ++i)
        psi[i] = prof.psi(mesh_x(i));
    return psi;
}

void write_block(std::ostream& out, const std::vector<double>& psi) {
    char buf[96];
    for (int i = 0; i <= kMeshSteps; ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", mesh_x(i), psi[i],
                      phw::omega(mesh_x(i)));
        out << buf;
    }
}

} // namespace

int run_profile(const ProfileArgs& a) {
    RunManifest man;
    man.command = "profile";
    man.add_flag("--input", a.input);
    man.add_flag("--exclude-first-part", a.exclude_first_part ? "true" : "false");
    man.add_flag("--per-sample", a.per_sample ? "true" : "false");

    std::ifstream in(a.input);
    if (!in)
        throw std::runtime_error("cannot open input file '" + a.input + "'");

    std::vector<std::vector<double>> profiles;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("profile: line " + std::to_string(lineno) +
                                        " is not valid JSON: " + e.what());
        }
        if (j.is_object() && j.value("record", "") == "manifest")
            continue; // upstream reproducibility header
        profiles.push_back(mesh_psi(partition_from_line(j, lineno), a.exclude_first_part));
    }

    std::ofstream file;
    std::ostream* outp = &std::cout;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file)
            throw std::runtime_error("cannot open output file '" + a.output + "'");
        outp = &file;
    }
    std::ostream& out = *outp;

    out << "# " << man.to_json().dump() << "\n";
    out << "x,psi,omega\n";
    if (profiles.empty()) {
        out.flush();
        return 0; // header-only CSV for an empty sample stream
    }

    if (a.per_sample) {
        for (std::size_t s = 0; s < profiles.size(); ++s) {
            out << "# sample " << s << "\n";
            write_block(out, profiles[s]);
        }
        out << "# mean\n";
    }
    std::vector<double> mean(kMeshSteps + 1, 0.0);
    for (const auto& psi : profiles)
        for (int i = 0; i <= kMeshSteps; ++i)
            mean[i] += psi[i];
    for (double& v : mean)
        v /= static_cast<double>(profiles.size());
    write_block(out, mean);
    out.flush();
    std::cerr << "profile: " << profiles.size() << " samples averaged\n";
    return 0;
}

} // namespace phwcli
