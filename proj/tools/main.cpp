#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "phw/hurwitz.hpp"

#include "commands.hpp"

namespace {

#ifndef PHW_CLI_VERSION
#define PHW_CLI_VERSION "0.0.0"
#endif

// exit codes: 0 ok, 1 runtime/verification failure, 2 usage, 3 budget refusal
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

} // namespace

int main(int argc, char** argv) {
    using namespace phwcli;

    CLI::App app{"Plancherel–Hurwitz measures: exact counts, samplers, and map analysis"};
    app.set_version_flag("--version", PHW_CLI_VERSION);
    app.require_subcommand(1);

    // ---- hnum ----
    HnumArgs hnum;
    CLI::App* c_hnum = app.add_subcommand("hnum", "Exact or asymptotic Hurwitz numbers");
    c_hnum->add_option("--n", hnum.n, "Degree n")->required()->check(CLI::PositiveNumber);
    c_hnum->add_option("--ell", hnum.ell, "Number of transpositions")->required();
    c_hnum->add_option("--method", hnum.method,
                       "frobenius | bruteforce | asymptotic (default frobenius)");
    c_hnum->add_option("--threads", hnum.threads, "Worker threads for the character sum")
        ->check(CLI::PositiveNumber);
    c_hnum->add_option("--budget", hnum.budget,
                       "Partition-count budget override (0 = default/environment)");

    // ---- sample ----
    CLI::App* c_sample = app.add_subcommand("sample", "Draw from partition measures");
    c_sample->require_subcommand(1);

    PlancherelArgs pl;
    CLI::App* c_pl = c_sample->add_subcommand("plancherel", "Exact Plancherel draws");
    c_pl->add_option("--n", pl.n, "Size of the sampled partitions")
        ->required()
        ->check(CLI::PositiveNumber);
    c_pl->add_option("--count", pl.count, "Number of draws")->check(CLI::PositiveNumber);
    c_pl->add_option("--seed", pl.seed, "RNG seed")->required();
    c_pl->add_option("--method", pl.method, "rsk | growth (default rsk)");
    c_pl->add_option("--output", pl.output, "Output file (default stdout)");

    MhArgs mh;
    CLI::App* c_mh = c_sample->add_subcommand(
        "plancherel-hurwitz", "Metropolis chain for the deformed measure");
    c_mh->add_option("--n", mh.n, "Size of the sampled partitions")
        ->required()
        ->check(CLI::PositiveNumber);
    c_mh->add_option("--ell", mh.ell, "Deformation exponent (even)")->required();
    c_mh->add_option("--steps", mh.steps, "Total proposal steps")->required();
    c_mh->add_option("--burnin", mh.burnin, "Steps before the first emission");
    c_mh->add_option("--thin", mh.thin, "Emit every thin-th step")
        ->check(CLI::PositiveNumber);
    c_mh->add_option("--seed", mh.seed, "RNG seed")->required();
    c_mh->add_option("--variant", mh.variant, "full | positive-half (default positive-half)");
    c_mh->add_option("--output", mh.output, "Output file (default stdout)");

    // ---- profile ----
    ProfileArgs prof;
    CLI::App* c_prof = app.add_subcommand(
        "profile", "Rescaled profiles of sampled partitions against the limit curve");
    c_prof->add_option("--input", prof.input, "Sample file (JSON lines)")->required();
    c_prof->add_option("--output", prof.output, "Output file (default stdout)");
    c_prof->add_flag("--exclude-first-part", prof.exclude_first_part,
                     "Profile λ with its first part removed, same √n scaling");
    c_prof->add_flag("--per-sample", prof.per_sample,
                     "Emit one block per sample before the mean block");

    // ---- maps ----
    CLI::App* c_maps = app.add_subcommand("maps", "Transposition tuples as labelled maps");
    c_maps->require_subcommand(1);

    MapsAnalyzeArgs ma;
    CLI::App* c_ma = c_maps->add_subcommand("analyze", "Faces, components, Euler data");
    c_ma->add_option("--tuple", ma.tuple, "Tuple text, e.g. \"1 2;2 3;3 4\"")->required();
    c_ma->add_option("--n", ma.n, "Number of vertices (default: largest point in the tuple)");

    MapsSampleArgs ms;
    CLI::App* c_ms = c_maps->add_subcommand("sample", "Random tuples and their map statistics");
    c_ms->add_option("--n", ms.n, "Number of points")->required()->check(CLI::PositiveNumber);
    c_ms->add_option("--ell", ms.ell, "Tuple length")->required();
    c_ms->add_option("--count", ms.count, "Number of tuples")->check(CLI::PositiveNumber);
    c_ms->add_option("--seed", ms.seed, "RNG seed")->required();
    c_ms->add_flag("--pure", ms.pure, "Condition on the product being the identity");
    c_ms->add_option("--max-tries", ms.max_tries,
                     "Rejection budget per pure draw (default 10^7)");
    c_ms->add_option("--output", ms.output, "Output file (default stdout)");

    // ---- verify ----
    VerifyArgs vf;
    CLI::App* c_vf = app.add_subcommand("verify", "Self-checks against frozen oracles");
    c_vf->add_option("--suite", vf.suite, "small | maps | mcmc | all (default all)");
    CLI::Option* vf_seed = c_vf->add_option("--seed", vf.seed, "RNG seed (required for mcmc)");
    c_vf->add_flag("--json", vf.json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help/error text itself
        return code == 0 ? 0 : kExitUsage;
    }

    vf.have_seed = vf_seed->count() > 0;

    try {
        if (c_hnum->parsed())
            return run_hnum(hnum);
        if (c_pl->parsed())
            return run_sample_plancherel(pl);
        if (c_mh->parsed())
            return run_sample_mh(mh);
        if (c_prof->parsed())
            return run_profile(prof);
        if (c_ma->parsed())
            return run_maps_analyze(ma);
        if (c_ms->parsed())
            return run_maps_sample(ms);
        if (c_vf->parsed())
            return run_verify(vf);
    } catch (const phw::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage; // unreachable: require_subcommand guarantees a branch
}
