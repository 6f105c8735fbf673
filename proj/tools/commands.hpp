#pragma once

#include <cstdint>
#include <string>

namespace phwcli {

struct HnumArgs {
    std::uint32_t n = 1;
    std::uint32_t ell = 0;
    std::string method = "frobenius"; // frobenius | bruteforce | asymptotic
    unsigned threads = 1;
    std::uint64_t budget = 0; // 0 → environment / default
};

struct PlancherelArgs {
    std::uint64_t n = 1;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::string method = "rsk"; // rsk | growth
    std::string output;         // empty → stdout
};

struct MhArgs {
    std::uint32_t n = 1;
    std::uint32_t ell = 0;
    std::uint64_t steps = 0;
    std::uint64_t burnin = 0;
    std::uint64_t thin = 1;
    std::uint64_t seed = 0;
    std::string variant = "positive-half"; // full | positive-half
    std::string output;                    // empty → stdout
};

struct ProfileArgs {
    std::string input;
    std::string output; // empty → stdout
    bool exclude_first_part = false;
    bool per_sample = false;
};

struct MapsAnalyzeArgs {
    std::string tuple;
    std::uint32_t n = 0; // 0 → infer from the tuple's largest point
};

struct MapsSampleArgs {
    std::uint32_t n = 1;
    std::uint32_t ell = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    bool pure = false;
    std::uint64_t max_tries = 10'000'000;
    std::string output; // empty → stdout
};

struct VerifyArgs {
    std::string suite = "all"; // small | mcmc | maps | all
    std::uint64_t seed = 0;
    bool have_seed = false;
    bool json = false;
};

int run_hnum(const HnumArgs& a);
int run_sample_plancherel(const PlancherelArgs& a);
int run_sample_mh(const MhArgs& a);
int run_profile(const ProfileArgs& a);
int run_maps_analyze(const MapsAnalyzeArgs& a);
int run_maps_sample(const MapsSampleArgs& a);
int run_verify(const VerifyArgs& a);

} // namespace phwcli
