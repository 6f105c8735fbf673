#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "phw/measures.hpp"
#include "phw/mh.hpp"
#include "phw/partition.hpp"
#include "phw/rsk.hpp"

using namespace phw;

namespace {

Rational canon(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// total-variation distance between an empirical count map and an exact table
double tv_distance(const std::map<Partition, std::uint64_t>& counts, std::uint64_t total,
                   const ExactMeasureTable& exact) {
    double tv = 0.0;
    std::map<Partition, double> emp;
    for (const auto& [p, c] : counts)
        emp[p] = static_cast<double>(c) / static_cast<double>(total);
    for (const auto& [p, prob] : exact.entries) {
        const double e = emp.count(p) ? emp[p] : 0.0;
        tv += std::abs(e - prob.get_d());
        emp.erase(p);
    }
    for (const auto& [p, e] : emp)
        tv += e; // sampled states outside the exact support
    return tv / 2.0;
}

std::uint32_t lis_length(const Permutation& s) {
    std::vector<std::uint32_t> best;
    for (std::uint32_t v : s) {
        auto it = std::lower_bound(best.begin(), best.end(), v);
        if (it == best.end())
            best.push_back(v);
        else
            *it = v;
    }
    return static_cast<std::uint32_t>(best.size());
}

std::uint32_t lds_length(const Permutation& s) {
    Permutation rev(s.rbegin(), s.rend());
    return lis_length(rev);
}

bool is_standard_tableau(const std::vector<std::vector<std::uint32_t>>& t, std::uint64_t n) {
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0 && t[i].size() > t[i - 1].size())
            return false;
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            const std::uint32_t v = t[i][j];
            if (v < 1 || v > n || seen[v])
                return false;
            seen[v] = true;
            if (j > 0 && t[i][j - 1] >= v)
                return false;
            if (i > 0 && t[i - 1][j] >= v)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("exact measure: frozen n=3, ell=2 table") {
    const ExactMeasureTable full = exact_measure({3, 2, MeasureVariant::Full});
    REQUIRE(full.entries.size() == 3);
    CHECK(full.probability(Partition({3})) == canon(1, 2));
    CHECK(full.probability(Partition({2, 1})) == canon(0, 1));
    CHECK(full.probability(Partition({1, 1, 1})) == canon(1, 2));

    const ExactMeasureTable pos = exact_measure({3, 2, MeasureVariant::PositiveHalf});
    REQUIRE(pos.entries.size() == 1);
    CHECK(pos.probability(Partition({3})) == canon(1, 1));
    CHECK(pos.probability(Partition({1, 1, 1})) == canon(0, 1)); // outside the support
}

TEST_CASE("exact measure: normalisation, doubling, symmetry") {
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (std::uint32_t ell : {0u, 2u, 4u}) {
            if (n == 1 && ell > 0)
                continue; // C_(1) = 0: no mass anywhere
            const ExactMeasureTable full = exact_measure({n, ell, MeasureVariant::Full});
            CHECK(full.total() == canon(1, 1));
            CHECK(full.entries.size() == partition_count(n));
            for (const auto& [p, prob] : full.entries)
                CHECK(prob == full.probability(conjugate(p))); // even-ℓ symmetry

            if (ell > 0 && n >= 2) {
                const ExactMeasureTable pos = exact_measure({n, ell, MeasureVariant::PositiveHalf});
                CHECK(pos.total() == canon(1, 1));
                for (const auto& [p, prob] : pos.entries) {
                    CHECK(content_sum(p) > 0);
                    CHECK(prob == Rational(2) * full.probability(p)); // conditioning doubles
                }
            }
        }

    // ℓ = 0 is plain Plancherel: P(λ) = f_λ²/n!
    const ExactMeasureTable planch = exact_measure({6, 0, MeasureVariant::Full});
    const BigCount fact = factorial_big(6);
    for (const auto& [p, prob] : planch.entries) {
        const BigCount f = dim_syt(p);
        CHECK(prob == Rational(f * f) / Rational(fact));
    }
}

TEST_CASE("exact measure: error paths") {
    CHECK_THROWS_AS(exact_measure({5, 3, MeasureVariant::Full}), std::invalid_argument);
    CHECK_THROWS_AS(exact_measure({5, 0, MeasureVariant::PositiveHalf}), std::invalid_argument);
    CHECK_THROWS_AS(exact_measure({0, 2, MeasureVariant::Full}), std::invalid_argument);
    CHECK_THROWS_AS(exact_measure({1, 2, MeasureVariant::Full}), UndefinedMeasureError);
    CHECK_THROWS_AS(exact_measure({1, 2, MeasureVariant::PositiveHalf}), UndefinedMeasureError);
    CHECK_THROWS_AS(exact_measure({70, 2, MeasureVariant::Full}), BudgetError);
}

TEST_CASE("rsk: worked example and tableau validity") {
    const RskResult r = rsk({3, 1, 2});
    CHECK(r.p == std::vector<std::vector<std::uint32_t>>{{1, 2}, {3}});
    CHECK(r.q == std::vector<std::vector<std::uint32_t>>{{1, 3}, {2}});
    CHECK(r.shape() == Partition({2, 1}));
    CHECK(rsk_shape({3, 1, 2}) == Partition({2, 1}));

    Rng rng(20240817);
    for (int rep = 0; rep < 20; ++rep) {
        const Permutation s = random_permutation(40, rng);
        const RskResult rr = rsk(s);
        CHECK(is_standard_tableau(rr.p, 40));
        CHECK(is_standard_tableau(rr.q, 40));
        CHECK(rr.shape() == rsk_shape(s));
    }

    CHECK_THROWS_AS(rsk({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rsk({2, 3}), std::invalid_argument);
}

TEST_CASE("rsk: first row is the LIS, first column the LDS (exhaustive)") {
    for (std::uint32_t n = 1; n <= 7; ++n) {
        Permutation s(n);
        for (std::uint32_t i = 0; i < n; ++i)
            s[i] = i + 1;
        do {
            const Partition sh = rsk_shape(s);
            CHECK(sh.part(0) == lis_length(s));
            CHECK(sh.length() == lds_length(s));
        } while (std::next_permutation(s.begin(), s.end()));
    }
}

TEST_CASE("rsk: shape counts over all of S_6 equal f_lambda squared") {
    std::map<Partition, std::uint64_t> counts;
    Permutation s{1, 2, 3, 4, 5, 6};
    do {
        ++counts[rsk_shape(s)];
    } while (std::next_permutation(s.begin(), s.end()));
    std::uint64_t total = 0;
    for_each_partition(6, [&](const Partition& p) {
        const BigCount f = dim_syt(p);
        CHECK(BigCount(static_cast<unsigned long>(counts[p])) == f * f);
        total += counts[p];
    });
    CHECK(total == 720);
}

TEST_CASE("random permutations are valid and deterministic") {
    Rng a(5), b(5), c(6);
    const Permutation pa = random_permutation(50, a);
    const Permutation pb = random_permutation(50, b);
    const Permutation pc = random_permutation(50, c);
    CHECK_NOTHROW(validate_permutation(pa));
    CHECK(pa == pb);
    CHECK(pa != pc);
}

TEST_CASE("growth normalisation: sum of f over covers equals (m+1)·f") {
    for (std::uint64_t m = 0; m <= 12; ++m)
        for_each_partition(m, [&](const Partition& mu) {
            BigCount sum = 0;
            for (const Partition& nu : add_box_shapes(mu))
                sum += dim_syt(nu);
            CHECK(sum == BigCount(static_cast<unsigned long>(m + 1)) * dim_syt(mu));
        });
}

TEST_CASE("plancherel samplers agree with the exact measure") {
    const ExactMeasureTable exact = exact_measure({5, 0, MeasureVariant::Full});
    const std::uint64_t reps = 20000;
    for (PlancherelMethod method : {PlancherelMethod::Rsk, PlancherelMethod::Growth}) {
        Rng rng(method == PlancherelMethod::Rsk ? 101 : 202);
        std::map<Partition, std::uint64_t> counts;
        for (std::uint64_t i = 0; i < reps; ++i) {
            const Partition p = plancherel_sample(5, rng, method);
            CHECK(p.size() == 5);
            ++counts[p];
        }
        CHECK(tv_distance(counts, reps, exact) <= 0.04);
    }
    Rng rng(1);
    CHECK_THROWS_AS(plancherel_sample(0, rng, PlancherelMethod::Rsk), std::invalid_argument);
}

TEST_CASE("warm start partitions") {
    for (std::uint32_t n : {1u, 2u, 5u, 100u, 2500u})
        for (std::uint32_t ell : {0u, 2u, 300u, 7500u}) {
            const Partition p = warm_start_partition(n, ell);
            CHECK(p.size() == n);
        }
    CHECK(warm_start_partition(2500, 7500).parts()[0] == 1917); // round(2ℓ/log n)
    CHECK(content_sum(warm_start_partition(2500, 7500)) > 0);
    CHECK(warm_start_partition(1, 100) == Partition({1}));
    CHECK_THROWS_AS(warm_start_partition(0, 2), std::invalid_argument);
}

TEST_CASE("mh: emission schedule and bookkeeping") {
    MeasureSpec spec{6, 2, MeasureVariant::Full};
    ChainConfig cfg;
    cfg.steps = 10;
    cfg.burnin = 4;
    cfg.thin = 3;
    cfg.seed = 99;
    std::vector<std::uint64_t> steps;
    const MhResult res = mh_sample(spec, cfg, [&](const MhSample& s) { steps.push_back(s.step); });
    CHECK(steps == std::vector<std::uint64_t>{7, 10});
    CHECK(res.emitted == 2);
    CHECK(res.proposals == 10);
    CHECK(res.accepts <= res.proposals);
    CHECK(res.final_state.size() == 6);
    CHECK(res.final_content == content_sum(res.final_state));

    cfg.burnin = 11;
    CHECK_THROWS_AS(mh_sample(spec, cfg, [](const MhSample&) {}), std::invalid_argument);
    cfg.burnin = 0;
    cfg.thin = 0;
    CHECK_THROWS_AS(mh_sample(spec, cfg, [](const MhSample&) {}), std::invalid_argument);
}

TEST_CASE("mh: incremental state matches full recomputation") {
    const MeasureSpec specs[] = {{20, 6, MeasureVariant::Full},
                                 {12, 4, MeasureVariant::PositiveHalf}};
    for (const MeasureSpec& spec : specs) {
        const std::uint32_t n = spec.n, ell = spec.ell;
        ChainConfig cfg;
        cfg.steps = 2000;
        cfg.burnin = 0;
        cfg.thin = 50;
        cfg.seed = 4242;
        mh_sample(spec, cfg, [&](const MhSample& s) {
            CHECK(s.state.size() == n);
            CHECK(s.content == content_sum(s.state));
            const double expect = 2.0 * log_dim_syt(s.state) +
                                  static_cast<double>(ell) *
                                      std::log(std::abs(static_cast<double>(s.content)));
            CHECK(s.logw == doctest::Approx(expect).epsilon(1e-7));
        });
    }
}

TEST_CASE("mh: determinism per seed") {
    MeasureSpec spec{9, 4, MeasureVariant::PositiveHalf};
    ChainConfig cfg;
    cfg.steps = 5000;
    cfg.burnin = 100;
    cfg.thin = 7;
    cfg.seed = 31337;
    auto run = [&]() {
        std::vector<std::string> lines;
        mh_sample(spec, cfg, [&](const MhSample& s) {
            lines.push_back(std::to_string(s.step) + " " + to_text(s.state) + " " +
                            std::to_string(s.logw));
        });
        return lines;
    };
    const auto first = run();
    const auto second = run();
    CHECK(first == second);
    CHECK_FALSE(first.empty());

    cfg.seed = 31338;
    const auto third = run();
    CHECK(first != third);
}

TEST_CASE("mh: start-state resolution") {
    ChainConfig cfg;
    cfg.steps = 1;
    cfg.seed = 1;
    cfg.init = ChainConfig::Init::Given;
    cfg.initial = Partition({3, 1});
    CHECK_THROWS_AS(mh_sample({5, 2, MeasureVariant::Full}, cfg, [](const MhSample&) {}),
                    std::invalid_argument); // |initial| ≠ n
    cfg.initial = Partition({2, 1});        // C = 0
    CHECK_THROWS_AS(mh_sample({3, 2, MeasureVariant::Full}, cfg, [](const MhSample&) {}),
                    std::invalid_argument);
    cfg.initial = Partition({1, 1, 1}); // C = −3
    CHECK_THROWS_AS(mh_sample({3, 2, MeasureVariant::PositiveHalf}, cfg, [](const MhSample&) {}),
                    std::invalid_argument);
    // default init falls back to (n) when the warm start lands at C ≤ 0
    ChainConfig auto_cfg;
    auto_cfg.steps = 100;
    auto_cfg.seed = 7;
    const MhResult r = mh_sample({2, 2, MeasureVariant::PositiveHalf}, auto_cfg,
                                 [](const MhSample&) {});
    CHECK(r.final_state.size() == 2);
    CHECK(r.final_content > 0);
}

TEST_CASE("mh: empirical law matches the exact measure at desk scale") {
    struct Setup {
        MeasureSpec spec;
        std::uint64_t steps, burnin, thin, seed;
    };
    const Setup runs[] = {
        {{6, 2, MeasureVariant::Full}, 200000, 20000, 2, 11},
        {{5, 0, MeasureVariant::Full}, 150000, 10000, 2, 12}, // ℓ=0: plain Plancherel, C=0 states live
        {{7, 4, MeasureVariant::PositiveHalf}, 200000, 20000, 2, 13},
    };
    for (const Setup& setup : runs) {
        const ExactMeasureTable exact = exact_measure(setup.spec);
        ChainConfig cfg;
        cfg.steps = setup.steps;
        cfg.burnin = setup.burnin;
        cfg.thin = setup.thin;
        cfg.seed = setup.seed;
        std::map<Partition, std::uint64_t> counts;
        std::uint64_t total = 0;
        mh_sample(setup.spec, cfg, [&](const MhSample& s) {
            ++counts[s.state];
            ++total;
        });
        CHECK(total == (setup.steps - setup.burnin) / setup.thin);
        CHECK(tv_distance(counts, total, exact) <= 0.03);
    }
}
