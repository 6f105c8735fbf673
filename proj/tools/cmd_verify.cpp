#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "phw/hurwitz.hpp"
#include "phw/limit_shape.hpp"
#include "phw/maps.hpp"
#include "phw/measures.hpp"
#include "phw/mh.hpp"
#include "phw/partition.hpp"
#include "phw/profile.hpp"
#include "phw/rng.hpp"
#include "phw/rsk.hpp"

#include "commands.hpp"
#include "manifest.hpp"

namespace phwcli {

namespace {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail; // populated on failure (or informative on pass)
};

class Verifier {
public:
    explicit Verifier(std::uint64_t seed) : seed_(seed) {}

    void check(const std::string& suite, const std::string& name,
               const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.suite = suite;
        r.name = name;
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }

    std::uint64_t seed() const { return seed_; }

    std::vector<CheckResult> results;

private:
    std::uint64_t seed_;
};

// ---------------------------------------------------------------- small ----

void suite_small(Verifier& v) {
    using namespace phw;

    v.check("small", "dimension square sum equals n!", [](std::string& d) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            BigCount total = 0, fact = 1;
            for_each_partition(n, [&](const Partition& p) {
                const BigCount f = dim_syt(p);
                total += f * f;
            });
            for (std::uint64_t k = 2; k <= n; ++k)
                fact *= k;
            if (total != fact) {
                d = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    v.check("small", "frozen dimension and content values", [](std::string& d) {
        if (dim_syt(Partition({4, 2, 1})) != 35) {
            d = "f(4,2,1) != 35";
            return false;
        }
        if (content_sum(Partition({4, 2, 1})) != 3) {
            d = "C(4,2,1) != 3";
            return false;
        }
        if (dim_syt(Partition({3, 2, 1})) != 16) {
            d = "f(3,2,1) != 16";
            return false;
        }
        return true;
    });

    v.check("small", "growth normalisation", [](std::string& d) {
        for (std::uint64_t m = 0; m <= 10; ++m) {
            bool ok = true;
            for_each_partition(m, [&](const Partition& mu) {
                BigCount lhs = 0;
                for (const Partition& nu : add_box_shapes(mu))
                    lhs += dim_syt(nu);
                if (lhs != BigCount(m + 1) * dim_syt(mu))
                    ok = false;
            });
            if (!ok) {
                d = "mismatch at |mu|=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    v.check("small", "conjugation involution and content negation", [](std::string& d) {
        for (std::uint64_t n = 0; n <= 12; ++n) {
            bool ok = true;
            for_each_partition(n, [&](const Partition& p) {
                const Partition q = conjugate(p);
                if (conjugate(q) != p || content_sum(q) != -content_sum(p) ||
                    dim_syt(q) != dim_syt(p))
                    ok = false;
            });
            if (!ok) {
                d = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    v.check("small", "hurwitz numbers: frozen values and parity", [](std::string& d) {
        const struct {
            std::uint32_t n, ell;
            std::uint64_t value;
        } frozen[] = {
            {3, 2, 3}, {3, 4, 27}, {4, 2, 6}, {4, 4, 120}, {4, 6, 3936},
            {2, 0, 1}, {2, 2, 1},  {2, 4, 1}, {2, 6, 1},   {5, 0, 1},
        };
        for (const auto& f : frozen)
            if (hurwitz_number({f.n, f.ell}) != BigCount(f.value)) {
                d = "H(" + std::to_string(f.n) + "," + std::to_string(f.ell) + ") wrong";
                return false;
            }
        for (std::uint32_t n = 1; n <= 8; ++n)
            for (std::uint32_t ell = 1; ell <= 7; ell += 2)
                if (hurwitz_number({n, ell}) != 0) {
                    d = "odd ell should vanish";
                    return false;
                }
        return true;
    });

    v.check("small", "frobenius equals brute force", [](std::string& d) {
        for (std::uint32_t n = 2; n <= 5; ++n)
            for (std::uint32_t ell = 0; ell <= 6; ell += 2)
                if (hurwitz_number({n, ell}) != hurwitz_number_bruteforce({n, ell})) {
                    d = "mismatch at n=" + std::to_string(n) +
                        " ell=" + std::to_string(ell);
                    return false;
                }
        return true;
    });

    v.check("small", "return probability 1/3 at (3,2)", [](std::string& d) {
        Rational third(1, 3);
        if (return_probability({3, 2}) != third) {
            d = "got " + return_probability({3, 2}).get_str();
            return false;
        }
        if (return_probability({2, 4}) != Rational(1)) {
            d = "walk on S2 must return";
            return false;
        }
        return true;
    });

    v.check("small", "exact measure tables normalise", [](std::string& d) {
        const ExactMeasureTable t = exact_measure({3, 2, MeasureVariant::Full});
        const Rational half(1, 2);
        if (t.probability(Partition({3})) != half ||
            t.probability(Partition({1, 1, 1})) != half ||
            t.probability(Partition({2, 1})) != Rational(0)) {
            d = "frozen (3,2) table wrong";
            return false;
        }
        for (std::uint32_t n = 2; n <= 8; ++n)
            for (std::uint32_t ell = 0; ell <= 4; ell += 2) {
                if (exact_measure({n, ell, MeasureVariant::Full}).total() != Rational(1)) {
                    d = "full total != 1";
                    return false;
                }
                if (ell > 0 &&
                    exact_measure({n, ell, MeasureVariant::PositiveHalf}).total() !=
                        Rational(1)) {
                    d = "positive-half total != 1";
                    return false;
                }
            }
        return true;
    });

    v.check("small", "profile area and content identities", [](std::string& d) {
        for (std::uint64_t n = 1; n <= 12; ++n) {
            bool ok = true;
            for_each_partition(n, [&](const Partition& p) {
                if (rescaled_profile(p).area_above_axis() != Rational(2))
                    ok = false;
                if (content_from_profile(p) != Rational(content_sum(p)))
                    ok = false;
            });
            if (!ok) {
                d = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    v.check("small", "limit curve anchors", [](std::string& d) {
        if (std::abs(omega(0.0) - 4.0 / std::numbers::pi) > 1e-12) {
            d = "omega(0) != 4/pi";
            return false;
        }
        if (std::abs(omega(2.0 - 1e-9) - 2.0) > 1e-8 || omega(2.0) != 2.0) {
            d = "discontinuity at the right support edge";
            return false;
        }
        // composite Simpson of the enclosed area
        const int m = 20000;
        double acc = omega(0.0) - 0.0 + omega(2.0) - 2.0;
        for (int i = 1; i < m; ++i) {
            const double x = 2.0 * i / m;
            acc += (omega(x) - x) * (i % 2 ? 4.0 : 2.0);
        }
        const double area = 2.0 * acc * (2.0 / m) / 3.0;
        if (std::abs(area - 2.0) > 1e-6) {
            d = "enclosed area " + std::to_string(area);
            return false;
        }
        return true;
    });

    v.check("small", "hook integral anchor (coarse interpolant)", [](std::string& d) {
        const double val = hook_integral(PolylineShape::omega_interpolant(400));
        d = "I = " + std::to_string(val);
        return std::abs(val + 0.5) <= 2e-2;
    });
}

// ----------------------------------------------------------------- maps ----

void suite_maps(Verifier& v) {
    using namespace phw;

    v.check("maps", "frozen genus multisets", [](std::string& d) {
        const struct {
            const char* text;
            std::vector<std::int64_t> genus;
        } cases[] = {
            {"1 2;2 3;3 4;3 4;2 3;1 2", {0}},
            {"1 2;1 2;1 2;1 2;3 4;3 4", {0, 1}},
            {"1 2;1 2;1 2;1 2;1 2;1 2", {0, 0, 2}},
        };
        for (const auto& c : cases) {
            const TranspositionTuple t = parse_tuple(4, c.text);
            if (!is_pure(t)) {
                d = std::string("tuple should be pure: ") + c.text;
                return false;
            }
            const ComponentReport rep = component_report(HurwitzMap(t));
            std::vector<std::int64_t> genus;
            for (const ComponentInfo& comp : rep.components)
                genus.push_back(comp.genus);
            std::sort(genus.begin(), genus.end());
            if (genus != c.genus) {
                d = std::string("genus multiset wrong for ") + c.text;
                return false;
            }
        }
        return true;
    });

    v.check("maps", "exhaustive pure counts match hurwitz numbers", [](std::string& d) {
        for (std::uint32_t n = 2; n <= 4; ++n) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pool;
            for (std::uint32_t a = 1; a <= n; ++a)
                for (std::uint32_t b = a + 1; b <= n; ++b)
                    pool.emplace_back(a, b);
            for (std::uint32_t ell = 0; ell <= 4; ell += 2) {
                std::uint64_t count = 0;
                std::vector<std::size_t> idx(ell, 0);
                for (;;) {
                    TranspositionTuple t;
                    t.n = n;
                    for (std::size_t i = 0; i < ell; ++i)
                        t.taus.push_back(pool[idx[i]]);
                    if (is_pure(t)) {
                        ++count;
                        const ComponentReport rep = component_report(HurwitzMap(t));
                        if (rep.face_count != n ||
                            rep.euler_total != 2 * static_cast<std::int64_t>(n) -
                                                   static_cast<std::int64_t>(ell)) {
                            d = "face/euler identity failed";
                            return false;
                        }
                    }
                    std::size_t p = 0;
                    while (p < ell && ++idx[p] == pool.size())
                        idx[p++] = 0;
                    if (p == ell)
                        break;
                }
                if (BigCount(count) != hurwitz_number({n, ell})) {
                    d = "count mismatch at n=" + std::to_string(n) +
                        " ell=" + std::to_string(ell);
                    return false;
                }
            }
        }
        return true;
    });

    v.check("maps", "descent purity equals product purity", [](std::string& d) {
        for (std::uint32_t n = 2; n <= 4; ++n) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pool;
            for (std::uint32_t a = 1; a <= n; ++a)
                for (std::uint32_t b = a + 1; b <= n; ++b)
                    pool.emplace_back(a, b);
            for (std::size_t ell = 0; ell <= 4; ++ell) {
                std::vector<std::size_t> idx(ell, 0);
                for (;;) {
                    TranspositionTuple t;
                    t.n = n;
                    for (std::size_t i = 0; i < ell; ++i)
                        t.taus.push_back(pool[idx[i]]);
                    const HurwitzMap m(t);
                    if (descent_corner_purity(m) != is_pure(t) ||
                        !unique_vertex_descents(m)) {
                        d = "disagreement at n=" + std::to_string(n) + " tuple " +
                            to_text(t);
                        return false;
                    }
                    std::size_t p = 0;
                    while (p < ell && ++idx[p] == pool.size())
                        idx[p++] = 0;
                    if (p == ell)
                        break;
                }
            }
        }
        return true;
    });
}

// ----------------------------------------------------------------- mcmc ----

double tv_distance(const std::map<phw::Partition, std::uint64_t>& counts,
                   std::uint64_t total, const phw::ExactMeasureTable& exact) {
    double tv = 0.0;
    for (const auto& [p, prob] : exact.entries) {
        const auto it = counts.find(p);
        const double emp =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(total);
        tv += std::abs(emp - prob.get_d());
    }
    for (const auto& [p, c] : counts)
        if (exact.entries.find(p) == exact.entries.end())
            tv += static_cast<double>(c) / static_cast<double>(total);
    return tv / 2.0;
}

void suite_mcmc(Verifier& v) {
    using namespace phw;
    const std::uint64_t seed = v.seed();

    v.check("mcmc", "mh matches exact law (positive half)", [seed](std::string& d) {
        const MeasureSpec spec{7, 4, MeasureVariant::PositiveHalf};
        ChainConfig cfg;
        cfg.steps = 220000;
        cfg.burnin = 20000;
        cfg.thin = 2;
        cfg.seed = seed;
        std::map<Partition, std::uint64_t> counts;
        std::uint64_t total = 0;
        mh_sample(spec, cfg, [&](const MhSample& s) {
            ++counts[s.state];
            ++total;
        });
        const double tv = tv_distance(counts, total, exact_measure(spec));
        d = "tv = " + std::to_string(tv) + " over " + std::to_string(total) + " samples";
        return tv <= 0.05;
    });

    v.check("mcmc", "mh matches exact law (full)", [seed](std::string& d) {
        const MeasureSpec spec{6, 2, MeasureVariant::Full};
        ChainConfig cfg;
        cfg.steps = 220000;
        cfg.burnin = 20000;
        cfg.thin = 2;
        cfg.seed = seed + 1;
        std::map<Partition, std::uint64_t> counts;
        std::uint64_t total = 0;
        mh_sample(spec, cfg, [&](const MhSample& s) {
            ++counts[s.state];
            ++total;
        });
        const double tv = tv_distance(counts, total, exact_measure(spec));
        d = "tv = " + std::to_string(tv) + " over " + std::to_string(total) + " samples";
        return tv <= 0.05;
    });

    v.check("mcmc", "plancherel samplers match the exact law", [seed](std::string& d) {
        const std::uint64_t n = 5;
        ExactMeasureTable plancherel = exact_measure({5, 0, MeasureVariant::Full});
        for (const PlancherelMethod method :
             {PlancherelMethod::Rsk, PlancherelMethod::Growth}) {
            Rng rng(seed + (method == PlancherelMethod::Rsk ? 2 : 3));
            std::map<Partition, std::uint64_t> counts;
            const std::uint64_t reps = 40000;
            for (std::uint64_t i = 0; i < reps; ++i)
                ++counts[plancherel_sample(n, rng, method)];
            const double tv = tv_distance(counts, reps, plancherel);
            if (tv > 0.05) {
                d = "tv = " + std::to_string(tv);
                return false;
            }
        }
        return true;
    });

    v.check("mcmc", "chains replay bit-exactly per seed", [seed](std::string& d) {
        const MeasureSpec spec{9, 4, MeasureVariant::PositiveHalf};
        ChainConfig cfg;
        cfg.steps = 5000;
        cfg.burnin = 500;
        cfg.thin = 5;
        cfg.seed = seed;
        auto trace = [&](std::uint64_t s) {
            cfg.seed = s;
            std::ostringstream os;
            mh_sample(spec, cfg, [&](const MhSample& smp) {
                os << smp.step << ":" << to_text(smp.state) << ";";
            });
            return os.str();
        };
        const std::string a = trace(seed), b = trace(seed), c = trace(seed + 99);
        if (a != b) {
            d = "same seed diverged";
            return false;
        }
        if (a == c) {
            d = "different seeds agreed exactly";
            return false;
        }
        return true;
    });
}

} // namespace

int run_verify(const VerifyArgs& a) {
    const bool wants_mcmc = a.suite == "mcmc" || a.suite == "all";
    if (a.suite != "small" && a.suite != "maps" && a.suite != "mcmc" && a.suite != "all")
        throw std::invalid_argument("verify: unknown suite '" + a.suite + "'");
    if (wants_mcmc && !a.have_seed)
        throw std::invalid_argument("verify: --seed is required for the mcmc suite");

    RunManifest man;
    man.command = "verify";
    man.add_flag("--suite", a.suite);
    if (a.have_seed) {
        man.add_flag("--seed", std::to_string(a.seed));
        man.seed = a.seed;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Verifier v(a.seed);
    if (a.suite == "small" || a.suite == "all")
        suite_small(v);
    if (a.suite == "maps" || a.suite == "all")
        suite_maps(v);
    if (wants_mcmc)
        suite_mcmc(v);

    std::size_t failed = 0;
    for (const CheckResult& r : v.results)
        if (!r.pass)
            ++failed;

    if (a.json) {
        nlohmann::ordered_json out;
        out["suite"] = a.suite;
        out["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& r : v.results) {
            nlohmann::ordered_json c;
            c["suite"] = r.suite;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["detail"] = r.detail;
            out["checks"].push_back(c);
        }
        out["passed"] = v.results.size() - failed;
        out["failed"] = failed;
        out["manifest"] = man.to_json();
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckResult& r : v.results) {
            if (r.pass)
                std::cout << "ok   [" << r.suite << "] " << r.name
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
            else
                std::cout << "FAIL [" << r.suite << "] " << r.name << ": " << r.detail
                          << "\n";
        }
        std::cout << (v.results.size() - failed) << "/" << v.results.size()
                  << " checks passed\n";
    }
    std::cerr << "verify: "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
    return failed == 0 ? 0 : 1;
}

} // namespace phwcli
