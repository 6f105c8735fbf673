/* Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
 * failed criteria. Criteria 1–5 and 8 are deterministic; criterion 6 is the
 * declared best-of-3-seeds statistical check at simulation scale; criterion 7
 * is a comparison report with no numeric assertion. */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "phw/hurwitz.hpp"
#include "phw/limit_shape.hpp"
#include "phw/maps.hpp"
#include "phw/measures.hpp"
#include "phw/mh.hpp"
#include "phw/partition.hpp"
#include "phw/profile.hpp"
#include "phw/rng.hpp"
#include "phw/rsk.hpp"

using namespace phw;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass = false;
    std::string detail;
};

double log_big(const BigCount& v) {
    if (v == 0)
        return -std::numeric_limits<double>::infinity();
    signed long exp2;
    const double mant = mpf_get_d_2exp(&exp2, mpf_class(v, 256).get_mpf_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// ------------------------------------------------------------ criterion 1 --

Criterion criterion1() {
    Criterion c{1, "exact identities", true, ""};

    for (std::uint64_t n = 1; n <= 30 && c.pass; ++n) {
        BigCount total = 0;
        for_each_partition(n, [&](const Partition& p) {
            const BigCount f = dim_syt(p);
            total += f * f;
        });
        if (total != factorial_big(n)) {
            c.pass = false;
            c.detail = "sum f^2 != n! at n=" + std::to_string(n);
        }
    }

    if (c.pass && (dim_syt(Partition({4, 2, 1})) != 35 ||
                   content_sum(Partition({4, 2, 1})) != 3)) {
        c.pass = false;
        c.detail = "frozen (4,2,1) values wrong";
    }

    for (std::uint64_t m = 0; m + 1 <= 15 && c.pass; ++m) {
        for_each_partition(m, [&](const Partition& mu) {
            BigCount lhs = 0;
            for (const Partition& nu : add_box_shapes(mu))
                lhs += dim_syt(nu);
            if (lhs != BigCount(m + 1) * dim_syt(mu)) {
                c.pass = false;
                c.detail = "growth normalisation fails over some mu of " +
                           std::to_string(m);
            }
        });
    }

    for (std::uint64_t n = 1; n <= 25 && c.pass; ++n) {
        for_each_partition(n, [&](const Partition& lam) {
            // (ii): 2·C ≤ λ₁·n in exact integers
            if (2 * content_sum(lam) >
                static_cast<std::int64_t>(lam.part(0)) * static_cast<std::int64_t>(n)) {
                c.pass = false;
                c.detail = "content bound fails at " + to_text(lam);
                return;
            }
            // (iii): split identity at every threshold
            for (std::uint32_t t = 0; t <= lam.part(0); ++t) {
                const auto [big, small] = split_big_small(lam, t);
                const std::int64_t p = static_cast<std::int64_t>(big.length());
                if (content_sum(lam) != content_sum(big) + content_sum(small) -
                                            p * static_cast<std::int64_t>(small.size())) {
                    c.pass = false;
                    c.detail = "split identity fails at " + to_text(lam) +
                               " threshold " + std::to_string(t);
                    return;
                }
            }
        });
    }

    for (std::uint64_t n = 1; n <= 40 && c.pass; ++n) {
        for_each_partition(n, [&](const Partition& lam) {
            if (content_from_profile(lam) != Rational(content_sum(lam))) {
                c.pass = false;
                c.detail = "profile content mismatch at " + to_text(lam);
            }
        });
    }
    return c;
}

// ------------------------------------------------------------ criterion 2 --

Criterion criterion2() {
    Criterion c{2, "hurwitz oracle equivalence", true, ""};

    auto cross_check = [&](std::uint32_t n, std::uint32_t ell) {
        if (hurwitz_number({n, ell}) != hurwitz_number_bruteforce({n, ell})) {
            c.pass = false;
            c.detail = "frobenius != brute force at n=" + std::to_string(n) +
                       " ell=" + std::to_string(ell);
        }
    };
    for (std::uint32_t n = 1; n <= 5 && c.pass; ++n)
        for (std::uint32_t ell = 0; ell <= 10 && c.pass; ell += 2)
            cross_check(n, ell);
    for (std::uint32_t n = 6; n <= 7 && c.pass; ++n)
        for (std::uint32_t ell = 0; ell <= 6 && c.pass; ell += 2)
            cross_check(n, ell);

    if (c.pass &&
        (hurwitz_number({3, 2}) != 3 || hurwitz_number({3, 4}) != 27)) {
        c.pass = false;
        c.detail = "frozen H(3,*) wrong";
    }
    for (std::uint32_t ell = 0; ell <= 10 && c.pass; ell += 2)
        if (hurwitz_number({2, ell}) != 1) {
            c.pass = false;
            c.detail = "H(2,ell) != 1 at ell=" + std::to_string(ell);
        }
    for (std::uint32_t n = 1; n <= 12 && c.pass; ++n)
        for (std::uint32_t ell = 1; ell <= 7 && c.pass; ell += 2)
            if (hurwitz_number({n, ell}) != 0) {
                c.pass = false;
                c.detail = "odd-ell H nonzero at n=" + std::to_string(n);
            }
    if (c.pass && return_probability({3, 2}) != Rational(1, 3)) {
        c.pass = false;
        c.detail = "return probability (3,2) != 1/3";
    }
    return c;
}

// ------------------------------------------------------------ criterion 3 --

Criterion criterion3() {
    Criterion c{3, "map engine", true, ""};

    const struct {
        const char* text;
        std::vector<std::int64_t> genus;
    } frozen[] = {
        {"1 2;2 3;3 4;3 4;2 3;1 2", {0}},
        {"1 2;1 2;1 2;1 2;3 4;3 4", {0, 1}},
        {"1 2;1 2;1 2;1 2;1 2;1 2", {0, 0, 2}},
    };
    for (const auto& f : frozen) {
        const TranspositionTuple t = parse_tuple(4, f.text);
        std::vector<std::int64_t> genus;
        for (const ComponentInfo& comp : component_report(HurwitzMap(t)).components)
            genus.push_back(comp.genus);
        std::sort(genus.begin(), genus.end());
        if (!is_pure(t) || genus != f.genus) {
            c.pass = false;
            c.detail = std::string("frozen genus example wrong: ") + f.text;
            return c;
        }
    }

    for (std::uint32_t n = 1; n <= 4 && c.pass; ++n) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pool;
        for (std::uint32_t a = 1; a <= n; ++a)
            for (std::uint32_t b = a + 1; b <= n; ++b)
                pool.emplace_back(a, b);

        for (std::size_t ell = 0; ell <= 6 && c.pass; ++ell) {
            if (pool.empty() && ell > 0)
                break; // n = 1 has no transpositions
            std::uint64_t pure_count = 0;
            std::vector<std::size_t> idx(ell, 0);
            for (;;) {
                TranspositionTuple t;
                t.n = n;
                for (std::size_t i = 0; i < ell; ++i)
                    t.taus.push_back(pool[idx[i]]);
                const bool pure = is_pure(t);

                if (ell <= 4) { // descent purity sweep (all ℓ, odd included)
                    const HurwitzMap m(t);
                    if (descent_corner_purity(m) != pure || !unique_vertex_descents(m)) {
                        c.pass = false;
                        c.detail = "descent/product purity disagree on " + to_text(t);
                        break;
                    }
                }
                if (pure && ell % 2 == 0) {
                    ++pure_count;
                    const ComponentReport rep = component_report(HurwitzMap(t));
                    if (rep.face_count != n ||
                        rep.euler_total != 2 * static_cast<std::int64_t>(n) -
                                               static_cast<std::int64_t>(ell)) {
                        c.pass = false;
                        c.detail = "pure map face/Euler identity fails on " + to_text(t);
                        break;
                    }
                }
                std::size_t p = 0;
                while (p < ell && ++idx[p] == pool.size())
                    idx[p++] = 0;
                if (p == ell)
                    break;
            }
            if (c.pass && ell % 2 == 0 &&
                BigCount(pure_count) !=
                    hurwitz_number({n, static_cast<std::uint32_t>(ell)})) {
                c.pass = false;
                c.detail = "pure tuple count != H at n=" + std::to_string(n) +
                           " ell=" + std::to_string(ell);
            }
        }
    }
    return c;
}

// ------------------------------------------------------------ criterion 4 --

double tv_against_exact(const std::map<Partition, std::uint64_t>& counts,
                        std::uint64_t total, const ExactMeasureTable& exact) {
    double tv = 0.0;
    for (const auto& [p, prob] : exact.entries) {
        const auto it = counts.find(p);
        const double emp =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(total);
        tv += std::abs(emp - prob.get_d());
    }
    for (const auto& [p, cnt] : counts)
        if (!exact.entries.count(p))
            tv += static_cast<double>(cnt) / static_cast<double>(total);
    return tv / 2.0;
}

Criterion criterion4() {
    Criterion c{4, "sampler correctness (TV at desk scale)", true, ""};

    const MeasureSpec spec{8, 4, MeasureVariant::PositiveHalf};
    ChainConfig cfg;
    cfg.steps = 220000; // 20k burn-in + 100k emissions at thin 2
    cfg.burnin = 20000;
    cfg.thin = 2;
    cfg.seed = 8675309;
    std::map<Partition, std::uint64_t> counts;
    std::uint64_t emitted = 0;
    mh_sample(spec, cfg, [&](const MhSample& s) {
        ++counts[s.state];
        ++emitted;
    });
    const double tv_mh = tv_against_exact(counts, emitted, exact_measure(spec));

    const std::uint64_t reps = 100000;
    std::map<Partition, std::int64_t> diff;
    Rng rng_rsk(1729), rng_growth(1730);
    for (std::uint64_t i = 0; i < reps; ++i) {
        ++diff[plancherel_sample(6, rng_rsk, PlancherelMethod::Rsk)];
        --diff[plancherel_sample(6, rng_growth, PlancherelMethod::Growth)];
    }
    double tv_pl = 0.0;
    for (const auto& [p, d] : diff)
        tv_pl += std::abs(static_cast<double>(d)) / static_cast<double>(reps);
    tv_pl /= 2.0;

    c.detail = "mh tv = " + fmt(tv_mh) + " (<= 0.05), rsk-vs-growth tv = " + fmt(tv_pl) +
               " (<= 0.02), " + std::to_string(emitted) + " chain samples";
    c.pass = tv_mh <= 0.05 && tv_pl <= 0.02 && emitted == 100000;
    return c;
}

// ------------------------------------------------------------ criterion 5 --

Criterion criterion5() {
    Criterion c{5, "limit-shape numerical anchors", true, ""};

    const double hook = hook_integral(PolylineShape::omega_interpolant(1600),
                                      QuadratureOptions{1e-6, 40});
    const bool hook_ok = std::abs(hook + 0.5) <= 5e-3;

    const double cont = std::max(std::abs(omega(2.0 - 1e-12) - 2.0),
                                 std::abs(omega(-2.0 + 1e-12) - 2.0));
    const bool cont_ok = cont <= 1e-9 && omega(2.0) == 2.0 && omega(-2.0) == 2.0;

    const int m = 20000; // composite Simpson on [0,2], doubled by symmetry
    double acc = (omega(0.0) - 0.0) + (omega(2.0) - 2.0);
    for (int i = 1; i < m; ++i) {
        const double x = 2.0 * i / m;
        acc += (omega(x) - x) * (i % 2 ? 4.0 : 2.0);
    }
    const double area = 2.0 * acc * (2.0 / m) / 3.0;
    const bool area_ok = std::abs(area - 2.0) <= 1e-6;

    c.pass = hook_ok && cont_ok && area_ok;
    c.detail = "I_hook(~omega) = " + fmt(hook) + " (target -0.5 +- 5e-3), edge gap = " +
               fmt(cont) + ", area = " + fmt(area);
    return c;
}

// ------------------------------------------------------------ criterion 6 --

Criterion criterion6() {
    Criterion c{6, "high-genus regime windows (best of 3 seeds)", false, ""};

    const std::uint32_t n = 2500, ell = 7500;
    const MeasureSpec spec{n, ell, MeasureVariant::PositiveHalf};
    const std::uint64_t seeds[] = {20250816, 20250817, 20250818};

    std::ostringstream detail;
    for (const std::uint64_t seed : seeds) {
        ChainConfig cfg;
        cfg.steps = 2000000;
        cfg.burnin = cfg.steps - 1; // emit the final state only
        cfg.thin = 1;
        cfg.seed = seed;
        Partition final_state;
        mh_sample(spec, cfg, [&](const MhSample& s) { final_state = s.state; });

        const ShapeStats st = shape_stats(final_state, n, ell);
        const bool w1 = st.lambda1_ratio >= 0.6 && st.lambda1_ratio <= 1.5;
        const bool w2 = st.lambda2_scaled >= 1.5 && st.lambda2_scaled <= 2.7;
        const bool w3 = st.length_scaled >= 1.5 && st.length_scaled <= 2.7;
        const bool w4 = st.sup_dist_bulk <= 0.25;

        std::cout << "  criterion 6, seed " << seed << ": lambda1*log(n)/(2l) = "
                  << fmt(st.lambda1_ratio) << (w1 ? " in" : " OUTSIDE") << " [0.6,1.5]; "
                  << "lambda2/sqrt(n) = " << fmt(st.lambda2_scaled)
                  << (w2 ? " in" : " OUTSIDE") << " [1.5,2.7]; "
                  << "len(lambda)/sqrt(n) = " << fmt(st.length_scaled)
                  << (w3 ? " in" : " OUTSIDE") << " [1.5,2.7]; "
                  << "sup|psi-omega| = " << fmt(st.sup_dist_bulk)
                  << (w4 ? " <=" : " >") << " 0.25\n";

        if (w1 && w2 && w3 && w4) {
            c.pass = true;
            c.detail = "seed " + std::to_string(seed) + " satisfied all four windows";
            return c;
        }
        detail << (detail.tellp() > 0 ? "; " : "") << "seed " << seed << " failed "
               << (!w1 ? "lambda1 " : "") << (!w2 ? "lambda2 " : "")
               << (!w3 ? "length " : "") << (!w4 ? "sup-dist" : "");
    }
    c.detail = detail.str() +
               " -- bulk mass left after the lambda1 window is too small to track the "
               "limit curve at this n (see README, known limitations)";
    return c;
}

// ------------------------------------------------------------ criterion 7 --

Criterion criterion7() {
    Criterion c{7, "asymptotic comparison report (no threshold asserted)", true, ""};
    std::cout << "  criterion 7 report:   n   ell   log H_exact     log H_asymptotic\n";
    for (const std::uint32_t n : {16u, 32u, 48u}) {
        const std::uint32_t ell = 3 * n;
        const HurwitzQuery q{n, ell};
        const double exact = log_big(hurwitz_number(q));
        const double asym = asymptotic_log_estimate(q);
        std::printf("  criterion 7 report: %3u  %4u   %13.4f    %13.4f\n", n, ell, exact,
                    asym);
    }
    c.detail = "table generated without error";
    return c;
}

// ------------------------------------------------------------ criterion 8 --

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Criterion criterion8() {
    Criterion c{8, "byte-identical reruns", false, ""};
    const char* cli = std::getenv("PHW_CLI");
    if (!cli || !*cli) {
        c.detail = "PHW_CLI is not set (expected the path to the phw binary)";
        return c;
    }
    const std::string base = "\"" + std::string(cli) + "\"";
    const std::string sample_cmd = base +
                                   " sample plancherel-hurwitz --n 40 --ell 12"
                                   " --steps 30000 --burnin 5000 --thin 100 --seed 4242"
                                   " --output ";
    const std::string verify_cmd = base + " verify --suite maps --json > ";

    for (const auto& [cmd, a, b] :
         {std::tuple{sample_cmd, std::string("acc_c8_sample_a.jsonl"),
                     std::string("acc_c8_sample_b.jsonl")},
          std::tuple{verify_cmd, std::string("acc_c8_report_a.json"),
                     std::string("acc_c8_report_b.json")}}) {
        for (const std::string& out : {a, b})
            if (std::system((cmd + out + " 2> /dev/null").c_str()) != 0) {
                c.detail = "rerun command failed: " + cmd + out;
                return c;
            }
        const std::string sa = slurp(a), sb = slurp(b);
        if (sa.empty() || sa != sb) {
            c.detail = "outputs differ (or are empty) between identical runs: " + a;
            return c;
        }
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
    c.pass = true;
    c.detail = "sample stream and verify report are byte-identical across reruns";
    return c;
}

} // namespace

int main() {
    const std::function<Criterion()> criteria[] = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8,
    };

    int failures = 0;
    for (const auto& run : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Criterion c = run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!c.pass)
            ++failures;
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": "
                  << c.title << (c.detail.empty() ? "" : " -- " + c.detail) << " ["
                  << fmt(secs) << " s]\n";
        std::cout.flush();
    }
    std::cout << (8 - failures) << "/8 criteria passed\n";
    return failures;
}
