#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "phw/bigcount.hpp"
#include "phw/hurwitz.hpp"

#include "commands.hpp"
#include "manifest.hpp"

namespace phwcli {

namespace {

// natural log of an arbitrary-precision count; −inf for zero
double log_bigcount(const phw::BigCount& v) {
    if (v == 0)
        return -std::numeric_limits<double>::infinity();
    const mpf_class f(v, 256);
    long exp2 = 0;
    const double mant = mpf_get_d_2exp(&exp2, f.get_mpf_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace

int run_hnum(const HnumArgs& a) {
    RunManifest man;
    man.command = "hnum";
    man.add_flag("--n", std::to_string(a.n));
    man.add_flag("--ell", std::to_string(a.ell));
    man.add_flag("--method", a.method);
    man.add_flag("--threads", std::to_string(a.threads));
    man.add_flag("--budget", std::to_string(a.budget));

    const phw::HurwitzQuery q{a.n, a.ell};
    nlohmann::ordered_json out;
    out["n"] = a.n;
    out["ell"] = a.ell;
    out["method"] = a.method;

    if (a.method == "frobenius" || a.method == "bruteforce") {
        phw::BigCount h;
        if (a.method == "frobenius") {
            phw::HurwitzOptions opts;
            opts.threads = a.threads;
            opts.budget = a.budget;
            h = phw::hurwitz_number(q, opts);
        } else {
            h = phw::hurwitz_number_bruteforce(q);
        }
        out["value"] = h.get_str(); // may exceed 64 bits → decimal string
        const double lg = log_bigcount(h);
        if (std::isinf(lg))
            out["log_value"] = nullptr;
        else
            out["log_value"] = lg;
    } else if (a.method == "asymptotic") {
        out["value"] = nullptr; // only the exponent is meaningful
        out["log_value"] = phw::asymptotic_log_estimate(q);
    } else {
        throw std::invalid_argument("hnum: unknown method '" + a.method + "'");
    }

    out["manifest"] = man.to_json();
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace phwcli
