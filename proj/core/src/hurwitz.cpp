#include "phw/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace phw {

BudgetError::BudgetError(std::uint32_t n_, std::uint64_t budget_)
    : std::runtime_error("enumeration budget exceeded: p(" + std::to_string(n_) +
                         ") > " + std::to_string(budget_)),
      n(n_), budget(budget_) {}

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("PHW_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 2'000'000ull;
}

void check_enumeration_budget(std::uint32_t n, std::uint64_t budget) {
    if (budget == 0)
        budget = enumeration_budget();
    std::uint64_t pn;
    try {
        pn = partition_count(n);
    } catch (const std::overflow_error&) {
        throw BudgetError(n, budget); // p(n) beyond 64 bits is beyond any sane budget
    }
    if (pn > budget)
        throw BudgetError(n, budget);
}

RestrictedPredicate RestrictedPredicate::all() {
    return {};
}

RestrictedPredicate RestrictedPredicate::first_part_equals(std::uint32_t L) {
    RestrictedPredicate p;
    p.kind_ = Kind::FirstPartEquals;
    p.lo_ = p.hi_ = L;
    return p;
}

RestrictedPredicate RestrictedPredicate::first_part_in(std::uint32_t lo, std::uint32_t hi) {
    RestrictedPredicate p;
    p.kind_ = Kind::FirstPartInRange;
    p.lo_ = lo;
    p.hi_ = hi;
    return p;
}

RestrictedPredicate RestrictedPredicate::custom(std::function<bool(const Partition&)> filter) {
    RestrictedPredicate p;
    p.kind_ = Kind::Custom;
    p.filter_ = std::move(filter);
    return p;
}

bool RestrictedPredicate::matches(const Partition& p) const {
    const std::uint32_t first = p.empty() ? 0 : p.parts()[0];
    switch (kind_) {
    case Kind::All: return true;
    case Kind::FirstPartEquals: return first == lo_;
    case Kind::FirstPartInRange: return lo_ <= first && first <= hi_;
    case Kind::Custom: return filter_(p);
    }
    return false;
}

namespace {

// f_λ²·C_λ^ℓ for one partition, with the shared n! precomputed by the caller.
BigCount frobenius_term(const Partition& p, std::uint32_t ell, const BigCount& n_fact) {
    BigCount hook_prod = 1;
    for (std::uint32_t h : hook_lengths(p))
        hook_prod *= h;
    BigCount f;
    mpz_divexact(f.get_mpz_t(), n_fact.get_mpz_t(), hook_prod.get_mpz_t());
    const std::int64_t c = content_sum(p);
    return f * f * pow_big(BigCount(static_cast<long>(c)), ell);
}

BigCount frobenius_sum(HurwitzQuery q, const RestrictedPredicate& pred, HurwitzOptions opts) {
    if (q.n < 1)
        throw std::invalid_argument("hurwitz query requires n >= 1");
    check_enumeration_budget(q.n, opts.budget);
    const BigCount n_fact = factorial_big(q.n);
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        BigCount sum = 0;
        for_each_partition(q.n, [&](const Partition& p) {
            if (pred.matches(p))
                sum += frobenius_term(p, q.ell, n_fact);
        });
        return sum;
    }
    // Deterministic map-reduce: strided partition streams, partial sums
    // combined in worker order (bigint addition is associative-commutative).
    std::vector<BigCount> partial(threads, BigCount(0));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for_each_partition_strided(q.n, threads, w, [&](const Partition& p) {
                if (pred.matches(p))
                    partial[w] += frobenius_term(p, q.ell, n_fact);
            });
        });
    }
    for (auto& t : pool)
        t.join();
    BigCount sum = 0;
    for (const auto& s : partial)
        sum += s;
    return sum;
}

} // namespace

BigCount hurwitz_number(HurwitzQuery q, HurwitzOptions opts) {
    const BigCount sum = frobenius_sum(q, RestrictedPredicate::all(), opts);
    const BigCount n_fact = factorial_big(q.n);
    if (mpz_divisible_p(sum.get_mpz_t(), n_fact.get_mpz_t()) == 0)
        throw std::logic_error("hurwitz_number: Frobenius sum not divisible by n!");
    BigCount h;
    mpz_divexact(h.get_mpz_t(), sum.get_mpz_t(), n_fact.get_mpz_t());
    return h;
}

Rational restricted_Z(HurwitzQuery q, const RestrictedPredicate& pred, HurwitzOptions opts) {
    const BigCount sum = frobenius_sum(q, pred, opts);
    Rational z = Rational(sum) / Rational(factorial_big(q.n));
    return z;
}

namespace {

// Lehmer-code ranking of S_n; n ≤ 7 keeps every table tiny.
struct SymmetricGroupIndex {
    explicit SymmetricGroupIndex(unsigned n) : n(n) {
        fact.assign(n + 1, 1);
        for (unsigned i = 1; i <= n; ++i)
            fact[i] = fact[i - 1] * i;
    }

    unsigned rank(const std::vector<std::uint8_t>& perm) const {
        unsigned r = 0;
        for (unsigned i = 0; i < n; ++i) {
            unsigned smaller = 0;
            for (unsigned j = i + 1; j < n; ++j)
                smaller += perm[j] < perm[i];
            r += smaller * fact[n - 1 - i];
        }
        return r;
    }

    std::vector<std::uint8_t> unrank(unsigned r) const {
        std::vector<std::uint8_t> pool(n), perm(n);
        for (unsigned i = 0; i < n; ++i)
            pool[i] = static_cast<std::uint8_t>(i);
        for (unsigned i = 0; i < n; ++i) {
            const unsigned f = fact[n - 1 - i];
            const unsigned idx = r / f;
            r %= f;
            perm[i] = pool[idx];
            pool.erase(pool.begin() + idx);
        }
        return perm;
    }

    unsigned n;
    std::vector<unsigned> fact;
};

} // namespace

BigCount hurwitz_number_bruteforce(HurwitzQuery q) {
    if (q.n < 1 || q.n > 7)
        throw std::invalid_argument("bruteforce oracle supports 1 <= n <= 7 only");
    const unsigned n = q.n;
    if (n == 1)
        return q.ell == 0 ? 1 : 0; // S_1 has no transpositions
    const SymmetricGroupIndex sg(n);
    const unsigned size = sg.fact[n];

    std::vector<std::pair<std::uint8_t, std::uint8_t>> taus;
    for (std::uint8_t a = 0; a < n; ++a)
        for (std::uint8_t b = a + 1; b < n; ++b)
            taus.emplace_back(a, b);

    // Counts are exact in 64 bits iff C(n,2)^ℓ < 2^63; refuse past that
    // rather than silently wrapping (keeps the oracle GMP-free).
    const double bits = q.ell * std::log2(static_cast<double>(taus.size()));
    if (bits >= 62.5)
        throw std::overflow_error("bruteforce oracle: count bound exceeds 64 bits");

    // transition[g * T + t] = rank of τ_t ∘ g (apply g first, then τ_t)
    std::vector<std::uint32_t> transition(static_cast<std::size_t>(size) * taus.size());
    for (unsigned g = 0; g < size; ++g) {
        const auto perm = sg.unrank(g);
        for (std::size_t t = 0; t < taus.size(); ++t) {
            auto prod = perm;
            for (auto& v : prod) {
                if (v == taus[t].first) v = taus[t].second;
                else if (v == taus[t].second) v = taus[t].first;
            }
            transition[static_cast<std::size_t>(g) * taus.size() + t] = sg.rank(prod);
        }
    }

    std::vector<std::uint64_t> cur(size, 0), nxt(size);
    cur[sg.rank(sg.unrank(0))] = 1; // identity has rank 0
    for (std::uint32_t step = 0; step < q.ell; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (unsigned g = 0; g < size; ++g) {
            if (cur[g] == 0)
                continue;
            const auto* row = &transition[static_cast<std::size_t>(g) * taus.size()];
            for (std::size_t t = 0; t < taus.size(); ++t)
                nxt[row[t]] += cur[g];
        }
        cur.swap(nxt);
    }
    return BigCount(static_cast<unsigned long>(cur[0]));
}

double asymptotic_log_estimate(HurwitzQuery q) {
    if (q.n < 3 || q.ell < 2)
        throw std::invalid_argument("asymptotic estimate requires n >= 3 and ell >= 2");
    const double n = q.n, ell = q.ell;
    return 2.0 * ell * std::log(ell / std::log(n)) + (std::log(2.0) - 2.0) * ell;
}

Rational return_probability(HurwitzQuery q, HurwitzOptions opts) {
    const BigCount h = hurwitz_number(q, opts);
    const BigCount pairs(static_cast<unsigned long>(static_cast<std::uint64_t>(q.n) * (q.n - 1) / 2));
    if (q.ell == 0)
        return Rational(1);
    if (q.n == 1)
        throw std::invalid_argument("return probability undefined: S_1 has no transpositions");
    Rational r = Rational(h) / Rational(pow_big(pairs, q.ell));
    return r;
}

} // namespace phw
