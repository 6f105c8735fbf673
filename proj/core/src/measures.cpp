#include "phw/measures.hpp"

namespace phw {

ExactMeasureTable exact_measure(MeasureSpec spec, HurwitzOptions opts) {
    spec.validate();
    check_enumeration_budget(spec.n, opts.budget);

    // Unnormalised weights f_λ²·C_λ^ℓ; the normaliser is their sum (= n!·H_{n,ℓ}).
    std::map<Partition, BigCount> weights;
    BigCount norm = 0, norm_pos = 0;
    for_each_partition(spec.n, [&](const Partition& p) {
        BigCount f = dim_syt(p);
        const std::int64_t c = content_sum(p);
        BigCount w = f * f * pow_big(BigCount(static_cast<long>(c)), spec.ell);
        norm += w;
        if (c > 0)
            norm_pos += w;
        weights.emplace(p, std::move(w));
    });

    ExactMeasureTable table;
    table.spec = spec;
    if (spec.variant == MeasureVariant::Full) {
        if (norm == 0)
            throw UndefinedMeasureError("full measure normaliser is zero");
        for (auto& [p, w] : weights)
            table.entries.emplace(p, Rational(w) / Rational(norm));
    } else {
        if (norm_pos == 0)
            throw UndefinedMeasureError("positive-half measure has empty support");
        for (auto& [p, w] : weights) {
            if (content_sum(p) > 0)
                table.entries.emplace(p, Rational(w) / Rational(norm_pos));
        }
    }
    return table;
}

} // namespace phw
