#include "domlab/classify.hpp"

#include <algorithm>

#include "domlab/errors.hpp"

namespace domlab {

GammaClass classify_gamma(const ProductGraph& g) {
    const int t = g.factor_count();
    const auto& n = g.sizes();
    GammaClass out;

    if (t == 1) {
        out.kind = GammaVerdictKind::small_t;
        out.value = 1;
        out.matched_rules = {"t=1: single complete graph"};
        return out;
    }
    if (n.back() == 2) {
        // every factor is K_2: outside theorem coverage (n_2 >= 3 fails and the
        // K_2 reduction has no larger factor left); defer to the exact solver
        if (t == 2 || t == 3) {
            out.kind = GammaVerdictKind::small_t;
            out.value = t == 2 ? 2 : 4;
            out.matched_rules = {t == 2 ? "t=2, n_1=2" : "t=3"};
            return out;
        }
        out.kind = GammaVerdictKind::at_least;
        out.value = t + 1;
        out.matched_rules = {"all factors K_2: t+1 lower bound only, use the exact solver"};
        return out;
    }
    if (t >= 2 && n[1] == 2) {
        // at least two K_2 factors and some larger one
        auto red = k2_reduce(g);
        out.kind = GammaVerdictKind::reduced_k2;
        out.multiplier = red.multiplier;
        out.inner_sizes = red.inner.sizes();
        out.matched_rules = {"K_2 reduction: gamma = 2^(s-1) * gamma(K_2 x H)"};
        return out;
    }
    if (t == 2) {
        out.kind = GammaVerdictKind::small_t;
        out.value = n[0] == 2 ? 2 : 3;
        out.matched_rules = {n[0] == 2 ? "t=2, n_1=2" : "t=2, n_1>=3"};
        return out;
    }
    if (t == 3) {
        out.kind = GammaVerdictKind::small_t;
        out.value = 4;
        out.matched_rules = {"t=3"};
        return out;
    }

    // t >= 4, n_2 >= 3
    if (n[0] >= t + 1) {
        out.kind = GammaVerdictKind::exact;
        out.value = t + 1;
        out.matched_rules = {"n_1 >= t+1: gamma = t+1"};
        return out;
    }
    std::vector<std::string> rules;
    if (n[0] == t && n[2] >= t + 1) rules.push_back("case 1: n_1 = t and n_3 >= t+1");
    if (2 * n[0] > t + 1 && n[0] <= t - 1 && n[1] > t + 1)
        rules.push_back("case 2: (t+1)/2 < n_1 <= t-1 and n_2 > t+1");
    if (n[0] == t && n[1] == t && n[2] == t && n[3] >= t + 2)
        rules.push_back("case 3: n_1 = n_2 = n_3 = t and n_4 >= t+2");
    if (!rules.empty()) {
        out.kind = GammaVerdictKind::exact;
        out.value = t + 2;
        out.matched_rules = std::move(rules);
        return out;
    }
    out.kind = GammaVerdictKind::at_least;
    out.value = t + 3;
    out.matched_rules = {"no t+1 or t+2 case applies: gamma >= t+3"};
    return out;
}

K2Reduction k2_reduce(const ProductGraph& g) {
    const auto& n = g.sizes();
    const size_t s = static_cast<size_t>(std::count(n.begin(), n.end(), 2));
    if (s == 0) throw invalid_argument_error("k2_reduce: no K_2 factor");
    if (s == n.size())
        throw invalid_argument_error(
            "k2_reduce: all factors are K_2; no larger factor remains, use the exact solver");
    if (s > 63) throw capacity_error("k2_reduce: multiplier overflows");
    std::vector<int> inner_sizes = {2};
    for (int size : n) {
        if (size > 2) inner_sizes.push_back(size);
    }
    return K2Reduction{uint64_t{1} << (s - 1), ProductGraph::make(std::move(inner_sizes))};
}

ReductionReport check_reduction_hypotheses(const ProductGraph& g) {
    const int t = g.factor_count();
    const auto& n = g.sizes();
    if (t < 4 || n[1] < 3)
        throw invalid_argument_error("check_reduction_hypotheses needs t >= 4 and n_2 >= 3");
    ReductionReport report;
    report.branch = n[2] >= t + 1 ? "partial-classification (n_3 >= t+1)"
                                  : "final-case funnel (n_3 <= t)";
    report.verdict = classify_gamma(g);
    return report;
}

}  // namespace domlab
