#include "domlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "domlab/errors.hpp"

namespace domlab {

namespace {

// Round a floating upper bound up; overshooting keeps the bound valid,
// undershooting would not, so the epsilon biases upward. Saturates at
// INT64_MAX for instances beyond any meaningful report.
int64_t ceil_upper(long double x) {
    if (!(x < 9.0e18L)) return INT64_MAX;
    long double c = std::ceil(x + 1e-12L);
    if (c < 1) c = 1;
    return static_cast<int64_t>(c + 0.5L);
}

long double to_long_double(const domlab::Bigint& v) {
    long double out = 0.0L;
    // high-to-low accumulation keeps the top bits exact
    const std::string dec = v.to_decimal();
    for (char ch : dec) out = out * 10.0L + (ch - '0');
    return out;
}

}  // namespace

BoundReport mekis_bound(const ProductGraph& g) {
    BoundReport r;
    r.name = "mekis";
    r.kind = BoundKind::lower;
    const int t = g.factor_count();
    const auto& n = g.sizes();
    if (t < 2) {
        r.hypothesis_note = "needs at least two factors";
        return r;
    }
    r.applicable = true;
    r.certified = true;
    if (t == 2) {
        r.value = n[0] == 2 ? 2 : 3;
        r.exact = true;
        r.hypothesis_note = "t=2 exact value";
    } else if (t == 3) {
        r.value = 4;
        r.exact = true;
        r.hypothesis_note = "t=3 exact value";
    } else {
        r.value = t + 1;
        r.exact = n[0] >= t + 1;
        r.hypothesis_note = r.exact ? "equality since n_1 >= t+1" : "exact when n_1 >= t+1";
    }
    return r;
}

BoundReport di_bound(const ProductGraph& g) {
    BoundReport r;
    r.name = "defant-iyer";
    r.kind = BoundKind::lower;
    const int t = g.factor_count();
    const auto& n = g.sizes();
    if (t < 4 || n[1] < 3) {
        r.hypothesis_note = "needs t >= 4 and n_2 >= 3";
        return r;
    }
    r.applicable = true;
    r.certified = true;
    r.value = t + 1 + (t - 1) / (n[0] - 1);
    return r;
}

BoundReport asymptotic_bound(const ProductGraph& g, int k) {
    const int t = g.factor_count();
    if (k < 1 || k > t) throw invalid_argument_error("asymptotic_bound: k out of range");
    BoundReport r;
    r.name = "asymptotic(k=" + std::to_string(k) + ")";
    r.kind = BoundKind::lower;
    r.certified = false;  // requires unquantified "sufficiently large t"

    const auto& n = g.sizes();
    // exact rational: num = (t-k) * prod n_i, den = prod (n_i - 1)
    Bigint num(static_cast<uint64_t>(t - k));
    Bigint den(1);
    for (int i = 0; i < k; ++i) {
        num.mul_u64(static_cast<uint64_t>(n[static_cast<size_t>(i)]));
        den.mul_u64(static_cast<uint64_t>(n[static_cast<size_t>(i)]) - 1);
    }

    // applicability: k < (1 - 2/log_{2e} t) * t and n_2 >= 3, evaluated as
    // (t - k) ln t > 2 t ln(2e) with a conservative margin
    bool applicable = t >= 2 && n.size() >= 2 && n[1] >= 3;
    if (applicable) {
        const long double lhs = (static_cast<long double>(t) - k) * std::log(static_cast<long double>(t));
        const long double rhs = 2.0L * t * std::log(2.0L * std::exp(1.0L));
        if (!(lhs > rhs + 1e-12L)) applicable = false;  // boundary ambiguity counts as failure
    }
    r.applicable = applicable;
    if (applicable) {
        r.rational = std::make_pair(num, den);
        auto [q, rem] = Bigint::divmod(num, den);
        (void)rem;
        r.value = q.fits_u64() && q.to_u64() <= static_cast<uint64_t>(INT64_MAX)
                      ? static_cast<int64_t>(q.to_u64())
                      : INT64_MAX;
        r.hypothesis_note = "asymptotic only; not certified at finite t";
    } else {
        r.hypothesis_note = "k-condition or n_2 >= 3 fails";
    }
    return r;
}

BoundReport naive_lower(const ProductGraph& g) {
    BoundReport r;
    r.name = "degree-counting";
    r.kind = BoundKind::lower;
    r.applicable = true;
    r.certified = true;
    // ceil(|V| / (1 + min_degree)) in exact integer arithmetic
    Bigint closed = g.min_degree_big();
    closed.add_u64(1);
    Bigint num = g.vertex_count_big() + closed;
    num -= Bigint(1);
    auto [q, rem] = Bigint::divmod(num, closed);
    (void)rem;
    r.value = q.fits_u64() && q.to_u64() <= static_cast<uint64_t>(INT64_MAX)
                  ? static_cast<int64_t>(q.to_u64())
                  : INT64_MAX;
    return r;
}

BoundReport alon_spencer_upper(const ProductGraph& g) {
    BoundReport r;
    r.name = "alon-spencer";
    r.kind = BoundKind::upper;
    r.applicable = true;
    r.certified = true;
    const long double delta1 = to_long_double(g.min_degree_big()) + 1.0L;
    const long double x =
        to_long_double(g.vertex_count_big()) * (1.0L + std::log(delta1)) / delta1;
    r.value = ceil_upper(x);
    if (r.value == INT64_MAX) r.hypothesis_note = "saturated";
    return r;
}

BoundReport product_upper(const ProductGraph& g) {
    BoundReport r;
    r.name = "product-form";
    r.kind = BoundKind::upper;
    r.applicable = true;
    r.certified = true;
    long double log_sum = 1.0L;
    long double prod = 1.0L;
    for (int n : g.sizes()) {
        log_sum += std::log(static_cast<long double>(n));
        prod *= 1.0L + 1.0L / (static_cast<long double>(n) - 1.0L);
    }
    r.value = ceil_upper(log_sum * prod);
    if (r.value == INT64_MAX) r.hypothesis_note = "saturated";
    return r;
}

BoundSummary best_bounds(const ProductGraph& g) {
    BoundSummary s;
    s.reports.push_back(mekis_bound(g));
    s.reports.push_back(di_bound(g));
    s.reports.push_back(naive_lower(g));
    s.reports.push_back(alon_spencer_upper(g));
    s.reports.push_back(product_upper(g));
    {
        // most informative applicable k, reported but never certified
        BoundReport best_asym;
        bool have = false;
        for (int k = 1; k < g.factor_count(); ++k) {
            auto r = asymptotic_bound(g, k);
            if (r.applicable && (!have || *r.value > *best_asym.value)) {
                best_asym = std::move(r);
                have = true;
            }
        }
        if (!have && g.factor_count() >= 1) best_asym = asymptotic_bound(g, 1);
        s.reports.push_back(std::move(best_asym));
    }

    s.lower = 1;
    s.upper = g.vertex_count_big().fits_u64() &&
                      g.vertex_count_big().to_u64() <= static_cast<uint64_t>(INT64_MAX)
                  ? static_cast<int64_t>(g.vertex_count_big().to_u64())
                  : INT64_MAX;
    for (const auto& r : s.reports) {
        if (!r.applicable || !r.certified || !r.value) continue;
        if (r.kind == BoundKind::lower || r.exact) s.lower = std::max(s.lower, *r.value);
        if (r.kind == BoundKind::upper || r.exact) s.upper = std::min(s.upper, *r.value);
    }
    return s;
}

}  // namespace domlab
