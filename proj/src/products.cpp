#include "domlab/products.hpp"

#include <algorithm>
#include <string>

#include "domlab/errors.hpp"
#include "domlab/primes.hpp"

namespace domlab {

ProductGraph ProductGraph::make(std::vector<int> sizes, uint64_t max_vertices) {
    if (sizes.empty()) throw invalid_instance_error("product graph needs at least one factor");
    for (int n : sizes) {
        if (n < 2)
            throw invalid_instance_error("factor size " + std::to_string(n) + " below 2");
    }
    std::sort(sizes.begin(), sizes.end());
    ProductGraph g;
    g.sizes_ = std::move(sizes);
    g.vertex_count_big_ = Bigint(1);
    g.min_degree_big_ = Bigint(1);
    for (int n : g.sizes_) {
        g.vertex_count_big_.mul_u64(static_cast<uint64_t>(n));
        g.min_degree_big_.mul_u64(static_cast<uint64_t>(n) - 1);
    }
    if (max_vertices != 0 && g.vertex_count_big_ > Bigint(max_vertices))
        throw capacity_error("vertex count exceeds cap of " + std::to_string(max_vertices));
    if (g.vertex_count_big_.fits_u64()) {
        g.strides_.assign(g.sizes_.size(), 1);
        for (size_t i = g.sizes_.size() - 1; i-- > 0;) {
            g.strides_[i] = g.strides_[i + 1] * static_cast<uint64_t>(g.sizes_[i + 1]);
        }
    }
    return g;
}

uint64_t ProductGraph::vertex_count() const {
    if (!vertex_count_big_.fits_u64())
        throw capacity_error("vertex count exceeds 64 bits; use vertex_count_big()");
    return vertex_count_big_.to_u64();
}

uint64_t ProductGraph::min_degree() const {
    if (!min_degree_big_.fits_u64())
        throw capacity_error("degree exceeds 64 bits; use min_degree_big()");
    return min_degree_big_.to_u64();
}

ProductGraph make_product(std::vector<int> sizes, uint64_t max_vertices) {
    return ProductGraph::make(std::move(sizes), max_vertices);
}

bool ProductGraph::contains(const Vertex& v) const {
    if (v.size() != sizes_.size()) return false;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= sizes_[i]) return false;
    }
    return true;
}

void ProductGraph::require_vertex(const Vertex& v) const {
    if (!contains(v)) throw invalid_argument_error("vertex not valid for this product graph");
}

bool ProductGraph::adjacent(const Vertex& u, const Vertex& v) const {
    require_vertex(u);
    require_vertex(v);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) return false;
    }
    return true;
}

uint64_t ProductGraph::flat_index(const Vertex& v) const {
    if (strides_.empty()) throw capacity_error("flat indexing needs a 64-bit vertex count");
    uint64_t idx = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        idx += static_cast<uint64_t>(v[i]) * strides_[i];
    }
    return idx;
}

Vertex ProductGraph::vertex_at(uint64_t index) const {
    if (strides_.empty()) throw capacity_error("flat indexing needs a 64-bit vertex count");
    Vertex v(sizes_.size());
    for (size_t i = 0; i < sizes_.size(); ++i) {
        v[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return v;
}

bool ProductGraph::next_vertex(Vertex& v) const {
    for (size_t i = v.size(); i-- > 0;) {
        if (++v[i] < sizes_[i]) return true;
        v[i] = 0;
    }
    return false;
}

SquarefreeModulus SquarefreeModulus::from_primes(std::vector<uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime_u64(primes[i]))
            throw invalid_instance_error(std::to_string(primes[i]) + " is not prime");
        if (i > 0 && primes[i] == primes[i - 1])
            throw invalid_instance_error("duplicate prime " + std::to_string(primes[i]));
    }
    SquarefreeModulus m;
    m.primes_ = std::move(primes);
    m.modulus_ = Bigint(1);
    m.totient_ = Bigint(1);
    for (uint64_t q : m.primes_) {
        m.modulus_.mul_u64(q);
        m.totient_.mul_u64(q - 1);
    }
    return m;
}

bool SquarefreeModulus::shares_factor(const Bigint& x) const {
    for (uint64_t q : primes_) {
        if (x.mod_u64(q) == 0) return true;
    }
    return false;
}

bool SquarefreeModulus::shares_factor(uint64_t x) const {
    for (uint64_t q : primes_) {
        if (x % q == 0) return true;
    }
    return false;
}

ProductGraph ucg_graph(const SquarefreeModulus& m, uint64_t max_vertices) {
    if (m.prime_count() == 0)
        throw invalid_instance_error("X_1 has a single vertex and no product structure");
    std::vector<int> sizes;
    sizes.reserve(m.prime_count());
    for (uint64_t q : m.primes()) {
        if (q > static_cast<uint64_t>(INT32_MAX))
            throw capacity_error("prime factor too large for tuple representation");
        sizes.push_back(static_cast<int>(q));
    }
    return ProductGraph::make(std::move(sizes), max_vertices);
}

Bigint vertex_to_residue(const SquarefreeModulus& m, const Vertex& v) {
    if (v.size() != m.prime_count())
        throw invalid_argument_error("coordinate count does not match prime count");
    // incremental CRT; moduli are distinct primes so inverses always exist
    Bigint x(0);
    Bigint mod_so_far(1);
    for (size_t i = 0; i < v.size(); ++i) {
        const uint64_t q = m.primes()[i];
        if (v[i] < 0 || static_cast<uint64_t>(v[i]) >= q)
            throw invalid_argument_error("coordinate out of range for its prime");
        const uint64_t want = static_cast<uint64_t>(v[i]);
        const uint64_t cur = x.mod_u64(q);
        const uint64_t diff = (want + q - cur) % q;
        const uint64_t step = mulmod_u64(diff, modinv_u64(mod_so_far.mod_u64(q), q), q);
        Bigint add = mod_so_far;
        add.mul_u64(step);
        x += add;
        mod_so_far.mul_u64(q);
    }
    return x;
}

Vertex residue_to_vertex(const SquarefreeModulus& m, const Bigint& r) {
    if (r >= m.modulus()) throw invalid_argument_error("residue not reduced mod n");
    Vertex v(m.prime_count());
    for (size_t i = 0; i < m.prime_count(); ++i) {
        if (m.primes()[i] > static_cast<uint64_t>(INT32_MAX))
            throw capacity_error("prime factor too large for tuple coordinates");
        v[i] = static_cast<int>(r.mod_u64(m.primes()[i]));
    }
    return v;
}

bool residue_adjacent(const SquarefreeModulus& m, const Bigint& a, const Bigint& b) {
    if (a >= m.modulus() || b >= m.modulus())
        throw invalid_argument_error("residue not reduced mod n");
    Bigint diff = (a >= b) ? a - b : b - a;  // gcd(n - d, q) = 0 iff gcd(d, q) = 0 for q | n
    return !m.shares_factor(diff) && !(diff.is_zero());
}

}  // namespace domlab
