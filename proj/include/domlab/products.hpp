#pragma once

#include <cstdint>
#include <vector>

#include "domlab/bigint.hpp"

namespace domlab {

// A vertex of a direct product of complete graphs: one coordinate per factor.
using Vertex = std::vector<int>;

inline constexpr uint64_t kDefaultDenseCap = 1'000'000;  // bitset materialization cap

// The direct product K_{n_1} x ... x K_{n_t}, factor sizes kept sorted
// ascending. Tuples u, v are adjacent iff they differ in every coordinate.
// Instances of any size can be described (counts are arbitrary precision);
// enumeration-based operations guard their own caps.
class ProductGraph {
public:
    // max_vertices = 0 means unbounded
    static ProductGraph make(std::vector<int> sizes, uint64_t max_vertices = 0);

    const std::vector<int>& sizes() const { return sizes_; }
    int factor_count() const { return static_cast<int>(sizes_.size()); }

    const Bigint& vertex_count_big() const { return vertex_count_big_; }
    const Bigint& min_degree_big() const { return min_degree_big_; }
    bool counts_fit_u64() const { return !strides_.empty(); }
    uint64_t vertex_count() const;  // throws capacity_error beyond 64 bits
    uint64_t min_degree() const;
    uint64_t closed_neighborhood_size() const { return min_degree() + 1; }

    bool contains(const Vertex& v) const;
    void require_vertex(const Vertex& v) const;  // throws invalid_argument_error
    bool adjacent(const Vertex& u, const Vertex& v) const;

    // Mixed-radix flat encoding, last coordinate fastest. Internal detail for
    // bitset indexing; tuples stay the external representation. Only valid
    // when the counts fit a machine word.
    uint64_t flat_index(const Vertex& v) const;
    Vertex vertex_at(uint64_t index) const;
    // Odometer increment over all vertices; returns false after the last one.
    bool next_vertex(Vertex& v) const;

    friend bool operator==(const ProductGraph& a, const ProductGraph& b) {
        return a.sizes_ == b.sizes_;
    }

private:
    std::vector<int> sizes_;
    std::vector<uint64_t> strides_;  // empty when counts exceed 64 bits
    Bigint vertex_count_big_;
    Bigint min_degree_big_;
};

ProductGraph make_product(std::vector<int> sizes, uint64_t max_vertices = 0);

// Squarefree modulus n = q_1 * ... * q_t given by its distinct prime factors.
// Doubles as the descriptor of the unitary Cayley graph X_n.
class SquarefreeModulus {
public:
    SquarefreeModulus() : modulus_(1), totient_(1) {}  // n = 1, empty prime set
    static SquarefreeModulus from_primes(std::vector<uint64_t> primes);

    const std::vector<uint64_t>& primes() const { return primes_; }
    size_t prime_count() const { return primes_.size(); }
    const Bigint& modulus() const { return modulus_; }
    const Bigint& totient() const { return totient_; }

    bool modulus_fits_u64() const { return modulus_.fits_u64(); }
    uint64_t modulus_u64() const { return modulus_.to_u64(); }

    // gcd(x, n) > 1, decided by per-prime divisibility.
    bool shares_factor(const Bigint& x) const;
    bool shares_factor(uint64_t x) const;

    friend bool operator==(const SquarefreeModulus& a, const SquarefreeModulus& b) {
        return a.primes_ == b.primes_;
    }

private:
    std::vector<uint64_t> primes_;
    Bigint modulus_;
    Bigint totient_;
};

// X_n viewed as a product of complete graphs, one factor per prime.
ProductGraph ucg_graph(const SquarefreeModulus& m, uint64_t max_vertices = 0);

// CRT bijection between tuple vertices and residues mod n.
Bigint vertex_to_residue(const SquarefreeModulus& m, const Vertex& v);
Vertex residue_to_vertex(const SquarefreeModulus& m, const Bigint& r);

// Residues adjacent in X_n iff their difference is a unit mod n.
bool residue_adjacent(const SquarefreeModulus& m, const Bigint& a, const Bigint& b);

}  // namespace domlab
