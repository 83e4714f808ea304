#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>
#include <thread>

#include "domlab/errors.hpp"
#include "domlab/exact.hpp"

namespace domlab {

namespace {

constexpr uint64_t kAllOnes = ~0ull;

// Row-matrix of vertex bitsets: row v = set of vertices covered by choosing v
// (closed neighborhood for domination, open for total domination). The cover
// relation is symmetric, so row u doubles as "candidate dominators of u".
struct CoverMatrix {
    size_t n = 0, words = 0;
    std::vector<uint64_t> rows;

    const uint64_t* row(size_t v) const { return rows.data() + v * words; }
    uint64_t* row(size_t v) { return rows.data() + v * words; }
};

CoverMatrix build_cover_matrix(const ProductGraph& g, DominationKind kind,
                               const SolveOptions& opts) {
    if (!g.counts_fit_u64() || g.vertex_count() > opts.dense_cap)
        throw capacity_error("instance exceeds the dense solving cap of " +
                             std::to_string(opts.dense_cap) + " vertices");
    const uint64_t n64 = g.vertex_count();
    const size_t n = static_cast<size_t>(n64);
    const size_t words = (n + 63) / 64;
    if (static_cast<uint64_t>(n) * words * 8 > opts.mask_bytes_cap)
        throw capacity_error("cover matrix would exceed the memory cap");

    const auto& sizes = g.sizes();
    const int t = g.factor_count();

    // differs[i][c] = vertices whose i-th coordinate != c, as a bitset.
    // Coordinates are periodic in flat order, so these fill in runs.
    std::vector<std::vector<std::vector<uint64_t>>> differs(static_cast<size_t>(t));
    {
        uint64_t stride = 1;
        std::vector<uint64_t> strides(static_cast<size_t>(t));
        for (int i = t; i-- > 0;) {
            strides[static_cast<size_t>(i)] = stride;
            stride *= static_cast<uint64_t>(sizes[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < t; ++i) {
            const auto si = static_cast<size_t>(i);
            const uint64_t s = strides[si];
            const uint64_t block = s * static_cast<uint64_t>(sizes[si]);
            differs[si].assign(static_cast<size_t>(sizes[si]), std::vector<uint64_t>(words, kAllOnes));
            for (int c = 0; c < sizes[si]; ++c) {
                auto& mask = differs[si][static_cast<size_t>(c)];
                for (uint64_t base = static_cast<uint64_t>(c) * s; base < n; base += block) {
                    for (uint64_t x = base; x < base + s; ++x) {
                        mask[x >> 6] &= ~(1ull << (x & 63));
                    }
                }
                // clear padding bits past n
                if (n % 64) mask[words - 1] &= (1ull << (n % 64)) - 1;
            }
        }
    }

    CoverMatrix m;
    m.n = n;
    m.words = words;
    m.rows.assign(n * words, 0);
    Vertex v(static_cast<size_t>(t), 0);
    for (size_t idx = 0; idx < n; ++idx) {
        uint64_t* row = m.row(idx);
        std::memset(row, 0xff, words * 8);
        for (int i = 0; i < t; ++i) {
            const auto& mask = differs[static_cast<size_t>(i)][static_cast<size_t>(v[static_cast<size_t>(i)])];
            for (size_t w = 0; w < words; ++w) row[w] &= mask[w];
        }
        if (n % 64) row[words - 1] &= (1ull << (n % 64)) - 1;
        if (kind == DominationKind::dominating) row[idx >> 6] |= 1ull << (idx & 63);
        g.next_vertex(v);
    }
    return m;
}

size_t popcount_words(const uint64_t* w, size_t words) {
    size_t c = 0;
    for (size_t i = 0; i < words; ++i) c += static_cast<size_t>(std::popcount(w[i]));
    return c;
}

std::vector<int> greedy_cover(const CoverMatrix& m) {
    std::vector<uint64_t> covered(m.words, 0);
    std::vector<int> chosen;
    size_t uncovered = m.n;
    while (uncovered > 0) {
        size_t best_v = 0, best_gain = 0;
        for (size_t v = 0; v < m.n; ++v) {
            const uint64_t* row = m.row(v);
            size_t gain = 0;
            for (size_t w = 0; w < m.words; ++w) gain += static_cast<size_t>(std::popcount(row[w] & ~covered[w]));
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        if (best_gain == 0) throw verification_error("greedy cover stalled");  // cannot happen: min degree >= 1
        chosen.push_back(static_cast<int>(best_v));
        const uint64_t* row = m.row(best_v);
        for (size_t w = 0; w < m.words; ++w) covered[w] |= row[w];
        uncovered -= best_gain;
    }
    return chosen;
}

// Orbit signature of a branch candidate under the stabilizer of the chosen
// set: per-factor symmetric groups plus permutations of equal-size factors.
// Sound at depth <= 2 where the chosen set is {0} or {0, v}.
std::vector<int> orbit_signature(const ProductGraph& g, const Vertex& w,
                                 const Vertex* second) {
    std::vector<int> parts;
    const auto& sizes = g.sizes();
    for (size_t i = 0; i < sizes.size(); ++i) {
        int cls;
        if (second == nullptr) {
            cls = (w[i] == 0) ? 0 : 1;
        } else {
            const int vi = (*second)[i];
            cls = (w[i] == 0) ? 0 : (w[i] == vi ? 1 : 2);
            cls = cls * 2 + (vi == 0 ? 0 : 1);
        }
        parts.push_back(sizes[i] * 8 + cls);
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

struct SharedSearch {
    const ProductGraph* graph = nullptr;
    const CoverMatrix* matrix = nullptr;
    const SolveOptions* opts = nullptr;
    uint64_t cover_size = 0;  // vertices covered by any single choice (regular graph)
    std::atomic<int> bar{0};  // exclusive upper bound on interesting sizes
    std::atomic<int> stop_at{0};  // bar <= stop_at ends the search (seeded lower bound)
    std::vector<int> best;        // guarded by mu
    std::mutex mu;
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<bool> stopped{false};
};

struct Worker {
    SharedSearch* sh;
    size_t words;
    std::deque<std::vector<uint64_t>> covered_stack;  // one buffer per depth; deque keeps references stable
    std::vector<uint64_t> forbidden;
    std::vector<uint64_t> pack_used;
    std::vector<int> chosen;
    uint64_t local_nodes = 0;

    explicit Worker(SharedSearch* s) : sh(s), words(s->matrix->words) {
        forbidden.assign(words, 0);
        pack_used.assign(words, 0);
    }

    std::vector<uint64_t>& level_buffer(size_t depth) {
        while (covered_stack.size() <= depth) covered_stack.emplace_back(words, 0);
        return covered_stack[depth];
    }

    void flush_nodes() {
        sh->nodes.fetch_add(local_nodes, std::memory_order_relaxed);
        local_nodes = 0;
    }

    bool out_of_budget() {
        const uint64_t budget = sh->opts->node_budget;
        if (budget == 0) return false;
        if (local_nodes >= 1024) flush_nodes();
        if (sh->nodes.load(std::memory_order_relaxed) + local_nodes >= budget) {
            sh->budget_hit.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void record_solution() {
        std::lock_guard<std::mutex> lock(sh->mu);
        int cur = sh->bar.load(std::memory_order_relaxed);
        if (static_cast<int>(chosen.size()) < cur) {
            sh->best = chosen;
            sh->bar.store(static_cast<int>(chosen.size()), std::memory_order_relaxed);
            if (static_cast<int>(chosen.size()) <= sh->stop_at.load(std::memory_order_relaxed))
                sh->stopped.store(true, std::memory_order_relaxed);
        }
    }

    void dfs(const std::vector<uint64_t>& covered, size_t uncovered) {
        ++local_nodes;
        if (sh->stopped.load(std::memory_order_relaxed)) return;
        if (out_of_budget()) return;

        if (uncovered == 0) {
            record_solution();
            return;
        }
        const int bar = sh->bar.load(std::memory_order_relaxed);
        const int depth = static_cast<int>(chosen.size());
        const int need_ceil =
            static_cast<int>((uncovered + sh->cover_size - 1) / sh->cover_size);
        if (depth + need_ceil >= bar) return;

        const CoverMatrix& m = *sh->matrix;

        // One pass over uncovered vertices: pick the one with fewest usable
        // dominators, and greedily pack vertices with disjoint candidate sets
        // for a lower bound.
        size_t select = SIZE_MAX, select_count = SIZE_MAX;
        int pack = 0;
        const bool use_pack = sh->opts->packing_bound;
        if (use_pack) std::fill(pack_used.begin(), pack_used.end(), 0);
        for (size_t w = 0; w < words; ++w) {
            uint64_t open = ~covered[w];
            if (w == words - 1 && (m.n % 64)) open &= (1ull << (m.n % 64)) - 1;
            while (open) {
                const size_t u = (w << 6) + static_cast<size_t>(std::countr_zero(open));
                open &= open - 1;
                const uint64_t* row = m.row(u);
                size_t cnt = 0;
                bool disjoint = use_pack;
                for (size_t i = 0; i < words; ++i) {
                    const uint64_t cand = row[i] & ~forbidden[i];
                    cnt += static_cast<size_t>(std::popcount(cand));
                    if (use_pack && (cand & pack_used[i])) disjoint = false;
                }
                if (cnt == 0) return;  // u can never be covered on this branch
                if (cnt < select_count) {
                    select_count = cnt;
                    select = u;
                }
                if (use_pack && disjoint) {
                    ++pack;
                    const uint64_t* r = row;
                    for (size_t i = 0; i < words; ++i) pack_used[i] |= r[i] & ~forbidden[i];
                    if (depth + pack >= bar) return;
                }
            }
        }
        if (!use_pack && depth + 1 >= bar) return;

        // candidates ascending by flat index
        std::vector<int> cands;
        cands.reserve(select_count);
        const uint64_t* row = m.row(select);
        for (size_t w = 0; w < words; ++w) {
            uint64_t c = row[w] & ~forbidden[w];
            while (c) {
                cands.push_back(static_cast<int>((w << 6) + static_cast<size_t>(std::countr_zero(c))));
                c &= c - 1;
            }
        }

        if (sh->opts->orbit_dedup && sh->opts->normalize_first_vertex && depth >= 1 && depth <= 2) {
            const ProductGraph& g = *sh->graph;
            Vertex second;
            if (depth == 2) second = g.vertex_at(static_cast<uint64_t>(chosen[1]));
            std::map<std::vector<int>, bool> seen;
            std::vector<int> kept;
            kept.reserve(cands.size());
            for (int cand : cands) {
                auto sig = orbit_signature(g, g.vertex_at(static_cast<uint64_t>(cand)),
                                           depth == 2 ? &second : nullptr);
                if (!seen.emplace(std::move(sig), true).second) continue;
                kept.push_back(cand);
            }
            cands = std::move(kept);
        }

        std::vector<int> forbade;
        forbade.reserve(cands.size());
        auto& next_covered = level_buffer(static_cast<size_t>(depth));
        for (int cand : cands) {
            if (sh->stopped.load(std::memory_order_relaxed) ||
                sh->budget_hit.load(std::memory_order_relaxed))
                break;
            const uint64_t* crow = m.row(static_cast<size_t>(cand));
            size_t newly = 0;
            for (size_t w = 0; w < words; ++w) {
                const uint64_t add = crow[w] & ~covered[w];
                newly += static_cast<size_t>(std::popcount(add));
                next_covered[w] = covered[w] | crow[w];
            }
            chosen.push_back(cand);
            dfs(next_covered, uncovered - newly);
            chosen.pop_back();
            // exclude this candidate from the rest of the subtree
            forbidden[static_cast<size_t>(cand) >> 6] |= 1ull << (cand & 63);
            forbade.push_back(cand);
            // next_covered gets rebuilt each iteration; buffer reuse is safe
            // because deeper levels use their own buffers
        }
        for (int cand : forbade)
            forbidden[static_cast<size_t>(cand) >> 6] &= ~(1ull << (cand & 63));
    }
};

}  // namespace

static SolveResult solve_min_domination(const ProductGraph& g, DominationKind kind,
                                        const SolveOptions& opts) {
    CoverMatrix matrix = build_cover_matrix(g, kind, opts);
    const size_t n = matrix.n;
    const size_t words = matrix.words;

    SharedSearch sh;
    sh.graph = &g;
    sh.matrix = &matrix;
    sh.opts = &opts;
    sh.cover_size = (kind == DominationKind::dominating) ? g.closed_neighborhood_size()
                                                         : g.min_degree();

    // incumbent: verified seed witness if given, otherwise greedy
    std::vector<int> incumbent;
    if (!opts.seed_witness.empty()) {
        auto rep = check_domination(g, opts.seed_witness, kind, 1);
        if (!rep.ok)
            throw invalid_argument_error("seed witness does not verify: " + rep.detail);
        for (const auto& v : opts.seed_witness)
            incumbent.push_back(static_cast<int>(g.flat_index(v)));
        std::sort(incumbent.begin(), incumbent.end());
        incumbent.erase(std::unique(incumbent.begin(), incumbent.end()), incumbent.end());
    }
    {
        auto greedy = greedy_cover(matrix);
        if (incumbent.empty() || greedy.size() < incumbent.size()) incumbent = std::move(greedy);
    }
    sh.best = incumbent;
    int bar = static_cast<int>(incumbent.size());
    if (opts.upper_hint && *opts.upper_hint + 1 < bar) bar = *opts.upper_hint + 1;
    sh.bar.store(bar);
    sh.stop_at.store(opts.lower_seed.value_or(0));

    const int root_trivial_lb =
        static_cast<int>((n + sh.cover_size - 1) / sh.cover_size);

    SolveResult result;
    if (opts.lower_seed && static_cast<int>(incumbent.size()) <= *opts.lower_seed) {
        // certified bound already meets the incumbent; no search needed
        result.value = static_cast<int>(incumbent.size());
        result.proven_optimal = true;
        result.proven_lower = result.value;
        result.source = OptimalitySource::seeded_bound;
    } else {
        // depth-0/1: fix the all-zeros vertex when normalizing, then branch
        std::vector<uint64_t> root_covered(words, 0);
        size_t root_uncovered = n;
        std::vector<int> root_chosen;
        if (opts.normalize_first_vertex) {
            const uint64_t* row0 = matrix.row(0);
            for (size_t w = 0; w < words; ++w) root_covered[w] = row0[w];
            root_uncovered = n - popcount_words(root_covered.data(), words);
            root_chosen.push_back(0);
        }

        const int threads = std::max(1, opts.threads);
        if (threads == 1) {
            Worker w(&sh);
            w.chosen = root_chosen;
            w.dfs(root_covered, root_uncovered);
            w.flush_nodes();
        } else {
            // expand one branching level and deal the branches to workers;
            // earlier siblings are forbidden in later ones, as in the serial loop
            Worker probe(&sh);
            probe.chosen = root_chosen;
            // compute the same selection the serial code would make
            size_t select = SIZE_MAX, select_count = SIZE_MAX;
            if (root_uncovered == 0) {
                probe.dfs(root_covered, root_uncovered);
                probe.flush_nodes();
            } else {
                for (size_t u = 0; u < n; ++u) {
                    if (root_covered[u >> 6] >> (u & 63) & 1) continue;
                    const size_t cnt = popcount_words(matrix.row(u), words);
                    if (cnt < select_count) {
                        select_count = cnt;
                        select = u;
                    }
                }
                std::vector<int> cands;
                const uint64_t* row = matrix.row(select);
                for (size_t w = 0; w < words; ++w) {
                    uint64_t c = row[w];
                    while (c) {
                        cands.push_back(static_cast<int>((w << 6) + static_cast<size_t>(std::countr_zero(c))));
                        c &= c - 1;
                    }
                }
                if (opts.orbit_dedup && opts.normalize_first_vertex && root_chosen.size() == 1) {
                    std::map<std::vector<int>, bool> seen;
                    std::vector<int> kept;
                    for (int cand : cands) {
                        auto sig = orbit_signature(g, g.vertex_at(static_cast<uint64_t>(cand)), nullptr);
                        if (seen.emplace(std::move(sig), true).second) kept.push_back(cand);
                    }
                    cands = std::move(kept);
                }
                std::atomic<size_t> next{0};
                auto run = [&]() {
                    Worker w(&sh);
                    while (true) {
                        const size_t i = next.fetch_add(1);
                        if (i >= cands.size()) break;
                        if (sh.stopped.load() || sh.budget_hit.load()) break;
                        w.chosen = root_chosen;
                        w.chosen.push_back(cands[i]);
                        std::fill(w.forbidden.begin(), w.forbidden.end(), 0);
                        for (size_t j = 0; j < i; ++j)
                            w.forbidden[static_cast<size_t>(cands[j]) >> 6] |= 1ull << (cands[j] & 63);
                        std::vector<uint64_t> covered(words);
                        const uint64_t* crow = matrix.row(static_cast<size_t>(cands[i]));
                        size_t covered_count = 0;
                        for (size_t k = 0; k < words; ++k) {
                            covered[k] = root_covered[k] | crow[k];
                            covered_count += static_cast<size_t>(std::popcount(covered[k]));
                        }
                        w.dfs(covered, n - covered_count);
                    }
                    w.flush_nodes();
                };
                std::vector<std::thread> pool;
                pool.reserve(static_cast<size_t>(threads));
                for (int i = 0; i < threads; ++i) pool.emplace_back(run);
                for (auto& t : pool) t.join();
            }
        }

        result.value = static_cast<int>(sh.best.size());
        if (sh.budget_hit.load()) {
            result.proven_optimal = false;
            result.proven_lower = std::max(opts.lower_seed.value_or(1), root_trivial_lb);
            result.source = OptimalitySource::not_proven;
        } else if (sh.stopped.load()) {
            result.proven_optimal = true;
            result.proven_lower = result.value;
            result.source = OptimalitySource::seeded_bound;
        } else {
            // exhausted: nothing below the final bar exists
            const int final_bar = sh.bar.load();
            if (result.value == final_bar) {
                result.proven_optimal = true;
                result.proven_lower = result.value;
                result.source = OptimalitySource::exhausted_search;
            } else {
                // upper hint cut below the incumbent and nothing was found:
                // the hint was wrong; report what the search actually proved
                result.proven_optimal = false;
                result.proven_lower = final_bar;
                result.source = OptimalitySource::not_proven;
            }
        }
        incumbent = sh.best;
    }

    result.nodes_explored = sh.nodes.load();
    result.witness.kind = (kind == DominationKind::dominating) ? CertificateKind::dominating
                                                               : CertificateKind::total_dominating;
    result.witness.sizes = g.sizes();
    std::sort(incumbent.begin(), incumbent.end());
    for (int v : incumbent)
        result.witness.vertices.push_back(g.vertex_at(static_cast<uint64_t>(v)));
    result.witness.claimed_value = result.value;

    auto rep = check_domination(g, result.witness.vertices, kind, 1);
    if (!rep.ok) throw verification_error("solver produced an invalid witness: " + rep.detail);
    return result;
}

SolveResult gamma_exact(const ProductGraph& g, const SolveOptions& options) {
    return solve_min_domination(g, DominationKind::dominating, options);
}

SolveResult gamma_t_exact(const ProductGraph& g, const SolveOptions& options) {
    return solve_min_domination(g, DominationKind::total_dominating, options);
}

}  // namespace domlab
