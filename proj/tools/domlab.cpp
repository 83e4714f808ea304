// domlab: exact domination toolkit for direct products of complete graphs
// and unitary Cayley graphs, with a Jacobsthal gap engine.
//
// Subcommands: gamma, classify, bounds, jacobsthal, construct, verify,
// repro, explore. See README.md for a walkthrough.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domlab/acceptance.hpp"
#include "domlab/bounds.hpp"
#include "domlab/certificates.hpp"
#include "domlab/classify.hpp"
#include "domlab/constructions.hpp"
#include "domlab/errors.hpp"
#include "domlab/exact.hpp"
#include "domlab/jacobsthal.hpp"
#include "domlab/primes.hpp"
#include "domlab/version.hpp"

using nlohmann::json;
using namespace domlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

// ---- result cache (append-only JSONL) ----

struct Cache {
    std::string path;
    bool enabled = true;

    static Cache from_environment(bool no_cache_flag, const std::string& override_path) {
        Cache c;
        if (!override_path.empty()) {
            c.path = override_path;
        } else if (const char* env = std::getenv("DOMLAB_CACHE")) {
            c.path = env;
            if (c.path.empty()) c.enabled = false;
        } else {
            c.path = "domlab-cache.jsonl";
        }
        if (no_cache_flag) c.enabled = false;
        return c;
    }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!enabled) return std::nullopt;
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::string line;
        std::optional<std::string> hit;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json record = json::parse(line, nullptr, false);
            if (record.is_discarded()) continue;
            if (record.value("key", "") == key) hit = record.value("payload", "");
        }
        return hit;
    }

    void store(const std::string& key, const std::string& command, const std::string& instance,
               const std::string& payload, double wall_ms, uint64_t nodes) const {
        if (!enabled) return;
        std::ofstream out(path, std::ios::app);
        if (!out) return;  // cache is best effort
        json record = {{"key", key},         {"command", command}, {"instance", instance},
                       {"payload", payload}, {"wall_ms", wall_ms}, {"nodes", nodes},
                       {"version", kVersion}};
        out << record.dump() << "\n";
    }
};

std::string canonical_sizes(const std::vector<int>& sizes) {
    auto sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    std::string s;
    for (size_t i = 0; i < sorted.size(); ++i) s += (i ? "," : "") + std::to_string(sorted[i]);
    return s;
}

std::string canonical_primes(std::vector<uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    std::string s;
    for (size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
    return s;
}

enum class Format { text, json_format, csv };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::text;
    if (f == "json") return Format::json_format;
    if (f == "csv") return Format::csv;
    throw invalid_argument_error("unknown format '" + f + "'");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

json bound_report_to_json(const BoundReport& r) {
    json j = {{"name", r.name},
              {"kind", r.kind == BoundKind::lower ? "lower" : "upper"},
              {"applicable", r.applicable},
              {"certified", r.certified},
              {"exact", r.exact}};
    if (r.value) j["value"] = *r.value;
    if (r.rational)
        j["rational"] = {{"num", r.rational->first.to_decimal()},
                         {"den", r.rational->second.to_decimal()}};
    if (!r.hypothesis_note.empty()) j["note"] = r.hypothesis_note;
    return j;
}

json verdict_to_json(const GammaClass& v) {
    json j;
    switch (v.kind) {
        case GammaVerdictKind::exact: j["verdict"] = "exact"; j["value"] = v.value; break;
        case GammaVerdictKind::at_least: j["verdict"] = "at_least"; j["value"] = v.value; break;
        case GammaVerdictKind::small_t: j["verdict"] = "exact"; j["value"] = v.value; break;
        case GammaVerdictKind::reduced_k2:
            j["verdict"] = "reduced_k2";
            j["multiplier"] = *v.multiplier;
            j["inner_sizes"] = *v.inner_sizes;
            break;
    }
    j["matched_rules"] = v.matched_rules;
    return j;
}

struct GlobalFlags {
    std::string format = "text";
    bool no_cache = false;
    std::string cache_path;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

// ---- subcommand payload builders ----

json run_gamma_payload(const std::vector<int>& sizes, bool total, bool oracle,
                       std::optional<int> upper_hint, uint64_t node_budget, bool seed,
                       int threads, std::string& witness_out) {
    auto g = make_product(sizes);
    const auto kind = total ? DominationKind::total_dominating : DominationKind::dominating;
    json payload;
    payload["instance"] = {{"sizes", g.sizes()}};
    payload["parameter"] = total ? "gamma_t" : "gamma";
    if (oracle) {
        const auto value = brute_force_value(g, kind, static_cast<int>(g.vertex_count()));
        if (!value) throw verification_error("oracle found no admissible set");
        payload["value"] = *value;
        payload["method"] = "brute_force";
        payload["proven_optimal"] = true;
        return payload;
    }
    SolveOptions options;
    if (seed) options = seeded_options(g, kind, {}, true);
    options.threads = threads;
    options.node_budget = node_budget;
    if (upper_hint) options.upper_hint = upper_hint;
    const auto result = total ? gamma_t_exact(g, options) : gamma_exact(g, options);
    payload["value"] = result.value;
    payload["method"] = "branch_and_bound";
    payload["proven_optimal"] = result.proven_optimal;
    payload["proven_lower"] = result.proven_lower;
    payload["nodes"] = result.nodes_explored;
    switch (result.source) {
        case OptimalitySource::exhausted_search: payload["optimality"] = "exhausted_search"; break;
        case OptimalitySource::seeded_bound: payload["optimality"] = "seeded_bound"; break;
        case OptimalitySource::not_proven: payload["optimality"] = "not_proven"; break;
    }
    witness_out = certificate_to_json(result.witness).dump();
    if (!result.proven_optimal)
        throw capacity_error("search budget exhausted; proven interval [" +
                             std::to_string(result.proven_lower) + ", " +
                             std::to_string(result.value) + "]");
    return payload;
}

// exploratory: search the pool for prime tuples q <= r component-wise whose
// g values differ by at least j (no acceptance claim attached)
json explore_conjecture(int k, int pool_first, int j, const SieveOptions& sieve) {
    const auto pool = first_primes(static_cast<size_t>(pool_first));
    std::vector<size_t> idx(static_cast<size_t>(k));
    std::vector<std::vector<uint64_t>> tuples;
    std::vector<uint64_t> gs;
    // enumerate k-subsets and their g values
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        std::vector<uint64_t> subset(static_cast<size_t>(k));
        for (size_t i = 0; i < idx.size(); ++i) subset[i] = pool[idx[i]];
        tuples.push_back(subset);
        gs.push_back(g_of(SquarefreeModulus::from_primes(subset), sieve).g_value);
        size_t i = idx.size();
        bool done = true;
        while (i-- > 0) {
            if (idx[i] != pool.size() - idx.size() + i) {
                done = false;
                break;
            }
        }
        if (done) break;
        ++idx[i];
        for (size_t m = i + 1; m < idx.size(); ++m) idx[m] = idx[m - 1] + 1;
    }
    json best = json::array();
    bool any_pair = false;
    int best_gap = 0;
    for (size_t a = 0; a < tuples.size(); ++a) {
        for (size_t b = 0; b < tuples.size(); ++b) {
            if (a == b) continue;
            bool dominated = true;
            for (size_t i = 0; i < tuples[a].size(); ++i)
                dominated = dominated && tuples[a][i] <= tuples[b][i];
            if (!dominated) continue;
            const int gap = static_cast<int>(gs[b]) - static_cast<int>(gs[a]);
            if (!any_pair || gap > best_gap) {
                any_pair = true;
                best_gap = gap;
                best = json::array();
            }
            if (gap == best_gap && gap >= j) {
                best.push_back({{"q", tuples[a]},
                                {"r", tuples[b]},
                                {"g_q", gs[a]},
                                {"g_r", gs[b]},
                                {"gap", gap}});
            }
        }
    }
    json out = {{"requested_gap", j}, {"witnesses", best}};
    if (any_pair) out["best_gap"] = best_gap;
    return out;
}

void emit(const json& payload, Format format, std::ostream& out) {
    if (format == Format::json_format) {
        out << payload.dump(2) << "\n";
        return;
    }
    if (format == Format::csv) {
        if (payload.contains("bounds")) {
            out << "name,kind,applicable,certified,exact,value,note\n";
            for (const auto& r : payload.at("bounds")) {
                out << csv_escape(r.value("name", "")) << "," << r.value("kind", "") << ","
                    << (r.value("applicable", false) ? 1 : 0) << ","
                    << (r.value("certified", false) ? 1 : 0) << ","
                    << (r.value("exact", false) ? 1 : 0) << ","
                    << (r.contains("value") ? r.at("value").dump() : "") << ","
                    << csv_escape(r.value("note", "")) << "\n";
            }
            return;
        }
        // flat row of key=value pairs
        bool first = true;
        std::ostringstream header, row;
        for (auto it = payload.begin(); it != payload.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) continue;
            header << (first ? "" : ",") << it.key();
            row << (first ? "" : ",")
                << csv_escape(it.value().is_string() ? it.value().get<std::string>()
                                                     : it.value().dump());
            first = false;
        }
        out << header.str() << "\n" << row.str() << "\n";
        return;
    }
    // text: compact human-readable dump
    std::function<void(const json&, int)> pretty = [&](const json& j, int depth) {
        const std::string pad(static_cast<size_t>(depth) * 2, ' ');
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object()) {
                out << pad << it.key() << ":\n";
                pretty(it.value(), depth + 1);
            } else if (it.value().is_array() && !it.value().empty() &&
                       it.value().front().is_object()) {
                out << pad << it.key() << ":\n";
                for (const auto& elem : it.value()) {
                    out << pad << "  -\n";
                    pretty(elem, depth + 2);
                }
            } else {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    };
    pretty(payload, 0);
}

int dispatch_error() {
    try {
        throw;
    } catch (const capacity_error& e) {
        std::cerr << "error (capacity/timeout): " << e.what() << "\n";
        return kExitCapacity;
    } catch (const verification_error& e) {
        std::cerr << "error (verification): " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const error& e) {
        std::cerr << "error (invalid input): " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination toolkit for products of complete graphs and unitary "
                 "Cayley graphs"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--format", flags.format, "output format: text, json, csv")
        ->capture_default_str();
    app.add_option("--threads", flags.threads, "worker threads for solving and verification")
        ->capture_default_str();
    app.add_flag("--no-cache", flags.no_cache, "disable the result cache");
    app.add_option("--cache-path", flags.cache_path,
                   "cache file (default $DOMLAB_CACHE or ./domlab-cache.jsonl)");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "exact domination number by branch and bound");
    std::vector<int> gamma_sizes;
    bool gamma_total = false, gamma_oracle = false, gamma_no_seed = false;
    int gamma_hint = -1;
    uint64_t gamma_budget = 0;
    std::string gamma_out;
    gamma_cmd->add_option("--sizes", gamma_sizes, "factor sizes, e.g. 3,3,3")
        ->required()
        ->delimiter(',');
    gamma_cmd->add_flag("--total", gamma_total, "total domination instead of domination");
    gamma_cmd->add_flag("--oracle", gamma_oracle, "force the brute-force oracle");
    gamma_cmd->add_flag("--no-seed", gamma_no_seed, "skip construction and bound seeding");
    gamma_cmd->add_option("--upper-hint", gamma_hint, "trusted upper bound to prune with");
    gamma_cmd->add_option("--node-budget", gamma_budget, "abort after this many search nodes");
    gamma_cmd->add_option("-o,--output", gamma_out, "write the witness certificate JSON here");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "gamma classification by the t+2 theory");
    std::vector<int> classify_sizes;
    classify_cmd->add_option("--sizes", classify_sizes, "factor sizes")->required()->delimiter(',');

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form lower and upper bounds");
    std::vector<int> bounds_sizes;
    int bounds_k = 0;
    bounds_cmd->add_option("--sizes", bounds_sizes, "factor sizes")->required()->delimiter(',');
    bounds_cmd->add_option("--k", bounds_k, "also report the asymptotic bound at this k");

    // jacobsthal
    auto* jac_cmd = app.add_subcommand("jacobsthal", "Jacobsthal function computations");
    jac_cmd->require_subcommand(1);
    auto* jac_g = jac_cmd->add_subcommand("g", "g of a squarefree modulus");
    std::vector<uint64_t> jac_primes;
    uint64_t jac_sieve_cap = SieveOptions{}.sieve_cap;
    jac_g->add_option("--primes", jac_primes, "distinct primes of the modulus")
        ->required()
        ->delimiter(',');
    jac_g->add_option("--sieve-cap", jac_sieve_cap, "largest modulus scanned in full");
    auto* jac_h = jac_cmd->add_subcommand("h", "g of the product of the first n primes");
    int jac_h_n = 0;
    jac_h->add_option("--n", jac_h_n, "prime count")->required();
    jac_h->add_option("--sieve-cap", jac_sieve_cap, "largest modulus scanned in full");
    auto* jac_H = jac_cmd->add_subcommand("H", "pool-bounded max of g over n-prime subsets");
    int jac_H_n = 0, jac_H_pool = 10;
    jac_H->add_option("--n", jac_H_n, "subset size")->required();
    jac_H->add_option("--pool-first", jac_H_pool, "pool = first this many primes")
        ->capture_default_str();
    auto* jac_refs = jac_cmd->add_subcommand("refs", "published beyond-desk-scale values");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "generate certificate files");
    construct_cmd->require_subcommand(1);
    std::string construct_out;
    auto* c_prefix = construct_cmd->add_subcommand("prefix", "prefix total dominating set of X_n");
    std::vector<uint64_t> c_prefix_primes;
    c_prefix->add_option("--primes", c_prefix_primes, "distinct primes")->required()->delimiter(',');
    c_prefix->add_option("-o,--output", construct_out, "certificate file");
    auto* c_mekis = construct_cmd->add_subcommand("mekis3", "four-vertex triple-product set");
    std::vector<int> c_mekis_sizes;
    c_mekis->add_option("--sizes", c_mekis_sizes, "three factor sizes")->required()->delimiter(',');
    c_mekis->add_option("-o,--output", construct_out, "certificate file");
    auto* c_diag = construct_cmd->add_subcommand("diagonal", "t+1 diagonal dominating set");
    std::vector<int> c_diag_sizes;
    c_diag->add_option("--sizes", c_diag_sizes, "factor sizes with n_1 >= t+1")
        ->required()
        ->delimiter(',');
    c_diag->add_option("-o,--output", construct_out, "certificate file");
    auto* c_tp2 = construct_cmd->add_subcommand("tplus2", "t+2 dominating set");
    std::vector<int> c_tp2_sizes;
    c_tp2->add_option("--sizes", c_tp2_sizes, "sizes with n_1=n_2=n_3=t, n_4 >= t+2")
        ->required()
        ->delimiter(',');
    c_tp2->add_option("-o,--output", construct_out, "certificate file");
    auto* c_lift = construct_cmd->add_subcommand("lift", "CRT lift of a total dominating set");
    std::vector<uint64_t> c_lift_s, c_lift_r, c_lift_base;
    int c_lift_k = 1;
    uint64_t c_lift_cap = LiftOptions{}.direct_verification_cap;
    c_lift->add_option("--s", c_lift_s, "primes of the base modulus")->required()->delimiter(',');
    c_lift->add_option("--k", c_lift_k, "lift multiplier")->capture_default_str();
    c_lift->add_option("--r", c_lift_r, "k*phi(s) primes beyond k*s+g(s)")
        ->required()
        ->delimiter(',');
    c_lift->add_option("--base", c_lift_base, "base total dominating residues (default prefix)")
        ->delimiter(',');
    c_lift->add_option("--verify-cap", c_lift_cap, "largest n verified residue by residue");
    c_lift->add_option("-o,--output", construct_out, "certificate file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
    std::string verify_path;
    verify_cmd->add_option("path", verify_path, "certificate JSON")->required();

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "run the acceptance suite");
    std::string repro_out;
    std::vector<int> repro_only;
    repro_cmd->add_option("-o,--output", repro_out, "write the markdown table here");
    repro_cmd->add_option("--only", repro_only, "criteria subset, e.g. 1,4,9")->delimiter(',');

    // explore
    auto* explore_cmd = app.add_subcommand("explore", "exploratory searches, no guarantees");
    explore_cmd->require_subcommand(1);
    auto* explore_conj =
        explore_cmd->add_subcommand("conjecture", "component-wise prime tuples with a g gap");
    int conj_k = 2, conj_pool = 8, conj_j = 1;
    explore_conj->add_option("--k", conj_k, "tuple length")->capture_default_str();
    explore_conj->add_option("--pool-first", conj_pool, "pool size")->capture_default_str();
    explore_conj->add_option("--j", conj_j, "gap to look for")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitInvalid;
    }

    const Cache cache = Cache::from_environment(flags.no_cache, flags.cache_path);
    Format format;
    try {
        format = parse_format(flags.format);
    } catch (...) {
        return dispatch_error();
    }

    const auto started = std::chrono::steady_clock::now();
    auto wall_ms = [&]() {
        return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    try {
        if (*gamma_cmd) {
            const std::string key = "gamma:v" + std::string(kVersion) +
                                    ":sizes=" + canonical_sizes(gamma_sizes) +
                                    ":total=" + std::to_string(gamma_total) +
                                    ":oracle=" + std::to_string(gamma_oracle) +
                                    ":hint=" + std::to_string(gamma_hint) +
                                    ":seed=" + std::to_string(!gamma_no_seed);
            if (gamma_out.empty()) {
                if (auto hit = cache.lookup(key)) {
                    std::cerr << "(cache hit)\n";
                    emit(json::parse(*hit), format, std::cout);
                    return kExitOk;
                }
            }
            std::string witness;
            json payload = run_gamma_payload(
                gamma_sizes, gamma_total, gamma_oracle,
                gamma_hint >= 0 ? std::optional<int>(gamma_hint) : std::nullopt, gamma_budget,
                !gamma_no_seed, flags.threads, witness);
            if (!gamma_out.empty() && !witness.empty()) {
                write_json_file(gamma_out, json::parse(witness));
                payload["certificate_path"] = gamma_out;
            } else {
                cache.store(key, "gamma", canonical_sizes(gamma_sizes), payload.dump(), wall_ms(),
                            payload.value("nodes", uint64_t{0}));
            }
            emit(payload, format, std::cout);
            return kExitOk;
        }
        if (*classify_cmd) {
            const std::string key =
                "classify:v" + std::string(kVersion) + ":sizes=" + canonical_sizes(classify_sizes);
            if (auto hit = cache.lookup(key)) {
                std::cerr << "(cache hit)\n";
                emit(json::parse(*hit), format, std::cout);
                return kExitOk;
            }
            auto g = make_product(classify_sizes);
            json payload = verdict_to_json(classify_gamma(g));
            payload["instance"] = {{"sizes", g.sizes()}};
            if (g.factor_count() >= 4 && g.sizes()[1] >= 3) {
                payload["branch"] = check_reduction_hypotheses(g).branch;
            }
            cache.store(key, "classify", canonical_sizes(classify_sizes), payload.dump(),
                        wall_ms(), 0);
            emit(payload, format, std::cout);
            return kExitOk;
        }
        if (*bounds_cmd) {
            const std::string key = "bounds:v" + std::string(kVersion) +
                                    ":sizes=" + canonical_sizes(bounds_sizes) +
                                    ":k=" + std::to_string(bounds_k);
            if (auto hit = cache.lookup(key)) {
                std::cerr << "(cache hit)\n";
                emit(json::parse(*hit), format, std::cout);
                return kExitOk;
            }
            auto g = make_product(bounds_sizes);
            auto summary = best_bounds(g);
            if (bounds_k >= 1) summary.reports.push_back(asymptotic_bound(g, bounds_k));
            json payload;
            payload["instance"] = {{"sizes", g.sizes()}};
            payload["certified_lower"] = summary.lower;
            payload["certified_upper"] = summary.upper;
            json rows = json::array();
            for (const auto& r : summary.reports) rows.push_back(bound_report_to_json(r));
            payload["bounds"] = rows;
            cache.store(key, "bounds", canonical_sizes(bounds_sizes), payload.dump(), wall_ms(),
                        0);
            emit(payload, format, std::cout);
            return kExitOk;
        }
        if (*jac_cmd) {
            SieveOptions sieve;
            sieve.sieve_cap = jac_sieve_cap;
            json payload;
            std::string key;
            if (*jac_g) {
                key = "jacobsthal-g:v" + std::string(kVersion) +
                      ":primes=" + canonical_primes(jac_primes);
                if (auto hit = cache.lookup(key)) {
                    std::cerr << "(cache hit)\n";
                    emit(json::parse(*hit), format, std::cout);
                    return kExitOk;
                }
                const auto result = g_of(SquarefreeModulus::from_primes(jac_primes), sieve);
                payload = {{"modulus", result.modulus.modulus().to_decimal()},
                           {"g", result.g_value},
                           {"witness_start", result.witness.start.to_decimal()},
                           {"witness_length", result.witness.length},
                           {"exhaustive", result.exhaustive}};
            } else if (*jac_h) {
                key = "jacobsthal-h:v" + std::string(kVersion) + ":n=" + std::to_string(jac_h_n);
                if (auto hit = cache.lookup(key)) {
                    std::cerr << "(cache hit)\n";
                    emit(json::parse(*hit), format, std::cout);
                    return kExitOk;
                }
                const auto result = h_of(jac_h_n, sieve);
                payload = {{"n", jac_h_n},
                           {"modulus", result.modulus.modulus().to_decimal()},
                           {"h", result.g_value},
                           {"witness_start", result.witness.start.to_decimal()},
                           {"witness_length", result.witness.length}};
            } else if (*jac_H) {
                key = "jacobsthal-H:v" + std::string(kVersion) + ":n=" + std::to_string(jac_H_n) +
                      ":pool=" + std::to_string(jac_H_pool);
                if (auto hit = cache.lookup(key)) {
                    std::cerr << "(cache hit)\n";
                    emit(json::parse(*hit), format, std::cout);
                    return kExitOk;
                }
                const auto pool = first_primes(static_cast<size_t>(jac_H_pool));
                const auto result = H_bounded(jac_H_n, pool, sieve);
                std::cerr << "warning: pool-bounded surrogate over the first "
                          << jac_H_pool << " primes, not the true maximum over all primes\n";
                payload = {{"n", jac_H_n},
                           {"pool_first", jac_H_pool},
                           {"H_pool_bounded", result.value},
                           {"argmax_primes", result.argmax_primes},
                           {"subsets_scanned", result.subsets_scanned}};
            } else if (*jac_refs) {
                json rows = json::array();
                for (const auto& ref : reference_constants())
                    rows.push_back({{"n", ref.n},
                                    {"h", ref.h},
                                    {"H", ref.H},
                                    {"source", ref.source},
                                    {"recomputed_here", false}});
                payload = {{"references", rows}};
            }
            if (!key.empty()) {
                const std::string instance = *jac_g   ? canonical_primes(jac_primes)
                                             : *jac_h ? "h:" + std::to_string(jac_h_n)
                                                      : "H:" + std::to_string(jac_H_n) + ":pool=" +
                                                            std::to_string(jac_H_pool);
                cache.store(key, "jacobsthal", instance, payload.dump(), wall_ms(), 0);
            }
            emit(payload, format, std::cout);
            return kExitOk;
        }
        if (*construct_cmd) {
            json file_payload;
            json payload;
            if (*c_prefix) {
                auto cert = prefix_total_dominating(SquarefreeModulus::from_primes(c_prefix_primes));
                file_payload = certificate_to_json(cert);
                payload = {{"kind", "prefix"},
                           {"size", cert.residues.size()},
                           {"verified", true}};
            } else if (*c_mekis) {
                auto g = make_product(c_mekis_sizes);
                if (g.factor_count() != 3)
                    throw invalid_argument_error("the triple set needs exactly three factors");
                auto triple = mekis_triple();
                auto rep = check_domination(g, triple, DominationKind::dominating, flags.threads);
                if (!rep.ok) throw verification_error("triple set failed: " + rep.detail);
                Certificate cert;
                cert.kind = CertificateKind::dominating;
                cert.sizes = g.sizes();
                cert.vertices = triple;
                cert.claimed_value = 4;
                file_payload = certificate_to_json(cert);
                payload = {{"kind", "mekis3"}, {"size", 4}, {"verified", true}};
            } else if (*c_diag) {
                auto result = diagonal_tplus1(make_product(c_diag_sizes), flags.threads);
                file_payload = certificate_to_json(result.certificate);
                payload = {{"kind", "diagonal"},
                           {"size", result.certificate.vertices.size()},
                           {"verified", result.verified}};
            } else if (*c_tp2) {
                auto result = tplus2_construction(make_product(c_tp2_sizes), flags.threads);
                file_payload = certificate_to_json(result.certificate);
                payload = {{"kind", "tplus2"},
                           {"size", result.certificate.vertices.size()},
                           {"verified", result.verified},
                           {"also_total_dominating", *result.also_total_dominating}};
            } else if (*c_lift) {
                LiftRecipe recipe;
                recipe.s_modulus = SquarefreeModulus::from_primes(c_lift_s);
                recipe.k = c_lift_k;
                recipe.r_primes = c_lift_r;
                recipe.base_total_dominating = c_lift_base;
                LiftOptions lift_options;
                lift_options.direct_verification_cap = c_lift_cap;
                lift_options.verify_threads = flags.threads;
                auto result = lift_total_dominating(recipe, lift_options);
                file_payload = gap_certification_to_json(result);
                payload = {{"kind", "lift"},
                           {"modulus", result.modulus.modulus().to_decimal()},
                           {"set_size", result.total_dominating.residues.size()},
                           {"run_length", result.run_witness.length},
                           {"certified_gap", result.certified_gap},
                           {"verified", result.verified}};
            }
            if (!construct_out.empty()) {
                write_json_file(construct_out, file_payload);
                payload["certificate_path"] = construct_out;
            } else {
                payload["certificate"] = file_payload;
            }
            emit(payload, format, std::cout);
            return kExitOk;
        }
        if (*verify_cmd) {
            const json j = load_json_file(verify_path);
            if (is_gap_certification_json(j)) {
                auto gap = gap_certification_from_json(j);
                auto again =
                    certify_mj_membership(gap.modulus, gap.total_dominating, gap.run_witness);
                emit({{"result", "pass"},
                      {"kind", "gap_certification"},
                      {"certified_gap", again.certified_gap}},
                     format, std::cout);
                return kExitOk;
            }
            const auto cert = certificate_from_json(j);
            const auto report = verify_certificate_detailed(cert);
            if (!report.ok) {
                emit({{"result", "fail"}, {"reason", report.detail}}, format, std::cout);
                return kExitVerifyFail;
            }
            emit({{"result", "pass"}}, format, std::cout);
            return kExitOk;
        }
        if (*repro_cmd) {
            AcceptanceOptions options;
            options.threads = flags.threads;
            options.only = repro_only;
            options.progress = &std::cerr;
            const auto results = run_acceptance(options);
            const std::string table = acceptance_markdown(results);
            if (!repro_out.empty()) {
                std::ofstream out(repro_out);
                out << table;
            }
            std::cout << table;
            bool all = !results.empty();
            for (const auto& r : results) all = all && r.pass;
            return all ? kExitOk : kExitVerifyFail;
        }
        if (*explore_cmd && *explore_conj) {
            SieveOptions sieve;
            std::cerr << "exploratory search; small pool, no completeness claim\n";
            emit(explore_conjecture(conj_k, conj_pool, conj_j, sieve), format, std::cout);
            return kExitOk;
        }
    } catch (...) {
        return dispatch_error();
    }
    return kExitInvalid;
}
