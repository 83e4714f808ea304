#include "domlab/certificates.hpp"

#include <fstream>

#include "domlab/errors.hpp"

namespace domlab {

using nlohmann::json;

namespace {

const char* kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::dominating: return "dominating";
        case CertificateKind::total_dominating: return "total_dominating";
        case CertificateKind::noncoprime_run: return "noncoprime_run";
    }
    return "?";
}

CertificateKind kind_from_name(const std::string& s) {
    if (s == "dominating") return CertificateKind::dominating;
    if (s == "total_dominating") return CertificateKind::total_dominating;
    if (s == "noncoprime_run") return CertificateKind::noncoprime_run;
    throw schema_error("unknown certificate kind '" + s + "'");
}

}  // namespace

json certificate_to_json(const Certificate& c) {
    json j;
    j["kind"] = kind_name(c.kind);
    json instance;
    if (c.sizes) {
        instance["sizes"] = *c.sizes;
    } else if (c.prime_instance) {
        instance["primes"] = c.prime_instance->primes();
    } else if (c.modulus_instance) {
        instance["modulus"] = c.modulus_instance->to_decimal();
    }
    j["instance"] = instance;
    if (!c.vertices.empty()) j["vertices"] = c.vertices;
    if (!c.residues.empty()) {
        json arr = json::array();
        for (const auto& r : c.residues) arr.push_back(r.to_decimal());
        j["residues"] = arr;
    }
    if (c.run_start) {
        j["run"] = {{"start", c.run_start->to_decimal()},
                    {"length", *c.run_length}};
    }
    if (c.claimed_value) j["claimed_value"] = *c.claimed_value;
    return j;
}

Certificate certificate_from_json(const json& j) {
    validate_certificate_json(j);
    Certificate c;
    c.kind = kind_from_name(j.at("kind").get<std::string>());
    const json& instance = j.at("instance");
    if (instance.contains("sizes")) {
        c.sizes = instance.at("sizes").get<std::vector<int>>();
    } else if (instance.contains("primes")) {
        c.prime_instance =
            SquarefreeModulus::from_primes(instance.at("primes").get<std::vector<uint64_t>>());
    } else if (instance.contains("modulus")) {
        c.modulus_instance = Bigint::from_decimal(instance.at("modulus").get<std::string>());
    }
    if (j.contains("vertices")) c.vertices = j.at("vertices").get<std::vector<Vertex>>();
    if (j.contains("residues")) {
        for (const auto& r : j.at("residues"))
            c.residues.push_back(Bigint::from_decimal(r.get<std::string>()));
    }
    if (j.contains("run")) {
        c.run_start = Bigint::from_decimal(j.at("run").at("start").get<std::string>());
        c.run_length = j.at("run").at("length").get<uint64_t>();
    }
    if (j.contains("claimed_value")) c.claimed_value = j.at("claimed_value").get<int64_t>();
    return c;
}

json gap_certification_to_json(const GapCertification& g) {
    json j;
    j["modulus"] = g.modulus.modulus().to_decimal();
    j["primes"] = g.modulus.primes();
    j["total_dominating"] = certificate_to_json(g.total_dominating);
    Certificate run;
    run.kind = CertificateKind::noncoprime_run;
    run.prime_instance = g.run_witness.modulus;
    run.run_start = g.run_witness.start;
    run.run_length = g.run_witness.length;
    j["run_witness"] = certificate_to_json(run);
    j["certified_gap"] = g.certified_gap;
    j["verified"] = g.verified;
    return j;
}

GapCertification gap_certification_from_json(const json& j) {
    if (!j.is_object() || !j.contains("total_dominating") || !j.contains("run_witness") ||
        !j.contains("certified_gap") || !j.contains("primes"))
        throw schema_error("not a gap certification payload");
    GapCertification g;
    g.modulus = SquarefreeModulus::from_primes(j.at("primes").get<std::vector<uint64_t>>());
    g.total_dominating = certificate_from_json(j.at("total_dominating"));
    Certificate run = certificate_from_json(j.at("run_witness"));
    if (run.kind != CertificateKind::noncoprime_run || !run.prime_instance)
        throw schema_error("run_witness must be a factored noncoprime_run certificate");
    g.run_witness = GapWitness{*run.prime_instance, *run.run_start, *run.run_length};
    g.certified_gap = j.at("certified_gap").get<int64_t>();
    g.verified = j.value("verified", false);
    return g;
}

bool is_gap_certification_json(const json& j) {
    return j.is_object() && j.contains("certified_gap") && j.contains("run_witness");
}

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw schema_error(message);
}

bool is_decimal_string(const json& j) {
    if (!j.is_string()) return false;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace

void validate_certificate_json(const json& j) {
    require(j.is_object(), "certificate must be an object");
    require(j.contains("kind") && j.at("kind").is_string(), "missing string field 'kind'");
    const auto kind = kind_from_name(j.at("kind").get<std::string>());

    require(j.contains("instance") && j.at("instance").is_object(),
            "missing object field 'instance'");
    const json& instance = j.at("instance");
    const int forms = int(instance.contains("sizes")) + int(instance.contains("primes")) +
                      int(instance.contains("modulus"));
    require(forms == 1, "instance must carry exactly one of sizes / primes / modulus");
    if (instance.contains("sizes")) {
        require(instance.at("sizes").is_array() && !instance.at("sizes").empty(),
                "instance.sizes must be a nonempty array");
        for (const auto& v : instance.at("sizes"))
            require(v.is_number_integer(), "instance.sizes entries must be integers");
    }
    if (instance.contains("primes")) {
        require(instance.at("primes").is_array(), "instance.primes must be an array");
        for (const auto& v : instance.at("primes"))
            require(v.is_number_unsigned() || v.is_number_integer(),
                    "instance.primes entries must be integers");
    }
    if (instance.contains("modulus"))
        require(is_decimal_string(instance.at("modulus")),
                "instance.modulus must be a decimal string");

    if (kind == CertificateKind::noncoprime_run) {
        require(j.contains("run") && j.at("run").is_object(), "noncoprime_run needs 'run'");
        require(is_decimal_string(j.at("run").at("start")), "run.start must be a decimal string");
        require(j.at("run").contains("length") && j.at("run").at("length").is_number_integer(),
                "run.length must be an integer");
        require(!j.contains("vertices") && !j.contains("residues"),
                "noncoprime_run carries no vertex data");
    } else {
        const bool tuple_instance = instance.contains("sizes");
        if (tuple_instance) {
            require(j.contains("vertices") && j.at("vertices").is_array() &&
                        !j.at("vertices").empty(),
                    "tuple certificate needs a nonempty 'vertices' array");
            for (const auto& v : j.at("vertices")) {
                require(v.is_array(), "vertices entries must be coordinate arrays");
                for (const auto& coordinate : v)
                    require(coordinate.is_number_integer(), "coordinates must be integers");
            }
            require(!j.contains("residues"), "tuple certificate cannot carry residues");
        } else {
            require(j.contains("residues") && j.at("residues").is_array() &&
                        !j.at("residues").empty(),
                    "residue certificate needs a nonempty 'residues' array");
            for (const auto& r : j.at("residues"))
                require(is_decimal_string(r), "residues must be decimal strings");
            require(!j.contains("vertices"), "residue certificate cannot carry vertices");
        }
        require(!j.contains("run"), "domination certificate carries no run");
    }
    if (j.contains("claimed_value"))
        require(j.at("claimed_value").is_number_integer(), "claimed_value must be an integer");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw invalid_argument_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace domlab
