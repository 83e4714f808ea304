// Acceptance suite runner: one line per criterion, nonzero exit on failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "domlab/acceptance.hpp"

int main(int argc, char** argv) {
    domlab::AcceptanceOptions options;
    options.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    options.progress = &std::cout;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) {
            options.threads = std::atoi(argv[++i]);
        } else if (arg == "--only" && i + 1 < argc) {
            std::string list = argv[++i];
            size_t pos = 0;
            while (pos < list.size()) {
                size_t comma = list.find(',', pos);
                if (comma == std::string::npos) comma = list.size();
                options.only.push_back(std::atoi(list.substr(pos, comma - pos).c_str()));
                pos = comma + 1;
            }
        }
    }

    const auto results = domlab::run_acceptance(options);
    bool all_pass = !results.empty();
    for (const auto& r : results) all_pass = all_pass && r.pass;
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed\n"
                           : "ACCEPTANCE: FAILURES PRESENT\n");
    return all_pass ? 0 : 1;
}
