// One PASS/FAIL line per acceptance criterion. Criterion 7 is known not to
// reproduce (the pairing coefficients are not pinned down by the fixtures), so
// its failure alone does not fail the run.
#include <cstdio>
#include <set>

#include "ftft/repro.hpp"

int main(int argc, char** argv) {
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::set<int> documented = {7};
    ftft::ReproReport rep = ftft::run_suite("paper");
    int unexpected = 0;
    for (const auto& r : rep.rows) {
        std::string line = ftft::verdict_name(r.verdict) + " criterion " + std::to_string(r.id) + ": " + r.anchor;
        if (r.verdict == ftft::Verdict::Fail) {
            if (documented.count(r.id))
                line += " (documented as not reproducible)";
            else
                ++unexpected;
        }
        std::printf("%s\n", line.c_str());
        if (verbose || r.verdict == ftft::Verdict::Fail) std::printf("    %s\n", r.detail.c_str());
    }
    std::printf("%d unexpected failure(s)\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
