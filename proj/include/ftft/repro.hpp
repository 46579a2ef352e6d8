#pragma once
#include <string>
#include <vector>

#include "ftft/io.hpp"

namespace ftft {

enum class Verdict { Pass, Fail, Skip };
std::string verdict_name(Verdict v);

struct ReproRow {
    int id = 0;
    std::string anchor;  // short description of the reproduced result
    Verdict verdict = Verdict::Skip;
    double elapsed = 0;  // seconds
    std::string detail;
};

struct ReproReport {
    std::vector<ReproRow> rows;
    // One line per row; timings only on request so the default output is reproducible.
    std::string str(bool timing = false) const;
    Json to_json(bool timing = false) const;
    bool ok() const;
};

// "paper" runs every check; "quick" skips the slow ones. Rows are ordered by id.
ReproReport run_suite(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace ftft
