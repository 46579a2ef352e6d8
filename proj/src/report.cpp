#include "ftft/report.hpp"

#include <algorithm>
#include <sstream>

namespace ftft {

Clause& Report::clause(const std::string& id) {
    for (auto& c : clauses_)
        if (c.id == id) return c;
    clauses_.push_back(Clause{id, true, {}});
    return clauses_.back();
}

void Report::fail(const std::string& id, const std::string& note) {
    Clause& c = clause(id);
    c.pass = false;
    if (c.notes.size() < kMaxNotes) c.notes.push_back(note);
}

void Report::check(const std::string& id, bool ok, const std::string& note_if_bad) {
    if (ok)
        clause(id);
    else
        fail(id, note_if_bad);
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.clauses_) {
        Clause& mine = clause(prefix + c.id);
        if (!c.pass) mine.pass = false;
        for (const auto& n : c.notes)
            if (mine.notes.size() < kMaxNotes) mine.notes.push_back(n);
    }
    for (const auto& [k, v] : other.flags) flags[prefix + k] = v;
}

bool Report::ok() const {
    return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.pass; });
}

bool Report::ok(const std::string& id) const {
    for (const auto& c : clauses_)
        if (c.id == id) return c.pass;
    return true;
}

bool Report::has(const std::string& id) const {
    return std::any_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) { return c.id == id; });
}

std::vector<std::string> Report::failing() const {
    std::vector<std::string> out;
    for (const auto& c : clauses_)
        if (!c.pass) out.push_back(c.id);
    return out;
}

Report Report::only(const std::string& id) const {
    Report r;
    for (const auto& c : clauses_)
        if (c.id == id) r.clauses_.push_back(c);
    r.flags = flags;
    return r;
}

std::string Report::str() const {
    std::ostringstream os;
    for (const auto& c : clauses_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
        for (const auto& n : c.notes) os << "    " << n << "\n";
    }
    for (const auto& [k, v] : flags) os << "FLAG " << k << "=" << (v ? "true" : "false") << "\n";
    os << (ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace ftft
