#pragma once
#include <map>
#include <string>
#include <vector>

namespace ftft {

struct Clause {
    std::string id;
    bool pass = true;
    std::vector<std::string> notes;
};

// Ordered list of named clauses. A clause fails as soon as one violation is
// recorded against it.
class Report {
public:
    Clause& clause(const std::string& id);
    void pass(const std::string& id) { clause(id); }
    void fail(const std::string& id, const std::string& note);
    void check(const std::string& id, bool ok, const std::string& note_if_bad);
    void merge(const Report& other, const std::string& prefix = "");

    bool ok() const;
    bool ok(const std::string& id) const;
    bool has(const std::string& id) const;
    std::vector<std::string> failing() const;
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::map<std::string, bool> flags;

    // Keep only one clause (used by --clause).
    Report only(const std::string& id) const;
    std::string str() const;

private:
    std::vector<Clause> clauses_;
    static constexpr size_t kMaxNotes = 8;
};

}  // namespace ftft
