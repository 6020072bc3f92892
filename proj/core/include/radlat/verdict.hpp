#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace radlat {

struct Clause {
    std::string id;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string witness; // first failure, empty on pass
    bool pass() const { return failed == 0; }
};

// Accumulates clause verdicts. Clauses are kept sorted by id so that merged
// reports serialise identically regardless of evaluation order.
class VerdictReport {
public:
    explicit VerdictReport(std::string suite = {}) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    void set_suite(std::string s) { suite_ = std::move(s); }

    // Records one evaluation. The witness callback only runs on failure.
    bool check(const std::string& id, bool ok, const std::function<std::string()>& witness = {});
    void skip(const std::string& id, std::size_t n = 1);
    // Informational finding, kept once per id (first value wins).
    void note(const std::string& id, const std::string& text);
    const std::map<std::string, std::string>& notes() const { return notes_; }
    // Folds another report in; context is prepended to its witnesses and
    // id_prefix to its clause and note ids.
    void merge(const VerdictReport& other, const std::string& context = {}, const std::string& id_prefix = {});

    bool passed() const;
    std::size_t failures() const;
    const Clause* find(const std::string& id) const;
    std::vector<Clause> clauses() const;
    // "id: witness" of the first failing clause in id order, or empty.
    std::string first_failure() const;
    std::string text() const;

private:
    std::string suite_;
    std::map<std::string, Clause> clauses_;
    std::map<std::string, std::string> notes_;
};

} // namespace radlat
