#include "radlat/verdict.hpp"

#include <sstream>

namespace radlat {

bool VerdictReport::check(const std::string& id, bool ok, const std::function<std::string()>& witness) {
    Clause& c = clauses_[id];
    c.id = id;
    ++c.checked;
    if (!ok) {
        if (c.failed == 0) c.witness = witness ? witness() : std::string("(no witness)");
        if (c.witness.empty()) c.witness = "(no witness)";
        ++c.failed;
    }
    return ok;
}

void VerdictReport::skip(const std::string& id, std::size_t n) {
    Clause& c = clauses_[id];
    c.id = id;
    c.skipped += n;
}

void VerdictReport::note(const std::string& id, const std::string& text) { notes_.emplace(id, text); }

void VerdictReport::merge(const VerdictReport& other, const std::string& context, const std::string& id_prefix) {
    for (const auto& [id, text] : other.notes_)
        notes_.emplace(id_prefix + id, context.empty() ? text : context + ": " + text);
    for (const auto& [oid, oc] : other.clauses_) {
        const std::string id = id_prefix + oid;
        Clause& c = clauses_[id];
        c.id = id;
        c.checked += oc.checked;
        c.skipped += oc.skipped;
        if (oc.failed && c.failed == 0)
            c.witness = context.empty() ? oc.witness : context + ": " + oc.witness;
        c.failed += oc.failed;
    }
}

bool VerdictReport::passed() const { return failures() == 0; }

std::size_t VerdictReport::failures() const {
    std::size_t f = 0;
    for (const auto& [id, c] : clauses_) f += c.failed;
    return f;
}

const Clause* VerdictReport::find(const std::string& id) const {
    auto it = clauses_.find(id);
    return it == clauses_.end() ? nullptr : &it->second;
}

std::vector<Clause> VerdictReport::clauses() const {
    std::vector<Clause> out;
    out.reserve(clauses_.size());
    for (const auto& [id, c] : clauses_) out.push_back(c);
    return out;
}

std::string VerdictReport::first_failure() const {
    for (const auto& [id, c] : clauses_)
        if (c.failed) return id + ": " + c.witness;
    return {};
}

std::string VerdictReport::text() const {
    std::ostringstream os;
    os << "suite " << (suite_.empty() ? "-" : suite_) << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [id, c] : clauses_) {
        os << "  " << (c.failed ? "FAIL" : c.checked ? "pass" : "n/a ") << "  " << id << "  checked=" << c.checked;
        if (c.skipped) os << " skipped=" << c.skipped;
        if (c.failed) os << " failed=" << c.failed << "\n        witness: " << c.witness;
        os << "\n";
    }
    for (const auto& [id, text] : notes_) os << "  note  " << id << ": " << text << "\n";
    return os.str();
}

} // namespace radlat
