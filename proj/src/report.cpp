#include "tlmp/report.hpp"

#include <sstream>

namespace tlmp {

bool Report::passed() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
    for (auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

const Check* Report::find(const std::string& label) const {
    for (auto& c : checks)
        if (c.label == label) return &c;
    return nullptr;
}

void Report::absorb(const Report& r, const std::string& prefix) {
    for (auto c : r.checks) {
        if (!prefix.empty()) c.label = prefix + ": " + c.label;
        checks.push_back(std::move(c));
    }
}

std::string Report::text() const {
    std::ostringstream os;
    os << title << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    for (auto& c : checks) {
        os << "  [" << (c.passed ? "ok  " : "FAIL") << "] " << c.label;
        if (c.tuples) os << " (" << c.tuples << " tuples)";
        if (!c.note.empty()) os << " - " << c.note;
        os << '\n';
        if (!c.passed && c.witness) {
            os << "         at";
            for (auto& a : c.witness->args) os << ' ' << a;
            os << "\n         lhs = " << to_string(c.witness->lhs) << "\n         rhs = " << to_string(c.witness->rhs)
               << '\n';
        }
    }
    return os.str();
}

void for_each_tuple(const std::vector<std::size_t>& dims, const std::vector<int>& groups,
                    const std::function<bool(const Indices&)>& fn) {
    const std::size_t n = dims.size();
    for (auto d : dims)
        if (d == 0) return;
    Indices idx(n, 0);
    // smallest admissible value for slot k given earlier slots
    auto floor_of = [&](std::size_t k) -> std::size_t {
        if (groups[k] == 0) return 0;
        for (std::size_t m = k; m-- > 0;)
            if (groups[m] == groups[k]) return idx[m] + 1;
        return 0;
    };
    // fill slots from..n-1 with their floors; false if some slot overflows
    auto fill = [&](std::size_t from) {
        for (std::size_t m = from; m < n; ++m) {
            idx[m] = floor_of(m);
            if (idx[m] >= dims[m]) return false;
        }
        return true;
    };
    // minimal floors failing means no admissible tuple at all
    if (!fill(0)) return;
    while (true) {
        if (!fn(idx)) return;
        // odometer: bump the last slot that can move, refill the rest
        bool advanced = false;
        std::size_t k = n;
        while (k-- > 0) {
            if (++idx[k] >= dims[k]) continue;
            if (fill(k + 1)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

Check check_identity(const std::string& label, const std::vector<Slot>& slots, const SideFn& sides) {
    Check c;
    c.label = label;
    std::vector<std::size_t> dims;
    std::vector<int> groups;
    for (auto& s : slots) {
        dims.push_back(s.names->size());
        groups.push_back(s.group);
    }
    for_each_tuple(dims, groups, [&](const Indices& idx) {
        ++c.tuples;
        auto [lhs, rhs] = sides(idx);
        if (lhs == rhs) return true;
        c.passed = false;
        Witness w;
        for (std::size_t m = 0; m < slots.size(); ++m) w.args.push_back(slots[m].var + "=" + (*slots[m].names)[idx[m]]);
        w.lhs = std::move(lhs);
        w.rhs = std::move(rhs);
        c.witness = std::move(w);
        return false;
    });
    return c;
}

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(prefix + std::to_string(i + 1));
    return r;
}

} // namespace tlmp
