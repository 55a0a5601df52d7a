#ifndef TLMP_REPORT_HPP
#define TLMP_REPORT_HPP

#include "tlmp/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlmp {

struct Witness {
    std::vector<std::string> args; // e.g. "x1=e2"
    Vector lhs, rhs;
};

struct Check {
    std::string label;
    bool passed = true;
    std::size_t tuples = 0;
    std::optional<Witness> witness;
    std::string note; // free text for non-tuple checks
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
    const Check* first_failure() const;
    const Check* find(const std::string& label) const;
    void add(Check c) { checks.push_back(std::move(c)); }
    // append another report's checks, labels prefixed with "prefix: "
    void absorb(const Report& r, const std::string& prefix = {});
    std::string text() const;
};

// A mathematical precondition failed (non-cocycle, axiom violation, ...).
// Distinct from InputError: the input was well formed.
struct AxiomError : std::runtime_error {
    Report report;
    AxiomError(const std::string& what, Report r) : std::runtime_error(what), report(std::move(r)) {}
};

// One argument slot of an identity: a variable name, the basis labels of
// the space it ranges over, and an ordering group.  Slots sharing a nonzero
// group must take strictly increasing indices (alternation lets us skip the
// rest).
struct Slot {
    std::string var;
    const std::vector<std::string>* names;
    int group = 0;
};

using Indices = std::vector<std::size_t>;
using SideFn = std::function<std::pair<Vector, Vector>(const Indices&)>;

// Calls fn on every admissible tuple, lexicographically (first slot
// slowest); stops early when fn returns false.
void for_each_tuple(const std::vector<std::size_t>& dims, const std::vector<int>& groups,
                    const std::function<bool(const Indices&)>& fn);

// Enumerates all admissible basis tuples lexicographically (first slot
// slowest) and compares lhs/rhs.  The first mismatch is kept as witness.
Check check_identity(const std::string& label, const std::vector<Slot>& slots, const SideFn& sides);

// Default basis labels "<prefix>1".."<prefix>n".
std::vector<std::string> default_names(const std::string& prefix, std::size_t n);

} // namespace tlmp

#endif
