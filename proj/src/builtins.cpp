#include "ssg/builtins.hpp"

#include <algorithm>

namespace ssg {

namespace {

GroupPtr make_grigorchuk() {
    return AutomatonGroup::make("grigorchuk", 2,
                                {
                                    {"a", {1, 0}, {"id", "id"}},
                                    {"b", {0, 1}, {"a", "c"}},
                                    {"c", {0, 1}, {"a", "d"}},
                                    {"d", {0, 1}, {"id", "b"}},
                                });
}

// Binary adding machine: a(0w) = 1w, a(1w) = 0·a(w).
GroupPtr make_odometer() {
    return AutomatonGroup::make("odometer", 2, {{"a", {1, 0}, {"id", "a"}}});
}

// a swaps every letter of the sequence; a^2 = 1.
GroupPtr make_reflection() {
    return AutomatonGroup::make("reflection", 2, {{"a", {1, 0}, {"a", "a"}}});
}

// Generators t (rooted 3-cycle) and u = (t, t^2, u); t2 materializes t^-1.
GroupPtr make_gupta_sidki_3() {
    return AutomatonGroup::make("gupta_sidki_3", 3,
                                {
                                    {"t", {1, 2, 0}, {"id", "id", "id"}},
                                    {"t2", {2, 0, 1}, {"id", "id", "id"}},
                                    {"u", {0, 1, 2}, {"t", "t2", "u"}},
                                });
}

GroupPtr make_trivial() { return AutomatonGroup::make("trivial", 2, {}); }

}  // namespace

std::vector<std::string> builtin_names() {
    return {"grigorchuk", "gupta_sidki_3", "odometer", "reflection", "trivial"};
}

bool is_builtin(const std::string& name) {
    auto names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

GroupPtr builtin_group(const std::string& name) {
    if (name == "grigorchuk") return make_grigorchuk();
    if (name == "odometer") return make_odometer();
    if (name == "reflection") return make_reflection();
    if (name == "gupta_sidki_3") return make_gupta_sidki_3();
    if (name == "trivial") return make_trivial();
    throw DomainError("unknown builtin group '" + name + "'");
}

}  // namespace ssg
