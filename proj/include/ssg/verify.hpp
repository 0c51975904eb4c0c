#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/rn.hpp"

namespace ssg {

// Seeded generator with engine-only determinism: derived draws use modular
// reduction rather than std distributions, so identical seeds give identical
// streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }
    bool coin() { return (next() & 1) != 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

GroupWord random_word(const GroupPtr& group, Rng& rng, int max_len);
RationalPoint random_point(int d, Rng& rng, int max_pre, int max_per);
std::vector<Address> random_complete_partition(int d, Rng& rng, int splits);
RNElement random_rn(const GroupPtr& group, Rng& rng, int max_splits, int max_word_len);

// A pure prefix-exchange element fixing p (identity local actions).
RNElement random_prefix_stabilizer(const GroupPtr& group, Rng& rng,
                                   const RationalPoint& p);

// Independent oracle: walks the path through each letter's transducer table
// directly, without the word/restriction machinery.
std::string oracle_apply(const AutomatonGroup& group, const std::vector<Letter>& word,
                         std::string path);

enum class CheckStatus { Pass, Fail, NotStabilized };

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<Check> checks;  // sorted by id

    bool passed() const;
    bool bounds_hit() const;
    // 0 all pass, 1 a check failed, 2 only bounds exhaustion
    int exit_code() const;
};

std::vector<std::string> suite_names();
int default_cases(const std::string& suite);

// Runs the named property suite with the given seed. Throws DomainError for
// unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cases);

std::string render_report_text(const SuiteReport& report, bool color);
std::string render_report_json(const SuiteReport& report);

}  // namespace ssg
