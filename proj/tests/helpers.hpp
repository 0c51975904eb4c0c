#pragma once

#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/builtins.hpp"
#include "ssg/io.hpp"
#include "ssg/rn.hpp"

namespace ssg::testing {

// Word from one char per state, e.g. wd(g, "ab'") = a.b'
inline GroupWord wd(const GroupPtr& g, const std::string& text) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        int sign = 1;
        if (i + 1 < text.size() && text[i + 1] == '\'') {
            sign = -1;
        }
        auto idx = g->find_state(std::string(1, text[i]));
        letters.push_back(Letter{*idx, sign});
        if (sign < 0) ++i;
    }
    return GroupWord(g, letters);
}

inline RationalPoint pt(int d, const std::string& pre, const std::string& per) {
    return RationalPoint::make(d, pre, per);
}

inline std::vector<Address> sorted(std::vector<Address> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace ssg::testing
