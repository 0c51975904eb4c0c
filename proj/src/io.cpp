#include "ssg/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace ssg {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

// One line, comments stripped, split on blanks with column tracking.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back(Token{std::string(line.substr(start, i - start)),
                               static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token& tok, int line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    }
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return !std::isdigit(static_cast<unsigned char>(s[0]));
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line = 0;

    bool next(std::vector<Token>& tokens) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line;
            tokens = tokenize(raw);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

}  // namespace

GroupPtr parse_group(std::string_view text) {
    LineReader reader{text};
    std::vector<Token> toks;

    if (!reader.next(toks) || toks[0].text != "group" || toks.size() != 2) {
        throw ParseError("expected 'group <name>'", std::max(reader.line, 1), 1);
    }
    std::string name = toks[1].text;
    if (!valid_name(name)) {
        throw ParseError("invalid group name '" + name + "'", reader.line, toks[1].column);
    }

    if (!reader.next(toks) || toks[0].text != "alphabet" || toks.size() != 2) {
        throw ParseError("expected 'alphabet <d>'", std::max(reader.line, 1), 1);
    }
    int d = parse_int(toks[1], reader.line);
    if (d < 2 || d > kMaxAlphabet) {
        throw ParseError("alphabet size must be in [2," + std::to_string(kMaxAlphabet) + "]",
                         reader.line, toks[1].column);
    }

    std::vector<StateSpec> states;
    while (reader.next(toks)) {
        if (toks[0].text != "state") {
            throw ParseError("expected 'state <name> perm ... -> ...'", reader.line,
                             toks[0].column);
        }
        // state <name> perm i0..i(d-1) -> t0..t(d-1)
        const std::size_t expected = 3 + static_cast<std::size_t>(d) + 1 +
                                     static_cast<std::size_t>(d);
        if (toks.size() != expected) {
            throw ParseError("state line needs " + std::to_string(d) +
                             " permutation images and " + std::to_string(d) +
                             " transition targets", reader.line, toks[0].column);
        }
        StateSpec spec;
        spec.name = toks[1].text;
        if (!valid_name(spec.name) || spec.name == "id") {
            throw ParseError("invalid state name '" + spec.name + "'", reader.line,
                             toks[1].column);
        }
        if (toks[2].text != "perm") {
            throw ParseError("expected 'perm'", reader.line, toks[2].column);
        }
        for (int x = 0; x < d; ++x) {
            spec.perm.push_back(parse_int(toks[3 + static_cast<std::size_t>(x)], reader.line));
        }
        const Token& arrow = toks[3 + static_cast<std::size_t>(d)];
        if (arrow.text != "->") {
            throw ParseError("expected '->'", reader.line, arrow.column);
        }
        for (int x = 0; x < d; ++x) {
            spec.trans.push_back(toks[4 + static_cast<std::size_t>(d + x)].text);
        }
        states.push_back(std::move(spec));
    }

    try {
        return AutomatonGroup::make(std::move(name), d, std::move(states));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), reader.line, 1);
    }
}

std::string print_group(const AutomatonGroup& group) {
    std::ostringstream out;
    out << "group " << group.name() << "\n";
    out << "alphabet " << group.d() << "\n";
    for (int i = 0; i < group.state_count(); ++i) {
        out << "state " << group.state_name(i) << " perm";
        for (int x : group.perm(i)) out << ' ' << x;
        out << " ->";
        for (int x = 0; x < group.d(); ++x) {
            int t = group.transition(i, x);
            out << ' ' << (t == AutomatonGroup::kIdentity ? "id" : group.state_name(t));
        }
        out << "\n";
    }
    return out.str();
}

namespace {

Address parse_address_at(int d, const Token& tok, int line) {
    if (tok.text == "^") return "";
    for (std::size_t i = 0; i < tok.text.size(); ++i) {
        char c = tok.text[i];
        if (c < '0' || c >= static_cast<char>('0' + d)) {
            throw ParseError("invalid address letter '" + std::string(1, c) +
                             "' for alphabet of size " + std::to_string(d),
                             line, tok.column + static_cast<int>(i));
        }
    }
    return tok.text;
}

GroupWord parse_word_at(const GroupPtr& group, const Token& tok, int line) {
    if (tok.text == "id") return GroupWord::identity(group);
    std::vector<Letter> letters;
    std::size_t i = 0;
    const std::string& s = tok.text;
    while (i < s.size()) {
        std::size_t start = i;
        while (i < s.size() && s[i] != '.' && s[i] != '\'') ++i;
        std::string name = s.substr(start, i - start);
        int sign = 1;
        if (i < s.size() && s[i] == '\'') {
            sign = -1;
            ++i;
        }
        if (i < s.size()) {
            if (s[i] != '.') {
                throw ParseError("expected '.' between factors", line,
                                 tok.column + static_cast<int>(i));
            }
            ++i;
            if (i == s.size()) {
                throw ParseError("trailing '.' in word", line,
                                 tok.column + static_cast<int>(i) - 1);
            }
        }
        if (name == "id") continue;  // identity factors vanish
        auto idx = group->find_state(name);
        if (!idx) {
            throw ParseError("unknown state '" + name + "' in group '" + group->name() + "'",
                             line, tok.column + static_cast<int>(start));
        }
        letters.push_back(Letter{*idx, sign});
    }
    return GroupWord(group, std::move(letters));
}

}  // namespace

NamedElement parse_rn(std::string_view text, const GroupPtr& group) {
    LineReader reader{text};
    std::vector<Token> toks;

    if (!reader.next(toks) || toks[0].text != "rn" || toks.size() != 4 ||
        toks[2].text != "over") {
        throw ParseError("expected 'rn <name> over <groupname>'", std::max(reader.line, 1), 1);
    }
    std::string name = toks[1].text;
    if (toks[3].text != group->name()) {
        throw ParseError("element is over group '" + toks[3].text + "', expected '" +
                         group->name() + "'", reader.line, toks[3].column);
    }

    std::vector<RNRow> rows;
    int first_row_line = 0;
    while (reader.next(toks)) {
        if (toks[0].text != "row" || toks.size() != 6 || toks[2].text != "->" ||
            toks[4].text != "act") {
            throw ParseError("expected 'row <alpha> -> <beta> act <word>'", reader.line,
                             toks[0].column);
        }
        if (first_row_line == 0) first_row_line = reader.line;
        rows.push_back(RNRow{parse_address_at(group->d(), toks[1], reader.line),
                             parse_address_at(group->d(), toks[3], reader.line),
                             parse_word_at(group, toks[5], reader.line)});
    }
    if (rows.empty()) {
        throw ParseError("element has no rows", std::max(reader.line, 1), 1);
    }
    try {
        return NamedElement{std::move(name), RNElement::make(group, std::move(rows))};
    } catch (const DomainError& e) {
        throw ParseError(e.what(), first_row_line, 1);
    }
}

std::string print_rn(const NamedElement& named) {
    std::ostringstream out;
    out << "rn " << named.name << " over " << named.element.group()->name() << "\n";
    for (const auto& row : named.element.rows()) {
        out << "row " << format_address(row.domain) << " -> " << format_address(row.range)
            << " act " << row.action.str() << "\n";
    }
    return out.str();
}

RationalPoint parse_point(int d, std::string_view text) {
    std::size_t open = text.find('(');
    std::size_t close = text.find(')');
    if (open == std::string_view::npos || close != text.size() - 1 || close <= open) {
        throw ParseError("expected a point of the form alpha(beta), e.g. 0(01)", 1, 1);
    }
    std::string alpha(text.substr(0, open));
    std::string beta(text.substr(open + 1, close - open - 1));
    if (beta.empty()) throw ParseError("empty period in point", 1, static_cast<int>(open) + 2);
    try {
        return RationalPoint::make(d, std::move(alpha), std::move(beta));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

GroupWord parse_word(const GroupPtr& group, std::string_view text) {
    return parse_word_at(group, Token{std::string(text), 1}, 1);
}

Address parse_address(int d, std::string_view text) {
    return parse_address_at(d, Token{std::string(text), 1}, 1);
}

}  // namespace ssg
