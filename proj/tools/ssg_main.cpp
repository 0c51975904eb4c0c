#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssg/builtins.hpp"
#include "ssg/germs.hpp"
#include "ssg/io.hpp"
#include "ssg/verify.hpp"
#include "ssg/witnesses.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitBounds = 2;
constexpr int kExitUsage = 3;

bool color_enabled() {
    const char* v = std::getenv("SSG_COLOR");
    return v != nullptr && std::string(v) == "1";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ssg::DomainError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ssg::GroupPtr load_group(const std::string& spec) {
    if (ssg::is_builtin(spec)) return ssg::builtin_group(spec);
    return ssg::parse_group(read_file(spec));
}

ssg::RNElement load_rn(const std::string& path, const ssg::GroupPtr& group) {
    return ssg::parse_rn(read_file(path), group).element;
}

// germ data for the period of p, from a freshly certified nucleus.
ssg::PeriodicNucleusData germ_data(const ssg::GroupPtr& group, const ssg::RationalPoint& p,
                                   std::size_t max_size, int max_depth) {
    ssg::NucleusOutcome outcome = ssg::compute_nucleus(group, max_size, max_depth);
    if (!outcome.ok()) throw ssg::BoundsError("nucleus: " + outcome.failure);
    return ssg::periodic_nucleus(*outcome.nucleus, group, p.period());
}

int cmd_nucleus(const std::string& group_spec, std::size_t max_size, int max_depth,
                bool json) {
    ssg::GroupPtr group = load_group(group_spec);
    ssg::NucleusOutcome outcome = ssg::compute_nucleus(group, max_size, max_depth);
    if (!outcome.ok()) {
        std::cerr << "NotContractingWithinBounds: " << outcome.failure << "\n";
        return kExitBounds;
    }
    const ssg::Nucleus& nuc = *outcome.nucleus;
    if (json) {
        nlohmann::json doc;
        doc["group"] = group->name();
        doc["size"] = nuc.elements.size();
        doc["depth_certificate"] = nuc.depth_certificate;
        doc["elements"] = nlohmann::json::array();
        for (const auto& e : nuc.elements) doc["elements"].push_back(e.str());
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "nucleus of " << group->name() << ": " << nuc.elements.size()
                  << " elements, depth certificate " << nuc.depth_certificate << "\n";
        for (const auto& e : nuc.elements) std::cout << e.str() << "\n";
    }
    return kExitPass;
}

int cmd_wp(const std::string& group_spec, const std::string& word_text) {
    ssg::GroupPtr group = load_group(group_spec);
    ssg::GroupWord w = ssg::parse_word(group, word_text);
    std::cout << (ssg::is_trivial(w) ? "trivial" : "nontrivial") << "\n";
    return kExitPass;
}

int cmd_eval(const std::string& group_spec, const std::string& point_text,
             const std::string& rn_path, const std::string& word_text) {
    ssg::GroupPtr group = load_group(group_spec);
    ssg::RationalPoint p = ssg::parse_point(group->d(), point_text);
    ssg::RNElement h = ssg::RNElement::identity(group);
    if (!rn_path.empty()) {
        h = load_rn(rn_path, group);
    } else if (!word_text.empty()) {
        h = ssg::RNElement::make(group, {ssg::RNRow{"", "", ssg::parse_word(group, word_text)}});
    } else {
        throw CLI::ValidationError("eval", "provide --rn or --word");
    }
    std::cout << ssg::format_point(ssg::evaluate(h, p)) << "\n";
    return kExitPass;
}

int cmd_germ(const std::string& group_spec, const std::string& point_text,
             const std::string& rn_path, int cap, std::size_t max_size, int max_depth,
             bool json) {
    ssg::GroupPtr group = load_group(group_spec);
    ssg::RationalPoint p = ssg::parse_point(group->d(), point_text);
    ssg::RNElement h = load_rn(rn_path, group);
    ssg::PeriodicNucleusData data = germ_data(group, p, max_size, max_depth);
    ssg::GermOutcome outcome = ssg::germ_signature(h, p, data, cap);
    if (!outcome.ok()) {
        std::cerr << outcome.failure << "\n";
        return kExitBounds;
    }
    const ssg::GermSignature& sig = *outcome.signature;
    if (json) {
        nlohmann::json doc;
        doc["point"] = sig.alpha + "(" + sig.beta + ")";
        doc["n"] = sig.nucleus_component.str();
        doc["delta"] = sig.delta;
        doc["depth"] = sig.stabilized_at;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << sig.render() << "\n";
    }
    return kExitPass;
}

std::pair<ssg::RationalPoint, ssg::RationalPoint> parse_pair(const ssg::GroupPtr& group,
                                                             const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        throw ssg::DomainError("pair must look like p:q, got '" + text + "'");
    }
    return {ssg::parse_point(group->d(), text.substr(0, colon)),
            ssg::parse_point(group->d(), text.substr(colon + 1))};
}

// Best-effort bounded search for one element sending p to q: global words,
// then prefix exchanges of bounded depth decorated with bounded words.
std::optional<ssg::RNElement> search_mover(const ssg::GroupPtr& group,
                                           const ssg::RationalPoint& p,
                                           const ssg::RationalPoint& q, int max_word,
                                           int max_prefix) {
    std::vector<ssg::GroupWord> words{ssg::GroupWord::identity(group)};
    std::vector<ssg::GroupWord> frontier = words;
    for (int len = 1; len <= max_word; ++len) {
        std::vector<ssg::GroupWord> next;
        for (const auto& w : frontier) {
            for (int s = 0; s < group->state_count(); ++s) {
                for (int sign : {1, -1}) {
                    ssg::GroupWord ext = w * ssg::GroupWord::generator(group, s, sign);
                    if (ext.size() == static_cast<std::size_t>(len)) next.push_back(ext);
                }
            }
        }
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    for (const auto& w : words) {
        ssg::RNElement h = ssg::RNElement::make(group, {ssg::RNRow{"", "", w}});
        if (ssg::evaluate(h, p) == q) return h;
    }
    for (int l1 = 1; l1 <= max_prefix; ++l1) {
        for (int l2 = 1; l2 <= max_prefix; ++l2) {
            ssg::Address c1 = p.expand(static_cast<std::size_t>(l1));
            ssg::Address c2 = q.expand(static_cast<std::size_t>(l2));
            for (const auto& w : words) {
                ssg::RNElement h =
                    ssg::make_element(group, {ssg::RNRow{c1, c2, w}});
                if (ssg::evaluate(h, p) == q) return h;
            }
        }
    }
    return std::nullopt;
}

int cmd_transport(const std::string& group_spec, const std::vector<std::string>& pair_texts,
                  const std::vector<std::string>& mover_paths, int max_word,
                  int max_prefix) {
    ssg::GroupPtr group = load_group(group_spec);
    std::vector<std::pair<ssg::RationalPoint, ssg::RationalPoint>> pairs;
    for (const auto& t : pair_texts) pairs.push_back(parse_pair(group, t));
    if (pairs.empty()) throw CLI::ValidationError("transport", "at least one --pair required");

    std::vector<ssg::RNElement> movers;
    if (!mover_paths.empty()) {
        if (mover_paths.size() != pairs.size()) {
            throw CLI::ValidationError("transport", "one --mover per --pair");
        }
        for (const auto& path : mover_paths) movers.push_back(load_rn(path, group));
    } else {
        // Best-effort orbit search; failure here does not mean the points are
        // in different orbits.
        for (const auto& [p, q] : pairs) {
            auto found = search_mover(group, p, q, max_word, max_prefix);
            if (!found) {
                std::cerr << "bounded search found no element sending " << ssg::format_point(p)
                          << " to " << ssg::format_point(q)
                          << " (raise --search-words / --search-depth; the search is "
                             "best-effort)\n";
                return kExitBounds;
            }
            movers.push_back(std::move(*found));
        }
    }

    ssg::RNElement h = ssg::tuple_transporter(group, pairs, movers);
    for (const auto& [p, q] : pairs) {
        if (ssg::evaluate(h, p) != q) {
            std::cerr << "internal check failed: transporter misses " << ssg::format_point(p)
                      << "\n";
            return kExitCheckFailure;
        }
    }
    std::cout << ssg::print_rn(ssg::NamedElement{"transporter", h});
    return kExitPass;
}

int cmd_phi(const std::string& group_spec, const std::vector<std::string>& point_texts,
            const std::string& rn_path, bool show_frame) {
    ssg::GroupPtr group = load_group(group_spec);
    std::vector<ssg::RationalPoint> points;
    for (const auto& t : point_texts) points.push_back(ssg::parse_point(group->d(), t));
    if (points.empty()) throw CLI::ValidationError("phi", "at least one --point required");
    ssg::RNElement h = load_rn(rn_path, group);

    ssg::SeparatedSystem system = ssg::separate_points(group->d(), points);
    ssg::EPrimeData data = ssg::build_e_prime(system);
    ssg::RNElement image = ssg::phi(h, data);
    if (show_frame) {
        auto join = [](const std::vector<ssg::Address>& v) {
            std::string s;
            for (const auto& a : v) {
                if (!s.empty()) s += ' ';
                s += ssg::format_address(a);
            }
            return s;
        };
        std::cout << "# gamma: " << join(data.gamma) << "\n";
        std::cout << "# delta: " << join(data.delta) << "\n";
        std::cout << "# eprime: " << join(data.e_prime) << "\n";
    }
    std::cout << ssg::print_rn(ssg::NamedElement{"phi", image});
    return kExitPass;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, bool json) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = ssg::suite_names();
    } else {
        names.push_back(suite);
    }
    int exit = kExitPass;
    for (const auto& name : names) {
        ssg::SuiteReport report = ssg::run_suite(name, seed, cases);
        std::cout << (json ? ssg::render_report_json(report)
                           : ssg::render_report_text(report, color_enabled()));
        int code = report.exit_code();
        if (code == kExitCheckFailure) {
            exit = kExitCheckFailure;
        } else if (code == kExitBounds && exit == kExitPass) {
            exit = kExitBounds;
        }
    }
    return exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-similar groups, cone-partition bijections and their germs"};
    app.require_subcommand(1);

    std::string group_spec, point_text, rn_path, word_text, suite_name;
    std::vector<std::string> pair_texts, mover_paths, point_texts;
    std::size_t max_size = 256;
    int max_depth = 64;
    int cap = 32;
    std::uint64_t seed = 1;
    int cases = 0;
    int search_words = 2;
    int search_depth = 4;
    std::string format = "text";
    bool show_frame = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag_callback("--json", [&format] { format = "json"; },
                               "shorthand for --format json");
    };

    auto* nucleus = app.add_subcommand("nucleus", "nucleus representatives and depth certificate");
    nucleus->add_option("group", group_spec, "builtin name or group file")->required();
    nucleus->add_option("--max-size", max_size, "candidate-set bound");
    nucleus->add_option("--max-depth", max_depth, "restriction-graph depth bound");
    add_format(nucleus);

    auto* wp = app.add_subcommand("wp", "word problem: trivial or nontrivial");
    wp->add_option("group", group_spec)->required();
    wp->add_option("word", word_text, "e.g. a.b'.c")->required();

    auto* eval = app.add_subcommand("eval", "apply an element to a rational point");
    eval->add_option("group", group_spec)->required();
    eval->add_option("point", point_text, "e.g. 0(01)")->required();
    eval->add_option("--rn", rn_path, "element file");
    eval->add_option("--word", word_text, "global word element");

    auto* germ = app.add_subcommand("germ", "germ signature at a fixed rational point");
    germ->add_option("group", group_spec)->required();
    germ->add_option("point", point_text)->required();
    germ->add_option("--rn", rn_path, "element file")->required();
    germ->add_option("--cap", cap, "stabilization depth cap");
    germ->add_option("--max-size", max_size);
    germ->add_option("--max-depth", max_depth);
    add_format(germ);

    auto* transport = app.add_subcommand("transport", "move one tuple of points onto another");
    transport->add_option("group", group_spec)->required();
    transport->add_option("--pair", pair_texts, "p:q (repeatable)")->required();
    transport->add_option("--mover", mover_paths, "element file sending p to q (repeatable)");
    transport->add_option("--search-words", search_words,
                          "bounded mover search: max word length (best-effort)");
    transport->add_option("--search-depth", search_depth,
                          "bounded mover search: max prefix depth (best-effort)");

    auto* phi_cmd = app.add_subcommand("phi", "embed an element into the fixer of E'");
    phi_cmd->add_option("group", group_spec)->required();
    phi_cmd->add_option("--point", point_texts, "point of S (repeatable)")->required();
    phi_cmd->add_option("--rn", rn_path, "element file")->required();
    phi_cmd->add_flag("--show-frame", show_frame, "print gamma/delta/E' cones as comments");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite_name, "wp|nucleus|make|oligo|germ|stab|algebra|all")
        ->required();
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--cases", cases, "number of randomized cases");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (nucleus->parsed()) return cmd_nucleus(group_spec, max_size, max_depth, format == "json");
        if (wp->parsed()) return cmd_wp(group_spec, word_text);
        if (eval->parsed()) return cmd_eval(group_spec, point_text, rn_path, word_text);
        if (germ->parsed()) {
            return cmd_germ(group_spec, point_text, rn_path, cap, max_size, max_depth, format == "json");
        }
        if (transport->parsed()) {
            return cmd_transport(group_spec, pair_texts, mover_paths, search_words,
                                 search_depth);
        }
        if (phi_cmd->parsed()) return cmd_phi(group_spec, point_texts, rn_path, show_frame);
        if (verify->parsed()) return cmd_verify(suite_name, seed, cases, format == "json");
    } catch (const ssg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ssg::BoundsError& e) {
        std::cerr << "bounds exhausted: " << e.what() << "\n";
        return kExitBounds;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
