// Command-line front end: counting, enumeration, generating functions,
// formula verification and bijection demonstrations, with optional
// line-oriented JSON output.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibperm/bijections.hpp"
#include "fibperm/enumeration.hpp"
#include "fibperm/gf_formulas.hpp"
#include "fibperm/registry.hpp"
#include "fibperm/sequences.hpp"
#include "fibperm/verify.hpp"

using namespace fibperm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitDomain = 3;

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t p = text.find(sep, start);
        const std::string token = text.substr(start, p == std::string::npos ? std::string::npos
                                                                            : p - start);
        if (token.empty()) throw std::invalid_argument("empty integer in list '" + text + "'");
        out.push_back(std::stoi(token));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

std::pair<std::string, std::string> split_family(const std::string& spec) {
    const size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec '" + spec + "' needs the form name:params");
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

RestrictionSpec parse_rset(const std::string& params) {
    // k=4,a=2;3
    int k = -1;
    std::vector<int> a;
    size_t start = 0;
    while (start < params.size()) {
        size_t comma = params.find(',', start);
        const std::string field =
            params.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field.rfind("k=", 0) == 0) {
            k = std::stoi(field.substr(2));
        } else if (field.rfind("a=", 0) == 0) {
            a = parse_int_list(field.substr(2), ';');
        } else {
            throw std::invalid_argument("Rset field '" + field + "' (expected k=... or a=...)");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (k < 0 || a.empty()) throw std::invalid_argument("Rset needs both k=... and a=...");
    return RestrictionSpec(k, std::move(a));
}

PatternSet family_patterns(const std::string& spec) {
    if (spec.rfind("E^", 0) == 0) {
        const size_t open = spec.find('(');
        if (open == std::string::npos || spec.back() != ')')
            throw std::invalid_argument("extension spec needs the form E^k(patterns)");
        const int k = std::stoi(spec.substr(2, open - 2));
        const PatternSet inner = PatternSet::parse(
            std::string_view(spec).substr(open + 1, spec.size() - open - 2));
        return extension_set(inner, k);
    }
    const auto [name, params] = split_family(spec);
    if (name == "Rset") return restriction_set(parse_rset(params));
    const std::vector<int> p = parse_int_list(params, ',');
    auto need = [&](size_t count) {
        if (p.size() != count)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (name == "tau") return PatternSet{tau_perm(RSequence(p))};
    if (name == "alpha") {
        need(2);
        return PatternSet{alpha_perm(p[0], p[1])};
    }
    if (name == "beta") {
        need(3);
        return PatternSet{beta_perm(p[0], p[1], p[2])};
    }
    if (name == "gamma") {
        need(3);
        return PatternSet{gamma_perm(p[0], p[1], p[2])};
    }
    if (name == "omega") {
        need(1);
        return PatternSet{omega_perm(p[0])};
    }
    if (name == "mu") {
        need(2);
        return PatternSet{mu_perm(p[0], p[1])};
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

RationalGF family_gf(const std::string& spec) {
    const auto [name, params] = split_family(spec);
    if (name == "Rset") return restriction_gf(parse_rset(params));
    const std::vector<int> p = parse_int_list(params, ',');
    if (name == "tau") return tau_gf(RSequence(p));
    if (name == "alpha" && p.size() == 2) return tau_gf(alpha_rseq(p[0], p[1]));
    if (name == "beta" && p.size() == 3) return tau_gf(beta_rseq(p[0], p[1], p[2]));
    if (name == "gamma" && p.size() == 3) return gamma_gf(p[0], p[1], p[2]);
    if (name == "omega" && p.size() == 1) return omega_gf(p[0]);
    if (name == "mu" && p.size() == 2) return mu_gf(p[0], p[1]);
    throw std::invalid_argument("no generating function for spec '" + spec + "'");
}

std::string join_bigints(const std::vector<BigInt>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out;
}

struct Options {
    bool json = false;
    bool quiet = false;
    int order = 64;
    int nmax = 60;
    int oracle_max = 9;
};

int run_count(const Options& opt, int n, const std::string& rtext) {
    const PatternSet r = PatternSet::parse(rtext);
    const BigInt value = count_avoiders(n, r);
    if (opt.json) {
        json row{{"cmd", "count"}, {"params", r.str()}, {"n", n}, {"value", value.str()}};
        std::cout << row.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return kExitOk;
}

int run_enum(const Options& opt, int n, const std::string& rtext) {
    const PatternSet r = PatternSet::parse(rtext);
    const auto avoiders = enumerate_avoiders(n, r);
    for (const auto& pi : avoiders) {
        if (opt.json) {
            json row{{"cmd", "enum"}, {"params", r.str()}, {"n", n}, {"value", pi.str()}};
            std::cout << row.dump() << "\n";
        } else {
            std::cout << pi.str() << "\n";
        }
    }
    if (!opt.json && !opt.quiet) std::cerr << avoiders.size() << " permutation(s)\n";
    return kExitOk;
}

int run_gf(const Options& opt, const std::string& spec) {
    const RationalGF g = family_gf(spec);
    const auto series = g.series(opt.order);
    if (opt.json) {
        json row{{"cmd", "gf"},
                 {"params", spec},
                 {"num", json::array()},
                 {"den", json::array()},
                 {"series", json::array()}};
        for (const auto& c : g.num().coeffs()) row["num"].push_back(c.str());
        for (const auto& c : g.den().coeffs()) row["den"].push_back(c.str());
        for (const auto& c : series) row["series"].push_back(c.str());
        std::cout << row.dump() << "\n";
    } else {
        std::cout << "gf " << spec << "\n";
        std::cout << "  rational: " << g.str() << "\n";
        std::cout << "  coeffs:   " << g.coeff_form() << "\n";
        std::cout << "  series[0.." << opt.order << "]: " << join_bigints(series) << "\n";
    }
    return kExitOk;
}

int run_family(const Options& opt, const std::string& spec) {
    const PatternSet patterns = family_patterns(spec);
    if (opt.json) {
        json row{{"cmd", "family"}, {"params", spec}, {"value", patterns.str()}};
        std::cout << row.dump() << "\n";
    } else {
        std::cout << patterns.str() << "\n";
    }
    return kExitOk;
}

int run_registry(const Options& opt) {
    if (opt.json) {
        for (const auto& f : formula_registry()) {
            json row{{"cmd", "registry"},
                     {"id", f.id},
                     {"params", f.params},
                     {"patterns", f.pattern_set().str()},
                     {"valid_from", f.valid_from},
                     {"statement", f.statement}};
            std::cout << row.dump() << "\n";
        }
    } else {
        std::cout << registry_table();
    }
    return kExitOk;
}

int run_verify(const Options& opt, const std::string& id) {
    std::vector<VerifyReport> reports;
    const VerifyOptions vopt{opt.nmax, opt.oracle_max};
    if (id == "all") {
        reports = verify_all(vopt);
    } else {
        reports.push_back(verify_formula(id, vopt));
    }
    bool all_pass = true;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        if (opt.json) {
            for (const auto& row : rep.rows) {
                json j{{"id", rep.id},
                       {"n", row.n},
                       {"oracle", row.oracle ? json(row.oracle->str()) : json(nullptr)},
                       {"closed", row.closed.str()},
                       {"gf", row.series ? json(row.series->str()) : json(nullptr)},
                       {"ok", row.ok}};
                std::cout << j.dump() << "\n";
            }
            continue;
        }
        if (rep.pass && opt.quiet) continue;
        std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.id << ": n = " << rep.n_lo << ".."
                  << rep.n_hi << ", oracle to " << std::min<long long>(opt.oracle_max, rep.n_hi)
                  << (rep.used_gf ? ", series route" : ", reference route");
        if (!rep.pass) std::cout << " -- " << rep.first_discrepancy;
        std::cout << "\n";
        if (reports.size() == 1 && !opt.quiet) {
            std::vector<BigInt> values;
            for (const auto& row : rep.rows) values.push_back(row.closed);
            std::cout << "  values[" << rep.n_lo << ".." << rep.n_hi
                      << "]: " << join_bigints(values) << "\n";
        }
    }
    if (!opt.json && !opt.quiet && reports.size() > 1) {
        size_t passed = 0;
        for (const auto& rep : reports) passed += rep.pass ? 1 : 0;
        std::cout << passed << "/" << reports.size() << " formulas verified\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_bij(const Options& opt, const std::string& theorem, int n, int b,
            const std::optional<std::string>& apply, const std::optional<std::string>& invert,
            bool roundtrip) {
    const ThemedMap map = themed_map_from_string(theorem);
    if (apply) {
        const Tiling t = Tiling::parse(*apply);
        const Permutation pi = themed_bijection(map, t, b);
        if (opt.json) {
            json row{{"cmd", "bij"}, {"theorem", theorem}, {"apply", t.str()}, {"value", pi.str()}};
            std::cout << row.dump() << "\n";
        } else {
            std::cout << t.picture() << "  ->  " << pi.str() << "\n";
        }
        return kExitOk;
    }
    if (invert) {
        const Permutation pi = Permutation::parse(*invert);
        const Tiling t = themed_bijection_inverse(map, pi, b);
        if (opt.json) {
            json row{{"cmd", "bij"}, {"theorem", theorem}, {"invert", pi.str()}, {"value", t.str()}};
            std::cout << row.dump() << "\n";
        } else {
            std::cout << t.str() << "\n" << t.picture() << "\n";
        }
        return kExitOk;
    }
    if (!roundtrip) throw std::invalid_argument("bij needs one of --apply, --invert, --roundtrip");

    const PatternSet cls = themed_class(map, b);
    const auto domain = enumerate_tilings(themed_board_length(map, n), themed_domain(map, b));
    std::vector<Permutation> image;
    for (const auto& t : domain) {
        const Permutation pi = themed_bijection(map, t, b);
        if (!avoids_all(pi, cls) || themed_bijection_inverse(map, pi, b) != t) {
            std::cout << "FAIL: tiling " << t.str() << " does not round-trip\n";
            return kExitVerifyFailure;
        }
        image.push_back(pi);
    }
    std::sort(image.begin(), image.end());
    const auto avoiders = enumerate_avoiders(n, cls);
    if (image != avoiders) {
        std::cout << "FAIL: image differs from the avoider class at n = " << n << "\n";
        return kExitVerifyFailure;
    }
    if (opt.json) {
        json row{{"cmd", "bij"}, {"theorem", theorem}, {"n", n}, {"objects", domain.size()},
                 {"ok", true}};
        std::cout << row.dump() << "\n";
    } else {
        std::cout << "pass, " << domain.size() << " objects checked\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of pattern-restricted permutations"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "one JSON object per output line");
    app.add_flag("--quiet", opt.quiet, "suppress per-item detail");

    int n = 0;
    std::string rtext, spec, formula_id, theorem;
    std::optional<std::string> apply_text, invert_text;
    bool roundtrip = false;
    int bij_n = 6, bound = 3;

    auto* count_cmd = app.add_subcommand("count", "print |S_n(R)|");
    count_cmd->add_option("n", n, "permutation length")->required();
    count_cmd->add_option("R", rtext, "pattern set (may be empty)")->required();

    auto* enum_cmd = app.add_subcommand("enum", "stream S_n(R) in lexicographic order");
    enum_cmd->add_option("n", n, "permutation length")->required();
    enum_cmd->add_option("R", rtext, "pattern set (may be empty)")->required();

    auto* gf_cmd = app.add_subcommand("gf", "print a class generating function and its series");
    gf_cmd->add_option("family", spec, "family spec, e.g. tau:5,2,1 or gamma:0,2,2")->required();
    gf_cmd->add_option("--order", opt.order, "series truncation order (default 64)");

    auto* family_cmd = app.add_subcommand("family", "print the pattern(s) a family spec builds");
    family_cmd->add_option("spec", spec, "e.g. tau:10,9,7,6,5,2,1, Rset:k=4,a=2;3, E^1(123)")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "cross-check closed forms against the oracle and series");
    verify_cmd->add_option("id", formula_id, "formula id or 'all'")->required();
    verify_cmd->add_option("--nmax", opt.nmax, "series comparison bound (default 60)");
    verify_cmd->add_option("--oracle-max", opt.oracle_max, "brute-force bound (default 9)");

    auto* registry_cmd = app.add_subcommand("registry", "dump the formula registry");

    auto* bij_cmd = app.add_subcommand("bij", "apply, invert or exhaustively round-trip a bijection");
    bij_cmd->add_option("theorem", theorem, "one of T44, T47, T410, T54, T58")->required();
    bij_cmd->add_option("--n", bij_n, "permutation length for --roundtrip (default 6)");
    bij_cmd->add_option("--b", bound, "block bound for T44/T47/T410 (default 3)");
    auto* apply_opt = bij_cmd->add_option("--apply", [&](const CLI::results_t& res) {
        apply_text = res[0];
        return true;
    }, "tiling to map, e.g. 1,2,2,1");
    auto* invert_opt = bij_cmd->add_option("--invert", [&](const CLI::results_t& res) {
        invert_text = res[0];
        return true;
    }, "permutation to invert");
    auto* roundtrip_opt = bij_cmd->add_flag("--roundtrip", roundtrip, "exhaustive check at --n");
    apply_opt->excludes(invert_opt)->excludes(roundtrip_opt);
    invert_opt->excludes(roundtrip_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count_cmd->parsed()) return run_count(opt, n, rtext);
        if (enum_cmd->parsed()) return run_enum(opt, n, rtext);
        if (gf_cmd->parsed()) return run_gf(opt, spec);
        if (family_cmd->parsed()) return run_family(opt, spec);
        if (verify_cmd->parsed()) return run_verify(opt, formula_id);
        if (registry_cmd->parsed()) return run_registry(opt);
        if (bij_cmd->parsed())
            return run_bij(opt, theorem, bij_n, bound, apply_text, invert_text, roundtrip);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
