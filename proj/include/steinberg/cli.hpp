#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steinberg/wire.hpp"

namespace steinberg::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exceeded = 3, invalid_input = 4 };

namespace detail {

using wire::Json;

struct Options {
    std::string family = "A";
    int rank = 0;
    std::uint64_t seed = 0;
    bool json = true;
    std::string object;
    std::string color;
    bool count = false;
    std::string left, right, torus, face;
    bool affine = false;
    std::string kind;
    std::string suite = "all";
};

/// Inline JSON, or @path to read it from a file.
inline std::string read_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "[1,2]", "1,2" or "" (the empty set).
inline ColorSet parse_color(const std::string& text, Family family) {
    std::string s = text;
    if (s.find('[') == std::string::npos) s = "[" + s + "]";
    return wire::from_json<ColorSet>(wire::parse_text(s), family);
}

template <class T>
T parse_input(const std::string& arg, Family family) {
    return wire::from_json<T>(wire::parse_text(read_input(arg)), family);
}

template <class Face>
Json face_list(const std::vector<Face>& faces) {
    Json out = Json::array();
    for (const auto& f : faces) out.push_back(wire::to_json(f));
    return out;
}

inline Json run_enumerate(const Options& o, Family family) {
    std::optional<ColorSet> color;
    if (!o.color.empty()) color = parse_color(o.color, family);
    const int n = family.rank;
    if (o.object == "group") {
        if (color) throw CLI::ValidationError("--color", "does not apply to --object group");
        const auto all = enumerate_group(family);
        if (o.count) return all.size();
        Json out = Json::array();
        for (const auto& w : all) out.push_back(wire::to_json(w));
        return out;
    }
    if (o.object == "faces") {
        if (family.is_a()) {
            const auto f = enumerate_set_compositions(n, color);
            return o.count ? Json(f.size()) : face_list(f);
        }
        const auto f = enumerate_sym_compositions(n, color);
        return o.count ? Json(f.size()) : face_list(f);
    }
    if (family.is_a()) {
        const auto f = enumerate_spin_necklaces(n, color);
        return o.count ? Json(f.size()) : face_list(f);
    }
    const auto f = enumerate_sym_necklaces(n, color);
    return o.count ? Json(f.size()) : face_list(f);
}

template <class L, class R>
Json apply(const std::string& left, const std::string& right, Family family) {
    const auto l = parse_input<L>(left, family);
    const auto r = parse_input<R>(right, family);
    return wire::to_json(l * r);
}

inline Json run_product(const Options& o, Family family) {
    if (family.is_a()) return apply<SetComposition, SetComposition>(o.left, o.right, family);
    return apply<SymComposition, SymComposition>(o.left, o.right, family);
}

inline Json run_act(const Options& o, Family family) {
    if (family.is_a()) return apply<SpinNecklace, SetComposition>(o.torus, o.face, family);
    return apply<SymNecklace, SymComposition>(o.torus, o.face, family);
}

}  // namespace detail

/// Runs one command line (without the program name).  JSON goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Json;
    detail::Options o;
    CLI::App app{"Coxeter complexes, Steinberg tori and descent algebras of types A and C", "steinberg"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "A or C")->check(CLI::IsMember({"A", "C"}))->capture_default_str();
        sub->add_option("--rank", o.rank, "n: permutations of [n] (A) or signed permutations (C)")
            ->required()
            ->check(CLI::Range(1, Family::max_rank));
        sub->add_option("--seed", o.seed, "seed for sampled property checks")->capture_default_str();
        sub->add_flag("--json", o.json, "JSON output (the only format)");
    };

    auto* en = app.add_subcommand("enumerate", "list faces, torus faces or group elements");
    common(en);
    en->add_option("--object", o.object, "faces|torus|group")->required()->check(CLI::IsMember({"faces", "torus", "group"}));
    en->add_option("--color", o.color, "color set, e.g. [1,2]");
    en->add_flag("--count", o.count, "print only the number of items");

    auto* pr = app.add_subcommand("product", "Tits product of two faces");
    common(pr);
    pr->add_option("--left", o.left, "face JSON or @file")->required();
    pr->add_option("--right", o.right, "face JSON or @file")->required();

    auto* ac = app.add_subcommand("act", "right action of a face on a torus face");
    common(ac);
    ac->add_option("--torus", o.torus, "necklace JSON or @file")->required();
    ac->add_option("--face", o.face, "face JSON or @file")->required();

    auto* dt = app.add_subcommand("descent-table", "descent sets of every group element");
    common(dt);
    dt->add_flag("--affine", o.affine, "affine descent sets");

    auto* mt = app.add_subcommand("mult-table", "structure constants of the descent ring or module");
    common(mt);
    mt->add_option("--kind", o.kind, "solomon|module")->required()->check(CLI::IsMember({"solomon", "module"}));

    auto* ve = app.add_subcommand("verify", "run verification suites");
    common(ve);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ve->add_option("--suite", o.suite, "suite name or all")->check(CLI::IsMember(suites))->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    }

    const Family family = Family::make(o.family == "A" ? CoxeterType::A : CoxeterType::C, o.rank);
    try {
        Json result;
        int code = ExitCode::ok;
        if (en->parsed()) {
            result = detail::run_enumerate(o, family);
        } else if (pr->parsed()) {
            result = detail::run_product(o, family);
        } else if (ac->parsed()) {
            result = detail::run_act(o, family);
        } else if (dt->parsed()) {
            result = wire::descent_table(family, o.affine);
        } else if (mt->parsed()) {
            result = wire::to_json(structure_table(family, o.kind));
        } else {
            const auto report = verify(family, o.suite, o.seed);
            result = wire::to_json(report);
            if (!report.passed()) {
                code = ExitCode::verification_failed;
                for (const auto& s : report.suites)
                    if (!s.passed()) err << "suite " << s.name << " failed: " << s.witnesses.front() << "\n";
            }
        }
        out << result.dump() << "\n";
        return code;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::budget_exceeded;
    } catch (const NotInSpan& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::verification_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::invalid_input;
    }
}

}  // namespace steinberg::cli
