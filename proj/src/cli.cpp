#include "presmon/cli.hpp"

#include "presmon/alphabet.hpp"
#include "presmon/error.hpp"
#include "presmon/grid_function.hpp"
#include "presmon/json_io.hpp"
#include "presmon/monoid.hpp"
#include "presmon/preservation.hpp"
#include "presmon/space.hpp"
#include "presmon/verifier.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace presmon {
namespace {

struct Options {
    std::string alphabet;
    std::string table;
    std::string predicate;
    std::string space_file;
    std::string function_file;
    std::string functions_file;
    std::string family_file;
    std::string output_file;
    std::string kind;
    std::string verify_id;
    int max_points = -1;
    int points = -1;
    int trials = 1000;
    std::uint64_t seed = 7;
    std::int64_t budget = 1000000;
    bool exhaustive = false;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

int value_index(const DistanceAlphabet& a, const std::string& token) {
    Rational r = parse_rational(token);
    if ((r.num * a.scale()) % r.den != 0) {
        throw Error("value " + token + " is not in the alphabet");
    }
    auto idx = a.index_of(r.num * a.scale() / r.den);
    if (!idx) {
        throw Error("value " + token + " is not in the alphabet");
    }
    return *idx;
}

GridFunction table_function(const DistanceAlphabet& a, const std::string& text) {
    std::vector<int> table;
    for (const std::string& token : split_list(text)) {
        table.push_back(value_index(a, token));
    }
    return GridFunction(a, std::move(table));
}

GridFunction input_function(const Options& o) {
    bool has_file = !o.function_file.empty();
    bool has_inline = !o.alphabet.empty() || !o.table.empty();
    if (has_file && has_inline) {
        throw Error("give either --function or --alphabet with --table, not both");
    }
    if (has_file) {
        return function_from_json(load_json_file(o.function_file));
    }
    if (o.alphabet.empty() || o.table.empty()) {
        throw Error("check-function needs --alphabet with --table, or --function");
    }
    return table_function(parse_alphabet(o.alphabet), o.table);
}

int emit(const nlohmann::json& doc, const Options& o, std::ostream& out, int code) {
    if (!o.output_file.empty()) {
        std::ofstream file(o.output_file);
        file << doc.dump(2) << '\n';
        if (!file.good()) {
            throw Error("cannot write file '" + o.output_file + "'");
        }
    }
    out << doc.dump(2) << '\n';
    return code;
}

int run_check_function(const Options& o, std::ostream& out) {
    GridFunction f = input_function(o);
    if (!o.predicate.empty()) {
        bool result = false;
        if (o.predicate == "amenable") {
            result = is_amenable(f);
        } else if (o.predicate == "increasing") {
            result = is_increasing(f);
        } else if (o.predicate == "subadditive") {
            result = is_subadditive_on_grid(f);
        } else if (o.predicate == "triplet-preserving") {
            result = is_triangle_triplet_preserving(f);
        } else if (o.predicate == "metric-preserving") {
            result = is_amenable(f) && is_triangle_triplet_preserving(f);
        } else if (o.predicate == "ultrametric-preserving") {
            result = is_amenable(f) && is_increasing(f);
        } else {
            throw Error("unknown function predicate '" + o.predicate + "'");
        }
        return emit(nlohmann::json{{"result", result}}, o, out, 0);
    }
    nlohmann::json doc{
        {"amenable", is_amenable(f)},
        {"increasing", is_increasing(f)},
        {"subadditive", is_subadditive_on_grid(f)},
        {"triplet-preserving", is_triangle_triplet_preserving(f)},
        {"metric-preserving", is_amenable(f) && is_triangle_triplet_preserving(f)},
        {"ultrametric-preserving", is_amenable(f) && is_increasing(f)}};
    return emit(doc, o, out, 0);
}

int run_check_space(const Options& o, std::ostream& out) {
    DistanceMatrix m = space_from_json(load_json_file(o.space_file));
    if (!o.predicate.empty()) {
        bool result = false;
        if (o.predicate == "metric") {
            result = is_metric(m);
        } else if (o.predicate == "ultrametric") {
            result = is_ultrametric(m);
        } else if (o.predicate == "discrete") {
            result = is_discrete(m);
        } else if (o.predicate == "three-point-discrete") {
            result = all_three_point_subspaces_discrete(m);
        } else {
            throw Error("unknown space predicate '" + o.predicate + "'");
        }
        return emit(nlohmann::json{{"result", result}}, o, out, 0);
    }
    nlohmann::json doc{{"metric", is_metric(m)},
                       {"ultrametric", is_ultrametric(m)},
                       {"discrete", is_discrete(m)}};
    doc["three-point-discrete"] =
        is_metric(m) ? nlohmann::json(all_three_point_subspaces_discrete(m))
                     : nlohmann::json(nullptr);
    return emit(doc, o, out, 0);
}

int run_transform(const Options& o, std::ostream& out) {
    DistanceMatrix m = space_from_json(load_json_file(o.space_file));
    GridFunction f = function_from_json(load_json_file(o.function_file));
    return emit(to_json(transform(m, f)), o, out, 0);
}

int run_closure(const Options& o, std::ostream& out) {
    FunctionSet s = function_set_from_json(load_json_file(o.functions_file));
    return emit(to_json(monoid_closure(s)), o, out, 0);
}

int run_pfx(const Options& o, std::ostream& out) {
    SpaceFamily x = family_from_json(load_json_file(o.family_file));
    return emit(to_json(preserving_functions(x)), o, out, 0);
}

int run_construct(const Options& o, std::ostream& out) {
    FunctionSet s = function_set_from_json(load_json_file(o.functions_file));
    DistanceMatrix base = max_ultrametric_space(s.alphabet());
    return emit(to_json(orbit_family(s, base)), o, out, 0);
}

int run_universe(const Options& o, std::ostream& out) {
    DistanceAlphabet a = parse_alphabet(o.alphabet);
    int max_points = o.max_points < 0 ? 3 : o.max_points;
    FunctionSet result(a);
    if (o.kind == "metric" || o.kind == "ultrametric") {
        result = preserving_functions(
            PreservationUniverse{a, max_points, parse_space_kind(o.kind)});
    } else if (o.kind == "f0") {
        result = zero_fixing_functions(a);
    } else if (o.kind == "am") {
        result = amenable_functions(a);
    } else if (o.kind == "si") {
        result = si_functions(a);
    } else if (o.kind == "all") {
        result = all_endofunctions(a);
    } else {
        throw Error("unknown universe kind '" + o.kind + "'");
    }
    return emit(to_json(result), o, out, 0);
}

int run_enumerate(const Options& o, std::ostream& out) {
    DistanceAlphabet a = parse_alphabet(o.alphabet);
    if (o.points < 1) {
        throw Error("points must be at least 1");
    }
    SpaceKind kind = o.kind.empty() ? SpaceKind::metric : parse_space_kind(o.kind);
    SpaceFamily family = enumerate_spaces(a, o.points, kind, 8);
    return emit(to_json(family), o, out, 0);
}

int report_exit(const VerificationReport& r) {
    return r.status == VerificationStatus::falsified ? 1 : 0;
}

int run_verify(const Options& o, std::ostream& out) {
    DistanceAlphabet a = parse_alphabet(o.alphabet.empty() ? "0,1,2" : o.alphabet);
    int max_points = o.max_points < 0 ? 3 : o.max_points;
    VerificationReport r;
    if (o.verify_id == "l1") {
        r = verify_empty_class(a);
    } else if (o.verify_id == "th1") {
        r = verify_one_point(a);
    } else if (o.verify_id == "th2") {
        r = verify_discrete_characterization(a, max_points);
    } else if (o.verify_id == "pr10") {
        r = verify_three_point_reduction(a, o.max_points < 0 ? 5 : o.max_points);
    } else if (o.verify_id == "t24") {
        r = verify_ultrametric_characterization(a, max_points);
    } else if (o.verify_id == "si") {
        r = o.points > 0 ? verify_si_intersection(static_cast<std::int64_t>(o.points))
                         : verify_si_intersection(a);
    } else if (o.verify_id == "mainth") {
        r = verify_construction(a, SpaceKind::metric);
    } else if (o.verify_id == "mainth-u") {
        r = verify_construction(a, SpaceKind::ultrametric);
    } else if (o.verify_id == "ex10") {
        r = verify_unrealizable_submonoid(a, max_points, o.exhaustive);
    } else if (o.verify_id == "dis") {
        r = verify_discrete_class_preservers(a, max_points);
    } else if (o.verify_id == "submonoid") {
        r = verify_submonoid_property(a, o.trials, o.seed);
    } else {
        throw Error("unknown verify check '" + o.verify_id + "'");
    }
    return emit(to_json(r), o, out, report_exit(r));
}

int run_explore(const Options& o, std::ostream& out) {
    FunctionSet target = function_set_from_json(load_json_file(o.functions_file));
    DistanceAlphabet a =
        o.alphabet.empty() ? target.alphabet() : parse_alphabet(o.alphabet);
    int max_points = o.max_points < 0 ? 3 : o.max_points;
    VerificationReport r =
        explore_submonoid_realizability(a, target, max_points, o.budget);
    return emit(to_json(r), o, out, report_exit(r));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Preservation monoids of finite distance alphabets"};
    app.require_subcommand(1);
    Options o;
    auto add_output = [&o](CLI::App* cmd) {
        cmd->add_option("--output", o.output_file,
                        "also write the JSON document to this file");
    };

    CLI::App* check_function = app.add_subcommand(
        "check-function", "Evaluate predicates of one endofunction");
    check_function->add_option("--alphabet", o.alphabet,
                               "comma-separated distance values");
    check_function->add_option("--table", o.table,
                               "comma-separated images, one per alphabet value");
    check_function->add_option("--function", o.function_file, "function JSON file");
    check_function->add_option(
        "--predicate", o.predicate,
        "amenable|increasing|subadditive|triplet-preserving|metric-preserving|"
        "ultrametric-preserving");
    add_output(check_function);

    CLI::App* check_space =
        app.add_subcommand("check-space", "Evaluate predicates of one space");
    check_space->add_option("--space", o.space_file, "space JSON file")->required();
    check_space->add_option("--predicate", o.predicate,
                            "metric|ultrametric|discrete|three-point-discrete");
    add_output(check_space);

    CLI::App* transform_cmd = app.add_subcommand(
        "transform", "Apply a function entrywise to a distance matrix");
    transform_cmd->add_option("--space", o.space_file, "space JSON file")->required();
    transform_cmd->add_option("--function", o.function_file, "function JSON file")
        ->required();
    add_output(transform_cmd);

    CLI::App* closure_cmd = app.add_subcommand(
        "closure", "Smallest submonoid containing a function set");
    closure_cmd->add_option("--functions", o.functions_file, "function-set JSON file")
        ->required();
    add_output(closure_cmd);

    CLI::App* pfx_cmd = app.add_subcommand(
        "pfx", "Functions under which every transformed member stays a member");
    pfx_cmd->add_option("--family", o.family_file, "family JSON file")->required();
    add_output(pfx_cmd);

    CLI::App* construct_cmd = app.add_subcommand(
        "construct", "Orbit family of a submonoid acting on the covering "
                     "ultrametric base space");
    construct_cmd->add_option("--functions", o.functions_file,
                              "function-set JSON file")
        ->required();
    add_output(construct_cmd);

    CLI::App* universe_cmd =
        app.add_subcommand("universe", "Compute a named function set");
    universe_cmd->add_option("--alphabet", o.alphabet, "comma-separated values")
        ->required();
    universe_cmd->add_option("--kind", o.kind, "metric|ultrametric|f0|am|si|all")
        ->required();
    universe_cmd->add_option("--max-points", o.max_points,
                             "point bound for the preservation universes");
    add_output(universe_cmd);

    CLI::App* enumerate_cmd = app.add_subcommand(
        "enumerate", "All labeled spaces of a kind on a fixed point count");
    enumerate_cmd->add_option("--alphabet", o.alphabet, "comma-separated values")
        ->required();
    enumerate_cmd->add_option("--points", o.points, "point count")->required();
    enumerate_cmd->add_option("--kind", o.kind,
                              "metric|ultrametric|discrete|raw (default metric)");
    add_output(enumerate_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run one verification check");
    verify_cmd
        ->add_option("id", o.verify_id,
                     "l1|th1|th2|pr10|t24|si|mainth|mainth-u|ex10|dis|submonoid")
        ->required();
    verify_cmd->add_option("--alphabet", o.alphabet,
                           "comma-separated values (default 0,1,2)");
    verify_cmd->add_option("--max-points", o.max_points, "point bound");
    verify_cmd->add_option("--points", o.points,
                           "uniform grid size for the si check");
    verify_cmd->add_option("--trials", o.trials, "random trials (submonoid check)");
    verify_cmd->add_option("--seed", o.seed, "random seed (submonoid check)");
    verify_cmd->add_flag("--exhaustive", o.exhaustive,
                         "scan the whole family lattice in the ex10 check");
    add_output(verify_cmd);

    CLI::App* explore_cmd = app.add_subcommand(
        "explore", "Search the family lattice for one whose preserving set "
                   "equals the target");
    explore_cmd->add_option("--functions", o.functions_file,
                            "target function-set JSON file")
        ->required();
    explore_cmd->add_option("--alphabet", o.alphabet, "comma-separated values");
    explore_cmd->add_option("--max-points", o.max_points, "point bound");
    explore_cmd->add_option("--budget", o.budget, "family evaluation budget");
    add_output(explore_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        nlohmann::json doc{{"error", {{"message", e.what()}}}};
        out << doc.dump(2) << '\n';
        return 2;
    }

    try {
        const std::string& name = app.get_subcommands().front()->get_name();
        if (name == "check-function") {
            return run_check_function(o, out);
        }
        if (name == "check-space") {
            return run_check_space(o, out);
        }
        if (name == "transform") {
            return run_transform(o, out);
        }
        if (name == "closure") {
            return run_closure(o, out);
        }
        if (name == "pfx") {
            return run_pfx(o, out);
        }
        if (name == "construct") {
            return run_construct(o, out);
        }
        if (name == "universe") {
            return run_universe(o, out);
        }
        if (name == "enumerate") {
            return run_enumerate(o, out);
        }
        if (name == "verify") {
            return run_verify(o, out);
        }
        if (name == "explore") {
            return run_explore(o, out);
        }
        throw Error("unknown command '" + name + "'");
    } catch (const Error& e) {
        nlohmann::json doc{{"error", {{"message", e.what()}}}};
        out << doc.dump(2) << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        nlohmann::json doc{{"error", {{"message", e.what()}}}};
        out << doc.dump(2) << '\n';
        return 2;
    }
}

} // namespace presmon
