// Command-line front end: parsing, validation, normalization, moves, algebra
// checking/construction/search, coloring, and distinguishing.
//
// Exit codes: 0 success (or verdict "distinct"), 1 I/O error, 2 validation
// error, 3 inconclusive verdict, 4 move not applicable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bondle/algebra.hpp>
#include <bondle/coloring.hpp>
#include <bondle/diagram.hpp>
#include <bondle/gauss_code.hpp>
#include <bondle/rewrite.hpp>
#include <bondle/serialization.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitNotApplicable = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bondle::Json read_json(const std::string& path) {
    return bondle::Json::parse(read_text(path));
}

struct Config {
    std::vector<bondle::Bondle> battery = bondle::default_battery();
    long max_n = 15;
    std::string format = "json";
};

Config load_config(const std::string& explicit_path) {
    Config cfg;
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("BONDLE_CONFIG")) path = env;
    }
    if (path.empty()) return cfg;
    bondle::Json j = read_json(path);
    if (j.contains("battery")) {
        cfg.battery.clear();
        for (const auto& spec : j["battery"])
            cfg.battery.push_back(bondle::bondle_from_spec(spec));
    }
    if (j.contains("max_n")) cfg.max_n = j["max_n"].get<long>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    return cfg;
}

void emit(const bondle::Json& j, const std::string& format) {
    if (format == "text") {
        // flat, human-oriented rendering
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "schema") continue;
            std::cout << it.key() << ": "
                      << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

bondle::GaussCode load_code_or_exit(const std::string& path, const std::string& format) {
    const std::string text = read_text(path);
    bondle::GaussCode code;
    try {
        code = bondle::parse(text);
    } catch (const bondle::ParseError& e) {
        bondle::Json j{{"schema", bondle::kSchemaVersion},
                       {"valid", false},
                       {"errors", {e.what()}}};
        emit(j, format);
        std::exit(kExitValidation);
    }
    bondle::ValidationReport rep = bondle::validate(code);
    if (!rep.ok()) {
        bondle::Json j{{"schema", bondle::kSchemaVersion},
                       {"valid", false},
                       {"errors", rep.errors}};
        emit(j, format);
        std::exit(kExitValidation);
    }
    return code;
}

std::string big_str(const bondle::BigInt& v) { return v.str(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-code topology toolkit for bonded open chains"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string config_path;
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "configuration file (overrides BONDLE_CONFIG)");

    // ---- parse / validate -------------------------------------------------
    std::string in_path = "-";
    bool dump_diagram = false;
    auto* cmd_parse = app.add_subcommand("parse", "parse a code and reprint it");
    cmd_parse->add_option("input", in_path, "input file or - for stdin");
    cmd_parse->add_flag("--dump-diagram", dump_diagram, "also emit the diagram JSON");

    auto* cmd_validate = app.add_subcommand("validate", "validate a code");
    cmd_validate->add_option("input", in_path, "input file or - for stdin");

    // ---- normalize --------------------------------------------------------
    bool keep_helices = false, no_end_reduce = false;
    auto* cmd_normalize = app.add_subcommand("normalize", "run the normalization pipeline");
    cmd_normalize->add_option("input", in_path, "input file or - for stdin");
    cmd_normalize->add_flag("--keep-helices", keep_helices, "skip helix removal");
    cmd_normalize->add_flag("--no-end-reduce", no_end_reduce, "skip end-arc reduction");
    cmd_normalize->add_flag("--dump-diagram", dump_diagram, "also emit the diagram JSON");

    // ---- move -------------------------------------------------------------
    std::string script_path;
    bool want_trace = false;
    auto* cmd_move = app.add_subcommand("move", "apply a JSON move script");
    cmd_move->add_option("input", in_path, "input file or - for stdin")->required();
    cmd_move->add_option("script", script_path, "JSON list of move specs")->required();
    cmd_move->add_flag("--trace", want_trace, "emit the rewrite trace");

    // ---- algebra ----------------------------------------------------------
    auto* cmd_algebra = app.add_subcommand("algebra", "finite structure tools");
    cmd_algebra->require_subcommand(1);

    std::string table_path, kind = "oriented-bondle";
    auto* alg_check = cmd_algebra->add_subcommand("check", "check axioms of a table file");
    alg_check->add_option("--file", table_path, "table JSON file")->required();
    alg_check->add_option("--kind", kind, "structure kind")
        ->check(CLI::IsMember({"quandle", "kei", "singquandle", "involutory-bondle",
                               "oriented-singquandle", "oriented-bondle"}));

    std::vector<std::string> make_args;
    std::string out_path;
    auto* alg_make = cmd_algebra->add_subcommand(
        "make", "construct a table: affine n a b [m] | d4 family n_param [x2y-1|x-1y2]");
    alg_make->add_option("args", make_args, "constructor arguments")->expected(-1);
    alg_make->add_option("--out", out_path, "write the table to this file");

    long search_n = 0;
    auto* alg_search = cmd_algebra->add_subcommand("search", "enumerate affine bondles");
    alg_search->add_option("n", search_n, "modulus")->required();

    // ---- color / distinguish / search ------------------------------------
    std::string code_path, bondle_path;
    auto* cmd_color = app.add_subcommand("color", "count colorings of a code");
    cmd_color->add_option("input", code_path, "code file or - for stdin")->required();
    cmd_color->add_option("--bondle", bondle_path, "bondle table JSON (default: battery)");

    std::string d1_path, d2_path;
    std::vector<std::string> extra_bondles;
    auto* cmd_distinguish =
        app.add_subcommand("distinguish", "compare two codes over the battery");
    cmd_distinguish->add_option("first", d1_path, "first code file")->required();
    cmd_distinguish->add_option("second", d2_path, "second code file")->required();
    cmd_distinguish->add_option("--bondle", extra_bondles,
                                "bondle table files replacing the battery");

    long max_n = 0;
    auto* cmd_search =
        app.add_subcommand("search", "search affine bondles distinguishing two codes");
    cmd_search->add_option("first", d1_path, "first code file")->required();
    cmd_search->add_option("second", d2_path, "second code file")->required();
    cmd_search->add_option("--max-n", max_n, "largest modulus to scan");

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg = load_config(config_path);
        if (app.count("--format")) cfg.format = format;

        if (*cmd_parse) {
            bondle::GaussCode code = load_code_or_exit(in_path, cfg.format);
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"code", bondle::serialize(code)}};
            if (dump_diagram) j["diagram"] = bondle::diagram_to_json(bondle::build_diagram(code));
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*cmd_validate) {
            bondle::GaussCode code = load_code_or_exit(in_path, cfg.format);
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"valid", true},
                           {"errors", bondle::Json::array()}};
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*cmd_normalize) {
            bondle::GaussCode code = load_code_or_exit(in_path, cfg.format);
            bondle::GaussCode norm = bondle::segment_sheets(code);
            if (!keep_helices)
                norm = bondle::normalize_helices(norm, bondle::HelixMode::Drop);
            if (!no_end_reduce) norm = bondle::reduce_ends(norm);
            norm = bondle::renumber(norm);
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"code", bondle::serialize(norm)}};
            if (dump_diagram) j["diagram"] = bondle::diagram_to_json(bondle::build_diagram(norm));
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*cmd_move) {
            bondle::GaussCode code = load_code_or_exit(in_path, cfg.format);
            bondle::Json script = read_json(script_path);
            std::vector<bondle::MoveSpec> specs;
            for (const auto& s : script) specs.push_back(bondle::movespec_from_json(s));
            bondle::RewriteTrace trace;
            bondle::GaussCode out;
            try {
                out = bondle::apply_moves(code, specs, want_trace ? &trace : nullptr);
            } catch (const bondle::NotApplicable& e) {
                bondle::Json j{{"schema", bondle::kSchemaVersion}, {"error", e.what()}};
                emit(j, cfg.format);
                return kExitNotApplicable;
            }
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"code", bondle::serialize(out)}};
            if (want_trace) j["trace"] = bondle::trace_to_json(trace);
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*alg_check) {
            auto [q, maps] = bondle::table_from_json(read_json(table_path));
            bondle::AxiomReport rep;
            if (kind == "quandle") rep = bondle::check_quandle(q);
            else if (kind == "kei") rep = bondle::check_kei(q);
            else if (kind == "singquandle") rep = bondle::check_singquandle(q, maps);
            else if (kind == "involutory-bondle") rep = bondle::check_involutory_bondle(q, maps);
            else if (kind == "oriented-singquandle")
                rep = bondle::check_oriented_singquandle(q, maps);
            else rep = bondle::check_oriented_bondle(q, maps);
            emit(bondle::report_to_json(rep), cfg.format);
            return rep.pass() ? kExitOk : kExitValidation;
        }
        if (*alg_make) {
            if (make_args.empty()) throw CLI::ValidationError("make", "missing constructor");
            bondle::FiniteQuandle q;
            bondle::BondMaps maps;
            if (make_args[0] == "affine") {
                if (make_args.size() < 4)
                    throw CLI::ValidationError("make", "affine needs n a b [m]");
                const long n = std::stol(make_args[1]);
                const long a = std::stol(make_args[2]);
                const long b = std::stol(make_args[3]);
                if (make_args.size() >= 5) {
                    std::tie(q, maps) = bondle::affine_bondle(n, a, b, std::stol(make_args[4]));
                } else {
                    std::tie(q, maps) = bondle::affine_singquandle(n, a, b);
                }
            } else if (make_args[0] == "d4") {
                if (make_args.size() < 3)
                    throw CLI::ValidationError("make", "d4 needs family n_param [r3]");
                const int family = std::stoi(make_args[1]);
                const int n_param = std::stoi(make_args[2]);
                const bondle::R3Variant v =
                    (make_args.size() >= 4 && make_args[3] == "x-1y2")
                        ? bondle::R3Variant::XinvYY
                        : bondle::R3Variant::XXYinv;
                std::tie(q, maps) = bondle::group_bondle(bondle::dihedral_group(4), family,
                                                         n_param, v);
            } else {
                throw CLI::ValidationError("make", "unknown constructor " + make_args[0]);
            }
            bondle::Json j = bondle::table_to_json(q, maps);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw IoError("cannot write file: " + out_path);
                out << j.dump(2) << "\n";
                bondle::Json note{{"schema", bondle::kSchemaVersion}, {"written", out_path}};
                emit(note, cfg.format);
            } else {
                emit(j, cfg.format);
            }
            return kExitOk;
        }
        if (*alg_search) {
            auto triples = bondle::search_affine_bondles(search_n);
            bondle::Json j{{"schema", bondle::kSchemaVersion}, {"n", search_n}};
            bondle::Json ms = bondle::Json::array();
            for (long m : bondle::affine_m_set(search_n)) ms.push_back(m);
            j["m_set"] = ms;
            bondle::Json list = bondle::Json::array();
            for (const auto& [a, b, m] : triples)
                list.push_back({{"a", a}, {"b", b}, {"m", m}});
            j["bondles"] = list;
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*cmd_color) {
            bondle::GaussCode code = load_code_or_exit(code_path, cfg.format);
            bondle::Diagram d = bondle::build_diagram(bondle::normalize(code));
            std::vector<bondle::Bondle> battery;
            if (!bondle_path.empty()) {
                battery.push_back(bondle::bondle_from_spec(
                    bondle::Json{{"type", "file"}, {"path", bondle_path}}));
            } else {
                battery = cfg.battery;
            }
            bondle::Json results = bondle::Json::array();
            for (const auto& b : battery) {
                bondle::ColoringCount cc = bondle::count_colorings(d, b);
                results.push_back({{"bondle", b.name},
                                   {"total", big_str(cc.total)},
                                   {"trivial", big_str(cc.trivial)}});
            }
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"diagram", bondle::serialize(code)},
                           {"counts", results}};
            emit(j, cfg.format);
            return kExitOk;
        }
        if (*cmd_distinguish) {
            bondle::GaussCode c1 = load_code_or_exit(d1_path, cfg.format);
            bondle::GaussCode c2 = load_code_or_exit(d2_path, cfg.format);
            bondle::Diagram d1 = bondle::build_diagram(bondle::normalize(c1));
            bondle::Diagram d2 = bondle::build_diagram(bondle::normalize(c2));
            std::vector<bondle::Bondle> battery = cfg.battery;
            if (!extra_bondles.empty()) {
                battery.clear();
                for (const std::string& p : extra_bondles)
                    battery.push_back(bondle::bondle_from_spec(
                        bondle::Json{{"type", "file"}, {"path", p}}));
            }
            bondle::Verdict v = bondle::distinguish(d1, d2, battery);
            bondle::Json counts = bondle::Json::array();
            for (const auto& [a, b] : v.counts)
                counts.push_back({{"first", big_str(a)}, {"second", big_str(b)}});
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"verdict", v.distinct ? "distinct" : "inconclusive"},
                           {"counts", counts}};
            if (v.distinct) j["bondle"] = v.bondle_name;
            emit(j, cfg.format);
            return v.distinct ? kExitOk : kExitInconclusive;
        }
        if (*cmd_search) {
            bondle::GaussCode c1 = load_code_or_exit(d1_path, cfg.format);
            bondle::GaussCode c2 = load_code_or_exit(d2_path, cfg.format);
            bondle::Diagram d1 = bondle::build_diagram(bondle::normalize(c1));
            bondle::Diagram d2 = bondle::build_diagram(bondle::normalize(c2));
            const long bound = max_n > 0 ? max_n : cfg.max_n;
            bondle::Verdict v = bondle::search_distinguisher(d1, d2, bound);
            bondle::Json j{{"schema", bondle::kSchemaVersion},
                           {"verdict", v.distinct ? "distinct" : "inconclusive"}};
            if (v.distinct) {
                j["bondle"] = v.bondle_name;
                j["counts"] = {{"first", big_str(v.counts[0].first)},
                               {"second", big_str(v.counts[0].second)}};
            }
            emit(j, cfg.format);
            return v.distinct ? kExitOk : kExitInconclusive;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const bondle::Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const bondle::MalformedCode& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
