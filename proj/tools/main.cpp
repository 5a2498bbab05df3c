// cigenera: exact Hirzebruch genera of complete intersections.
//
//   cigenera genus --ci "X2(2,2)" --genus signature
//   cigenera genus --ci "X2(6)" --genus chi-k --k 1 --level 2 --oracle all
//   cigenera sweep --n-max 6 --format json --out report.json
//   cigenera table --n-max 4 --genus todd,euler,signature --format csv
//
// Exit codes: 0 success, 1 a check found violations, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cigenera/complete_intersection.hpp"
#include "cigenera/genera_oracles.hpp"
#include "cigenera/report.hpp"
#include "cigenera/verify.hpp"
#include "cigenera/version.hpp"

namespace {

using namespace cigenera;

// Flat key=value config files: the same keys as the long flags, applied as
// defaults before the command line is parsed, so flags always override.
using ConfigAppliers = std::map<std::string, std::function<void(const std::string&)>>;

std::string strip_ws(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t");
    const size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

long config_long(const std::string& value) {
    size_t used = 0;
    long parsed = 0;
    try {
        parsed = std::stol(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config value '" + value + "' is not an integer");
    }
    if (used != value.size())
        throw std::invalid_argument("config value '" + value + "' is not an integer");
    return parsed;
}

int config_int(const std::string& value) { return static_cast<int>(config_long(value)); }

template <typename T>
std::vector<T> config_list(const std::string& value,
                           const std::function<T(const std::string&)>& one) {
    std::vector<T> items;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) items.push_back(one(strip_ws(item)));
    return items;
}

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return "";
}

void apply_config_file(const std::string& path, const ConfigAppliers& appliers) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = strip_ws(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = strip_ws(stripped.substr(0, eq));
        const std::string value = strip_ws(stripped.substr(eq + 1));
        const auto it = appliers.find(key);
        if (it == appliers.end())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": unknown config key '" + key + "'");
        it->second(value);
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << payload;
}

struct SpaceFlags {
    std::string ci_text;
    int dim = 0;
    std::vector<int> degrees;

    CompleteIntersection resolve() const {
        if (!ci_text.empty() && dim != 0)
            throw std::invalid_argument("give either --ci or --dim/--degrees, not both");
        if (!ci_text.empty()) return CompleteIntersection::parse(ci_text);
        if (dim != 0) return CompleteIntersection(dim, degrees);
        throw std::invalid_argument("a space is required: --ci \"Xn(d1,...,dr)\" or --dim/--degrees");
    }
};

struct GenusFlags {
    SpaceFlags space;
    std::string genus = "todd";
    int k = -1;
    int level = 0;
    long ak_k = 2;
    std::string oracle = "closed";
    std::string format = "text";
    std::string out_path;
};

int run_genus(const GenusFlags& flags) {
    const CompleteIntersection ci = flags.space.resolve();

    if (flags.genus == "chi-y") {
        const ChiYPolynomial poly = chi_y_polynomial(ci, 0);
        if (flags.format == "json") {
            nlohmann::json j{{"ci", ci.to_string()},
                             {"genus", "chi-y"},
                             {"todd", poly.evaluate(Rational(0)).to_string()},
                             {"signature", poly.evaluate(Rational(1)).to_string()},
                             {"euler", poly.evaluate(Rational(-1)).to_string()}};
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Rational& c : poly.coefficients()) coeffs.push_back(c.to_string());
            j["chi_p"] = coeffs;
            emit(j.dump(2) + "\n", flags.out_path);
        } else if (flags.format == "text") {
            emit("chi_y(" + ci.to_string() + ") = " + poly.to_string() + "\n", flags.out_path);
        } else {
            throw std::invalid_argument("genus output supports text or json");
        }
        return 0;
    }

    GenusSpec spec;
    spec.name = flags.genus;
    spec.ak_k = flags.ak_k;
    if (flags.genus == "chi-k") {
        if (flags.k < 0 || flags.level < 1)
            throw std::invalid_argument("chi-k needs --k and --level");
        spec.k = flags.k;
        spec.level = flags.level;
    }

    const std::vector<std::string> routes =
        flags.oracle == "all" ? genus_routes(ci, spec)
                              : std::vector<std::string>{flags.oracle};
    std::vector<std::pair<std::string, Rational>> values;
    for (const std::string& route : routes)
        values.emplace_back(route, evaluate_genus(ci, spec, route));
    bool agree = true;
    for (const auto& [route, value] : values) agree &= (value == values.front().second);

    if (flags.format == "json") {
        nlohmann::json j{{"ci", ci.to_string()},
                         {"n", ci.dimension()},
                         {"r", ci.codimension()},
                         {"degrees", ci.degrees()},
                         {"c1", ci.first_chern()},
                         {"genus", spec.label()},
                         {"agree", agree}};
        nlohmann::json vals;
        for (const auto& [route, value] : values) vals[route] = value.to_string();
        j["values"] = vals;
        emit(j.dump(2) + "\n", flags.out_path);
    } else if (flags.format == "text") {
        std::string line;
        if (values.size() == 1) {
            line = values.front().second.to_string() + "\n";
        } else {
            line = ci.to_string() + " " + spec.label() + ":";
            for (const auto& [route, value] : values)
                line += " " + route + "=" + value.to_string();
            line += agree ? " [agree]" : " [DISAGREE]";
            line += "\n";
        }
        emit(line, flags.out_path);
    } else {
        throw std::invalid_argument("genus output supports text or json");
    }
    return agree ? 0 : 1;
}

ConfigAppliers genus_appliers(GenusFlags& f) {
    return {
        {"ci", [&f](const std::string& v) { f.space.ci_text = v; }},
        {"dim", [&f](const std::string& v) { f.space.dim = config_int(v); }},
        {"degrees",
         [&f](const std::string& v) {
             f.space.degrees = config_list<int>(v, config_int);
         }},
        {"genus", [&f](const std::string& v) { f.genus = v; }},
        {"k", [&f](const std::string& v) { f.k = config_int(v); }},
        {"level", [&f](const std::string& v) { f.level = config_int(v); }},
        {"ak-k", [&f](const std::string& v) { f.ak_k = config_long(v); }},
        {"oracle", [&f](const std::string& v) { f.oracle = v; }},
        {"format", [&f](const std::string& v) { f.format = v; }},
        {"out", [&f](const std::string& v) { f.out_path = v; }},
    };
}

ConfigAppliers bound_appliers(verify::SweepConfig& cfg) {
    return {
        {"n-min", [&cfg](const std::string& v) { cfg.n_min = config_int(v); }},
        {"n-max", [&cfg](const std::string& v) { cfg.n_max = config_int(v); }},
        {"r-max", [&cfg](const std::string& v) { cfg.r_max = config_int(v); }},
        {"d-max", [&cfg](const std::string& v) { cfg.d_max = config_int(v); }},
        {"levels", [&cfg](const std::string& v) { cfg.levels = config_list<int>(v, config_int); }},
        {"ak", [&cfg](const std::string& v) { cfg.ak = config_list<long>(v, config_long); }},
    };
}

struct SweepFlags {
    verify::SweepConfig cfg;
    std::string format = "text";
    std::string out_path;
};

ConfigAppliers sweep_appliers(SweepFlags& f) {
    ConfigAppliers appliers = bound_appliers(f.cfg);
    appliers["checks"] = [&f](const std::string& v) {
        f.cfg.checks = config_list<std::string>(v, [](const std::string& s) { return s; });
    };
    appliers["format"] = [&f](const std::string& v) { f.format = v; };
    appliers["out"] = [&f](const std::string& v) { f.out_path = v; };
    return appliers;
}

int run_sweep(const SweepFlags& flags) {
    const std::vector<verify::SweepReport> reports = verify::run_checks(flags.cfg);
    switch (parse_format(flags.format)) {
        case OutputFormat::text: emit(reports_to_text(reports, flags.cfg), flags.out_path); break;
        case OutputFormat::csv: emit(reports_to_csv(reports), flags.out_path); break;
        case OutputFormat::json: emit(reports_to_json(reports, flags.cfg), flags.out_path); break;
    }
    for (const verify::SweepReport& report : reports)
        if (!report.passed()) return 1;
    return 0;
}

struct TableFlags {
    verify::SweepConfig cfg;
    std::vector<std::string> genera = {"todd"};
    int k = -1;
    int level = 0;
    long ak_k = 2;
    std::string format = "text";
    std::string out_path;
};

ConfigAppliers table_appliers(TableFlags& f) {
    ConfigAppliers appliers = bound_appliers(f.cfg);
    appliers["genus"] = [&f](const std::string& v) {
        f.genera = config_list<std::string>(v, [](const std::string& s) { return s; });
    };
    appliers["k"] = [&f](const std::string& v) { f.k = config_int(v); };
    appliers["level"] = [&f](const std::string& v) { f.level = config_int(v); };
    appliers["ak-k"] = [&f](const std::string& v) { f.ak_k = config_long(v); };
    appliers["format"] = [&f](const std::string& v) { f.format = v; };
    appliers["out"] = [&f](const std::string& v) { f.out_path = v; };
    return appliers;
}

int run_table(const TableFlags& flags) {
    std::vector<GenusSpec> specs;
    for (const std::string& name : flags.genera) {
        if (name == "chi-y")
            throw std::invalid_argument("table emits scalar values; use 'genus --genus chi-y'");
        GenusSpec spec;
        spec.name = name;
        spec.ak_k = flags.ak_k;
        if (name == "chi-k") {
            if (flags.k < 0 || flags.level < 1)
                throw std::invalid_argument("chi-k needs --k and --level");
            spec.k = flags.k;
            spec.level = flags.level;
        }
        genus_routes(CompleteIntersection(1, {}), spec);  // validates the name
        specs.push_back(spec);
    }
    const std::vector<TableRow> rows = make_table(flags.cfg, specs);
    switch (parse_format(flags.format)) {
        case OutputFormat::text: emit(table_to_text(rows), flags.out_path); break;
        case OutputFormat::csv: emit(table_to_csv(rows), flags.out_path); break;
        case OutputFormat::json: emit(table_to_json(rows, flags.cfg), flags.out_path); break;
    }
    return 0;
}

void add_bound_options(CLI::App* cmd, verify::SweepConfig& cfg) {
    cmd->add_option("--n-min", cfg.n_min, "smallest complex dimension");
    cmd->add_option("--n-max", cfg.n_max, "largest complex dimension");
    cmd->add_option("--r-max", cfg.r_max, "largest number of degrees");
    cmd->add_option("--d-max", cfg.d_max, "largest degree (degrees range over [2, d-max])");
    cmd->add_option("--levels", cfg.levels, "levels N to sweep (all 0 <= k <= N)")
        ->delimiter(',');
    cmd->add_option("--ak", cfg.ak, "A_k indices to sweep")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(cigenera::kToolName) +
                 ": exact Hirzebruch genera of complete intersections X_n(d1,...,dr)"};
    app.set_version_flag("--version",
                         std::string(cigenera::kToolName) + " " + cigenera::kToolVersion);
    app.require_subcommand(1);

    GenusFlags genus_flags;
    CLI::App* genus_cmd = app.add_subcommand("genus", "compute one genus of one space");
    genus_cmd->add_option("--ci", genus_flags.space.ci_text, "space, e.g. \"X3(5,2,2)\"");
    genus_cmd->add_option("--dim", genus_flags.space.dim, "complex dimension n");
    genus_cmd->add_option("--degrees", genus_flags.space.degrees, "degrees d1,d2,...")
        ->delimiter(',');
    genus_cmd
        ->add_option("--genus", genus_flags.genus, "which genus")
        ->check(CLI::IsMember({"todd", "euler", "signature", "chi-y", "ahat", "ak", "chi-k"}));
    genus_cmd->add_option("--k", genus_flags.k, "twist numerator k for chi-k");
    genus_cmd->add_option("--level", genus_flags.level, "level N for chi-k");
    genus_cmd->add_option("--ak-k", genus_flags.ak_k, "k for the A_k genus");
    genus_cmd
        ->add_option("--oracle", genus_flags.oracle, "computation route, or 'all' to cross-check")
        ->check(CLI::IsMember({"closed", "genfun", "chern-root", "recurrence", "from-todd", "all"}));
    genus_cmd->add_option("--format", genus_flags.format, "text or json");
    genus_cmd->add_option("--out", genus_flags.out_path, "write output to a file");
    std::string config_path;
    genus_cmd->add_option("--config", config_path, "flat key=value config; flags override");

    SweepFlags sweep_flags;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run verification checks over a parameter sweep");
    add_bound_options(sweep_cmd, sweep_flags.cfg);
    sweep_cmd
        ->add_option("--checks", sweep_flags.cfg.checks,
                     "checks to run: todd,chik,ak,four-term,binomial,oracles")
        ->delimiter(',');
    sweep_cmd->add_option("--format", sweep_flags.format, "text, csv or json");
    sweep_cmd->add_option("--out", sweep_flags.out_path, "write report to a file");
    sweep_cmd->add_option("--config", config_path, "flat key=value config; flags override");

    TableFlags table_flags;
    CLI::App* table_cmd = app.add_subcommand("table", "emit a table of genus values");
    add_bound_options(table_cmd, table_flags.cfg);
    table_cmd->add_option("--genus", table_flags.genera,
                          "genera: todd,euler,signature,ahat,ak,chi-k")
        ->delimiter(',');
    table_cmd->add_option("--k", table_flags.k, "twist numerator k for chi-k");
    table_cmd->add_option("--level", table_flags.level, "level N for chi-k");
    table_cmd->add_option("--ak-k", table_flags.ak_k, "k for the A_k genus");
    table_cmd->add_option("--format", table_flags.format, "text, csv or json");
    table_cmd->add_option("--out", table_flags.out_path, "write table to a file");
    table_cmd->add_option("--config", config_path, "flat key=value config; flags override");

    // Config files load before the command line so that flags override them.
    try {
        const std::string pre_config = find_config_path(argc, argv);
        if (!pre_config.empty()) {
            std::string subcommand;
            for (int i = 1; i < argc; ++i) {
                const std::string arg = argv[i];
                if (arg == "genus" || arg == "sweep" || arg == "table") {
                    subcommand = arg;
                    break;
                }
            }
            if (subcommand == "genus")
                apply_config_file(pre_config, genus_appliers(genus_flags));
            else if (subcommand == "sweep")
                apply_config_file(pre_config, sweep_appliers(sweep_flags));
            else if (subcommand == "table")
                apply_config_file(pre_config, table_appliers(table_flags));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (genus_cmd->parsed()) return run_genus(genus_flags);
        if (sweep_cmd->parsed()) return run_sweep(sweep_flags);
        if (table_cmd->parsed()) return run_table(table_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
