#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigenera/complete_intersection.hpp"
#include "cigenera/rational.hpp"
#include "cigenera/verify.hpp"

namespace cigenera {

enum class OutputFormat { text, csv, json };

/// Accepts "text", "csv", "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// A scalar genus request: name is one of todd, euler, signature, ahat,
/// ak (with ak_k), chi-k (with k and level). chi-y is handled separately
/// since its value is a polynomial.
struct GenusSpec {
    std::string name;
    long ak_k = 2;
    int k = 0;
    int level = 1;

    std::string label() const;  // e.g. "ak(3)", "chi-k(1/2)"
};

/// Routes along which the genus of this particular space can be computed,
/// in print order. "closed" always comes first.
std::vector<std::string> genus_routes(const CompleteIntersection& ci, const GenusSpec& spec);

/// Evaluates one genus along one route ("closed", "genfun", "chern-root",
/// "recurrence", "from-todd"). Throws std::invalid_argument when the route
/// does not apply to this genus or space.
Rational evaluate_genus(const CompleteIntersection& ci, const GenusSpec& spec,
                        const std::string& route);

// --- sweep reports ---------------------------------------------------------

std::string reports_to_text(const std::vector<verify::SweepReport>& reports,
                            const verify::SweepConfig& cfg);
/// Summary CSV, one row per check; violation detail lives in text/json.
std::string reports_to_csv(const std::vector<verify::SweepReport>& reports);
/// Full structured report with a metadata header (tool version + config
/// echo). Byte-identical across runs for identical configs.
std::string reports_to_json(const std::vector<verify::SweepReport>& reports,
                            const verify::SweepConfig& cfg);

// --- value tables ----------------------------------------------------------

struct TableRow {
    int n = 0;
    int r = 0;
    std::vector<int> degrees;
    long c1 = 0;
    std::string genus_label;
    std::optional<int> k;
    std::optional<int> level;
    Rational value;
};

/// One row per (space, genus), spaces in sweep order (n, r, degrees),
/// genera in the order given. Values use the closed-form route.
std::vector<TableRow> make_table(const verify::SweepConfig& cfg,
                                 const std::vector<GenusSpec>& specs);

std::string table_to_text(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows, const verify::SweepConfig& cfg);

}  // namespace cigenera
