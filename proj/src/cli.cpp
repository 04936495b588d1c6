#include <wallcross/cli.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <wallcross/chambers.hpp>
#include <wallcross/formulas.hpp>
#include <wallcross/identities.hpp>
#include <wallcross/parallel.hpp>
#include <wallcross/pyramid.hpp>
#include <wallcross/series_io.hpp>

namespace wallcross::cli
{

namespace
{

using nlohmann::json;

constexpr std::uint64_t default_max_work = 50'000'000;

struct CommandResult {
    std::string status = "ok"; // ok | mismatch | error
    json payload = json::object();
    std::vector<std::string> provenance;
    std::string table; // --table rendering
};

std::string grid(const BiSeries &s, const std::string &row_var, const std::string &col_var)
{
    const TruncationBox box = s.box();
    std::size_t width = 1;
    for (const auto &c : s.dense()) {
        width = std::max(width, c.get_str().size());
    }
    width = std::max<std::size_t>(width, std::to_string(box.n1_max).size()) + 1;
    std::ostringstream os;
    const std::string corner = row_var + "\\" + col_var;
    const std::size_t first = std::max(corner.size(), std::to_string(box.n0_max).size()) + 1;
    os << std::left << std::setw(static_cast<int>(first)) << corner << std::right;
    for (std::int64_t v1 = 0; v1 <= box.n1_max; ++v1) {
        os << std::setw(static_cast<int>(width)) << v1;
    }
    os << '\n';
    for (std::int64_t v0 = 0; v0 <= box.n0_max; ++v0) {
        os << std::left << std::setw(static_cast<int>(first)) << v0 << std::right;
        for (std::int64_t v1 = 0; v1 <= box.n1_max; ++v1) {
            os << std::setw(static_cast<int>(width)) << s.coefficient({v0, v1}).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::string qt_listing(const QtTable &table)
{
    std::ostringstream os;
    os << "n d coefficient\n";
    for (const auto &[key, c] : table) {
        os << key.first << ' ' << key.second << ' ' << c.get_str() << '\n';
    }
    return os.str();
}

TruncationBox to_box(const std::vector<std::int64_t> &dims, TruncationBox fallback)
{
    if (dims.empty()) {
        return fallback;
    }
    if (dims[0] < 0 || dims[1] < 0) {
        throw std::invalid_argument("--box dimensions must be nonnegative");
    }
    return {dims[0], dims[1]};
}

json bidegree_json(const std::optional<Bidegree> &d)
{
    return d ? json::array({d->v0, d->v1}) : json(nullptr);
}

CommandResult cmd_classify(const std::string &z0, const std::string &z1)
{
    const StabilityParam zeta(parse_rational(z0), parse_rational(z1));
    const Classification c = classify(zeta);
    CommandResult r;
    r.payload["zeta"] = json::array({zeta.zeta0.get_str(), zeta.zeta1.get_str()});
    r.payload["label"] = to_label(c);
    std::visit(
        [&](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Chamber>) {
                r.payload["kind"] = "chamber";
            } else if constexpr (std::is_same_v<T, OnWall>) {
                r.payload["kind"] = "wall";
                const auto [c0, c1] = x.wall.linear_form();
                r.payload["linear_form"] = json::array({c0, c1});
                if (const auto dim = x.wall.dim_vector()) {
                    r.payload["dim_vector"] = json::array({dim->v0, dim->v1});
                }
            } else {
                r.payload["kind"] = "degenerate";
            }
        },
        c);
    std::ostringstream os;
    os << to_label(c) << '\n';
    if (const auto *w = std::get_if<OnWall>(&c)) {
        const auto [c0, c1] = w->wall.linear_form();
        os << "linear form: " << c0 << "*zeta0 + " << c1 << "*zeta1 = 0\n";
    }
    r.table = os.str();
    return r;
}

CommandResult cmd_z(const std::string &label, TruncationBox box, bool is_signed, const std::string &route_name,
                    bool qt)
{
    const Chamber chamber = parse_chamber(label);
    Route route = Route::automatic;
    if (route_name == "minus") {
        route = Route::minus;
    } else if (route_name == "plus") {
        route = Route::plus;
    } else if (route_name != "auto") {
        throw std::invalid_argument("--route must be auto, minus or plus");
    }
    const BiSeries z = is_signed ? z_signed(chamber, box, route) : z_unsigned(chamber, box, route);
    CommandResult r;
    r.payload["chamber"] = to_label(chamber);
    r.payload["signed"] = is_signed;
    json walls = json::array();
    for (const auto &step : crossing_path(chamber, box, route)) {
        walls.push_back(to_label(step.wall));
    }
    r.payload["crossings"] = std::move(walls);
    r.payload["series"] = series_to_json(z);
    if (qt) {
        r.payload["qt"] = qt_to_json(to_qt(z));
    }
    if (uses_external_factor(chamber)) {
        r.provenance.push_back(external_factor_flag);
    }
    // No single stability parameter realizes these; they are the limit chamber for this box.
    if (chamber.kind == ChamberKind::pty || chamber.kind == ChamberKind::dty || chamber.kind == ChamberKind::pty_plus ||
        chamber.kind == ChamberKind::dty_plus) {
        r.provenance.push_back("box-relative-chamber");
    }
    r.table = qt ? qt_listing(to_qt(z)) : grid(z, "v0", "v1");
    return r;
}

CommandResult cmd_enumerate(const std::string &kind, std::int64_t m, TruncationBox box,
                            std::optional<std::int64_t> max_stones, bool list, std::uint64_t max_work)
{
    if (kind != "finite" && kind != "infinite") {
        throw std::invalid_argument("enumerate kind must be finite or infinite");
    }
    const ErcSpec spec(kind == "finite" ? ErcKind::finite_type : ErcKind::infinite_pyramid, m);
    const EnumerationLimits limits{box, max_stones};
    check_work_budget(spec, limits, max_work);
    const BiSeries counts = enumerate_counts(spec, limits);
    CommandResult r;
    r.payload["erc"] = to_label(spec);
    r.payload["series"] = series_to_json(counts);
    if (list) {
        r.payload["partitions"] = partitions_to_json(list_partitions(spec, limits));
    }
    r.table = grid(counts, "n0", "n1");
    return r;
}

CommandResult cmd_formula(const std::string &id_label, TruncationBox box, bool twist, bool qt)
{
    const FormulaId id = parse_formula(id_label);
    BiSeries s = evaluate(id, box);
    if (twist) {
        s = sign_twist(s);
    }
    CommandResult r;
    r.payload["formula"] = to_label(id);
    r.payload["twisted"] = twist;
    r.payload["series"] = series_to_json(s);
    if (qt) {
        r.payload["qt"] = qt_to_json(to_qt(s));
    }
    if (id.kind == FormulaKind::zpyr) {
        r.provenance.push_back("corrected-final-exponent");
    }
    const bool stone_counts = id.kind == FormulaKind::zfin || id.kind == FormulaKind::zpyr;
    r.table = qt ? qt_listing(to_qt(s)) : grid(s, stone_counts ? "n0" : "v0", stone_counts ? "n1" : "v1");
    return r;
}

CommandResult cmd_verify(const std::string &name, const IdentityParams &params)
{
    const IdentityResult res = run_identity(name, params);
    CommandResult r;
    r.status = res.ok ? "ok" : "mismatch";
    r.provenance = res.provenance;
    r.payload["identity"] = res.name;
    r.payload["lhs_label"] = res.lhs_label;
    r.payload["rhs_label"] = res.rhs_label;
    r.payload["lhs"] = series_to_json(res.lhs);
    r.payload["rhs"] = series_to_json(res.rhs);
    r.payload["first_difference"] = bidegree_json(res.first_difference);
    std::ostringstream os;
    os << res.name << ": " << (res.ok ? "ok" : "MISMATCH") << '\n';
    os << "  lhs " << res.lhs_label << " = " << to_string(res.lhs) << '\n';
    os << "  rhs " << res.rhs_label << " = " << to_string(res.rhs) << '\n';
    if (res.first_difference) {
        os << "  first difference at (" << res.first_difference->v0 << "," << res.first_difference->v1 << ")\n";
    }
    r.table = os.str();
    return r;
}

int emit(const std::string &command, const CommandResult &r, bool table, std::ostream &out)
{
    if (table) {
        out << r.table;
        for (const auto &flag : r.provenance) {
            out << "provenance: " << flag << '\n';
        }
    } else {
        json doc;
        doc["command"] = command;
        doc["status"] = r.status;
        doc["payload"] = r.payload;
        doc["provenance"] = r.provenance;
        out << doc.dump(2) << '\n';
    }
    if (r.status == "mismatch") {
        return exit_mismatch;
    }
    return r.status == "ok" ? exit_ok : exit_error;
}

int emit_error(const std::string &command, const std::string &message, bool table, std::ostream &out,
               std::ostream &err)
{
    if (table) {
        err << "error: " << message << '\n';
    } else {
        json doc;
        doc["command"] = command;
        doc["status"] = "error";
        doc["payload"] = {{"message", message}};
        doc["provenance"] = json::array();
        out << doc.dump(2) << '\n';
    }
    return exit_error;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Chamber series, wall-crossing products and pyramid partition counts for the resolved conifold",
                 "wallcross"};
    app.require_subcommand(1);
    app.fallthrough();

    bool table = false;
    bool as_json = false;
    std::uint64_t max_work = default_max_work;
    auto *json_flag = app.add_flag("--json", as_json, "JSON output (default)");
    auto *table_flag = app.add_flag("--table", table, "Plain-text table output");
    json_flag->excludes(table_flag);
    app.add_option("--max-work", max_work, "Refuse enumerations predicted to visit more partitions than this");

    std::vector<std::int64_t> box_dims;
    const auto add_box = [&](CLI::App *sub) {
        sub->add_option("--box", box_dims, "Truncation box N0 N1")->expected(2);
    };

    std::string zeta0;
    std::string zeta1;
    auto *classify_cmd = app.add_subcommand("classify", "Classify a stability parameter");
    classify_cmd->add_option("zeta0", zeta0, "First weight, e.g. -2/3")->required();
    classify_cmd->add_option("zeta1", zeta1, "Second weight")->required();

    std::string chamber;
    bool is_signed = false;
    std::string route = "auto";
    bool qt = false;
    auto *z_cmd = app.add_subcommand("z", "Series of a chamber");
    z_cmd->add_option("chamber", chamber, "Chamber label, e.g. minus_plus:2, pty, ncdt")->required();
    add_box(z_cmd);
    z_cmd->add_flag("--signed", is_signed, "Virtual (sign-twisted) series");
    z_cmd->add_option("--route", route, "auto, minus or plus (ncdt only)");
    z_cmd->add_flag("--qt", qt, "Also report the (q, t) table");

    std::string erc_kind;
    std::int64_t length = 0;
    std::optional<std::int64_t> max_stones;
    bool list = false;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "Count pyramid partitions by stone colors");
    enumerate_cmd->add_option("kind", erc_kind, "finite or infinite")->required();
    enumerate_cmd->add_option("m", length, "Length m >= 1")->required();
    add_box(enumerate_cmd);
    enumerate_cmd->add_option("--max-stones", max_stones, "Cap on the total stone count");
    enumerate_cmd->add_flag("--list", list, "Dump every partition as [layer, i, j] triples");

    std::string formula_id;
    bool twist = false;
    auto *formula_cmd = app.add_subcommand("formula", "Expand a closed-form product");
    formula_cmd->add_option("id", formula_id, "zfin:M, zpyr:M, zpt_y, zpt_yplus, zncdt, zdt_y_qt, macmahon_sq")
        ->required();
    add_box(formula_cmd);
    formula_cmd->add_flag("--twist", twist, "Apply q1 -> -q1 to the result");
    formula_cmd->add_flag("--qt", qt, "Also report the (q, t) table");

    std::string identity;
    std::optional<std::int64_t> identity_m;
    auto *verify_cmd = app.add_subcommand("verify", "Check a named identity coefficientwise");
    verify_cmd->add_option("identity", identity, "Identity name")->required();
    verify_cmd->add_option("--m", identity_m, "Pyramid length");
    add_box(verify_cmd);
    verify_cmd->add_option("--max-stones", max_stones, "Cap on the total stone count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_error;
    }

    if (const auto cap = thread_cap_from_env()) {
        set_thread_cap(*cap);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        CommandResult r;
        if (command == "classify") {
            r = cmd_classify(zeta0, zeta1);
        } else if (command == "z") {
            r = cmd_z(chamber, to_box(box_dims, {4, 4}), is_signed, route, qt);
        } else if (command == "enumerate") {
            r = cmd_enumerate(erc_kind, length, to_box(box_dims, {4, 4}), max_stones, list, max_work);
        } else if (command == "formula") {
            r = cmd_formula(formula_id, to_box(box_dims, {4, 4}), twist, qt);
        } else {
            IdentityParams params;
            params.m = identity_m;
            if (!box_dims.empty()) {
                params.box = to_box(box_dims, {});
            }
            params.max_stones = max_stones;
            params.max_work = max_work;
            r = cmd_verify(identity, params);
        }
        return emit(command, r, table, out);
    } catch (const std::exception &e) {
        return emit_error(command, e.what(), table, out, err);
    }
}

} // namespace wallcross::cli
