#include "siglap/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "siglap/errors.hpp"
#include "siglap/et_family.hpp"
#include "siglap/geninv.hpp"
#include "siglap/spectral.hpp"

namespace siglap::cli {

using nlohmann::ordered_json;

namespace {

ordered_json to_strings(std::span<const Rational> v)
{
    ordered_json arr = ordered_json::array();
    for (const auto& x : v)
        arr.push_back(x.str());
    return arr;
}

ordered_json to_strings(const RatMatrix& m)
{
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        arr.push_back(to_strings(m.row(i)));
    return arr;
}

ordered_json edge_json(const Graph& g, std::size_t e)
{
    auto [u, v] = g.edges().at(e);
    return {{"index", e + 1}, {"u", u + 1}, {"v", v + 1}};
}

Graph load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

// Runs body and maps library exceptions onto exit-code classes.
Report guarded(std::string command, const std::function<void(Report&)>& body)
{
    Report r;
    r.command = std::move(command);
    auto fail = [&](int code, const std::string& msg) {
        r.results = ordered_json::object();
        r.status = {false, code, msg};
    };
    try {
        body(r);
    } catch (const ParseError& e) {
        fail(InputError, std::string("parse error: ") + e.what());
    } catch (const IllFormedInput& e) {
        fail(InputError, e.what());
    } catch (const InvalidParameter& e) {
        fail(InputError, e.what());
    } catch (const HypothesisViolation& e) {
        fail(HypothesisError, e.what());
    } catch (const DegenerateInput& e) {
        fail(HypothesisError, e.what());
    } catch (const Error& e) {
        fail(InternalError, e.what());
    }
    return r;
}

const char* headline_key(const std::string& command, const ordered_json& results)
{
    if (command == "mu-inf")
        return "mu";
    if (command == "geninv")
        return "norm";
    if (command == "verify")
        return "product";
    if (command == "qinf")
        return "agree";
    if (results.contains("grid"))
        return "all_consistent";
    return "closed_form";
}

std::string render(const ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + render(v[i]);
        return s + ")";
    }
    if (v.is_object() && v.contains("u"))
        return "e" + v["index"].dump() + " (" + v["u"].dump() + " " + v["v"].dump() + ")";
    return v.dump();
}

}  // namespace

GraphSummary summarize(const Graph& g)
{
    return {g.vertex_count(), g.edge_count(), is_connected(g), is_bipartite(g)};
}

ordered_json to_json(const Report& r)
{
    ordered_json j;
    j["command"] = r.command;
    if (r.input)
        j["input"] = {{"n", r.input->n},
                      {"m", r.input->m},
                      {"connected", r.input->connected},
                      {"bipartite", r.input->bipartite}};
    else
        j["input"] = nullptr;
    j["results"] = r.results;
    j["status"] = {{"ok", r.status.ok}, {"code", r.status.code}, {"message", r.status.message}};
    return j;
}

Report report_from_json(const ordered_json& j)
{
    Report r;
    r.command = j.at("command").get<std::string>();
    if (const auto& in = j.at("input"); !in.is_null())
        r.input = GraphSummary{in.at("n").get<std::size_t>(), in.at("m").get<std::size_t>(),
                               in.at("connected").get<bool>(), in.at("bipartite").get<bool>()};
    r.results = j.at("results");
    const auto& st = j.at("status");
    r.status = {st.at("ok").get<bool>(), st.at("code").get<int>(), st.at("message").get<std::string>()};
    return r;
}

Report cmd_mu_inf(const std::string& path)
{
    return guarded("mu-inf", [&](Report& r) {
        const Graph g = load(path);
        r.input = summarize(g);
        const auto res = mu_infinity(g);
        r.results["mu"] = res.mu.str();
        r.results["optimal_x"] = to_strings(res.optimal_x);
        r.results["tight_edge"] = edge_json(g, res.tight_edge);
        r.results["fixed_coord"] = res.fixed_coord + 1;
        r.results["bipartite_certificate"] = r.input->bipartite;
    });
}

Report cmd_geninv(const std::string& path, bool with_matrix, bool use_median)
{
    return guarded("geninv", [&](Report& r) {
        const Graph g = load(path);
        r.input = summarize(g);
        const bool median = use_median && g.edge_count() == g.vertex_count() + 1;
        const auto res = median ? min_norm_bicyclic_median(g) : min_norm_generalized_inverse(g);
        r.results["method"] = median ? "median" : "lp";
        r.results["norm"] = res.norm.str();
        r.results["row_values"] = to_strings(res.row_values);
        if (with_matrix)
            r.results["matrix"] = to_strings(res.g);
    });
}

Report cmd_verify(const std::string& path)
{
    return guarded("verify", [&](Report& r) {
        const Graph g = load(path);
        r.input = summarize(g);
        const auto res = verify_duality(g);
        r.results["mu"] = res.mu.str();
        r.results["norm"] = res.norm.str();
        r.results["product"] = res.product.str();
        r.results["pass"] = res.pass;
        if (!res.pass)
            r.status = {false, InternalError, "mu * norm = " + res.product.str() + ", expected 1"};
    });
}

Report cmd_qinf(const std::string& path)
{
    return guarded("qinf", [&](Report& r) {
        const Graph g = load(path);
        r.input = summarize(g);
        const Rational formula = q_infinity_formula(g);
        const Rational lp = q_infinity_lp(g);
        r.results["formula"] = formula.str();
        r.results["lp"] = lp.str();
        r.results["agree"] = formula == lp;
        if (formula != lp)
            r.status = {false, InternalError, "formula " + formula.str() + " differs from LP " + lp.str()};
    });
}

Report cmd_et(long a, long b, bool emit_graph)
{
    return guarded("et", [&](Report& r) {
        const ETParams p{a, b};
        const Graph g = build_et(p);
        r.input = summarize(g);
        const auto rep = et_report(p);
        r.results["a"] = a;
        r.results["b"] = b;
        r.results["closed_form"] = rep.closed_form.str();
        r.results["lp_norm"] = rep.lp_norm.str();
        r.results["median_norm"] = rep.median_norm.str();
        r.results["mu_lp"] = rep.mu_lp.str();
        r.results["y_eval"] = rep.y_eval.str();
        r.results["optimal_vector"] = to_strings(rep.y);
        r.results["all_consistent"] = rep.all_consistent;
        if (emit_graph)
            r.results["edge_list"] = to_edge_list(g);
        if (!rep.all_consistent)
            r.status = {false, InternalError, "routes disagree"};
    });
}

Report cmd_et_grid(long max_a, long max_b)
{
    return guarded("et", [&](Report& r) {
        if (max_a < 3 || max_b < 3)
            throw InvalidParameter("grid bounds must be at least 3");
        ordered_json rows = ordered_json::array();
        bool all = true;
        for (long a = 3; a <= max_a; a += 2)
            for (long b = 3; b <= max_b; ++b) {
                const auto rep = et_report({a, b});
                all = all && rep.all_consistent;
                rows.push_back({{"a", a},
                                {"b", b},
                                {"n", a + b - 1},
                                {"closed_form", rep.closed_form.str()},
                                {"consistent", rep.all_consistent}});
            }
        r.results["grid"] = std::move(rows);
        r.results["all_consistent"] = all;
        if (!all)
            r.status = {false, InternalError, "some grid point is inconsistent"};
    });
}

void print_text(std::ostream& out, const Report& r, bool quiet)
{
    const char* head = headline_key(r.command, r.results);
    if (quiet) {
        if (r.results.contains(head))
            out << head << " = " << render(r.results[head]) << '\n';
        return;
    }
    if (r.input)
        out << "graph: n=" << r.input->n << " m=" << r.input->m
            << " connected=" << (r.input->connected ? "yes" : "no")
            << " bipartite=" << (r.input->bipartite ? "yes" : "no") << '\n';
    for (const auto& [key, value] : r.results.items()) {
        if (key == "edge_list")
            continue;
        if (key == "matrix") {
            out << "matrix =\n";
            for (const auto& row : value)
                out << "  " << render(row) << '\n';
        } else if (key == "grid") {
            out << "  a   b   n  closed_form  consistent\n";
            for (const auto& row : value) {
                std::ostringstream line;
                line << std::setw(3) << row["a"].get<long>() << ' ' << std::setw(3) << row["b"].get<long>()
                     << ' ' << std::setw(3) << row["n"].get<long>() << "  " << std::setw(11)
                     << row["closed_form"].get<std::string>() << "  "
                     << (row["consistent"].get<bool>() ? "yes" : "no");
                out << line.str() << '\n';
            }
        } else {
            out << key << " = " << render(value) << '\n';
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact signless infinity-Laplacian eigenvalue and minimal-norm generalized inverse"};
    app.name(args.empty() ? "siglap" : args.front());
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path;
    bool with_matrix = false, use_median = false, emit_graph = false;
    long a = 0, b = 0;
    std::vector<long> grid;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", flags.json, "Emit one JSON object on standard output");
        sub->add_flag("--quiet", flags.quiet, "Print only the headline value");
    };
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", path, "Edge-list file")->required(); };

    auto* mu = app.add_subcommand("mu-inf", "Smallest normalized signless infinity-Laplacian eigenvalue");
    add_file(mu);
    add_common(mu);
    auto* gi = app.add_subcommand("geninv", "Minimal induced sup-norm generalized inverse of W");
    add_file(gi);
    add_common(gi);
    gi->add_flag("--matrix", with_matrix, "Print the full inverse");
    gi->add_flag("--median", use_median, "Use the weighted-median path for bicyclic graphs");
    auto* ver = app.add_subcommand("verify", "Check mu_inf * min ||G|| = 1");
    add_file(ver);
    add_common(ver);
    auto* qi = app.add_subcommand("qinf", "Unnormalized q_inf: odd-walk formula against LP");
    add_file(qi);
    add_common(qi);
    auto* et = app.add_subcommand("et", "Bicyclic ET(n,a,b) family report");
    add_common(et);
    et->add_option("--a", a, "Length of the odd cycle");
    et->add_option("--b", b, "Length of the second cycle");
    et->add_flag("--emit-graph", emit_graph, "Print the edge list of ET(n,a,b)");
    et->add_option("--grid", grid, "Sweep odd a <= A and b <= B")->expected(2);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return InputError;
    }

    Report report;
    if (mu->parsed())
        report = cmd_mu_inf(path);
    else if (gi->parsed())
        report = cmd_geninv(path, with_matrix, use_median);
    else if (ver->parsed())
        report = cmd_verify(path);
    else if (qi->parsed())
        report = cmd_qinf(path);
    else if (!grid.empty())
        report = cmd_et_grid(grid[0], grid[1]);
    else if (et->count("--a") && et->count("--b"))
        report = cmd_et(a, b, emit_graph);
    else {
        err << "et: give --a and --b, or --grid A B\n";
        return InputError;
    }

    if (!report.status.ok)
        err << "error: " << report.status.message << '\n';
    if (flags.json)
        out << to_json(report).dump(2) << '\n';
    else if (emit_graph && report.results.contains("edge_list"))
        out << report.results["edge_list"].get<std::string>();
    else
        print_text(out, report, flags.quiet);
    return report.status.code;
}

}  // namespace siglap::cli
