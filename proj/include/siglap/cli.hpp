#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "siglap/graph.hpp"

namespace siglap::cli {

/** Process exit codes, disjoint by failure class. */
enum ExitCode : int
{
    Ok = 0,
    InputError = 2,
    HypothesisError = 3,
    InternalError = 4,
};

struct GraphSummary
{
    std::size_t n = 0;
    std::size_t m = 0;
    bool connected = false;
    bool bipartite = false;

    friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct Status
{
    bool ok = true;
    int code = Ok;
    std::string message;

    friend bool operator==(const Status&, const Status&) = default;
};

/**
 * Outcome of one command.  Every rational inside `results` is stored as its
 * canonical `p/q` string.
 */
struct Report
{
    std::string command;
    std::optional<GraphSummary> input;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    Status status;

    friend bool operator==(const Report&, const Report&) = default;
};

GraphSummary summarize(const Graph& g);

nlohmann::ordered_json to_json(const Report& r);
/** Throws nlohmann::json::exception on a malformed document. */
Report report_from_json(const nlohmann::ordered_json& j);

struct CommonFlags
{
    bool json = false;
    bool quiet = false;
};

Report cmd_mu_inf(const std::string& path);
Report cmd_geninv(const std::string& path, bool with_matrix, bool use_median);
Report cmd_verify(const std::string& path);
Report cmd_qinf(const std::string& path);
Report cmd_et(long a, long b, bool emit_graph);
Report cmd_et_grid(long max_a, long max_b);

/** Human-readable rendering; `quiet` keeps only the headline line. */
void print_text(std::ostream& out, const Report& r, bool quiet);

/** Full driver: parses argv, runs the command, writes to out/err, returns the exit code. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siglap::cli
