// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtransport/bench.hpp"
#include "qtransport/cvrp.hpp"
#include "qtransport/errors.hpp"
#include "qtransport/io.hpp"
#include "qtransport/qaoa.hpp"
#include "qtransport/resources.hpp"
#include "qtransport/traffic.hpp"
#include "qtransport/tsp.hpp"

namespace qtransport::cli {

namespace {

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    /// Empty selects the command's natural format: JSON documents for
    /// encode, solve and tts, CSV tables for landscape and resources.
    std::string format;
};

struct EncodeOptions {
    std::string input;
    std::string problem;
    std::string encoding = "one-hot";
    bool fixed_start = false;
    std::optional<double> lambda;
    std::string layout;
};

struct SolverOptions {
    std::string input;
    std::string layout;
    std::string solver = "brute";
    std::size_t cap = kDefaultEnumerationCap;
    std::size_t sweeps = 1000;
    std::optional<double> t0;
    std::optional<double> t1;
    std::size_t depth = 1;
    std::size_t restarts = 10;
    std::size_t max_iters = 500;
    std::size_t shots = 1024;
    bool exact = false;
    bool sampled = false;
    std::string trace;
    std::size_t runs = 100;
};

struct LandscapeOptions {
    std::string input;
    std::size_t depth = 1;
    std::size_t grid = 21;
    double extent = std::numbers::pi / 2;
    bool axis_aligned = false;
    std::vector<double> center;
    std::size_t cap = kDefaultQubitCap;
    std::string meta;
};

struct ResourceOptions {
    std::string encoding = "both";
    std::vector<std::size_t> sizes{4, 8, 16};
};

/// Writes data to --out, or to the output stream when --out is empty or "-".
class Sink {
 public:
    Sink(const GlobalOptions& global, std::ostream& out) : global_(global), out_(out) {}

    bool to_file() const { return !global_.out.empty() && global_.out != "-"; }
    const std::string& path() const { return global_.out; }

    void write(const std::string& text) const {
        if (to_file()) {
            write_file(global_.out, text);
        } else {
            out_ << text;
        }
    }

 private:
    const GlobalOptions& global_;
    std::ostream& out_;
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string sibling(const std::string& path, const std::string& suffix) { return path + suffix; }

// --- encode -----------------------------------------------------------------

int cmd_encode(const GlobalOptions& global, const EncodeOptions& opt, std::ostream& out,
               std::ostream& err) {
    const json doc = parse_json(read_file(opt.input));
    std::string problem = opt.problem;
    if (problem.empty()) {
        if (!doc.is_object() || !doc.contains("problem") || !doc["problem"].is_string()) {
            throw FormatError("no --problem given and field 'problem' missing from the input");
        }
        problem = doc["problem"].get<std::string>();
    }

    CostFunction cost;
    json layout;
    if (problem == "tsp") {
        const TspInstance inst = tsp_from_json(doc);
        layout = {{"problem", "tsp"}, {"encoding", opt.encoding}, {"instance", to_json(inst)}};
        const TspEncoding encoding = parse_tsp_encoding(opt.encoding);
        if (encoding == TspEncoding::one_hot) {
            OneHotTsp enc = opt.lambda ? encode_tsp_one_hot(inst, *opt.lambda, opt.fixed_start)
                                       : encode_tsp_one_hot(inst, opt.fixed_start);
            layout["fixed_start"] = opt.fixed_start;
            layout["penalty"] = enc.penalty;
            cost = std::move(enc.model);
        } else {
            if (opt.fixed_start) throw ParameterError("--fixed-start applies to one-hot only");
            if (opt.lambda) throw ParameterError("--lambda applies to one-hot only");
            BinaryTsp enc = encode_tsp_binary(inst);
            layout["bits_per_position"] = enc.layout.bits_per_position();
            layout["penalty"] = enc.penalty;
            cost = std::move(enc.poly);
        }
    } else if (problem == "traffic") {
        const TrafficGrid grid = traffic_from_json(doc);
        layout = {{"problem", "traffic"}, {"instance", to_json(grid)}};
        cost = encode_traffic_grid(grid);
    } else if (problem == "cvrp") {
        const CvrpInstance inst = cvrp_from_json(doc);
        CvrpClustering enc = opt.lambda ? encode_cvrp_two_phase(inst, *opt.lambda)
                                        : encode_cvrp_two_phase(inst);
        layout = {{"problem", "cvrp"},
                  {"instance", to_json(inst)},
                  {"seeds", enc.seeds},
                  {"penalty", enc.penalty}};
        cost = std::move(enc.model);
    } else {
        throw FormatError("unknown problem '" + problem + "', expected tsp, traffic or cvrp");
    }

    Sink sink(global, out);
    sink.write(dump(to_json(cost)));
    std::string layout_path = opt.layout;
    if (layout_path.empty() && sink.to_file()) layout_path = sibling(sink.path(), ".layout.json");
    if (!layout_path.empty()) write_file(layout_path, dump(layout));

    const ResourceReport r = resource_report(cost);
    std::ostream& summary = sink.to_file() ? out : err;
    summary << "problem=" << problem << " num_vars=" << r.num_variables
            << " nnz=" << r.num_quadratic_nonzero << " max_degree=" << r.max_degree
            << " density=" << format_double(r.density) << "\n";
    return kExitOk;
}

// --- decoding ---------------------------------------------------------------

json decode_with_layout(const json& layout, std::span<const std::uint8_t> x) {
    const std::string problem = layout.at("problem").get<std::string>();
    json d{{"problem", problem}};
    if (problem == "tsp") {
        const TspInstance inst = tsp_from_json(layout.at("instance"));
        const std::string encoding = layout.at("encoding").get<std::string>();
        TourDecoding dec;
        if (parse_tsp_encoding(encoding) == TspEncoding::one_hot) {
            const OneHotLayout l(inst.num_cities(), layout.value("fixed_start", false));
            if (x.size() != l.num_vars()) throw DimensionError("layout does not match the model");
            dec = decode_one_hot(x, l);
        } else {
            const BinaryLayout l(inst.num_cities());
            if (x.size() != l.num_vars()) throw DimensionError("layout does not match the model");
            dec = decode_binary(x, l);
        }
        d["feasible"] = dec.feasible;
        d["tour"] = dec.tour;
        d["length"] = dec.feasible ? json(tour_length(inst, dec.tour)) : json(nullptr);
        d["bad_cities"] = dec.bad_cities;
        d["bad_positions"] = dec.bad_positions;
    } else if (problem == "traffic") {
        const TrafficGrid grid = traffic_from_json(layout.at("instance"));
        if (x.size() != grid.size()) throw DimensionError("layout does not match the model");
        json modes = json::array();
        for (std::size_t r = 0; r < grid.rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < grid.cols; ++c) {
                row.push_back(x[grid.index(r, c)] ? "NS" : "EW");
            }
            modes.push_back(std::move(row));
        }
        d["feasible"] = true;
        d["spins"] = to_spins(x);
        d["modes"] = std::move(modes);
    } else if (problem == "cvrp") {
        const CvrpInstance inst = cvrp_from_json(layout.at("instance"));
        const ClusteringLayout l(inst.customers.size(), inst.vehicles);
        if (x.size() < l.num_assignment_vars()) {
            throw DimensionError("layout does not match the model");
        }
        const ClusterDecoding dec = decode_clusters(x, inst, l);
        d["feasible"] = dec.feasible;
        d["clusters"] = dec.clusters;
        d["bad_customers"] = dec.bad_customers;
        d["overloaded_vehicles"] = dec.overloaded_vehicles;
    } else {
        throw FormatError("layout names unknown problem '" + problem + "'");
    }
    return d;
}

std::optional<json> load_layout(const SolverOptions& opt) {
    std::string path = opt.layout;
    if (path.empty()) {
        const std::string guess = sibling(opt.input, ".layout.json");
        if (!std::filesystem::exists(guess)) return std::nullopt;
        path = guess;
    }
    return parse_json(read_file(path));
}

// --- solve / tts -------------------------------------------------------------

SolverConfig make_solver(const SolverOptions& opt) {
    if (opt.exact && opt.sampled) throw ParameterError("--exact and --sampled are exclusive");
    if (opt.solver == "brute") return BruteConfig{opt.cap};
    if (opt.solver == "sa") {
        SaConfig c;
        c.sweeps = opt.sweeps;
        c.temp_initial = opt.t0;
        c.temp_final = opt.t1;
        return c;
    }
    if (opt.solver == "qaoa") {
        QaoaConfig c;
        c.depth = opt.depth;
        c.optimizer.restarts = opt.restarts;
        c.optimizer.max_iters = opt.max_iters;
        c.optimizer.shots = opt.shots;
        c.optimizer.estimator = opt.sampled ? Estimator::sampled : Estimator::exact;
        c.optimizer.qubit_cap = opt.cap;
        c.final_shots = opt.shots;
        return c;
    }
    throw ParameterError("unknown solver '" + opt.solver + "', expected brute, sa or qaoa");
}

std::string trace_csv(const std::vector<double>& trace) {
    std::string csv = "iter,best_expectation\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
        csv += std::to_string(k) + "," + format_double(trace[k]) + "\n";
    }
    return csv;
}

int cmd_solve(const GlobalOptions& global, const SolverOptions& opt, std::ostream& out) {
    const CostFunction cost = cost_from_json(parse_json(read_file(opt.input)));
    const std::optional<json> layout = load_layout(opt);
    const SolverConfig config = make_solver(opt);
    const SolveOutcome o = solve_once(cost, config, global.seed);

    json doc;
    doc["assignment"] = o.assignment;
    doc["energy"] = o.energy;
    doc["solver"] = to_json(config);
    doc["seed"] = global.seed;
    if (layout) doc["decoded"] = decode_with_layout(*layout, o.assignment);
    if (o.expectation) {
        std::string bits;
        for (auto b : o.assignment) bits.push_back(b ? '1' : '0');
        doc["qaoa"] = {{"expectation", *o.expectation},
                       {"gammas", o.angles->gammas},
                       {"betas", o.angles->betas},
                       {"bitstring", bits}};
        if (!opt.trace.empty()) write_file(opt.trace, trace_csv(o.trace));
    }
    doc["timing"] = {{"seconds", o.seconds}};
    Sink(global, out).write(dump(doc));
    return kExitOk;
}

int cmd_tts(const GlobalOptions& global, const SolverOptions& opt, std::ostream& out,
            std::ostream& err) {
    ExperimentSpec spec;
    spec.cost = cost_from_json(parse_json(read_file(opt.input)));
    spec.solver = make_solver(opt);
    spec.runs = opt.runs;
    spec.seed = global.seed;
    spec.oracle_cap = opt.cap;
    spec.instance = {{"model", std::filesystem::path(opt.input).filename().string()},
                     {"num_vars", num_vars(spec.cost)}};
    const TtsReport report = run_tts_experiment(spec);
    Sink(global, out).write(dump(to_json(report)));
    if (!report.tts) {
        err << "error: no run reached the optimum, time-to-solution is undefined\n";
        return kExitUndefined;
    }
    return kExitOk;
}

// --- landscape ----------------------------------------------------------------

int cmd_landscape(const GlobalOptions& global, const LandscapeOptions& opt, std::ostream& out) {
    const CostFunction cost = cost_from_json(parse_json(read_file(opt.input)));
    QaoaParams center = QaoaParams::zeros(opt.depth);
    if (!opt.center.empty()) {
        if (opt.center.size() != 2 * opt.depth) {
            throw ParameterError("--center needs 2p values (gammas then betas)");
        }
        center = QaoaParams::unflatten(opt.center);
    }
    const Landscape l =
        landscape_slice(cost, center, opt.grid, opt.extent, global.seed, opt.axis_aligned, opt.cap);

    json meta{{"p", opt.depth},
              {"grid", opt.grid},
              {"extent", opt.extent},
              {"axis_aligned", opt.axis_aligned},
              {"seed", global.seed},
              {"center", {{"gammas", l.center.gammas}, {"betas", l.center.betas}}},
              {"u", l.u},
              {"v", l.v},
              {"offsets", l.offsets}};

    Sink sink(global, out);
    if (global.format == "json") {
        meta["values"] = l.values;
        sink.write(dump(meta));
        return kExitOk;
    }
    sink.write(matrix_to_csv(l.values));
    std::string meta_path = opt.meta;
    if (meta_path.empty() && sink.to_file()) meta_path = sibling(sink.path(), ".meta.json");
    if (!meta_path.empty()) write_file(meta_path, dump(meta));
    return kExitOk;
}

// --- resources ----------------------------------------------------------------

int cmd_resources(const GlobalOptions& global, const ResourceOptions& opt, std::ostream& out) {
    std::vector<TspEncoding> encodings;
    if (opt.encoding == "both") {
        encodings = {TspEncoding::one_hot, TspEncoding::binary};
    } else {
        encodings = {parse_tsp_encoding(opt.encoding)};
    }
    const auto rows = scaling_sweep(encodings, opt.sizes);
    Sink sink(global, out);
    if (global.format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            doc.push_back({{"size", r.size},
                           {"encoding", to_string(r.encoding)},
                           {"num_vars", r.num_vars},
                           {"nnz", r.nnz},
                           {"max_degree", r.max_degree}});
        }
        sink.write(dump(doc));
    } else {
        sink.write(scaling_csv(rows));
    }
    return kExitOk;
}

void add_solver_flags(CLI::App* cmd, SolverOptions& opt) {
    cmd->add_option("input", opt.input, "Model JSON")->required();
    cmd->add_option("--solver", opt.solver, "brute | sa | qaoa")
        ->check(CLI::IsMember({"brute", "sa", "qaoa"}));
    cmd->add_option("--cap", opt.cap, "Variable cap for enumeration and statevectors");
    cmd->add_option("--sweeps", opt.sweeps, "Annealing sweeps");
    cmd->add_option("--t0", opt.t0, "Initial annealing temperature");
    cmd->add_option("--t1", opt.t1, "Final annealing temperature");
    cmd->add_option("--p", opt.depth, "QAOA depth");
    cmd->add_option("--restarts", opt.restarts, "Random angle restarts");
    cmd->add_option("--max-iters", opt.max_iters, "Nelder-Mead iterations per start");
    cmd->add_option("--shots", opt.shots, "Shots per estimate and for the final draw");
    cmd->add_flag("--exact", opt.exact, "Optimize the exact expectation (default)");
    cmd->add_flag("--sampled", opt.sampled, "Optimize a shot estimate");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transport optimization as QUBO/HOBO/Ising models"};
    app.require_subcommand(1);
    // Global flags may follow the subcommand name.
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Master seed")->capture_default_str();
    app.add_option("--out", global.out, "Output path, stdout when omitted");
    app.add_option("--format", global.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    EncodeOptions enc;
    auto* encode = app.add_subcommand("encode", "Encode a problem document as a model");
    encode->add_option("input", enc.input, "Problem JSON")->required();
    encode->add_option("--problem", enc.problem, "tsp | traffic | cvrp");
    encode->add_option("--encoding", enc.encoding, "TSP encoding: one-hot | binary");
    encode->add_flag("--fixed-start", enc.fixed_start, "Pin city 0 to position 0");
    encode->add_option("--lambda", enc.lambda, "Penalty weight");
    encode->add_option("--layout", enc.layout, "Layout sidecar path");

    SolverOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "Minimize a model");
    add_solver_flags(solve, solve_opt);
    solve->add_option("--layout", solve_opt.layout, "Layout sidecar used for decoding");
    solve->add_option("--trace", solve_opt.trace, "QAOA optimizer trace CSV path");

    SolverOptions tts_opt;
    auto* tts = app.add_subcommand("tts", "Time-to-solution experiment");
    add_solver_flags(tts, tts_opt);
    tts->add_option("--runs", tts_opt.runs, "Solver runs");

    LandscapeOptions land;
    auto* landscape = app.add_subcommand("landscape", "QAOA expectation on a 2-D slice");
    landscape->add_option("input", land.input, "Model JSON")->required();
    landscape->add_option("--p", land.depth, "QAOA depth");
    landscape->add_option("--grid", land.grid, "Points per axis");
    landscape->add_option("--extent", land.extent, "Half-width of the slice");
    landscape->add_flag("--axis-aligned", land.axis_aligned, "Slice along gamma_1 and beta_1");
    landscape->add_option("--center", land.center, "Center angles, gammas then betas")
        ->delimiter(',');
    landscape->add_option("--cap", land.cap, "Qubit cap");
    landscape->add_option("--meta", land.meta, "Metadata sidecar path");

    ResourceOptions res;
    auto* resources = app.add_subcommand("resources", "TSP encoding size sweep");
    resources->add_option("--encoding", res.encoding, "one-hot | binary | both")
        ->check(CLI::IsMember({"one-hot", "binary", "both"}));
    resources->add_option("--sizes", res.sizes, "City counts")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (global.format == "csv" && (*encode || *solve || *tts)) {
            throw ParameterError("this command only writes JSON");
        }
        if (*encode) return cmd_encode(global, enc, out, err);
        if (*solve) return cmd_solve(global, solve_opt, out);
        if (*tts) return cmd_tts(global, tts_opt, out, err);
        if (*landscape) return cmd_landscape(global, land, out);
        if (*resources) return cmd_resources(global, res, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const UndefinedResultError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace qtransport::cli
