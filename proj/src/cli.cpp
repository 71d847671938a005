#include "hfam/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hfam/family_io.hpp"
#include "hfam/report.hpp"
#include "hfam/solvers.hpp"
#include "hfam/verify.hpp"

namespace hfam {

namespace {

SetFamily load_family(const std::string& path, bool strict) {
    const ParseOptions opts{strict};
    if (path == "-") return read_family(std::cin, opts);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_family(in, opts);
}

struct SolveArgs {
    std::string metric;
    std::string path;
    int k = 2;
    bool k_given = false;
    std::size_t budget_subsets = kSubsetScanLimit;
    unsigned long long budget_tuples = kDefaultTupleBudget;
    bool strict = false;
    bool timestamps = false;
};

void put_value(ReportRecord& record, const char* key, unsigned long long value) {
    record.values[key] = std::to_string(value);
}

nlohmann::ordered_json family_json(const SetFamily& family) {
    return family_to_compact(family);
}

ReportRecord solve_record(const SolveArgs& args, const SetFamily& family) {
    ReportRecord record;
    if (args.timestamps) record.timestamp = iso8601_now();
    record.check = args.metric;
    record.n = family.n();
    record.family = family_to_compact(family);

    if (args.metric == "lstar") {
        const LargestIntersecting li = largest_intersecting(family);
        put_value(record, "l", li.size);
        std::optional<int> star_at;
        for (int x = 1; x <= family.n() && !star_at; ++x) {
            if (star(family, x) == li.witness) star_at = x;
        }
        record.values["star_at"] = star_at ? std::to_string(*star_at) : "none";
        record.witness = nlohmann::ordered_json{{"family", family_json(li.witness)}};
    } else if (args.metric == "beta") {
        record.values["beta"] = beta(family, args.budget_subsets).str();
    } else if (args.metric == "cross-sum") {
        record.params["k"] = args.k;
        const CrossSumOptimum sum = max_cross_sum(family, args.k, args.budget_subsets);
        put_value(record, "sum", sum.value);
        record.witness = nlohmann::ordered_json{
            {"union_family", family_json(sum.union_family)},
            {"kernel", family_json(sum.split.kernel)},
            {"residue", family_json(sum.split.residue)},
            {"assignment", "A_1 = union_family, A_2..A_k = kernel"}};
    } else if (args.metric == "cross-product") {
        record.params["k"] = args.k;
        const CrossProductOptimum product = max_cross_product(family, args.k, args.budget_subsets);
        record.values["exact"] = product.exact ? "true" : "false";
        if (product.exact) {
            put_value(record, "product", product.value);
        } else {
            put_value(record, "lower", product.lower);
            record.values["upper"] = product.upper.str();
        }
        if (product.pair_witness) {
            record.witness = nlohmann::ordered_json{
                {"a1", family_json(product.pair_witness->first)},
                {"a2", family_json(product.pair_witness->second)}};
        } else if (product.uniform_witness) {
            record.witness = nlohmann::ordered_json{
                {"uniform", family_json(*product.uniform_witness)},
                {"assignment", "A_1 = ... = A_k = uniform"}};
        }
    } else if (args.metric == "pairing") {
        const Pairing pairing = berge_pairing(family);
        put_value(record, "pairs", pairing.pairs.size());
        record.values["leftover_empty"] = pairing.leftover_empty ? "true" : "false";
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& [a, b] : pairing.pairs) {
            list.push_back(nlohmann::ordered_json::array({set_to_string(a), set_to_string(b)}));
        }
        record.witness = nlohmann::ordered_json{{"pairs", list}};
    } else {
        throw std::invalid_argument("unknown metric '" + args.metric + "'");
    }
    return record;
}

struct VerifyArgs {
    std::string config_path;
    std::string out_path;
    std::string n_override;
    std::string k_override;
    std::string filter_override;
    std::optional<unsigned long long> seed;
    std::optional<std::size_t> budget_subsets;
    std::optional<unsigned long long> budget_tuples;
    std::optional<std::size_t> samples;
    std::optional<int> jobs;
    bool allow_n6 = false;
    bool timestamps = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.config_path);
    if (!in) throw parse_error("cannot open '" + args.config_path + "'");
    std::stringstream text;
    text << in.rdbuf();
    std::string config_text = text.str();

    // Flag overrides append after the file contents, so they win on re-parse.
    if (!args.n_override.empty()) config_text += "\nn = " + args.n_override;
    if (!args.k_override.empty()) config_text += "\nk = " + args.k_override;
    if (!args.filter_override.empty()) config_text += "\nfilter = " + args.filter_override;
    if (args.seed) config_text += "\nseed = " + std::to_string(*args.seed);
    if (args.budget_subsets) config_text += "\nbudget_subsets = " + std::to_string(*args.budget_subsets);
    if (args.budget_tuples) config_text += "\nbudget_tuples = " + std::to_string(*args.budget_tuples);
    if (args.samples) config_text += "\nsamples = " + std::to_string(*args.samples);
    if (args.jobs) config_text += "\njobs = " + std::to_string(*args.jobs);
    if (args.allow_n6) config_text += "\nallow_n6 = true";

    const SweepConfig config = parse_sweep_config_text(config_text);
    const std::vector<CheckResult> results = run_sweep(config);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!args.out_path.empty()) {
        file.open(args.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw parse_error("cannot write '" + args.out_path + "'");
        sink = &file;
    }
    for (const CheckResult& r : results) {
        *sink << to_line(make_record(r, args.timestamps)) << '\n';
    }
    if (sink == &file) file.close();

    const SweepCounts counts = tally(results);
    err << "pass=" << counts.pass << " fail=" << counts.fail << " skipped=" << counts.skipped
        << " defect=" << counts.defect << '\n';
    if (counts.defect > 0) return 3;
    if (counts.fail > 0) return 2;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for hereditary set families"};
    app.require_subcommand(1);

    std::string in_path;
    bool strict = false;
    bool hex = false;
    int swap_x = 0;
    int swap_y = 0;

    CLI::App* closure = app.add_subcommand("closure", "hereditary closure of a family");
    closure->add_option("file", in_path, "family file ('-' for stdin)")->required();
    closure->add_flag("--strict", strict, "reject duplicate set lines");
    closure->add_flag("--hex", hex, "emit one hex word per line");

    CLI::App* bases = app.add_subcommand("bases", "maximal members of a family");
    bases->add_option("file", in_path)->required();
    bases->add_flag("--strict", strict);
    bases->add_flag("--hex", hex);

    CLI::App* compress_cmd = app.add_subcommand("compress", "apply the (x,y) compression");
    compress_cmd->add_option("file", in_path)->required();
    compress_cmd->add_option("--x", swap_x, "element swapped in")->required();
    compress_cmd->add_option("--y", swap_y, "element swapped out")->required();
    compress_cmd->add_flag("--strict", strict);
    compress_cmd->add_flag("--hex", hex);

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "split into kernel and residue");
    kernel_cmd->add_option("file", in_path)->required();
    kernel_cmd->add_flag("--strict", strict);
    kernel_cmd->add_flag("--hex", hex);

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one exact solver");
    solve_cmd->add_option("metric", solve.metric, "lstar | beta | cross-sum | cross-product | pairing")
        ->required()
        ->check(CLI::IsMember({"lstar", "beta", "cross-sum", "cross-product", "pairing"}));
    solve_cmd->add_option("file", solve.path)->required();
    solve_cmd->add_option("--k", solve.k, "number of cross-intersecting families");
    solve_cmd->add_option("--budget-subsets", solve.budget_subsets, "max members for subset scans");
    solve_cmd->add_option("--budget-tuples", solve.budget_tuples, "max tuples for naive oracles");
    solve_cmd->add_flag("--strict", solve.strict);
    solve_cmd->add_flag("--timestamps", solve.timestamps, "stamp records with wall-clock time");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a sweep from a config file");
    verify_cmd->add_option("config", verify.config_path, "sweep config file")->required();
    verify_cmd->add_option("--out", verify.out_path, "JSONL output path (default: stdout)");
    verify_cmd->add_option("--n", verify.n_override, "override n (e.g. 3 or 2..4)");
    verify_cmd->add_option("--k", verify.k_override, "override k list (e.g. 2,3)");
    verify_cmd->add_option("--filter", verify.filter_override, "override filter atoms");
    unsigned long long seed_value = 0;
    CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_value, "override seed");
    std::size_t budget_subsets_value = 0;
    CLI::Option* bs_opt = verify_cmd->add_option("--budget-subsets", budget_subsets_value);
    unsigned long long budget_tuples_value = 0;
    CLI::Option* bt_opt = verify_cmd->add_option("--budget-tuples", budget_tuples_value);
    std::size_t samples_value = 0;
    CLI::Option* samples_opt = verify_cmd->add_option("--samples", samples_value);
    int jobs_value = 1;
    CLI::Option* jobs_opt = verify_cmd->add_option("--jobs", jobs_value);
    verify_cmd->add_flag("--allow-n6", verify.allow_n6, "permit n = 6 sweeps");
    verify_cmd->add_flag("--timestamps", verify.timestamps);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hfam");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream message;
        const int code = app.exit(e, out, message);
        err << message.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (closure->parsed()) {
            write_family(out, hereditary_closure(load_family(in_path, strict)), hex);
        } else if (bases->parsed()) {
            write_family(out, bases_of(load_family(in_path, strict)), hex);
        } else if (compress_cmd->parsed()) {
            write_family(out, compress(load_family(in_path, strict), swap_x, swap_y), hex);
        } else if (kernel_cmd->parsed()) {
            const KernelSplit split = split_kernel(load_family(in_path, strict));
            write_family(out, split.kernel, hex);
            out << "---\n";
            write_family(out, split.residue, hex);
        } else if (solve_cmd->parsed()) {
            const SetFamily family = load_family(solve.path, solve.strict);
            try {
                out << to_line(solve_record(solve, family)) << '\n';
            } catch (const budget_error& e) {
                ReportRecord record;
                if (solve.timestamps) record.timestamp = iso8601_now();
                record.check = solve.metric;
                record.n = family.n();
                record.family = family_to_compact(family);
                record.verdict = "skipped";
                record.values["reason"] = e.what();
                out << to_line(record) << '\n';
                err << "error: " << e.what() << '\n';
                return 1;
            }
        } else if (verify_cmd->parsed()) {
            if (seed_opt->count() > 0) verify.seed = seed_value;
            if (bs_opt->count() > 0) verify.budget_subsets = budget_subsets_value;
            if (bt_opt->count() > 0) verify.budget_tuples = budget_tuples_value;
            if (samples_opt->count() > 0) verify.samples = samples_value;
            if (jobs_opt->count() > 0) verify.jobs = jobs_value;
            return run_verify(verify, out, err);
        }
    } catch (const defect_error& e) {
        err << "defect: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hfam
