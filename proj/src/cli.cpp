#include "gorenstein/cli.hpp"

#include "gorenstein/errors.hpp"
#include "gorenstein/serialize.hpp"
#include "gorenstein/tower.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace gorenstein::cli {

namespace {

bool check_v(const RunConfig& config, std::ostream& err) {
    if (config.v < 2) {
        err << "error: --v must be at least 2 (got " << config.v << ")\n";
        return false;
    }
    return true;
}

bool check_k(const RunConfig& config, std::ostream& err) {
    if (config.k < 1) {
        err << "error: --k must be at least 1 (got " << config.k << ")\n";
        return false;
    }
    return true;
}

bool check_caps(const Caps& caps, std::ostream& err) {
    if (caps.max_group_order == 0 || caps.max_ehrhart_dim == 0 || caps.workers == 0) {
        err << "error: caps must be positive\n";
        return false;
    }
    return true;
}

// Single writer: everything is rendered to a string first, then emitted once.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
    if (config.out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << config.out_path << " for writing\n";
        return kExitUsage;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: writing " << config.out_path << " failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

struct OracleTally {
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
};

std::map<std::string, OracleTally> run_oracles(const std::vector<ClassRecord>& classes, const OracleFlags& flags,
                                               std::size_t max_dim) {
    std::map<std::string, OracleTally> tally;
    for (const auto& r : classes) {
        for (const auto& o : run_class_oracles(r, flags, max_dim)) {
            auto& t = tally[o.name];
            if (o.skipped) {
                ++t.skipped;
            } else if (o.passed) {
                ++t.passed;
            } else {
                t.failures.push_back("[" + r.data.to_string() + "] " + o.detail);
            }
        }
    }
    return tally;
}

bool report_oracles(const std::map<std::string, OracleTally>& tally, std::ostream& err) {
    bool ok = true;
    for (const auto& [name, t] : tally) {
        err << "oracle " << name << ": " << t.passed << " passed, " << t.skipped << " skipped, " << t.failures.size()
            << " failed\n";
        for (const auto& f : t.failures) err << "  " << f << '\n';
        ok = ok && t.failures.empty();
    }
    return ok;
}

struct Decomposed {
    bool ok = false;
    ClassData data;
    std::string diagnostic;
};

Decomposed decompose_group(const Json& j, std::int64_t k, std::size_t cap) {
    Decomposed out;
    try {
        const HeightedGroup g = group_from_json(j, cap);
        const auto zeros = zero_coordinates(g);
        if (!zeros.empty()) {
            out.diagnostic = "coordinate " + std::to_string(zeros.front()) +
                             " is identically zero, so by the pyramid criterion the simplex is a lattice pyramid";
            return out;
        }
        const auto v = static_cast<std::int64_t>(g.order());
        if (v < 2 || !is_type(g, {v, k})) {
            out.diagnostic = "group of order " + std::to_string(v) + " is not of type (" + std::to_string(v) + "," +
                             std::to_string(k) + ")";
            return out;
        }
        out.data = extract_data(g, k);
        out.ok = true;
    } catch (const std::exception& e) {
        out.diagnostic = e.what();
    }
    return out;
}

}  // namespace

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!check_v(config, err) || !check_k(config, err) || !check_caps(config.caps, err)) return kExitUsage;
    ClassificationResult result;
    try {
        result = classify(config.v, config.k, {config.caps.workers, config.caps.max_group_order});
    } catch (const ClassificationError& e) {
        err << "invariant failure: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "invariant failure: " << e.what() << '\n';
        return kExitInvariant;
    }

    bool oracles_ok = true;
    if (config.oracles.any()) {
        oracles_ok = report_oracles(run_oracles(result.classes, config.oracles, config.caps.max_ehrhart_dim), err);
    }

    std::ostringstream text;
    switch (config.format) {
        case Format::json:
            text << result_to_json(result).dump(2) << '\n';
            break;
        case Format::csv:
            write_csv(text, result);
            break;
        case Format::text:
            write_text_summary(text, result);
            break;
    }
    const int written = emit(config, text.str(), out, err);
    if (written != kExitOk) return written;
    return oracles_ok ? kExitOk : kExitInvariant;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!check_v(config, err)) return kExitUsage;
    const ChainCensus census = chain_census(config.v);
    const BigInt total = count_classes(config.v);
    std::ostringstream text;
    if (config.format == Format::json) {
        Json c = Json::object();
        for (const auto& [s, n] : census.counts) c[std::to_string(s)] = count_to_json(n);
        Json j;
        j["v"] = config.v;
        j["census"] = std::move(c);
        j["total"] = count_to_json(total);
        text << j.dump(2) << '\n';
    } else {
        text << "v=" << config.v << '\n' << "s\tc_s\tc_s*s!\n";
        for (const auto& [s, n] : census.counts) {
            text << s << '\t' << n.get_str() << '\t' << BigInt(n * factorial(static_cast<unsigned>(s))).get_str()
                 << '\n';
        }
        text << "N(" << config.v << ") = " << total.get_str() << '\n';
    }
    return emit(config, text.str(), out, err);
}

int cmd_chains(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!check_v(config, err)) return kExitUsage;
    std::ostringstream text;
    const auto chains = strict_chains(config.v);
    if (config.format == Format::json) {
        Json j = Json::array();
        for (const auto& c : chains) j.push_back(c.terms);
        text << j.dump() << '\n';
    } else {
        for (const auto& c : chains) text << join_ints(c.terms, "<") << '\n';
    }
    return emit(config, text.str(), out, err);
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!check_k(config, err)) return kExitUsage;
    if (config.in_path.empty()) {
        err << "error: --in is required\n";
        return kExitUsage;
    }
    std::ifstream file(config.in_path);
    if (!file) {
        err << "error: cannot read " << config.in_path << '\n';
        return kExitUsage;
    }
    Json input;
    try {
        input = Json::parse(file);
    } catch (const std::exception& e) {
        err << "error: " << config.in_path << " is not valid JSON: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream text;
    if (input.is_object() && input.contains("classes")) {
        // a full classify result; every stored datum must be reproduced
        const std::int64_t k = input.value("k", config.k);
        Json all = Json::array();
        bool ok = true;
        for (const auto& entry : input.at("classes")) {
            const Decomposed d = decompose_group(entry, k, config.caps.max_group_order * 64);
            if (!d.ok) {
                err << "invariant failure: " << d.diagnostic << '\n';
                return kExitInvariant;
            }
            if (entry.contains("chain") && entry.contains("subsets")) {
                const auto chain = entry.at("chain").get<std::vector<std::int64_t>>();
                const auto subsets = entry.at("subsets").get<std::vector<std::vector<int>>>();
                if (chain != d.data.chain || subsets != d.data.subsets) {
                    err << "mismatch: stored [" << ClassData{k, chain, subsets}.to_string() << "] decomposes as ["
                        << d.data.to_string() << "]\n";
                    ok = false;
                }
            }
            all.push_back(class_data_to_json(d.data));
        }
        text << all.dump(2) << '\n';
        const int written = emit(config, text.str(), out, err);
        if (written != kExitOk) return written;
        return ok ? kExitOk : kExitInvariant;
    }

    const Decomposed d = decompose_group(input, config.k, config.caps.max_group_order * 64);
    if (!d.ok) {
        err << "invariant failure: " << d.diagnostic << '\n';
        return kExitInvariant;
    }
    text << class_data_to_json(d.data).dump(2) << '\n';
    return emit(config, text.str(), out, err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!check_v(config, err) || !check_k(config, err) || !check_caps(config.caps, err)) return kExitUsage;
    if (static_cast<std::size_t>(config.v) > config.caps.max_group_order) {
        err << "error: v = " << config.v << " exceeds the maximum group order " << config.caps.max_group_order << '\n';
        return kExitUsage;
    }
    std::ostringstream text;
    bool ok = true;

    const BijectionReport report = verify_bijection(config.v, config.k);
    text << "bijection: " << report.checked << " data, " << report.permuted_checked << " permuted copies, "
         << report.failures.size() << " failures\n";
    for (const auto& f : report.failures) text << "  " << f << '\n';
    ok = ok && report.ok();

    ClassificationResult result;
    try {
        result = classify(config.v, config.k, {config.caps.workers, config.caps.max_group_order});
    } catch (const std::exception& e) {
        text << "classify: " << e.what() << '\n';
        emit(config, text.str(), out, err);
        return kExitInvariant;
    }
    text << "classify: " << result.total.get_str() << " classes, count law "
         << (result.total == count_classes(config.v) ? "holds" : "FAILS") << '\n';
    ok = ok && result.total == count_classes(config.v);

    OracleFlags all;
    all.simplex_roundtrip = all.ehrhart = all.bijection = true;
    std::ostringstream oracle_text;
    ok = report_oracles(run_oracles(result.classes, all, config.caps.max_ehrhart_dim), oracle_text) && ok;
    text << oracle_text.str();
    text << (ok ? "all checks passed\n" : "FAILED\n");

    const int written = emit(config, text.str(), out, err);
    if (written != kExitOk) return written;
    return ok ? kExitOk : kExitInvariant;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::classify:
            return cmd_classify(config, out, err);
        case Command::count:
            return cmd_count(config, out, err);
        case Command::chains:
            return cmd_chains(config, out, err);
        case Command::decompose:
            return cmd_decompose(config, out, err);
        case Command::verify:
            return cmd_verify(config, out, err);
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Classify finite heighted groups and the Gorenstein simplices they encode"};
    app.require_subcommand(1);

    app.add_option("--max-order", config.caps.max_group_order, "Largest group order classify will build")
        ->envname(kEnvMaxOrder)
        ->check(CLI::PositiveNumber);
    app.add_option("--max-ehrhart-dim", config.caps.max_ehrhart_dim, "Largest dimension for direct point counts")
        ->envname(kEnvMaxEhrhartDim)
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", config.caps.workers, "Worker threads for classify")
        ->envname(kEnvWorkers)
        ->check(CLI::PositiveNumber);

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    std::vector<std::string> oracle_names;

    auto* classify_cmd = app.add_subcommand("classify", "Enumerate all classes of type (v,k)");
    classify_cmd->add_option("--v", config.v, "Group order")->required();
    classify_cmd->add_option("--k", config.k, "Height step")->required();
    classify_cmd->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    classify_cmd->add_option("--out", config.out_path, "Write output here instead of stdout");
    classify_cmd->add_option("--oracle", oracle_names, "Cross-checks to run on every class")
        ->delimiter(',')
        ->check(CLI::IsMember({"simplex-roundtrip", "ehrhart", "bijection"}));

    auto* count_cmd = app.add_subcommand("count", "Count classes without building groups");
    count_cmd->add_option("--v", config.v, "Group order")->required();
    auto* count_format = count_cmd->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* chains_cmd = app.add_subcommand("chains", "List strict divisor chains 1 = M_0 < ... < M_s = v");
    chains_cmd->add_option("--v", config.v, "Group order")->required();
    auto* chains_format = chains_cmd->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* decompose_cmd = app.add_subcommand("decompose", "Recover the chain and subsets of a group");
    decompose_cmd->add_option("--k", config.k, "Height step")->required();
    decompose_cmd->add_option("--in", config.in_path, "Group JSON or classify result JSON")->required();
    decompose_cmd->add_option("--out", config.out_path, "Write output here instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "Run the bijection and all oracles for (v,k)");
    verify_cmd->add_option("--v", config.v, "Group order")->required();
    verify_cmd->add_option("--k", config.k, "Height step")->required();

    for (auto* sub : {classify_cmd, count_cmd, chains_cmd, decompose_cmd, verify_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& name : oracle_names) {
        if (name == "simplex-roundtrip") config.oracles.simplex_roundtrip = true;
        if (name == "ehrhart") config.oracles.ehrhart = true;
        if (name == "bijection") config.oracles.bijection = true;
    }
    if (classify_cmd->parsed()) config.command = Command::classify;
    if (count_cmd->parsed()) config.command = Command::count;
    if (chains_cmd->parsed()) config.command = Command::chains;
    if (decompose_cmd->parsed()) config.command = Command::decompose;
    if (verify_cmd->parsed()) config.command = Command::verify;
    // tables read better as text; classify keeps JSON as its default artifact
    if ((count_cmd->parsed() && count_format->count() == 0) || (chains_cmd->parsed() && chains_format->count() == 0)) {
        config.format = Format::text;
    }
    return dispatch(config, out, err);
}

}  // namespace gorenstein::cli
