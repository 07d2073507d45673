#pragma once

#include "gorenstein/classify.hpp"
#include "gorenstein/oracles.hpp"
#include "gorenstein/simplex.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace gorenstein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

// Cap overrides read from the environment; command-line flags take precedence.
inline constexpr const char* kEnvMaxOrder = "GORENSTEIN_MAX_ORDER";
inline constexpr const char* kEnvMaxEhrhartDim = "GORENSTEIN_MAX_EHRHART_DIM";
inline constexpr const char* kEnvWorkers = "GORENSTEIN_WORKERS";

enum class Command { classify, count, chains, decompose, verify };
enum class Format { json, csv, text };

struct Caps {
    std::size_t max_group_order = kDefaultMaxGroupOrder;
    std::size_t max_ehrhart_dim = kDefaultEhrhartDimCap;
    std::size_t workers = 1;
};

struct RunConfig {
    Command command = Command::classify;
    std::int64_t v = 0;
    std::int64_t k = 1;
    std::string out_path;  ///< empty means stdout
    std::string in_path;
    Format format = Format::json;
    OracleFlags oracles;
    Caps caps;
};

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_chains(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gorenstein::cli
