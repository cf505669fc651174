#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tanrep::cli {

enum class OutFormat { Csv, Json };

struct RunConfig {
    std::string command;
    double c = 1.05;
    double theta = 2.0;
    double epsilon = 0.05;
    double tol_k = 1e-6;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> n;          // window selector by target
    std::optional<std::int64_t> target;     // explicit target for count/binary/classical
    bool use_n_star = false;
    std::optional<std::pair<std::int64_t, std::int64_t>> band;  // offsets from n_star
    std::optional<std::int64_t> grid;
    std::string kind = "S";                 // expsum: S, Theta, A
    bool method_naive = false;
    bool emit_table = false;
    std::size_t threads = 0;
    OutFormat out_format = OutFormat::Csv;
    std::string out_path;                   // empty = stdout
    std::uint64_t seed = 1;
};

// Throws tanrep::Error(UsageError) naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& argv);

// Runs the subcommand, writing to `out` unless cfg.out_path is set. Returns
// the process exit status.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse + execute with error-to-exit-code mapping.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tanrep::cli
