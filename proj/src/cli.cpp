#include "tanrep/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tanrep/asymptotics.hpp"
#include "tanrep/circle.hpp"
#include "tanrep/errors.hpp"
#include "tanrep/exponents.hpp"
#include "tanrep/io.hpp"
#include "tanrep/repcount.hpp"
#include "tanrep/window.hpp"

namespace tanrep::cli {

namespace {

constexpr const char* kWindowCommands[] = {"window", "count", "scan", "compare", "binary", "expsum"};

bool needs_window(const std::string& cmd) {
    for (const char* c : kWindowCommands)
        if (cmd == c) return true;
    return false;
}

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::UsageError, msg); }

std::pair<std::int64_t, std::int64_t> parse_band(const std::string& text) {
    const auto colon = text.find(':', text.empty() ? 0 : 1);
    if (colon == std::string::npos) usage("--band expects lo:hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::int64_t lo = std::stoll(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("lo");
        const std::string rest = text.substr(colon + 1);
        const std::int64_t hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("hi");
        if (lo > hi) usage("--band bounds out of order: " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        usage("--band expects integers lo:hi, got '" + text + "'");
    }
}

struct Flags {
    std::optional<double> c, theta, epsilon, tol_k;
    std::optional<std::int64_t> k, n, target, grid;
    std::string band, kind = "S", method = "mitm", format = "csv", out;
    bool n_star = false, table = false;
    std::size_t threads = 0;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Flags& f, bool window) {
    sub->add_option("--c", f.c, "exponent c (default 1.05)");
    sub->add_option("--theta", f.theta, "exponent theta (default 2)");
    sub->add_option("--threads", f.threads, "worker threads (0 = TANREP_THREADS or all cores)");
    sub->add_option("--format", f.format, "output format: csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", f.out, "output path (default stdout)");
    sub->add_option("--seed", f.seed, "seed for sampled checks (default 1)");
    if (!window) return;
    sub->add_option("--k", f.k, "window index k >= 0");
    sub->add_option("--N", f.n, "select the window solving for target N");
    sub->add_option("--epsilon", f.epsilon, "epsilon in tau = X^(1-c-epsilon) (default 0.05)");
    sub->add_option("--tol-k", f.tol_k, "index residual tolerance for --N (default 1e-6)");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"Representation counting for [p^c tan^theta(log p)] over prime windows", "tanrep"};
    app.require_subcommand(1);
    Flags f;

    auto* window = app.add_subcommand("window", "print window parameters as JSON (--table: value CSV)");
    add_common(window, f, true);
    window->add_flag("--table", f.table, "emit the certified value table of the window primes");

    auto* count = app.add_subcommand("count", "ternary representation count r(N) and Gamma(N)");
    add_common(count, f, true);
    count->add_flag("--N-star", f.n_star, "use the window's canonical target N*");
    count->add_option("--target", f.target, "explicit target N");
    count->add_option("--method", f.method, "mitm or naive (default mitm)")
        ->check(CLI::IsMember({"mitm", "naive"}));

    auto* scan = app.add_subcommand("scan", "counts over N* + band (default -100:100)");
    add_common(scan, f, true);
    scan->add_option("--band", f.band, "offsets lo:hi relative to N*");

    auto* compare = app.add_subcommand("compare", "counts against the main term over a band");
    add_common(compare, f, true);
    compare->add_option("--band", f.band, "offsets lo:hi relative to N*");

    auto* binary = app.add_subcommand("binary", "smallest prime pair with f(p1) + f(p2) = N");
    add_common(binary, f, true);
    binary->add_flag("--N-star", f.n_star, "use the window's canonical target N*");
    binary->add_option("--target", f.target, "explicit target N");

    auto* classical = app.add_subcommand("classical", "N = [p1^c] + [p2^c] + [p3^c] counts");
    add_common(classical, f, false);
    classical->add_option("--target", f.target, "target N (<= 10^5)")->required();

    auto* expsum = app.add_subcommand("expsum", "S, Theta or A on the grid alpha = j/M");
    add_common(expsum, f, true);
    expsum->add_option("--kind", f.kind, "S, Theta or A (default S)")->check(CLI::IsMember({"S", "Theta", "A"}));
    expsum->add_option("--grid", f.grid, "grid size M (default 256)");

    auto* exponents = app.add_subcommand("exponents", "exact exponent chain ending in c < 23/21");
    exponents->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exponents->add_option("--out", f.out, "output path (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "oracle-equivalence and DFT-identity checks");
    selftest->add_option("--threads", f.threads, "worker threads");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        RunConfig cfg;
        cfg.command = "help";
        const auto subs = app.get_subcommands();
        cfg.out_path = subs.empty() ? app.help() : subs.front()->help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        usage(e.what());
    }

    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (f.c) cfg.c = *f.c;
    if (f.theta) cfg.theta = *f.theta;
    if (f.epsilon) cfg.epsilon = *f.epsilon;
    if (f.tol_k) cfg.tol_k = *f.tol_k;
    cfg.k = f.k;
    cfg.n = f.n;
    cfg.target = f.target;
    cfg.use_n_star = f.n_star;
    cfg.grid = f.grid;
    cfg.kind = f.kind;
    cfg.method_naive = f.method == "naive";
    cfg.emit_table = f.table;
    cfg.threads = f.threads;
    cfg.out_format = f.format == "json" ? OutFormat::Json : OutFormat::Csv;
    cfg.out_path = f.out;
    cfg.seed = f.seed;

    if (needs_window(cfg.command)) {
        if (cfg.k && cfg.n) usage("--k and --N are mutually exclusive");
        if (!cfg.k && !cfg.n) usage("one of --k or --N is required");
    }
    if (cfg.use_n_star && cfg.target) usage("--N-star and --target are mutually exclusive");
    if (!f.band.empty()) cfg.band = parse_band(f.band);
    if ((cfg.command == "scan" || cfg.command == "compare") && !cfg.band)
        cfg.band = std::pair<std::int64_t, std::int64_t>{-100, 100};
    if (cfg.grid && *cfg.grid < 1) usage("--grid must be positive");
    return cfg;
}

namespace {

WindowParams select_window(const RunConfig& cfg) {
    if (cfg.n) return solve_for_target(*cfg.n, cfg.c, cfg.theta, cfg.epsilon, cfg.tol_k);
    return window_from_index(*cfg.k, cfg.c, cfg.theta, cfg.epsilon);
}

std::int64_t pick_target(const RunConfig& cfg, const WindowParams& w) {
    return cfg.target ? *cfg.target : w.n_star;
}

int selftest(const RunConfig& cfg, std::ostream& out) {
    bool all = true;
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
        all = all && ok;
    };

    const WindowParams w = window_from_index(2, 1.05, 2.0);
    const WindowTable t = build_window_table(w, cfg.threads);
    const PairMap pairs(t.values, t.logs, cfg.threads);
    bool oracle_ok = true;
    for (std::int64_t d = -10; d < 10; ++d) {
        const auto fast = count_ternary_mitm(pairs, t.values, t.logs, w.n_star + d);
        const auto slow = count_ternary_naive(t.values, t.logs, w.n_star + d);
        const double scale = std::max(1.0, std::abs(slow.weighted));
        oracle_ok = oracle_ok && fast.count == slow.count &&
                    std::abs(fast.weighted - slow.weighted) <= 1e-9 * scale;
    }
    line("oracle-equivalence", oracle_ok, "mitm vs naive on 20 targets around N* (k=2)");

    std::int64_t fmax = 0;
    for (const auto& v : t.values) fmax = std::max(fmax, v.f);
    bool dft_ok = true;
    for (std::int64_t d = -5; d < 5; ++d) {
        const std::int64_t n = w.n_star + 7 * d;
        const auto full = circle_integral(t.values, t.logs, n, 0.0, 1.0, 3 * fmax + 1, cfg.threads);
        const double gamma = count_ternary_mitm(pairs, t.values, t.logs, n).weighted;
        const double scale = std::max(1.0, std::abs(gamma));
        dft_ok = dft_ok && std::abs(full.value.real() - gamma) <= 1e-6 * scale &&
                 std::abs(full.value.imag()) <= 1e-6 * scale;
    }
    line("dft-identity", dft_ok, "full-circle integral equals Gamma(N) on 10 targets (k=2)");

    const bool exp_ok = admissible_c() == Rational(23, 21);
    line("exponent-ledger", exp_ok, "admissible c = " + admissible_c().str());
    return all ? 0 : 1;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidParameter, "cannot open --out path " + cfg.out_path);
    file << payload;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.command == "help") {
        out << cfg.out_path;
        return 0;
    }
    if (cfg.command == "selftest") return selftest(cfg, out);

    std::ostringstream body;
    const bool json = cfg.out_format == OutFormat::Json;

    if (cfg.command == "exponents") {
        const auto chain = exponent_chain();
        if (json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& s : chain)
                j.push_back({{"step", s.step}, {"expression", s.expression}, {"value", s.value.str()}});
            body << j.dump(2) << '\n';
        } else {
            write_chain_csv(body, chain);
        }
        emit(cfg, out, body.str());
        return 0;
    }

    if (cfg.command == "classical") {
        const std::int64_t n = *cfg.target;
        const RepReport r = count_classical(cfg.c, n, cfg.threads);
        const double mt = classical_main_term(cfg.c, n);
        const double ratio = mt > 0.0 ? r.weighted / mt : 0.0;
        if (json) {
            nlohmann::ordered_json j{{"c", cfg.c},          {"N", n},          {"count", r.count},
                                     {"weighted", r.weighted}, {"main_term", mt}, {"ratio", ratio}};
            body << j.dump(2) << '\n';
        } else {
            body << "N,count,weighted,main_term,ratio\n"
                 << n << ',' << r.count << ',' << format_real(r.weighted) << ',' << format_real(mt) << ','
                 << format_real(ratio) << '\n';
        }
        emit(cfg, out, body.str());
        return 0;
    }

    const WindowParams w = select_window(cfg);
    for (const auto& warn : w.warnings) err << "warning: " << warn << '\n';

    if (cfg.command == "window") {
        if (cfg.emit_table) {
            const WindowTable t = build_window_table(w, cfg.threads);
            if (json) {
                nlohmann::ordered_json j;
                j["window"] = window_to_json(w);
                auto rows = nlohmann::ordered_json::array();
                for (const auto& v : t.values)
                    rows.push_back({{"n", v.n}, {"f", v.f}, {"frac", v.frac}, {"certified", v.certified}});
                j["rows"] = std::move(rows);
                body << j.dump(2) << '\n';
            } else {
                write_value_csv(body, t.values);
            }
        } else {
            body << window_to_json(w).dump(2) << '\n';
        }
        emit(cfg, out, body.str());
        return 0;
    }

    if (cfg.command == "expsum") {
        const std::int64_t grid = cfg.grid.value_or(256);
        SumKind kind = cfg.kind == "Theta" ? SumKind::Theta : cfg.kind == "A" ? SumKind::A : SumKind::S;
        std::vector<SumSample> samples;
        if (kind == SumKind::S) {
            const WindowTable t = build_window_table(w, cfg.threads);
            samples = sample_grid(kind, grid, t.values, t.logs, nullptr, cfg.threads);
        } else if (kind == SumKind::A) {
            const ValueTable ints = integer_value_table(w, cfg.threads);
            samples = sample_grid(kind, grid, ints, {}, nullptr, cfg.threads);
        } else {
            const ThetaTable theta = theta_table(w, cfg.threads);
            samples = sample_grid(kind, grid, {}, {}, &theta, cfg.threads);
        }
        if (json)
            write_samples_json(body, samples, w);
        else
            write_samples_csv(body, samples);
        emit(cfg, out, body.str());
        return 0;
    }

    const WindowTable t = build_window_table(w, cfg.threads);

    if (cfg.command == "count") {
        const std::int64_t n = pick_target(cfg, w);
        RepReport r = cfg.method_naive ? count_ternary_naive(t.values, t.logs, n)
                                       : count_ternary_mitm(t.values, t.logs, n, cfg.threads);
        r.window = t.window;
        if (json)
            write_rep_json(body, std::span(&r, 1));
        else
            write_rep_csv(body, std::span(&r, 1));
    } else if (cfg.command == "scan" || cfg.command == "compare") {
        const auto [lo, hi] = *cfg.band;
        auto reports = scan_band(t.values, t.logs, w.n_star + lo, w.n_star + hi, cfg.threads);
        for (auto& r : reports) r.window = t.window;
        if (cfg.command == "scan") {
            if (json)
                write_rep_json(body, reports);
            else
                write_rep_csv(body, reports);
        } else {
            const CompareReport rep = compare_report(reports, w);
            if (json)
                write_compare_json(body, rep);
            else
                write_compare_csv(body, rep);
        }
    } else if (cfg.command == "binary") {
        const std::int64_t n = pick_target(cfg, w);
        const auto pair = find_binary(t.values, t.logs, n);
        if (json) {
            nlohmann::ordered_json j;
            j["window"] = window_to_json(w);
            j["N"] = n;
            j["found"] = pair.has_value();
            if (pair) {
                j["p1"] = pair->first;
                j["p2"] = pair->second;
            }
            body << j.dump(2) << '\n';
        } else {
            body << "N,found,p1,p2\n" << n << ',' << (pair ? "true" : "false") << ',';
            if (pair) body << pair->first << ',' << pair->second;
            else body << ',';
            body << '\n';
        }
    }
    emit(cfg, out, body.str());
    return 0;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_args(argv), out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 4;
    }
}

}  // namespace tanrep::cli
