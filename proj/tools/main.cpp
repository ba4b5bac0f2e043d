// bml — multi-backend Biham-Middleton-Levine traffic CA driver.
// Subcommands: run (metrics + snapshots), verify (cross-backend equivalence),
// bench (timing CSV). Exit codes: 0 ok, 1 usage, 2 verification failure, 3 I/O.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bml/digest.hpp"
#include "bml/engine.hpp"
#include "bml/metrics.hpp"
#include "bml/seeding.hpp"
#include "bml/snapshot.hpp"
#include "bml/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitIo = 3;

std::string hex_digest(std::uint64_t d) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(d));
    return buf;
}

std::string format_mobility(double m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", m);
    return buf;
}

// 0 = auto: all logical cores for the parallel backend, 1 otherwise
int resolve_threads(int requested, bml::Backend backend) {
    if (requested > 0) return requested;
    if (backend != bml::Backend::ParallelRows) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CommonFlags {
    int n = 256;
    double rho = 0.3;
    long steps = 1024;
    std::uint64_t seed = 1;
    int threads = 0;
};

void add_common_flags(CLI::App& cmd, CommonFlags& f) {
    cmd.add_option("-n,--size", f.n, "grid side length");
    cmd.add_option("--density", f.rho, "vehicle density in [0,1]");
    cmd.add_option("--steps", f.steps, "full steps (horizontal + vertical)");
    cmd.add_option("--seed", f.seed, "PRNG seed");
    cmd.add_option("--threads", f.threads, "worker threads (0 = auto)");
}

int cmd_run(const CommonFlags& flags, const std::string& backend_name_arg, long snapshot_every,
            const std::string& out_dir_arg) {
    const auto backend = bml::backend_from_name(backend_name_arg);
    if (!backend) {
        std::cerr << "run: unknown backend '" << backend_name_arg << "'\n";
        return kExitUsage;
    }

    bml::SimConfig cfg;
    cfg.n = flags.n;
    cfg.rho = flags.rho;
    cfg.steps = flags.steps;
    cfg.seed = flags.seed;
    cfg.backend = *backend;
    cfg.threads = resolve_threads(flags.threads, *backend);
    cfg.snapshot_every = snapshot_every;
    cfg.out_dir = out_dir_arg;
    bml::validate(cfg);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) {
        std::cerr << "run: cannot create '" << cfg.out_dir.string() << "': " << ec.message()
                  << "\n";
        return kExitIo;
    }

    const auto csv_path = cfg.out_dir / "metrics.csv";
    std::ofstream csv(csv_path, std::ios::trunc);
    if (!csv) {
        std::cerr << "run: cannot open '" << csv_path.string() << "'\n";
        return kExitIo;
    }
    csv << "step,lr_count,tb_count,lr_moved,tb_moved,mobility\n";

    const bml::Grid initial = bml::init_grid({cfg.n, cfg.rho, cfg.seed});
    bml::GridPair pair = bml::make_grid_pair(cfg.backend, initial);

    std::deque<double> window;
    const auto observer = [&](const bml::StepMetrics& m) {
        csv << m.step << ',' << m.lr_count << ',' << m.tb_count << ',' << m.lr_moved << ','
            << m.tb_moved << ',' << format_mobility(m.mobility) << '\n';
        window.push_back(m.mobility);
        if (window.size() > static_cast<std::size_t>(bml::kClassifyWindow)) window.pop_front();
        if (cfg.snapshot_every > 0 && m.step % cfg.snapshot_every == 0)
            bml::write_ppm(pair.cur,
                           cfg.out_dir / ("step_" + std::to_string(m.step) + ".ppm"));
    };

    const bml::Grid final_grid = bml::run(cfg, pair, observer);

    csv.flush();
    if (!csv) {
        std::cerr << "run: write failed for '" << csv_path.string() << "'\n";
        return kExitIo;
    }

    const auto dump_path = cfg.out_dir / "final_grid.txt";
    std::ofstream dump(dump_path, std::ios::trunc);
    dump << bml::render_grid(final_grid);
    if (!dump) {
        std::cerr << "run: write failed for '" << dump_path.string() << "'\n";
        return kExitIo;
    }

    std::cout << "digest=" << hex_digest(bml::grid_digest(final_grid)) << "\n";
    if (!window.empty()) {
        const std::vector<double> history(window.begin(), window.end());
        std::cout << "phase=" << bml::regime_name(bml::classify(history)) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags) {
    bml::SimConfig cfg;
    cfg.n = flags.n;
    cfg.rho = flags.rho;
    cfg.steps = flags.steps;
    cfg.seed = flags.seed;
    cfg.backend = bml::Backend::ParallelRows;  // carrier for the thread count
    cfg.threads = resolve_threads(flags.threads, bml::Backend::ParallelRows);
    bml::validate(cfg);

    const bml::VerifyReport report = bml::verify_backends(cfg);
    for (const auto& d : report.digests)
        std::cout << "backend=" << bml::backend_name(d.backend)
                  << " digest=" << hex_digest(d.digest) << "\n";

    if (!report.conserved) {
        std::cout << "verify: FAILED (vehicle conservation violated)\n";
        return kExitVerifyFailure;
    }
    if (report.mismatch) {
        std::cout << "verify: FAILED (" << report.mismatch->a << " vs " << report.mismatch->b
                  << " first differ at interior cell (" << report.mismatch->row << ", "
                  << report.mismatch->col << "))\n";
        return kExitVerifyFailure;
    }
    std::cout << "verify: OK (n=" << cfg.n << ", steps=" << cfg.steps << ")\n";
    return kExitOk;
}

int cmd_bench(const CommonFlags& flags, const std::vector<int>& sizes,
              const std::vector<std::string>& backend_names, int reps) {
    std::vector<bml::Backend> backends;
    for (const auto& name : backend_names) {
        const auto b = bml::backend_from_name(name);
        if (!b) {
            std::cerr << "bench: unknown backend '" << name << "'\n";
            return kExitUsage;
        }
        backends.push_back(*b);
    }

    std::cout << "backend,n,threads,reps,mean_s,stddev_s\n";
    for (bml::Backend backend : backends) {
        for (int n : sizes) {
            bml::SimConfig cfg;
            cfg.n = n;
            cfg.rho = flags.rho;
            cfg.steps = flags.steps;
            cfg.seed = flags.seed;
            cfg.backend = backend;
            cfg.threads = resolve_threads(flags.threads, backend);
            bml::validate(cfg);

            const bml::Grid initial = bml::init_grid({cfg.n, cfg.rho, cfg.seed});
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(reps));
            for (int rep = 0; rep < reps; ++rep) {
                bml::GridPair pair = bml::make_grid_pair(backend, initial);
                const auto start = std::chrono::steady_clock::now();
                bml::run(cfg, pair);  // no observer: the update loop only
                const auto stop = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double>(stop - start).count());
            }

            double mean = 0.0;
            for (double t : times) mean += t;
            mean /= static_cast<double>(reps);
            double var = 0.0;
            for (double t : times) var += (t - mean) * (t - mean);
            var /= static_cast<double>(reps);

            char row[160];
            std::snprintf(row, sizeof row, "%s,%d,%d,%d,%.6f,%.6f\n",
                          std::string(bml::backend_name(backend)).c_str(), n, cfg.threads, reps,
                          mean, std::sqrt(var));
            std::cout << row << std::flush;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biham-Middleton-Levine traffic cellular automaton"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string run_backend = "halo";
    long snapshot_every = 0;
    std::string out_dir = ".";
    CLI::App* run_cmd = app.add_subcommand("run", "simulate and write metrics/snapshots");
    add_common_flags(*run_cmd, run_flags);
    run_cmd->add_option("--backend", run_backend, "naive|halo|parallel|lanes");
    run_cmd->add_option("--snapshot-every", snapshot_every, "PPM snapshot cadence (0 = never)");
    run_cmd->add_option("--out-dir", out_dir, "output directory");

    CommonFlags verify_flags;
    verify_flags.n = 64;
    verify_flags.steps = 100;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check that all four backends agree bit-exactly");
    add_common_flags(*verify_cmd, verify_flags);

    CommonFlags bench_flags;
    std::vector<int> bench_sizes = {1024, 2048, 4096};
    std::vector<std::string> bench_backends = {"naive", "halo", "parallel", "lanes"};
    int reps = 5;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the update loop, CSV on stdout");
    bench_cmd->add_option("--density", bench_flags.rho, "vehicle density in [0,1]");
    bench_cmd->add_option("--steps", bench_flags.steps, "full steps per repetition");
    bench_cmd->add_option("--seed", bench_flags.seed, "PRNG seed");
    bench_cmd->add_option("--threads", bench_flags.threads, "worker threads (0 = auto)");
    bench_cmd->add_option("-n,--size", bench_sizes, "grid side lengths");
    bench_cmd->add_option("--backend", bench_backends, "backends to time");
    bench_cmd->add_option("--reps", reps, "repetitions per measurement")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_flags, run_backend, snapshot_every, out_dir);
        if (verify_cmd->parsed()) return cmd_verify(verify_flags);
        if (bench_cmd->parsed()) return cmd_bench(bench_flags, bench_sizes, bench_backends, reps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
