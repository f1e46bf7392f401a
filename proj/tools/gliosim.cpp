#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "gliosim/config.hpp"
#include "gliosim/errors.hpp"
#include "gliosim/imaging.hpp"
#include "gliosim/integrator.hpp"
#include "gliosim/pipeline.hpp"

namespace {

gliosim::SimConfig resolve_config(const std::string& config_path, const std::string& preset,
                                  const std::string& fallback_preset) {
    if (!preset.empty()) return gliosim::preset_config(preset);
    if (!config_path.empty()) return gliosim::load_config(config_path);
    if (!fallback_preset.empty()) return gliosim::preset_config(fallback_preset);
    return gliosim::SimConfig{};
}

int default_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

gliosim::ImageStack load_inputs(const std::vector<std::string>& inputs) {
    namespace fs = std::filesystem;
    if (inputs.size() == 1 && fs::is_directory(inputs[0])) {
        std::vector<std::string> slices;
        for (const auto& entry : fs::directory_iterator(inputs[0]))
            if (entry.path().extension() == ".pgm") slices.push_back(entry.path().string());
        if (slices.empty())
            throw gliosim::data_error("no .pgm slices found in " + inputs[0]);
        std::sort(slices.begin(), slices.end());
        return gliosim::load_stack(slices);
    }
    if (inputs.size() == 1 && fs::path(inputs[0]).extension() != ".pgm")
        return gliosim::load_raw_volume(inputs[0]);
    return gliosim::load_stack(inputs);
}

int cmd_ingest(const std::vector<std::string>& inputs, const gliosim::SimConfig& cfg,
               const std::string& out) {
    const gliosim::ImageStack stack = load_inputs(inputs);
    std::fprintf(stderr, "loaded %dx%d, %d slice(s)\n", stack.width, stack.height,
                 stack.num_slices);

    const gliosim::MaterialVolume mv = gliosim::resample(stack, cfg.grid(), cfg);

    std::array<std::int64_t, 4> counts{};
    for (gliosim::Material m : mv.labels) ++counts[static_cast<int>(m)];
    const gliosim::MatterFractions f = gliosim::matter_fractions(mv);
    std::printf("materials on the %dx%dx%d grid: air %lld, white %lld, gray %lld, skull %lld\n",
                cfg.nx, cfg.ny, cfg.nz, static_cast<long long>(counts[0]),
                static_cast<long long>(counts[1]), static_cast<long long>(counts[2]),
                static_cast<long long>(counts[3]));
    std::printf("tissue fractions: white %.1f%%, gray %.1f%%\n", 100.0 * f.white, 100.0 * f.gray);

    gliosim::write_label_volume(mv, out);
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int cmd_run(const gliosim::SimConfig& cfg, const std::string& labels_path,
            const std::string& out_dir, int workers) {
    const gliosim::Grid grid = cfg.grid();

    gliosim::MaterialVolume mv;
    gliosim::DiffusionField d;
    const gliosim::MaterialVolume* materials = nullptr;
    if (!labels_path.empty()) {
        mv = gliosim::read_label_volume(labels_path, grid);
        d = gliosim::diffusion_from_materials(mv, cfg);
        materials = &mv;
    } else {
        d = gliosim::uniform_diffusion(grid, cfg.d_white);
    }

    const int every = std::max(1, cfg.num_steps / 10);
    const auto progress = [&](const gliosim::StepMetrics& m) {
        if (m.step % every == 0 || m.step == cfg.num_steps)
            std::fprintf(stderr, "step %4d/%d  t = %9.2f  max = %.4f  radius = %.1f mm\n", m.step,
                         cfg.num_steps, m.time, m.max_density, m.radius);
    };
    const auto warn = [](int step, double lo, double hi) {
        std::fprintf(stderr, "warning: step %d density outside [-0.01, 1.01]: min %.4g, max %.4g\n",
                     step, lo, hi);
    };

    const gliosim::RunResult res =
        gliosim::run_to_directory(cfg, d, materials, out_dir, workers, progress, warn);

    const gliosim::StepMetrics& last = res.metrics.back();
    std::printf("wrote snapshots and metrics.csv to %s\n", out_dir.c_str());
    std::printf("assembly  %8.3f s\n", res.timings.assemble_seconds);
    std::printf("time loop %8.3f s  (%d steps, %d worker(s))\n", res.timings.step_seconds,
                cfg.num_steps, workers);
    std::printf("output    %8.3f s\n", res.timings.io_seconds);
    std::printf("final state: t = %g days, mass = %g, max = %g, radius = %g mm\n", last.time,
                last.total_mass, last.max_density, last.radius);
    return 0;
}

int cmd_validate(const gliosim::SimConfig& cfg, int workers) {
    const gliosim::ValidationReport rep = gliosim::validate_suite(cfg, workers);
    for (const gliosim::CheckResult& c : rep.checks)
        std::printf("[%s] %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    if (!rep.all_passed()) {
        std::printf("validation FAILED\n");
        return 3;
    }
    std::printf("all checks passed\n");
    return 0;
}

int cmd_bench(const gliosim::SimConfig& cfg, int workers) {
    const gliosim::Grid grid = cfg.grid();
    const gliosim::DiffusionField d = gliosim::uniform_diffusion(grid, cfg.d_white);
    const gliosim::RunResult res =
        gliosim::run(cfg, d, gliosim::seed_initial(grid, cfg), workers);

    std::printf("grid %dx%dx%d, %d steps, %d worker(s)\n", cfg.nx, cfg.ny, cfg.nz, cfg.num_steps,
                workers);
    std::printf("assembly  %8.3f s\n", res.timings.assemble_seconds);
    std::printf("time loop %8.3f s  (%.1f steps/s)\n", res.timings.step_seconds,
                cfg.num_steps / res.timings.step_seconds);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reaction-diffusion tumor growth simulator"};
    app.require_subcommand(1);

    std::string config_path, preset, out, labels_path;
    std::vector<std::string> inputs;
    int workers = default_workers();
    int snapshot_every = 0;

    CLI::App* ingest = app.add_subcommand(
        "ingest", "Classify an image stack into tissue labels on the simulation grid");
    ingest->add_option("inputs", inputs, "slice directory, .pgm slice list, or raw volume file")
        ->required();
    ingest->add_option("--config", config_path, "configuration file");
    ingest->add_option("--preset", preset, "built-in configuration: paper-2d, paper-3d, bench-32");
    ingest->add_option("--out", out, "output label volume path")->default_val("labels.vol");

    CLI::App* run = app.add_subcommand("run", "Run a tumor growth simulation");
    run->add_option("labels", labels_path, "label volume from ingest (default: all white matter)");
    run->add_option("--config", config_path, "configuration file");
    run->add_option("--preset", preset, "built-in configuration: paper-2d, paper-3d, bench-32");
    run->add_option("--out", out, "output directory")->default_val("out");
    run->add_option("--workers", workers, "matvec worker threads");
    run->add_option("--snapshot-every", snapshot_every, "override snapshot cadence (steps)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Check the solver against the theoretical front speed and conservation laws");
    validate->add_option("--config", config_path, "configuration file");
    validate->add_option("--preset", preset,
                         "built-in configuration: paper-2d, paper-3d, bench-32");
    validate->add_option("--workers", workers, "matvec worker threads");

    CLI::App* bench = app.add_subcommand("bench", "Time the integrator on a benchmark grid");
    bench->add_option("--config", config_path, "configuration file");
    bench->add_option("--preset", preset, "built-in configuration: paper-2d, paper-3d, bench-32");
    bench->add_option("--workers", workers, "matvec worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(ingest)) {
            return cmd_ingest(inputs, resolve_config(config_path, preset, ""), out);
        }
        if (app.got_subcommand(run)) {
            gliosim::SimConfig cfg = resolve_config(config_path, preset, "");
            if (snapshot_every > 0) cfg.snapshot_every = snapshot_every;
            return cmd_run(cfg, labels_path, out, workers);
        }
        if (app.got_subcommand(validate)) {
            return cmd_validate(resolve_config(config_path, preset, ""), workers);
        }
        return cmd_bench(resolve_config(config_path, preset, "bench-32"), workers);
    } catch (const gliosim::numeric_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const gliosim::data_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
