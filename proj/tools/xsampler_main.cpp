#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "xsampler/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gabor-frame sub-Nyquist sampling of multipulse signals"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    long long seed_override = -1;

    const char* names[] = {"table2", "noise", "quant", "demo"};
    const char* descs[] = {"frame-comparison table",
                           "recovery error over an M x SNR grid",
                           "coefficient error vs quantizer depth",
                           "single end-to-end run with all artifacts"};
    for (int i = 0; i < 4; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--config", config_path, "key = value config file");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed_override, "base seed override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad invocation is a configuration error
    }

    xs::ScenarioConfig cfg;
    try {
        if (!config_path.empty()) cfg = xs::parse_config(config_path);
        cfg.output_dir = out_dir;
        if (seed_override >= 0)
            cfg.base_seed = static_cast<std::uint64_t>(seed_override);
    } catch (const xs::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "table2") xs::run_table2(cfg);
        else if (cmd == "noise") xs::run_noise_sweep(cfg);
        else if (cmd == "quant") xs::run_quantization(cfg);
        else xs::run_demo(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
