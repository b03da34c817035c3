#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quasiq/errors.hpp"
#include "quasiq/gallery.hpp"
#include "quasiq/gellmann.hpp"
#include "quasiq/json_io.hpp"
#include "quasiq/measure.hpp"
#include "quasiq/verify.hpp"

namespace {

using quasiq::Json;

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        std::size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(tok, &used);
        } catch (...) {
            throw std::invalid_argument("bad dims list: " + text);
        }
        if (used != tok.size()) throw std::invalid_argument("bad dims list: " + text);
        dims.push_back(d);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return dims;
}

void emit_json(const Json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        quasiq::save_json_file(output_path, j);
    }
}

void emit_text(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw quasiq::ParseError("cannot open " + output_path + " for writing");
    out << text;
}

// <stem>.cert.json next to the state file
std::string certificate_path(const std::string& state_path) {
    const std::string suffix = ".json";
    if (state_path.size() > suffix.size() &&
        state_path.compare(state_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return state_path.substr(0, state_path.size() - suffix.size()) + ".cert.json";
    return state_path + ".cert.json";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic quasi entanglement measure for multipartite states"};
    app.require_subcommand(1);

    auto* measure = app.add_subcommand("measure", "evaluate the measure on a state file");
    std::string measure_path;
    std::string picture_arg;
    bool no_validate = false;
    measure->add_option("state", measure_path, "state JSON file")->required();
    measure->add_option("--picture", picture_arg,
                        "density | coherence | qubit-fast | bipartite-mixedness");
    measure->add_flag("--no-validate", no_validate, "skip numeric state validation");

    auto* sweep = app.add_subcommand("sweep-werner", "evaluate the measure on a Werner grid");
    double sweep_from = -1.0;
    double sweep_to = 1.0;
    int sweep_steps = 401;
    std::string sweep_out = "json";
    std::string sweep_output;
    sweep->add_option("--from", sweep_from, "lower end of the parameter range");
    sweep->add_option("--to", sweep_to, "upper end of the parameter range");
    sweep->add_option("--steps", sweep_steps, "grid points, ends included");
    sweep->add_option("--out", sweep_out, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--output", sweep_output, "write to this file instead of standard output");

    auto* verify = app.add_subcommand("verify", "run the seeded property suite");
    std::uint64_t verify_seed = 42;
    int verify_trials = 200;
    std::vector<std::string> verify_dims;
    std::string verify_report;
    int mutate_flat = -1;
    verify->add_option("--seed", verify_seed, "master seed");
    verify->add_option("--trials", verify_trials, "trials per randomized property");
    verify->add_option("--dims", verify_dims,
                       "subsystem layout as comma-separated dims; repeat to cover several");
    verify->add_option("--report", verify_report, "also write the report JSON to this file");
    auto* mutate_opt = verify->add_option("--mutate-gweight", mutate_flat)->group("");

    auto* gen = app.add_subcommand("gen", "emit a gallery state as a state file");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::string gen_output;
    gen->add_option("--output", gen_output, "write to this file instead of standard output");

    auto* gen_ghz = gen->add_subcommand("ghz");
    int ghz_n = 2;
    gen_ghz->add_option("--n", ghz_n, "qubit count")->required();

    auto* gen_werner = gen->add_subcommand("werner");
    double werner_phi = 0.0;
    gen_werner->add_option("--phi", werner_phi, "family parameter in [-1, 1]")->required();

    auto* gen_mixed = gen->add_subcommand("mixed");
    std::string mixed_dims;
    gen_mixed->add_option("--dims", mixed_dims, "comma-separated dims")->required();

    auto* gen_pure = gen->add_subcommand("pure");
    std::string pure_dims;
    std::uint64_t pure_seed = 0;
    gen_pure->add_option("--dims", pure_dims, "comma-separated dims")->required();
    gen_pure->add_option("--seed", pure_seed, "random seed");

    auto* gen_density = gen->add_subcommand("density");
    std::string density_dims;
    int density_rank = 1;
    std::uint64_t density_seed = 0;
    gen_density->add_option("--dims", density_dims, "comma-separated dims")->required();
    gen_density->add_option("--rank", density_rank, "number of pure terms in the mixture");
    gen_density->add_option("--seed", density_seed, "random seed");

    auto* gen_separable = gen->add_subcommand("separable");
    std::string separable_dims;
    int separable_terms = 1;
    std::uint64_t separable_seed = 0;
    gen_separable->add_option("--dims", separable_dims, "comma-separated dims")->required();
    gen_separable->add_option("--terms", separable_terms, "product terms in the mixture");
    gen_separable->add_option("--seed", separable_seed, "random seed");

    auto* basis = app.add_subcommand("basis", "dump the operator basis for one dimension");
    int basis_dim = 2;
    basis->add_option("--dim", basis_dim, "subsystem dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (measure->parsed()) {
            const Json j = quasiq::load_json_file(measure_path);
            const quasiq::DensityMatrix rho = quasiq::state_from_json(j, {}, !no_validate);
            std::optional<quasiq::Picture> picture;
            if (!picture_arg.empty()) picture = quasiq::picture_from_name(picture_arg);
            emit_json(quasiq::report_to_json(quasiq::eq_measure(rho, picture)), "");
            return 0;
        }
        if (sweep->parsed()) {
            const quasiq::WernerSweep s = quasiq::werner_sweep(sweep_from, sweep_to, sweep_steps);
            if (sweep_out == "csv")
                emit_text(quasiq::werner_sweep_to_csv(s), sweep_output);
            else
                emit_json(quasiq::werner_sweep_to_json(s), sweep_output);
            return 0;
        }
        if (verify->parsed()) {
            quasiq::SuiteConfig cfg;
            cfg.seed = verify_seed;
            cfg.trials = verify_trials;
            if (!verify_dims.empty()) {
                cfg.dims_set.clear();
                for (const std::string& d : verify_dims) cfg.dims_set.push_back(parse_dims(d));
            }
            if (mutate_opt->count() > 0) cfg.mutate_gweight = mutate_flat;
            const quasiq::SuiteReport rep = quasiq::run_suite(cfg);
            const Json j = quasiq::suite_report_to_json(rep);
            std::cout << j.dump(2) << '\n';
            if (!verify_report.empty()) quasiq::save_json_file(verify_report, j);
            return rep.all_pass ? 0 : 4;
        }
        if (gen->parsed()) {
            if (gen_ghz->parsed()) {
                emit_json(quasiq::state_to_json(quasiq::ghz(ghz_n)), gen_output);
            } else if (gen_werner->parsed()) {
                emit_json(quasiq::state_to_json(quasiq::werner(werner_phi)), gen_output);
            } else if (gen_mixed->parsed()) {
                emit_json(quasiq::state_to_json(quasiq::completely_mixed(parse_dims(mixed_dims))),
                          gen_output);
            } else if (gen_pure->parsed()) {
                emit_json(
                    quasiq::state_to_json(quasiq::random_pure(parse_dims(pure_dims), pure_seed)),
                    gen_output);
            } else if (gen_density->parsed()) {
                emit_json(quasiq::state_to_json(quasiq::random_density(
                              parse_dims(density_dims), density_rank, density_seed)),
                          gen_output);
            } else if (gen_separable->parsed()) {
                auto [rho, ens] = quasiq::random_separable(parse_dims(separable_dims),
                                                           separable_terms, separable_seed);
                emit_json(quasiq::state_to_json(rho), gen_output);
                if (!gen_output.empty()) {
                    quasiq::save_json_file(certificate_path(gen_output),
                                           quasiq::ensemble_to_json(ens));
                } else {
                    std::cerr << "note: certificate sidecar not written "
                                 "(state went to standard output; use --output)\n";
                }
            }
            return 0;
        }
        if (basis->parsed()) {
            if (basis_dim < 2) throw std::invalid_argument("basis dimension must be at least 2");
            Json elements = Json::array();
            for (const quasiq::ComplexMatrix& b : quasiq::basis_list(basis_dim))
                elements.push_back(quasiq::matrix_to_json(b));
            emit_json(elements, "");
            return 0;
        }
    } catch (const quasiq::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const quasiq::PictureError& e) {
        std::cerr << "picture error: " << e.what() << '\n';
        return 3;
    } catch (const quasiq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
