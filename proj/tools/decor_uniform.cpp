// decor-uniform command line: check | curvature | uniformize | verify
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "decor_uniform/cli.hpp"

using namespace decor_uniform;

int main(int argc, char** argv)
{
    CLI::App app{"Discrete conformal uniformization of decorated PE surfaces"};
    app.require_subcommand(1);

    std::string path;
    std::optional<double> alpha;

    auto* check = app.add_subcommand("check", "validate a problem file");
    check->add_option("problem", path, "problem JSON")->required();

    auto* curv = app.add_subcommand("curvature", "print K and alpha-curvature per vertex");
    curv->add_option("problem", path, "problem JSON")->required();
    curv->add_option("--alpha", alpha, "curvature exponent");

    cli::UniformizeOptions opt;
    std::string target_file, out_path, normalize;
    std::uint64_t seed = 0;
    auto* uni = app.add_subcommand("uniformize", "solve for prescribed or constant curvature");
    uni->add_option("problem", path, "problem JSON")->required();
    uni->add_option("--alpha", alpha, "curvature exponent");
    auto* target_opt = uni->add_option("--target", target_file, "target JSON {\"values\": [...]}");
    uni->add_flag("--constant", opt.constant, "constant curvature")->excludes(target_opt);
    auto* out_opt = uni->add_option("--out", out_path, "result JSON");
    uni->add_flag("--trace", opt.trace, "print iterations and flips");
    uni->add_option("--tol", opt.tol, "residual tolerance")->check(CLI::PositiveNumber);
    uni->add_option("--max-iters", opt.max_iters, "Newton iteration limit");
    auto* seed_opt = uni->add_option("--seed", seed, "random starting factor from this seed");
    uni->add_option("--normalize", normalize, "sumzero or none")
        ->check(CLI::IsMember({"sumzero", "none"}));
    uni->add_flag("--force", opt.force, "solve targets outside the supported cases");

    auto* ver = app.add_subcommand("verify", "recheck a result file");
    ver->add_option("result", path, "result JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::ParseFailure;
    }

    if (check->parsed()) {
        return cli::cmd_check(path, std::cout, std::cerr);
    }
    if (curv->parsed()) {
        return cli::cmd_curvature(path, alpha, std::cout, std::cerr);
    }
    if (uni->parsed()) {
        opt.alpha = alpha;
        if (*target_opt) {
            opt.target_file = target_file;
        }
        if (*out_opt) {
            opt.out_path = out_path;
        }
        if (*seed_opt) {
            opt.seed = seed;
        }
        if (!normalize.empty()) {
            opt.normalization = normalize == "sumzero" ? Normalization::SumZero : Normalization::None;
        }
        return cli::cmd_uniformize(path, opt, std::cout, std::cerr);
    }
    return cli::cmd_verify(path, std::cout, std::cerr);
}
