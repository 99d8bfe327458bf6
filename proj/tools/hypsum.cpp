#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <hypsum/cli.hpp>

int main(int argc, char **argv)
{
    using hypsum::Command;

    CLI::App app{"Exact certification of sum-of-products hypergeometric reduction identities"};
    app.require_subcommand(1);

    hypsum::CliConfig config;
    std::string input;
    int k = 0;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    auto add_instance_command = [&](const std::string &name, const std::string &help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("input", input, "Instance JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--buffer", config.buffer, "Coefficients checked past the certified support")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--pretty", pretty, "Indent the JSON output");
        return sub;
    };

    auto *verify = add_instance_command("verify", "Full verification report");
    auto *coeffs = add_instance_command("coeffs", "Certified right-hand side coefficients only");
    auto *lemma = add_instance_command("lemma", "Compare C_{-1}(k) with the Bernoulli-polynomial route");
    auto *residue = add_instance_command("residue-check", "Three routes to the series coefficient at one k");
    residue->add_option("--k", k, "Series exponent")->required();

    auto *fuzz = app.add_subcommand("fuzz", "Verify randomly generated instances");
    std::vector<int> r_range{config.fuzz.r_min, config.fuzz.r_max};
    std::string theorem = "any";
    fuzz->add_option("--count", config.fuzz.count, "Number of instances")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--r-range", r_range, "Smallest and largest r")->expected(2)->check(CLI::Range(2, 12));
    fuzz->add_option("--shift-range", config.fuzz.shift_range, "Integer shifts are drawn from [-R, R]")
        ->check(CLI::NonNegativeNumber);
    fuzz->add_option("--seed", config.fuzz.seed, "Generator seed");
    fuzz->add_option("--theorem", theorem, "Restrict to s = r (one), s < r (two) or either (any)")
        ->check(CLI::IsMember({"any", "one", "two"}));
    fuzz->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    fuzz->add_option("--buffer", config.buffer, "Coefficients checked past the certified support")
        ->check(CLI::PositiveNumber);
    fuzz->add_flag("--pretty", pretty, "Indent the JSON output");

    auto *bessel = app.add_subcommand("bessel", "Bessel-product identity: exact and numeric layers");
    bessel->add_option("--nu", config.nu, "Order nu as a rational string")->required();
    bessel->add_option("--m", config.m, "Integer shift m")->required();
    bessel->add_option("--order", config.order, "0F1 series order")->check(CLI::PositiveNumber);
    bessel->add_option("--tolerance", config.tolerance, "Relative divided-difference tolerance")
        ->check(CLI::PositiveNumber);
    bessel->add_option("--samples", config.samples, "Sample points x > 0");
    bessel->add_flag("--pretty", pretty, "Indent the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::map<CLI::App *, Command> commands{
        {verify, Command::Verify}, {coeffs, Command::Coeffs}, {lemma, Command::Lemma},
        {residue, Command::ResidueCheck}, {fuzz, Command::Fuzz}, {bessel, Command::Bessel},
    };
    for (const auto &[sub, command] : commands) {
        if (sub->parsed()) {
            config.command = command;
        }
    }
    if (!input.empty()) {
        config.input_path = input;
    }
    if (residue->parsed()) {
        config.k = k;
    }
    config.fuzz.r_min = r_range[0];
    config.fuzz.r_max = r_range[1];
    config.fuzz.theorem = theorem == "one" ? hypsum::TheoremChoice::One
                                           : (theorem == "two" ? hypsum::TheoremChoice::Two : hypsum::TheoremChoice::Any);
    config.pretty = pretty;

    const hypsum::CliResult result = hypsum::run(config);
    std::cout << result.output;
    return result.exit_code;
}
