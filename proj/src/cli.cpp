#include <hypsum/cli.hpp>

#include <fstream>
#include <sstream>

#include <hypsum/asymptotics.hpp>
#include <hypsum/bessel.hpp>
#include <hypsum/error.hpp>
#include <hypsum/identity.hpp>
#include <hypsum/serialize.hpp>

namespace hypsum
{

namespace
{

std::string render(const Json &j, bool pretty)
{
    return j.dump(pretty ? 2 : -1) + "\n";
}

IdentityInstance load_instance(const CliConfig &config)
{
    if (!config.input_path) {
        throw Error(ErrorKind::InvalidArgument, "an instance file is required");
    }
    std::ifstream in(*config.input_path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open " + *config.input_path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return instance_from_json(j);
}

Json fuzz_json(const CliConfig &config, const FuzzSummary &summary)
{
    Json out;
    out["count"] = config.fuzz.count;
    out["seed"] = config.fuzz.seed;
    out["passed"] = summary.passed;
    out["failed"] = summary.failed;
    Json failures = Json::array();
    for (const auto &f : summary.failures) {
        failures.push_back({{"index", f.index}, {"instance", to_json(f.instance)}, {"reason", f.reason}});
    }
    out["failures"] = std::move(failures);
    return out;
}

CliResult dispatch(const CliConfig &config)
{
    if (config.buffer < 1) {
        throw Error(ErrorKind::InvalidArgument, "--buffer must be positive");
    }
    switch (config.command) {
        case Command::Verify: {
            const VerificationReport report = verify(load_instance(config), config.buffer);
            return {report.passed() ? 0 : 1, render(to_json(report), config.pretty)};
        }
        case Command::Coeffs: {
            const IdentityInstance inst = load_instance(config);
            try {
                return {0, render(to_json(beta_coefficients(inst, config.buffer)), config.pretty)};
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::SupportViolation) {
                    throw;
                }
                return {1, render(Json{{"error", to_string(e.kind())}, {"message", e.what()}}, config.pretty)};
            }
        }
        case Command::Lemma: {
            const IdentityInstance inst = load_instance(config);
            try {
                return {0, render(to_json(lemma1_check(inst)), config.pretty)};
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::CheckFailed) {
                    throw;
                }
                return {1, render(Json{{"error", to_string(e.kind())}, {"message", e.what()}}, config.pretty)};
            }
        }
        case Command::ResidueCheck: {
            if (!config.k) {
                throw Error(ErrorKind::InvalidArgument, "residue-check requires --k");
            }
            const ResidueCheck check = residue_check(load_instance(config), *config.k);
            return {check.agree() ? 0 : 1, render(to_json(check), config.pretty)};
        }
        case Command::Fuzz: {
            const FuzzSummary summary = run_fuzz(config.fuzz, config.buffer, config.threads);
            return {summary.failed == 0 ? 0 : 1, render(fuzz_json(config, summary), config.pretty)};
        }
        case Command::Bessel: {
            const std::vector<long double> samples(config.samples.begin(), config.samples.end());
            const Rational nu = Rational::parse(config.nu);
            try {
                const BesselReport report = bessel_demo(nu, config.m, config.order, samples, config.tolerance);
                return {report.passed() ? 0 : 1, render(to_json(report), config.pretty)};
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::NumericResidualExceeded) {
                    throw;
                }
                return {1, render(Json{{"error", to_string(e.kind())}, {"message", e.what()}}, config.pretty)};
            }
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown command");
}

} // namespace

CliResult run(const CliConfig &config)
{
    try {
        return dispatch(config);
    } catch (const Error &e) {
        return {2, render(Json{{"error", to_string(e.kind())}, {"message", e.what()}}, config.pretty)};
    }
}

} // namespace hypsum
