#ifndef HYPSUM_CLI_HPP
#define HYPSUM_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include <hypsum/fuzz.hpp>

namespace hypsum
{

enum class Command { Verify, Coeffs, Lemma, ResidueCheck, Fuzz, Bessel };

struct CliConfig {
    Command command = Command::Verify;
    std::optional<std::string> input_path;
    int buffer = 25;
    std::optional<int> k;
    FuzzOptions fuzz;
    unsigned threads = 0;
    std::string nu = "1/3";
    int m = 1;
    int order = 30;
    double tolerance = 1e-10;
    std::vector<double> samples{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    bool pretty = false;
};

struct CliResult {
    int exit_code = 0;
    std::string output; // JSON document followed by a newline
};

// 0 when every check passes, 1 on a failed check, 2 on input or validation
// errors (with an {"error": ...} payload).
CliResult run(const CliConfig &config);

} // namespace hypsum

#endif
