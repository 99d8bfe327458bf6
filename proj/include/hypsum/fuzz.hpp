#ifndef HYPSUM_FUZZ_HPP
#define HYPSUM_FUZZ_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <hypsum/hyper.hpp>

namespace hypsum
{

enum class TheoremChoice { Any, One, Two };

struct FuzzOptions {
    int count = 100;
    int r_min = 2;
    int r_max = 4;
    int shift_range = 3;
    std::uint64_t seed = 42;
    TheoremChoice theorem = TheoremChoice::Any;
};

// Uniform rational with |numerator| <= 8 * max(1, shift_range) and
// denominator in [1, min(12, 8 * max(1, shift_range))].
Rational random_rational(std::mt19937_64 &rng, int shift_range);

// One instance passing validate(); colliding draws are rejected and redrawn.
IdentityInstance random_instance(std::mt19937_64 &rng, const FuzzOptions &options);

// options.count instances from a generator seeded with options.seed.
std::vector<IdentityInstance> generate_instances(const FuzzOptions &options);

struct FuzzFailure {
    int index = 0;
    IdentityInstance instance;
    std::string reason;
};

struct FuzzSummary {
    int passed = 0;
    int failed = 0;
    std::vector<FuzzFailure> failures; // sorted by index
};

// Runs verify() on every generated instance, spread over `threads` workers
// (0 = hardware concurrency). The result does not depend on the thread count.
FuzzSummary run_fuzz(const FuzzOptions &options, int buffer, unsigned threads = 0);

} // namespace hypsum

#endif
