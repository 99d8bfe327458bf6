#include <hypsum/fuzz.hpp>

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include <hypsum/error.hpp>
#include <hypsum/identity.hpp>

namespace hypsum
{

Rational random_rational(std::mt19937_64 &rng, int shift_range)
{
    const int bound = 8 * std::max(1, shift_range);
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, std::min(12, bound));
    const int p = num(rng);
    const int q = den(rng);
    return Rational(p, q);
}

IdentityInstance random_instance(std::mt19937_64 &rng, const FuzzOptions &options)
{
    if (options.r_min < 2 || options.r_max < options.r_min) {
        throw Error(ErrorKind::InvalidArgument, "r range must satisfy 2 <= r_min <= r_max");
    }
    if (options.shift_range < 0) {
        throw Error(ErrorKind::InvalidArgument, "shift range must be non-negative");
    }
    std::uniform_int_distribution<int> r_dist(options.r_min, options.r_max);
    std::uniform_int_distribution<int> shift(-options.shift_range, options.shift_range);
    for (;;) {
        const int r = r_dist(rng);
        int s = r;
        if (options.theorem == TheoremChoice::Any) {
            s = std::uniform_int_distribution<int>(0, r)(rng);
        } else if (options.theorem == TheoremChoice::Two) {
            s = std::uniform_int_distribution<int>(0, r - 1)(rng);
        }
        IdentityInstance inst;
        for (int i = 0; i < r; ++i) {
            inst.a.push_back(random_rational(rng, options.shift_range));
        }
        for (int j = 0; j < s; ++j) {
            inst.b.push_back(random_rational(rng, options.shift_range));
        }
        for (int j = 0; j < s; ++j) {
            inst.m.push_back(shift(rng));
        }
        for (int i = 0; i < r; ++i) {
            inst.n.push_back(shift(rng));
        }
        try {
            (void)validate(inst);
            return inst;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotDistinctModZ && e.kind() != ErrorKind::PrefactorPole) {
                throw;
            }
        }
    }
}

std::vector<IdentityInstance> generate_instances(const FuzzOptions &options)
{
    if (options.count < 0) {
        throw Error(ErrorKind::InvalidArgument, "count must be non-negative");
    }
    std::mt19937_64 rng(options.seed);
    std::vector<IdentityInstance> out;
    out.reserve(static_cast<std::size_t>(options.count));
    for (int i = 0; i < options.count; ++i) {
        out.push_back(random_instance(rng, options));
    }
    return out;
}

FuzzSummary run_fuzz(const FuzzOptions &options, int buffer, unsigned threads)
{
    const std::vector<IdentityInstance> instances = generate_instances(options);
    std::vector<std::optional<std::string>> outcome(instances.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                const VerificationReport report = verify(instances[i], buffer);
                if (!report.passed()) {
                    std::string reason = report.vanishing_ok ? std::string("cross-check failed") : report.vanishing_detail;
                    for (const auto &c : report.cross_checks) {
                        if (c.status == CheckStatus::Fail) {
                            reason += "; " + c.name + ": " + c.detail;
                        }
                    }
                    outcome[i] = reason;
                }
            } catch (const Error &e) {
                outcome[i] = std::string(to_string(e.kind())) + ": " + e.what();
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    FuzzSummary summary;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (outcome[i]) {
            ++summary.failed;
            summary.failures.push_back({static_cast<int>(i), instances[i], *outcome[i]});
        } else {
            ++summary.passed;
        }
    }
    return summary;
}

} // namespace hypsum
