#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace quasitree {

// Default absolute comparison tolerance used throughout the library.
inline constexpr double kTol = 1e-9;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-point formatting with 9 decimal places, round-half-even.
// All persisted numeric output goes through this so reruns diff cleanly.
std::string format9(double x);

// Round to 9 decimal places (the value format9 would print).
double round9(double x);

// Runs fn(0..n-1) on up to `threads` workers (0 = hardware concurrency).
// Callers keep determinism by writing per-index results and reducing serially.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

int effective_threads(int threads);

// Deterministic uniform doubles in [0,1) from a splitmix-style stream;
// std::uniform_real_distribution is implementation-defined, this is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double next_double() {  // [0,1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        return next_u64() % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace quasitree
