#pragma once

#include "plab/rational.hpp"

#include <cstdint>
#include <random>

namespace plab {

/// Seeded generator with a platform-independent integer mapping, so sampled
/// verdicts are reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// Small rational p/q with |p| <= bound and q in [1, max_den].
    Rational small_rational(std::int64_t bound = 5, std::int64_t max_den = 3)
    {
        const auto p = uniform(-bound, bound);
        const auto q = uniform(1, max_den);
        return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
    }

    Rational small_nonzero_rational(std::int64_t bound = 5, std::int64_t max_den = 3)
    {
        for (;;) {
            Rational r = small_rational(bound, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace plab
