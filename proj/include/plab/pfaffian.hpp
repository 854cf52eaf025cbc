#pragma once

#include "plab/diff_form.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// {omega in span(S) : d omega = 0 mod S}, via d omega_i ^ Omega = 0 with
/// Omega the wedge of all generators.
PfaffSystem derived_system(const PfaffSystem& s);

struct DerivedFlag {
    std::vector<PfaffSystem> systems;
    /// Ranks of S_0, S_1, ... ending at 0 or at the first repeated rank.
    std::vector<std::size_t> ranks;
    /// Number of strict rank drops.
    std::size_t length = 0;
};

DerivedFlag derived_flag(const PfaffSystem& s);

struct RankCorank {
    std::size_t rank;
    std::size_t corank;
    friend bool operator==(const RankCorank&, const RankCorank&) = default;
};

RankCorank rank_corank(const PfaffSystem& s);

/// d omega_i ^ omega_1 ^ ... ^ omega_s = 0 for every generator.
bool frobenius_test(const PfaffSystem& s);

struct CharacteristicSpace {
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> basis;
};

/// Vectors X with omega(X) = 0 and (X -| d omega) = 0 mod S at the point.
/// Throws SingularPoint when the generators are dependent there.
CharacteristicSpace characteristic_space(const PfaffSystem& s, std::span<const Rational> at);

struct FlagVerdict {
    bool is_flag = false;
    std::size_t length = 0;
    std::string reason; ///< empty for flags
    RankCorank rank{0, 0};
    std::vector<std::size_t> ranks;
    std::size_t sampled_points = 0;
};

/// Co-rank 2, derived ranks dropping by one to zero, and characteristics
/// vanishing at 5 seeded random points.
FlagVerdict flag_classify(const PfaffSystem& s, std::uint64_t seed = 0);

/// dy_i - y_{i+1} dx, 0 <= i < length, on (x, y0, ..., y_length).
PfaffSystem goursat_model(std::size_t length);

} // namespace plab
