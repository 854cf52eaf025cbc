#pragma once

#include "plab/matrix.hpp"
#include "plab/pde_system.hpp"

#include <optional>
#include <span>
#include <vector>

namespace plab {

/// Symbol g_q inside S^q T* (x) R^m.
///
/// Ambient coordinates are the order-q jet coordinates u^a_alpha in chart
/// order; basis vectors are given in those coordinates (derivative values,
/// not monomial coefficients).
struct SymbolSpace {
    std::size_t n = 0;
    std::size_t m = 0;
    unsigned q = 0;
    std::vector<std::pair<std::size_t, MultiIndex>> ambient; ///< (a, alpha), |alpha| = q
    std::vector<Vector<RatFunc>> basis;
    std::optional<std::vector<Rational>> point; ///< nullopt for the generic symbol

    std::size_t dimension() const { return basis.size(); }
    std::size_t ambient_dimension() const { return ambient.size(); }
};

/// Symbol of prolong(s, q - k). Without a point it is computed over Q(coords),
/// modulo the solved form when one exists. With a point (full coordinates of
/// the order-q chart) it is exact over Q; throws NotOnLocus off the locus and
/// OrderMismatch for q below the order of s.
SymbolSpace symbol(const PdeSystem& s, unsigned q, std::optional<std::span<const Rational>> at = std::nullopt);

/// delta: S^q T* (x) R^m (x) L^p -> S^{q-1} T* (x) R^m (x) L^{p+1} in the
/// monomial basis; columns are (a, alpha, xi) with alpha, then a, then xi.
Matrix<Rational> ambient_delta(std::size_t n, std::size_t m, unsigned q, unsigned p);
/// delta restricted to g (x) L^p; columns are (basis vector, xi).
Matrix<RatFunc> delta_map(const SymbolSpace& g, unsigned p);
/// g (x) L^p inside the ambient monomial basis, columns (basis vector, xi).
Matrix<RatFunc> symbol_embedding(const SymbolSpace& g, unsigned p);

struct CohomologyCell {
    unsigned q;
    unsigned p;
    std::size_t dimension;
};

struct SpencerReport {
    unsigned q_min = 0;
    unsigned q_max = 0;
    std::vector<std::size_t> symbol_dimensions; ///< g_q for q_min..q_max+1
    std::vector<CohomologyCell> cells;
    bool two_acyclic = false; ///< H^{q,1} = H^{q,2} = 0 on the whole range
    std::optional<unsigned> first_acyclic; ///< smallest q0 with 2-acyclicity for all q0 <= q <= q_max

    std::size_t h(unsigned q, unsigned p) const;
};

/// H^{q,p} = dim(g_q) C(n,p) - rank delta^{q,p} - rank delta^{q+1,p-1} for
/// q in [q_min, q_max], p in [0, n].
SpencerReport spencer_cohomology(const PdeSystem& s, unsigned q_min, unsigned q_max);

struct CartanResult {
    unsigned q = 0;
    std::vector<std::size_t> characters; ///< alpha_1..alpha_n
    std::size_t dim_g = 0;
    std::size_t dim_next = 0; ///< dim g_{q+1}
    bool involutive = false;
};

/// Characters of g_q (default q = order of s) with respect to 5 seeded random
/// flags, keeping the lexicographically largest vector.
CartanResult cartan_characters(const PdeSystem& s, std::optional<unsigned> q = std::nullopt,
                               std::uint64_t seed = 0);

} // namespace plab
