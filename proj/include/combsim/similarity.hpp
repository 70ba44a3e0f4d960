#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combsim/groups.hpp"
#include "combsim/space.hpp"

namespace combsim {

/// Certificate that two spaces (X, d) and (Y, rho) are combinatorially
/// similar: a point bijection psi from Y onto X and a value bijection f from
/// the range of d onto the range of rho with rho(y1, y2) = f(d(psi y1, psi y2))
/// on every pair. Every witness handed out by this module has been
/// re-verified against that equation and f(0) = 0.
struct SimilarityWitness {
    std::vector<int> psi;                           // index in Y -> index in X
    std::vector<std::pair<Rational, Rational>> f;   // (d-value, rho-value), sorted by d-value

    const Rational& apply_f(const Rational& d_value) const;
    void verify(const PseudometricSpace& x, const PseudometricSpace& y) const;

    /// Witness for the spaces swapped: psi^{-1} and f^{-1}.
    SimilarityWitness inverted() const;
    /// Witness X~Z from witnesses X~Y and Y~Z.
    static SimilarityWitness composed(const SimilarityWitness& xy, const SimilarityWitness& yz);
};

/// Search result plus, when empty, the first reason the pair was ruled out.
struct SimilaritySearch {
    std::optional<SimilarityWitness> witness;
    std::string rejection;
};

/// Exhaustive witness search. Cheap invariants first (point count, range
/// size, zero-class size multiset, fiber size multiset), then backtracking
/// over point bijections with an incrementally maintained value map. Point
/// order and candidate order are fixed, so the returned witness is
/// deterministic.
SimilaritySearch find_similarity_explain(const PseudometricSpace& x,
                                         const PseudometricSpace& y,
                                         int bound = kDefaultBruteForceBound);
std::optional<SimilarityWitness> find_similarity(const PseudometricSpace& x,
                                                 const PseudometricSpace& y,
                                                 int bound = kDefaultBruteForceBound);

/// A point bijection Y -> X that preserves distances exactly, if one exists.
std::optional<std::vector<int>> find_isometry(const PseudometricSpace& x,
                                              const PseudometricSpace& y,
                                              int bound = kDefaultBruteForceBound);

/// Whether a distance-preserving map exists that is surjective up to zero
/// distance; equivalently, whether the metric reflections are isometric.
bool are_pseudoisometric(const PseudometricSpace& x, const PseudometricSpace& y,
                         int bound = kDefaultBruteForceBound);

struct ZeroCriterionResult {
    bool similar = false;
    /// True when both spaces are discrete, both strongly rigid or both
    /// pseudorectangles, in which case `similar` is read off the
    /// zero-relations; false means the verdict fell back to witness search.
    bool theorem_applicable = false;
};

/// Same-point-set comparison through the zero-relations. Requires the two
/// spaces to list the same points in the same order.
ZeroCriterionResult similar_iff_same_zero(const PseudometricSpace& x,
                                          const PseudometricSpace& y,
                                          int bound = kDefaultBruteForceBound);

/// When the two spaces partition X^2 into the same fibers, the identity is a
/// witness and the value bijection can be read off the blocks. Requires the
/// same point list.
std::optional<SimilarityWitness> identity_similarity_from_fibers(const PseudometricSpace& x,
                                                                 const PseudometricSpace& y);

}  // namespace combsim
