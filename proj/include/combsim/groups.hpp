#pragma once

#include <cstdint>
#include <vector>

#include "combsim/space.hpp"

namespace combsim {

/// Cap on explicit enumeration of Sym(n). Enumeration past this size fails
/// loudly instead of silently truncating.
inline constexpr int kDefaultBruteForceBound = 8;

class Permutation {
public:
    explicit Permutation(std::vector<int> mapping);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mapping() const { return map_; }

    /// (*this) after `inner`: result(x) = (*this)(inner(x)).
    Permutation compose(const Permutation& inner) const;
    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> map_;
};

/// A group of permutations listed explicitly, sorted lexicographically by
/// mapping. At the sizes this library targets (n <= 8) the explicit listing
/// is exact and cheap enough.
struct PermutationGroup {
    int degree = 0;
    std::vector<Permutation> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;

    /// Identity membership, closure under inverses and the full composition
    /// table. Quadratic in the order; meant for test-scale groups.
    void verify_group_axioms() const;
};

/// True iff mapping pair distances through `phi` induces a well-defined
/// bijection of the distance range onto itself; equivalently, `phi`
/// preserves equality of pair distances in both directions.
bool is_self_similarity(const PseudometricSpace& space, const Permutation& phi);

/// Same predicate via the four-point condition
/// d(x,y) = d(u,v) <=> d(phi x, phi y) = d(phi u, phi v) checked on all
/// quadruples. Quartic; kept as an independent cross-check of
/// `is_self_similarity`.
bool is_self_similarity_quadruple(const PseudometricSpace& space, const Permutation& phi);

/// True iff d(x, phi(x)) = 0 for every point.
bool is_pseudoidentity(const PseudometricSpace& space, const Permutation& phi);

/// All combinatorial self-similarities of the space, by enumeration of
/// Sym(X). Requires size <= bound.
PermutationGroup cs_group(const PseudometricSpace& space, int bound = kDefaultBruteForceBound);

/// All pseudoidentities of the space, by enumeration of Sym(X).
PermutationGroup pi_group(const PseudometricSpace& space, int bound = kDefaultBruteForceBound);

/// The homomorphism induced on Cs(X, d) by collapsing zero-classes:
/// H(phi) permutes the classes by H(phi)(pi(x)) = pi(phi(x)).
struct ReflectionHom {
    PseudometricSpace space;
    PseudometricSpace reflection;
    std::vector<int> projection;       // point index -> class index
    PermutationGroup source;           // Cs(space)
    PermutationGroup target;           // Cs(reflection)
    std::vector<Permutation> image;    // image[k] = H(source.elements[k])

    std::size_t image_order() const;

    /// H(a o b) = H(a) o H(b) on all pairs. Quadratic in |Cs|.
    void verify_homomorphism_law() const;
};

ReflectionHom reflection_hom(const PseudometricSpace& space,
                             int bound = kDefaultBruteForceBound);

/// {phi in Cs : H(phi) = id}; always coincides with the pseudoidentities.
PermutationGroup kernel(const ReflectionHom& hom);

/// Whether `phi` covers `reflection_psi` through the canonical projection,
/// i.e. pi o phi = psi o pi. When it does and `reflection_psi` is a
/// self-similarity of the reflection, `phi` is checked to be a
/// self-similarity of the space (a failure would be a library bug).
bool lift_self_similarity(const PseudometricSpace& space, const Permutation& reflection_psi,
                          const Permutation& phi);

/// How many full Sym(n) enumerations have run in this process. The
/// structural classification paths are required to leave this untouched.
std::uint64_t enumeration_count();

}  // namespace combsim
