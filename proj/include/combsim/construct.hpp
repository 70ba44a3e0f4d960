#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combsim/partition.hpp"
#include "combsim/space.hpp"

namespace combsim {

/// splitmix64. The exact stream is part of the output contract: for a given
/// seed the constructors and generators below are reproducible bit for bit.
/// Draws in [0, k) are `next() % k`; shuffles are Fisher-Yates from the top
/// (i = size-1 .. 1, j = below(i+1)).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t k) { return next() % k; }

private:
    std::uint64_t state_;
};

template <typename T>
void deterministic_shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[static_cast<std::size_t>(rng.below(i))]);
    }
}

/// Distance 0 inside the classes of `rel`, 1 across. The zero-relation of
/// the result is `rel`.
PseudometricSpace discrete_from_relation(const std::vector<std::string>& points,
                                         const EquivalenceRelation& rel);

/// Distance 0 inside the classes; each unordered pair of distinct classes
/// gets its own value from the pool 1 + k/(K+1), k = 1..K, K the number of
/// class pairs, assigned after a seeded shuffle. All nonzero values lie in
/// (1, 2), so the triangle inequality holds outright; the result is strongly
/// rigid and its zero-relation is `rel`.
PseudometricSpace strongly_rigid_from_relation(const std::vector<std::string>& points,
                                               const EquivalenceRelation& rel,
                                               std::uint64_t seed);

/// Requires exactly four classes. The three ways of pairing them up get the
/// values 5/4, 3/2, 7/4 after a seeded shuffle; distance 0 inside classes.
/// The result is a pseudorectangle whose zero-relation is `rel`.
PseudometricSpace pseudorectangle_from_relation(const std::vector<std::string>& points,
                                                const EquivalenceRelation& rel,
                                                std::uint64_t seed);

enum class Profile { Generic, Discrete, StronglyRigid, Pseudorectangle, NearMiss };

Profile profile_from_name(const std::string& name);
const char* profile_name(Profile profile);

/// Deterministic in (n, profile, seed). Generic spaces draw a random
/// zero-class partition and random class-pair values from a shared pool in
/// (1, 2); the structured profiles defer to the constructors above; NearMiss
/// starts from a structured space and perturbs one fiber so that the space
/// lands in none of the three classes while staying a valid pseudometric.
/// `max_blocks` caps the number of zero-classes (0 = no cap). Points are
/// labelled p0, p1, ...
PseudometricSpace random_space(int n, Profile profile, std::uint64_t seed, int max_blocks = 0);

enum class ClassTag { StronglyRigid, Discrete, PseudorectangleOrRigid4 };

struct ClosureReport {
    int reflection_checks = 0;
    int relabel_checks = 0;
    int identity_witness_checks = 0;
    int subspace_checks = 0;
};

/// Sampled closure properties of a class of spaces: membership survives
/// quotienting and point relabelling; two members on the same points with
/// the same zero-relation admit the identity witness; every nonempty
/// subspace stays in the class (for pseudorectangles: in pseudorectangles or
/// strongly rigid spaces with range size at most 4). Every space of `sample`
/// must belong to the class. A violated condition raises ClosureViolation
/// and would indicate a library bug.
ClosureReport check_class_closure(ClassTag tag, const std::vector<PseudometricSpace>& sample);

}  // namespace combsim
