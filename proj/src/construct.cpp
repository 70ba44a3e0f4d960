#include "combsim/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "combsim/classify.hpp"
#include "combsim/errors.hpp"
#include "combsim/similarity.hpp"

namespace combsim {

namespace {

void check_ground(const std::vector<std::string>& points, const EquivalenceRelation& rel) {
    if (static_cast<int>(points.size()) != rel.ground_size()) {
        fail(ErrorKind::GroundMismatch,
             std::to_string(points.size()) + " points for a relation on " +
                 std::to_string(rel.ground_size()) + " elements");
    }
}

// Builds the matrix of a space whose distance depends only on the pair of
// zero-classes: 0 inside a class, pair_value(a, b) across.
template <typename PairValue>
PseudometricSpace space_from_class_values(std::vector<std::string> points,
                                          const Partition& classes, PairValue pair_value) {
    const int n = classes.ground_size();
    std::vector<Rational> matrix(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int a = classes.block_of(i);
            const int b = classes.block_of(j);
            if (a != b) {
                matrix[static_cast<std::size_t>(i) * n + j] = pair_value(std::min(a, b),
                                                                          std::max(a, b));
            }
        }
    }
    return PseudometricSpace::validate(std::move(points), std::move(matrix));
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
    }
    return labels;
}

// Pool of K distinct rationals 1 + k/(K+1), k = 1..K, ascending.
std::vector<Rational> unit_interval_pool(int count) {
    std::vector<Rational> pool;
    pool.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) {
        pool.push_back(Rational(count + 1 + k, count + 1));
    }
    return pool;
}

int pair_slot(int a, int b, int m) {
    // Lexicographic rank of the unordered pair (a, b), a < b, among all
    // pairs from m blocks.
    return a * m - a * (a + 1) / 2 + (b - a - 1);
}

// Random zero-class partition: blocks 0..m-1 seeded with points 0..m-1, the
// remaining points assigned uniformly.
Partition random_classes(int n, int m, SplitMix64& rng) {
    std::vector<int> block_of(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        block_of[static_cast<std::size_t>(p)] =
            p < m ? p : static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    }
    return Partition::from_block_assignment(block_of);
}

PseudometricSpace rigid_break(int n, int m, SplitMix64& rng) {
    const Partition classes = random_classes(n, m, rng);
    const int pairs = m * (m - 1) / 2;
    std::vector<Rational> values = unit_interval_pool(pairs);
    deterministic_shuffle(values, rng);
    // Duplicate one value onto a second class pair: the space then has a
    // fiber spanning two class pairs (not strongly rigid), at least three
    // distance values (not discrete) and never exactly four (not a
    // pseudorectangle).
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(pairs)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(pairs - 1)));
    if (b >= a) ++b;
    values[static_cast<std::size_t>(b)] = values[static_cast<std::size_t>(a)];
    return space_from_class_values(default_labels(n), classes, [&](int x, int y) {
        return values[static_cast<std::size_t>(pair_slot(x, y, m))];
    });
}

PseudometricSpace rectangle_break(int n, SplitMix64& rng) {
    const Partition classes = random_classes(n, 4, rng);
    std::vector<Rational> matching_values{Rational(5, 4), Rational(3, 2), Rational(7, 4)};
    deterministic_shuffle(matching_values, rng);
    static constexpr int kMatchingOf[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
    std::vector<Rational> values(6, Rational(0));
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            values[static_cast<std::size_t>(pair_slot(a, b, 4))] =
                matching_values[static_cast<std::size_t>(kMatchingOf[a][b])];
        }
    }
    // Split one matched pair off to its own value. Odd eighths never collide
    // with the quarters above, so the range grows to five values: the space
    // is in none of the three classes.
    const int matching = static_cast<int>(rng.below(3));
    const int side = static_cast<int>(rng.below(2));
    int slot = -1;
    int seen = 0;
    for (int a = 0; a < 4 && slot < 0; ++a) {
        for (int b = a + 1; b < 4 && slot < 0; ++b) {
            if (kMatchingOf[a][b] == matching && seen++ == side) {
                slot = pair_slot(a, b, 4);
            }
        }
    }
    values[static_cast<std::size_t>(slot)] =
        Rational(8 + 2 * static_cast<int>(rng.below(4)) + 1, 8);
    return space_from_class_values(default_labels(n), classes, [&](int x, int y) {
        return values[static_cast<std::size_t>(pair_slot(x, y, 4))];
    });
}

}  // namespace

PseudometricSpace discrete_from_relation(const std::vector<std::string>& points,
                                         const EquivalenceRelation& rel) {
    check_ground(points, rel);
    const Partition classes = partition_from_relation(rel);
    return space_from_class_values(points, classes, [](int, int) { return Rational(1); });
}

PseudometricSpace strongly_rigid_from_relation(const std::vector<std::string>& points,
                                               const EquivalenceRelation& rel,
                                               std::uint64_t seed) {
    check_ground(points, rel);
    const Partition classes = partition_from_relation(rel);
    const int m = classes.block_count();
    std::vector<Rational> values = unit_interval_pool(m * (m - 1) / 2);
    SplitMix64 rng(seed);
    deterministic_shuffle(values, rng);
    return space_from_class_values(points, classes, [&](int a, int b) {
        return values[static_cast<std::size_t>(pair_slot(a, b, m))];
    });
}

PseudometricSpace pseudorectangle_from_relation(const std::vector<std::string>& points,
                                                const EquivalenceRelation& rel,
                                                std::uint64_t seed) {
    check_ground(points, rel);
    const Partition classes = partition_from_relation(rel);
    if (classes.block_count() != 4) {
        fail(ErrorKind::WrongBlockCount, "a pseudorectangle needs exactly 4 zero-classes, got " +
                                             std::to_string(classes.block_count()));
    }
    std::vector<Rational> matching_values{Rational(5, 4), Rational(3, 2), Rational(7, 4)};
    SplitMix64 rng(seed);
    deterministic_shuffle(matching_values, rng);
    // Pairs {12|34}, {13|24}, {14|23} share one value each.
    static constexpr int kMatchingOf[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
    return space_from_class_values(points, classes, [&](int a, int b) {
        return matching_values[static_cast<std::size_t>(kMatchingOf[a][b])];
    });
}

Profile profile_from_name(const std::string& name) {
    if (name == "generic") return Profile::Generic;
    if (name == "discrete") return Profile::Discrete;
    if (name == "strongly-rigid") return Profile::StronglyRigid;
    if (name == "pseudorectangle") return Profile::Pseudorectangle;
    if (name == "near-miss") return Profile::NearMiss;
    fail(ErrorKind::ParseError, "unknown profile '" + name + "'");
}

const char* profile_name(Profile profile) {
    switch (profile) {
        case Profile::Generic: return "generic";
        case Profile::Discrete: return "discrete";
        case Profile::StronglyRigid: return "strongly-rigid";
        case Profile::Pseudorectangle: return "pseudorectangle";
        case Profile::NearMiss: return "near-miss";
    }
    return "generic";
}

PseudometricSpace random_space(int n, Profile profile, std::uint64_t seed, int max_blocks) {
    if (n < 1) {
        fail(ErrorKind::BadSize, "a space needs at least one point");
    }
    // Seed mixing, part of the documented stream: the generator state starts
    // at seed XOR 0xA24BAED4963EE407 * (profile index + 1) XOR
    // 0x9FB21C651E98DF25 * n.
    const std::uint64_t profile_salt =
        0xA24BAED4963EE407ULL * (static_cast<std::uint64_t>(profile) + 1);
    const std::uint64_t size_salt = 0x9FB21C651E98DF25ULL * static_cast<std::uint64_t>(n);
    SplitMix64 rng(seed ^ profile_salt ^ size_salt);
    const int cap = max_blocks > 0 ? std::min(n, max_blocks) : n;

    switch (profile) {
        case Profile::Generic: {
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
            const Partition classes = random_classes(n, m, rng);
            if (m == 1) {
                return space_from_class_values(default_labels(n), classes,
                                               [](int, int) { return Rational(0); });
            }
            const int pairs = m * (m - 1) / 2;
            const int pool_size =
                1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(pairs)));
            const std::vector<Rational> pool = unit_interval_pool(pool_size);
            std::vector<Rational> values(static_cast<std::size_t>(pairs));
            for (auto& v : values) {
                v = pool[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pool_size)))];
            }
            return space_from_class_values(default_labels(n), classes, [&](int a, int b) {
                return values[static_cast<std::size_t>(pair_slot(a, b, m))];
            });
        }
        case Profile::Discrete: {
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
            const Partition classes = random_classes(n, m, rng);
            const Rational value(8 + 1 + static_cast<int>(rng.below(7)), 8);
            return space_from_class_values(default_labels(n), classes,
                                           [&](int, int) { return value; });
        }
        case Profile::StronglyRigid: {
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
            const Partition classes = random_classes(n, m, rng);
            std::vector<Rational> values = unit_interval_pool(m * (m - 1) / 2);
            deterministic_shuffle(values, rng);
            return space_from_class_values(default_labels(n), classes, [&](int a, int b) {
                return values[static_cast<std::size_t>(pair_slot(a, b, m))];
            });
        }
        case Profile::Pseudorectangle: {
            if (n < 4) {
                fail(ErrorKind::BadSize, "a pseudorectangle needs at least 4 points");
            }
            const Partition classes = random_classes(n, 4, rng);
            std::vector<Rational> matching_values{Rational(5, 4), Rational(3, 2),
                                                  Rational(7, 4)};
            deterministic_shuffle(matching_values, rng);
            static constexpr int kMatchingOf[4][4] = {
                {-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
            return space_from_class_values(default_labels(n), classes, [&](int a, int b) {
                return matching_values[static_cast<std::size_t>(kMatchingOf[a][b])];
            });
        }
        case Profile::NearMiss: {
            if (n < 3) {
                fail(ErrorKind::BadSize, "a near-miss space needs at least 3 points");
            }
            if (n >= 4 && rng.below(2) == 1) {
                return rectangle_break(n, rng);
            }
            const int top = std::max(3, std::min(cap, n));
            const int m = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top - 2)));
            return rigid_break(n, m, rng);
        }
    }
    fail(ErrorKind::BadSize, "unhandled profile");
}

namespace {

bool in_class(ClassTag tag, const PseudometricSpace& space) {
    switch (tag) {
        case ClassTag::StronglyRigid:
            return is_strongly_rigid_structural(space);
        case ClassTag::Discrete:
            return is_discrete_structural(space);
        case ClassTag::PseudorectangleOrRigid4:
            return is_pseudorectangle_structural(space) ||
                   (is_strongly_rigid_structural(space) && range(space).size() <= 4);
    }
    return false;
}

const char* class_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::StronglyRigid: return "strongly-rigid";
        case ClassTag::Discrete: return "discrete";
        case ClassTag::PseudorectangleOrRigid4: return "pseudorectangle-or-rigid-range-4";
    }
    return "?";
}

[[noreturn]] void closure_violation(const char* condition, const PseudometricSpace& space) {
    std::string desc = "condition " + std::string(condition) + " failed on {";
    for (int i = 0; i < space.size(); ++i) {
        for (int j = 0; j < space.size(); ++j) {
            desc += space.dist(i, j).str();
            desc += (i == space.size() - 1 && j == space.size() - 1) ? "}" : " ";
        }
    }
    fail(ErrorKind::ClosureViolation, desc);
}

// A member of the same class on the same points with the same zero-relation
// but (in general) different distance values.
PseudometricSpace class_partner(ClassTag tag, const PseudometricSpace& space,
                                std::uint64_t seed) {
    const EquivalenceRelation rel = zero_relation(space);
    switch (tag) {
        case ClassTag::StronglyRigid:
            return strongly_rigid_from_relation(space.points(), rel, seed);
        case ClassTag::Discrete: {
            const Partition classes = partition_from_relation(rel);
            const Rational value(8 + 1 + static_cast<int>(seed % 7), 8);
            return space_from_class_values(space.points(), classes,
                                           [&](int, int) { return value; });
        }
        case ClassTag::PseudorectangleOrRigid4:
            if (is_pseudorectangle_structural(space)) {
                return pseudorectangle_from_relation(space.points(), rel, seed);
            }
            return strongly_rigid_from_relation(space.points(), rel, seed);
    }
    fail(ErrorKind::BadSample, "unhandled class tag");
}

}  // namespace

ClosureReport check_class_closure(ClassTag tag, const std::vector<PseudometricSpace>& sample) {
    ClosureReport report;
    std::uint64_t partner_seed = 0x5EEDULL;
    for (const PseudometricSpace& space : sample) {
        if (!in_class(tag, space)) {
            fail(ErrorKind::BadSample,
                 "sample space is not in class " + std::string(class_name(tag)));
        }
        // Quotienting and point relabelling both preserve membership.
        const MetricReflection refl = metric_reflection(space);
        if (!in_class(tag, refl.space)) {
            closure_violation("reflection-membership", space);
        }
        ++report.reflection_checks;
        {
            const int n = space.size();
            SplitMix64 rng(partner_seed);
            std::vector<int> sigma(static_cast<std::size_t>(n));
            std::iota(sigma.begin(), sigma.end(), 0);
            deterministic_shuffle(sigma, rng);
            std::vector<Rational> matrix;
            matrix.reserve(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    matrix.push_back(space.dist(sigma[static_cast<std::size_t>(i)],
                                                sigma[static_cast<std::size_t>(j)]));
                }
            }
            const PseudometricSpace relabelled =
                PseudometricSpace::validate(default_labels(n), std::move(matrix));
            if (!in_class(tag, relabelled)) {
                closure_violation("relabel-membership", space);
            }
            ++report.relabel_checks;
        }
        // Same class, same points, same zero-relation: the identity must be
        // a witness.
        {
            const PseudometricSpace partner = class_partner(tag, space, partner_seed);
            if (!identity_similarity_from_fibers(space, partner)) {
                closure_violation("identity-witness", space);
            }
            ++report.identity_witness_checks;
        }
        // Every nonempty subspace stays inside the class.
        {
            const int n = space.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> subset;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1u << i)) {
                        subset.push_back(i);
                    }
                }
                const PseudometricSpace sub = subspace(space, subset);
                const bool ok = tag == ClassTag::PseudorectangleOrRigid4
                                    ? (is_pseudorectangle_structural(sub) ||
                                       (is_strongly_rigid_structural(sub) &&
                                        range(sub).size() <= 4))
                                    : in_class(tag, sub);
                if (!ok) {
                    closure_violation("subspace-membership", space);
                }
                ++report.subspace_checks;
            }
        }
        ++partner_seed;
    }
    return report;
}

}  // namespace combsim
