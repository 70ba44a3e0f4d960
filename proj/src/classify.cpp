#include "combsim/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "combsim/errors.hpp"

namespace combsim {

MetricReflection metric_reflection(const PseudometricSpace& space) {
    const Partition classes = zero_partition(space);
    const int m = classes.block_count();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    std::vector<int> reps;
    reps.reserve(static_cast<std::size_t>(m));
    for (const auto& block : classes.blocks()) {
        reps.push_back(block.front());
        labels.push_back(space.label(block.front()));
    }
    std::vector<Rational> matrix;
    matrix.reserve(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            matrix.push_back(space.dist(reps[static_cast<std::size_t>(a)],
                                        reps[static_cast<std::size_t>(b)]));
        }
    }
    // The quotient distance must not depend on the chosen representatives,
    // and must be positive on distinct classes.
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const Rational& expected = matrix[static_cast<std::size_t>(a) * m + b];
            if (a != b && expected.is_zero()) {
                fail(ErrorKind::InternalCheck, "distinct zero-classes at distance 0");
            }
            for (const int x : classes.block(a)) {
                for (const int y : classes.block(b)) {
                    if (!(space.dist(x, y) == expected)) {
                        fail(ErrorKind::InternalCheck,
                             "quotient distance depends on representatives");
                    }
                }
            }
        }
    }
    std::vector<int> projection(static_cast<std::size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) {
        projection[static_cast<std::size_t>(x)] = classes.block_of(x);
    }
    return MetricReflection{PseudometricSpace::validate(std::move(labels), std::move(matrix)),
                            std::move(projection)};
}

bool is_discrete_definitional(const PseudometricSpace& space) {
    return range(space).size() <= 2;
}

bool is_discrete_structural(const PseudometricSpace& space) {
    return partitions_equal(otimes2(zero_partition(space)), fiber_partition(space));
}

bool fiber_quadruple_condition(const PseudometricSpace& space, const Rational& t) {
    if (t.is_zero()) {
        fail(ErrorKind::ValueNotInRange, "the condition is about nonzero distances");
    }
    const auto pairs = fiber(space, t);
    for (const auto& [x, y] : pairs) {
        for (const auto& [u, v] : pairs) {
            const bool straight = space.dist(x, u).is_zero() && space.dist(y, v).is_zero();
            const bool crossed = space.dist(x, v).is_zero() && space.dist(y, u).is_zero();
            if (!straight && !crossed) {
                return false;
            }
        }
    }
    return true;
}

bool fiber_is_block_pair(const PseudometricSpace& space, const Rational& t) {
    if (t.is_zero()) {
        fail(ErrorKind::ValueNotInRange, "the condition is about nonzero distances");
    }
    const Partition classes = zero_partition(space);
    const auto pairs = fiber(space, t);
    const int j1 = classes.block_of(pairs.front().first);
    const int j2 = classes.block_of(pairs.front().second);
    if (j1 == j2) {
        fail(ErrorKind::InternalCheck, "nonzero distance inside a zero-class");
    }
    std::size_t expected = 2 * classes.block(j1).size() * classes.block(j2).size();
    if (pairs.size() != expected) {
        return false;
    }
    for (const auto& [x, y] : pairs) {
        const int bx = classes.block_of(x);
        const int by = classes.block_of(y);
        if (!((bx == j1 && by == j2) || (bx == j2 && by == j1))) {
            return false;
        }
    }
    return true;
}

bool is_strongly_rigid_definitional(const PseudometricSpace& space) {
    for (const Rational& t : range(space).values) {
        if (t.is_zero()) continue;
        if (!fiber_quadruple_condition(space, t)) {
            return false;
        }
    }
    return true;
}

bool is_strongly_rigid_structural(const PseudometricSpace& space) {
    return partitions_equal(otimes1(zero_partition(space)), fiber_partition(space));
}

bool is_pseudorectangle_definitional(const PseudometricSpace& space) {
    const int n = space.size();
    // Every three-point metric subspace must be strongly rigid and carry the
    // same distances as every other one.
    bool have_reference = false;
    std::array<Rational, 3> reference;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.dist(i, j).is_zero()) continue;
            for (int k = j + 1; k < n; ++k) {
                if (space.dist(i, k).is_zero() || space.dist(j, k).is_zero()) continue;
                if (!is_strongly_rigid_definitional(subspace(space, std::vector<int>{i, j, k}))) {
                    return false;
                }
                std::array<Rational, 3> triple{space.dist(i, j), space.dist(i, k),
                                               space.dist(j, k)};
                std::sort(triple.begin(), triple.end());
                if (!have_reference) {
                    reference = triple;
                    have_reference = true;
                } else if (!(triple == reference)) {
                    return false;
                }
            }
        }
    }
    // And some four-point metric subspace must reach every point at
    // distance zero.
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (space.dist(a, b).is_zero()) continue;
            for (int c = b + 1; c < n; ++c) {
                if (space.dist(a, c).is_zero() || space.dist(b, c).is_zero()) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (space.dist(a, d).is_zero() || space.dist(b, d).is_zero() ||
                        space.dist(c, d).is_zero()) {
                        continue;
                    }
                    bool covers = true;
                    for (int x = 0; x < n && covers; ++x) {
                        covers = space.dist(x, a).is_zero() || space.dist(x, b).is_zero() ||
                                 space.dist(x, c).is_zero() || space.dist(x, d).is_zero();
                    }
                    if (covers) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

bool is_pseudorectangle_structural(const PseudometricSpace& space) {
    const Partition classes = zero_partition(space);
    if (classes.block_count() != 4) {
        return false;
    }
    const Partition fibers = fiber_partition(space);
    // The product does not depend on the block order (relabelling the four
    // blocks permutes the three matchings among themselves), but the search
    // over labellings is cheap and keeps the test in its stated form.
    std::vector<int> order{0, 1, 2, 3};
    do {
        if (partitions_equal(otimes3(classes, order), fibers)) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool reflection_sym_full(const PseudometricSpace& space) {
    return is_discrete_structural(space) || is_strongly_rigid_structural(space) ||
           is_pseudorectangle_structural(space);
}

namespace {

bool zero_block_sizes_distinct(const Partition& classes) {
    std::vector<int> sizes = classes.block_sizes();
    std::sort(sizes.begin(), sizes.end());
    return std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end();
}

}  // namespace

bool is_ip_by_classification(const PseudometricSpace& space) {
    if (!zero_block_sizes_distinct(zero_partition(space))) {
        return false;
    }
    return reflection_sym_full(space);
}

bool is_ip_by_fiber_partition(const PseudometricSpace& space) {
    const Partition classes = zero_partition(space);
    if (!zero_block_sizes_distinct(classes)) {
        return false;
    }
    const Partition fibers = fiber_partition(space);
    if (partitions_equal(otimes1(classes), fibers)) return true;
    if (partitions_equal(otimes2(classes), fibers)) return true;
    if (classes.block_count() == 4) {
        std::vector<int> order{0, 1, 2, 3};
        do {
            if (partitions_equal(otimes3(classes, order), fibers)) {
                return true;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return false;
}

bool is_ip_structural(const PseudometricSpace& space) {
    const bool by_classes = is_ip_by_classification(space);
    const bool by_fibers = is_ip_by_fiber_partition(space);
    if (by_classes != by_fibers) {
        fail(ErrorKind::InternalCheck, "the two structural membership routes disagree");
    }
    return by_classes;
}

const char* method_tag_name(MethodTag tag) {
    switch (tag) {
        case MethodTag::Definitional: return "definitional";
        case MethodTag::Structural: return "structural";
        case MethodTag::BothAgree: return "both-agree";
    }
    return "structural";
}

ClassificationReport build_report(const PseudometricSpace& space, const ReportOptions& options) {
    ClassificationReport report;
    report.point_count = space.size();
    report.range_size = range(space).size();
    const Partition classes = zero_partition(space);
    report.reflection_size = static_cast<std::size_t>(classes.block_count());
    report.zero_block_sizes = classes.block_sizes();
    std::sort(report.zero_block_sizes.begin(), report.zero_block_sizes.end());

    const auto resolve = [&](bool structural, bool definitional, const char* what) {
        if (structural != definitional) {
            fail(ErrorKind::InternalCheck,
                 std::string("methods disagree on ") + what + " classification");
        }
        return structural;
    };
    if (options.structural_only) {
        report.is_discrete = is_discrete_structural(space);
        report.is_strongly_rigid = is_strongly_rigid_structural(space);
        report.is_pseudorectangle = is_pseudorectangle_structural(space);
        report.discrete_method = MethodTag::Structural;
        report.strongly_rigid_method = MethodTag::Structural;
        report.pseudorectangle_method = MethodTag::Structural;
    } else {
        report.is_discrete =
            resolve(is_discrete_structural(space), is_discrete_definitional(space), "discrete");
        report.is_strongly_rigid = resolve(is_strongly_rigid_structural(space),
                                           is_strongly_rigid_definitional(space), "strongly rigid");
        report.is_pseudorectangle =
            resolve(is_pseudorectangle_structural(space), is_pseudorectangle_definitional(space),
                    "pseudorectangle");
        report.discrete_method = MethodTag::BothAgree;
        report.strongly_rigid_method = MethodTag::BothAgree;
        report.pseudorectangle_method = MethodTag::BothAgree;
    }

    report.ip_member = is_ip_structural(space);
    report.ip_method = MethodTag::Structural;

    if (!options.structural_only && space.size() <= options.bound) {
        const PermutationGroup cs = cs_group(space, options.bound);
        const PermutationGroup pi = pi_group(space, options.bound);
        report.cs_order = cs.order();
        report.pi_order = pi.order();
        const MetricReflection refl = metric_reflection(space);
        const PermutationGroup cs_refl = cs_group(refl.space, options.bound);
        std::size_t full = 1;
        for (int k = 2; k <= refl.space.size(); ++k) {
            full *= static_cast<std::size_t>(k);
        }
        const bool by_groups = cs.elements == pi.elements && cs_refl.order() == full;
        if (by_groups != report.ip_member) {
            fail(ErrorKind::InternalCheck, "enumeration disagrees with the structural verdict");
        }
        report.ip_method = MethodTag::BothAgree;
    }
    return report;
}

}  // namespace combsim
