#pragma once

#include <optional>
#include <vector>

#include "combsim/groups.hpp"
#include "combsim/partition.hpp"
#include "combsim/space.hpp"

namespace combsim {

/// The quotient metric space obtained by collapsing zero-classes, together
/// with the canonical projection. Classes are ordered by least member and
/// labelled by their least member's label.
struct MetricReflection {
    PseudometricSpace space;
    std::vector<int> projection;
};

MetricReflection metric_reflection(const PseudometricSpace& space);

// Each classification predicate comes in two independent forms: one reading
// the definition directly, one comparing the fiber partition of X^2 against
// a product of the zero-class partition with itself. The two must agree on
// every space; that agreement is exercised by the acceptance suite.

bool is_discrete_definitional(const PseudometricSpace& space);   // |range| <= 2
bool is_discrete_structural(const PseudometricSpace& space);

bool is_strongly_rigid_definitional(const PseudometricSpace& space);
bool is_strongly_rigid_structural(const PseudometricSpace& space);

bool is_pseudorectangle_definitional(const PseudometricSpace& space);
bool is_pseudorectangle_structural(const PseudometricSpace& space);

/// Single-value forms of the strong-rigidity condition at one nonzero
/// distance t: the quadruple condition on all pairs at value t, and the
/// structural statement that the fiber of t is exactly one cross of two
/// zero-classes. Equivalent for every space and every t.
bool fiber_quadruple_condition(const PseudometricSpace& space, const Rational& t);
bool fiber_is_block_pair(const PseudometricSpace& space, const Rational& t);

/// Structural test for "every permutation of the reflection is a
/// self-similarity of the reflection": discrete or strongly rigid or
/// pseudorectangle.
bool reflection_sym_full(const PseudometricSpace& space);

/// Membership in the class of spaces whose self-similarity group is minimal
/// (all self-similarities are pseudoidentities) while the reflection's is
/// maximal (the full symmetric group). Two structural routes that must
/// agree: pairwise-distinct zero-class sizes plus class membership, and
/// pairwise-distinct zero-class sizes plus the fiber partition being one of
/// the three products.
bool is_ip_by_classification(const PseudometricSpace& space);
bool is_ip_by_fiber_partition(const PseudometricSpace& space);
bool is_ip_structural(const PseudometricSpace& space);

enum class MethodTag { Definitional, Structural, BothAgree };
const char* method_tag_name(MethodTag tag);

struct ClassificationReport {
    int point_count = 0;
    std::size_t range_size = 0;
    std::size_t reflection_size = 0;
    std::vector<int> zero_block_sizes;  // ascending
    bool is_discrete = false;
    bool is_strongly_rigid = false;
    bool is_pseudorectangle = false;
    bool ip_member = false;
    std::optional<std::size_t> cs_order;  // present when brute force ran
    std::optional<std::size_t> pi_order;
    MethodTag discrete_method = MethodTag::Structural;
    MethodTag strongly_rigid_method = MethodTag::Structural;
    MethodTag pseudorectangle_method = MethodTag::Structural;
    MethodTag ip_method = MethodTag::Structural;
};

struct ReportOptions {
    int bound = kDefaultBruteForceBound;
    /// Skip every enumeration: verdicts come from the structural methods
    /// alone and no group orders are reported. Works at any size.
    bool structural_only = false;
};

/// Runs both methods per predicate (unless structural_only), checks they
/// agree, and aggregates. When brute force is allowed and the space is small
/// enough, group orders are filled in and the IP verdict is additionally
/// checked against the enumeration-based definition.
ClassificationReport build_report(const PseudometricSpace& space,
                                  const ReportOptions& options = {});

}  // namespace combsim
