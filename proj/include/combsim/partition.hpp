#pragma once

#include <utility>
#include <vector>

#include "combsim/space.hpp"

namespace combsim {

/// Partition of the index ground set {0, ..., ground_size-1}. The ground
/// elements are point indices for partitions of X and pair ids (see
/// `pair_id`) for partitions of X^2; labels are reattached at the interface
/// layer. Blocks are kept canonical: elements sorted within each block,
/// blocks ordered by their least element. Partition equality in the
/// set-of-blocks sense is therefore structural equality.
class Partition {
public:
    Partition(int ground_size, std::vector<std::vector<int>> blocks);

    /// `block_of[e]` is an arbitrary block id for element e; ids are
    /// renumbered canonically.
    static Partition from_block_assignment(const std::vector<int>& block_of);

    int ground_size() const { return ground_size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
    int block_of(int element) const { return block_of_[static_cast<std::size_t>(element)]; }
    /// Block sizes in canonical block order.
    std::vector<int> block_sizes() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int ground_size_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Set-of-blocks equality for partitions of the same ground set. Because
/// both arguments are partitions, it is enough to check that every block of
/// `p` is a block of `q`; the reverse inclusion is then automatic.
bool partitions_equal(const Partition& p, const Partition& q);

/// An equivalence relation on {0, ..., ground_size-1}, stored as its sorted
/// pair set. Construction checks reflexivity, symmetry and transitivity and
/// reports a witness tuple on failure.
class EquivalenceRelation {
public:
    EquivalenceRelation(int ground_size, std::vector<std::pair<int, int>> pairs);

    int ground_size() const { return ground_size_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int a, int b) const;

    friend bool operator==(const EquivalenceRelation&, const EquivalenceRelation&) = default;

private:
    int ground_size_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

/// The relation {<x, y> : d(x, y) = 0}; an equivalence relation for every
/// pseudometric space (the construction re-checks this).
EquivalenceRelation zero_relation(const PseudometricSpace& space);

Partition partition_from_relation(const EquivalenceRelation& rel);
EquivalenceRelation relation_from_partition(const Partition& part);

/// Blocks of the zero-relation (the zero-classes).
Partition zero_partition(const PseudometricSpace& space);

/// Ground encoding for partitions of X^2: pair <i, j> has id i*n + j.
inline int pair_id(int i, int j, int n) { return i * n + j; }

/// Partition of X^2 with one block per distance value.
Partition fiber_partition(const PseudometricSpace& space);

/// Partition of X^2 from a point partition Q: the union of the block squares
/// plus one block per unordered pair of distinct blocks. A single-block Q
/// yields {X^2}.
Partition otimes1(const Partition& q);

/// Partition of X^2 from a point partition Q: the union of the block squares
/// and its complement. A single-block Q yields {X^2}.
Partition otimes2(const Partition& q);

/// Partition of X^2 from a four-block point partition Q: the union of the
/// block squares plus the three blocks pairing up the blocks in perfect
/// matchings. `order` gives the roles X1..X4 to the canonical blocks of Q;
/// the matchings are {12|34, 13|24, 14|23} in that labelling.
Partition otimes3(const Partition& q, const std::vector<int>& order = {0, 1, 2, 3});

}  // namespace combsim
