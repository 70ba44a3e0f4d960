#include "combsim/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "combsim/errors.hpp"

namespace combsim {

namespace {

std::string pair_str(int a, int b) {
    return "<" + std::to_string(a) + "," + std::to_string(b) + ">";
}

}  // namespace

Partition::Partition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
    if (ground_size_ <= 0) {
        fail(ErrorKind::InvalidPartition, "empty ground set");
    }
    block_of_.assign(static_cast<std::size_t>(ground_size_), -1);
    for (auto& block : blocks_) {
        if (block.empty()) {
            fail(ErrorKind::InvalidPartition, "empty block");
        }
        std::sort(block.begin(), block.end());
        for (const int e : block) {
            if (e < 0 || e >= ground_size_) {
                fail(ErrorKind::InvalidPartition,
                     "element " + std::to_string(e) + " outside the ground set");
            }
            if (block_of_[static_cast<std::size_t>(e)] != -1) {
                fail(ErrorKind::InvalidPartition,
                     "element " + std::to_string(e) + " appears in two blocks");
            }
            block_of_[static_cast<std::size_t>(e)] = 0;  // placeholder until renumbering
        }
    }
    for (int e = 0; e < ground_size_; ++e) {
        if (block_of_[static_cast<std::size_t>(e)] == -1) {
            fail(ErrorKind::InvalidPartition,
                 "element " + std::to_string(e) + " is not covered");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (const int e : blocks_[b]) {
            block_of_[static_cast<std::size_t>(e)] = static_cast<int>(b);
        }
    }
}

Partition Partition::from_block_assignment(const std::vector<int>& block_of) {
    std::map<int, std::vector<int>> grouped;
    for (std::size_t e = 0; e < block_of.size(); ++e) {
        grouped[block_of[e]].push_back(static_cast<int>(e));
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(grouped.size());
    for (auto& entry : grouped) {
        blocks.push_back(std::move(entry.second));
    }
    return Partition(static_cast<int>(block_of.size()), std::move(blocks));
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& block : blocks_) {
        sizes.push_back(static_cast<int>(block.size()));
    }
    return sizes;
}

bool partitions_equal(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size()) {
        fail(ErrorKind::GroundMismatch, "partitions of ground sets of size " +
                                            std::to_string(p.ground_size()) + " and " +
                                            std::to_string(q.ground_size()));
    }
    // One-sided inclusion: each block of p must be the q-block of its least
    // element. Partitions of the same ground set then force equality.
    for (const auto& block : p.blocks()) {
        if (q.block(q.block_of(block.front())) != block) {
            return false;
        }
    }
    return true;
}

EquivalenceRelation::EquivalenceRelation(int ground_size,
                                         std::vector<std::pair<int, int>> pairs)
    : ground_size_(ground_size), pairs_(std::move(pairs)) {
    if (ground_size_ <= 0) {
        fail(ErrorKind::InvalidPartition, "empty ground set");
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    std::vector<char> member(static_cast<std::size_t>(ground_size_) * ground_size_, 0);
    for (const auto& [a, b] : pairs_) {
        if (a < 0 || a >= ground_size_ || b < 0 || b >= ground_size_) {
            fail(ErrorKind::InvalidPartition, "pair " + pair_str(a, b) + " outside the ground set");
        }
        member[static_cast<std::size_t>(a) * ground_size_ + b] = 1;
    }
    const auto has = [&](int a, int b) {
        return member[static_cast<std::size_t>(a) * ground_size_ + b] != 0;
    };
    for (int a = 0; a < ground_size_; ++a) {
        if (!has(a, a)) {
            fail(ErrorKind::NotAnEquivalence, "not reflexive: missing " + pair_str(a, a));
        }
    }
    for (const auto& [a, b] : pairs_) {
        if (!has(b, a)) {
            fail(ErrorKind::NotAnEquivalence,
                 "not symmetric: " + pair_str(a, b) + " without " + pair_str(b, a));
        }
    }
    for (const auto& [a, b] : pairs_) {
        for (int c = 0; c < ground_size_; ++c) {
            if (has(b, c) && !has(a, c)) {
                fail(ErrorKind::NotAnEquivalence,
                     "not transitive at (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(c) + ")");
            }
        }
    }
}

bool EquivalenceRelation::contains(int a, int b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::pair<int, int>(a, b));
}

EquivalenceRelation zero_relation(const PseudometricSpace& space) {
    const int n = space.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (space.dist(i, j).is_zero()) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return EquivalenceRelation(n, std::move(pairs));
}

Partition partition_from_relation(const EquivalenceRelation& rel) {
    const int n = rel.ground_size();
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (block_of[static_cast<std::size_t>(a)] != -1) continue;
        const int id = next++;
        block_of[static_cast<std::size_t>(a)] = id;
        for (int b = a + 1; b < n; ++b) {
            if (rel.contains(a, b)) {
                block_of[static_cast<std::size_t>(b)] = id;
            }
        }
    }
    return Partition::from_block_assignment(block_of);
}

EquivalenceRelation relation_from_partition(const Partition& part) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& block : part.blocks()) {
        for (const int a : block) {
            for (const int b : block) {
                pairs.emplace_back(a, b);
            }
        }
    }
    return EquivalenceRelation(part.ground_size(), std::move(pairs));
}

Partition zero_partition(const PseudometricSpace& space) {
    return partition_from_relation(zero_relation(space));
}

Partition fiber_partition(const PseudometricSpace& space) {
    const ValueMatrix vm = value_matrix(space);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(vm.value_count));
    for (std::size_t k = 0; k < vm.id.size(); ++k) {
        blocks[static_cast<std::size_t>(vm.id[k])].push_back(static_cast<int>(k));
    }
    return Partition(vm.n * vm.n, std::move(blocks));
}

namespace {

// Appends all pair ids of (A x B) u (B x A) to `out`.
void append_cross(const std::vector<int>& a, const std::vector<int>& b, int n,
                  std::vector<int>& out) {
    for (const int x : a) {
        for (const int y : b) {
            out.push_back(pair_id(x, y, n));
            out.push_back(pair_id(y, x, n));
        }
    }
}

std::vector<int> diagonal_block(const Partition& q) {
    std::vector<int> diag;
    const int n = q.ground_size();
    for (const auto& block : q.blocks()) {
        for (const int x : block) {
            for (const int y : block) {
                diag.push_back(pair_id(x, y, n));
            }
        }
    }
    return diag;
}

}  // namespace

Partition otimes1(const Partition& q) {
    const int n = q.ground_size();
    const int m = q.block_count();
    std::vector<std::vector<int>> blocks;
    blocks.push_back(diagonal_block(q));
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            std::vector<int> cross;
            append_cross(q.block(a), q.block(b), n, cross);
            blocks.push_back(std::move(cross));
        }
    }
    return Partition(n * n, std::move(blocks));
}

Partition otimes2(const Partition& q) {
    const int n = q.ground_size();
    std::vector<int> diag = diagonal_block(q);
    if (q.block_count() == 1) {
        return Partition(n * n, {std::move(diag)});
    }
    std::vector<char> on_diag(static_cast<std::size_t>(n) * n, 0);
    for (const int e : diag) {
        on_diag[static_cast<std::size_t>(e)] = 1;
    }
    std::vector<int> rest;
    for (int e = 0; e < n * n; ++e) {
        if (!on_diag[static_cast<std::size_t>(e)]) {
            rest.push_back(e);
        }
    }
    return Partition(n * n, {std::move(diag), std::move(rest)});
}

Partition otimes3(const Partition& q, const std::vector<int>& order) {
    if (q.block_count() != 4) {
        fail(ErrorKind::WrongBlockCount,
             "expected 4 blocks, got " + std::to_string(q.block_count()));
    }
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    if (check != std::vector<int>{0, 1, 2, 3}) {
        fail(ErrorKind::NotABijection, "block order must list each of 0..3 once");
    }
    const int n = q.ground_size();
    const auto at = [&](int role) -> const std::vector<int>& {
        return q.block(order[static_cast<std::size_t>(role)]);
    };
    std::vector<std::vector<int>> blocks;
    blocks.push_back(diagonal_block(q));
    static constexpr int kMatchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& matching : kMatchings) {
        std::vector<int> block;
        append_cross(at(matching[0]), at(matching[1]), n, block);
        append_cross(at(matching[2]), at(matching[3]), n, block);
        blocks.push_back(std::move(block));
    }
    return Partition(n * n, std::move(blocks));
}

}  // namespace combsim
