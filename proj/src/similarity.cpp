#include "combsim/similarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "combsim/classify.hpp"
#include "combsim/errors.hpp"
#include "combsim/partition.hpp"

namespace combsim {

const Rational& SimilarityWitness::apply_f(const Rational& d_value) const {
    const auto it = std::lower_bound(
        f.begin(), f.end(), d_value,
        [](const std::pair<Rational, Rational>& entry, const Rational& key) {
            return entry.first < key;
        });
    if (it == f.end() || !(it->first == d_value)) {
        fail(ErrorKind::ValueNotInRange, d_value.str() + " has no image under f");
    }
    return it->second;
}

void SimilarityWitness::verify(const PseudometricSpace& x, const PseudometricSpace& y) const {
    const int n = y.size();
    if (x.size() != n || static_cast<int>(psi.size()) != n) {
        fail(ErrorKind::InternalCheck, "witness with mismatched sizes");
    }
    std::vector<char> hit(psi.size(), 0);
    for (const int image : psi) {
        if (image < 0 || image >= n || hit[static_cast<std::size_t>(image)]) {
            fail(ErrorKind::InternalCheck, "witness point map is not a bijection");
        }
        hit[static_cast<std::size_t>(image)] = 1;
    }
    const DistanceRange dx = range(x);
    const DistanceRange dy = range(y);
    if (f.size() != dx.size() || f.size() != dy.size()) {
        fail(ErrorKind::InternalCheck, "witness value map is not a bijection of the ranges");
    }
    std::vector<char> value_hit(f.size(), 0);
    for (const auto& [from, to] : f) {
        if (dx.index_of(from) < 0) {
            fail(ErrorKind::InternalCheck, "witness value map keyed off the source range");
        }
        const int target = dy.index_of(to);
        if (target < 0 || value_hit[static_cast<std::size_t>(target)]) {
            fail(ErrorKind::InternalCheck, "witness value map is not onto the target range");
        }
        value_hit[static_cast<std::size_t>(target)] = 1;
    }
    if (!apply_f(Rational(0)).is_zero()) {
        fail(ErrorKind::InternalCheck, "witness value map does not fix 0");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!(y.dist(a, b) ==
                  apply_f(x.dist(psi[static_cast<std::size_t>(a)],
                                 psi[static_cast<std::size_t>(b)])))) {
                fail(ErrorKind::InternalCheck, "witness equation fails at a pair");
            }
        }
    }
}

SimilarityWitness SimilarityWitness::inverted() const {
    SimilarityWitness out;
    out.psi.resize(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) {
        out.psi[static_cast<std::size_t>(psi[j])] = static_cast<int>(j);
    }
    out.f.reserve(f.size());
    for (const auto& [from, to] : f) {
        out.f.emplace_back(to, from);
    }
    std::sort(out.f.begin(), out.f.end());
    return out;
}

SimilarityWitness SimilarityWitness::composed(const SimilarityWitness& xy,
                                              const SimilarityWitness& yz) {
    SimilarityWitness out;
    out.psi.resize(yz.psi.size());
    for (std::size_t k = 0; k < yz.psi.size(); ++k) {
        out.psi[k] = xy.psi[static_cast<std::size_t>(yz.psi[k])];
    }
    out.f.reserve(xy.f.size());
    for (const auto& [from, mid] : xy.f) {
        out.f.emplace_back(from, yz.apply_f(mid));
    }
    return out;
}

namespace {

// Per-point invariant preserved by any witness: the number of points at
// distance zero, plus the multiset of fiber degrees of the point's row.
struct RowProfile {
    int zero_count = 0;
    std::vector<int> degree_multiset;

    friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

std::vector<RowProfile> row_profiles(const ValueMatrix& vm) {
    std::vector<RowProfile> profiles(static_cast<std::size_t>(vm.n));
    for (int i = 0; i < vm.n; ++i) {
        std::vector<int> counts(static_cast<std::size_t>(vm.value_count), 0);
        for (int j = 0; j < vm.n; ++j) {
            ++counts[static_cast<std::size_t>(vm.at(i, j))];
        }
        profiles[static_cast<std::size_t>(i)].zero_count = counts[0];
        std::sort(counts.begin(), counts.end());
        profiles[static_cast<std::size_t>(i)].degree_multiset = std::move(counts);
    }
    return profiles;
}

std::vector<int> sorted_fiber_sizes(const ValueMatrix& vm) {
    std::vector<int> sizes(static_cast<std::size_t>(vm.value_count), 0);
    for (const int id : vm.id) {
        ++sizes[static_cast<std::size_t>(id)];
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> sorted_zero_block_sizes(const PseudometricSpace& space) {
    std::vector<int> sizes = zero_partition(space).block_sizes();
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

struct Backtracker {
    const ValueMatrix& vx;
    const ValueMatrix& vy;
    std::vector<int> order;         // y indices, most constrained first
    std::vector<char> candidate_ok; // y * n + x
    std::vector<int> psi;           // y -> x, -1 while unassigned
    std::vector<char> used;         // x already taken
    std::vector<int> fmap;          // x value id -> y value id, -1 while unknown
    std::vector<int> finv;

    bool assign(std::size_t depth) {
        if (depth == order.size()) {
            return true;
        }
        const int y = order[depth];
        for (int x = 0; x < vx.n; ++x) {
            if (used[static_cast<std::size_t>(x)] ||
                !candidate_ok[static_cast<std::size_t>(y) * vx.n + x]) {
                continue;
            }
            std::vector<int> journal;
            bool consistent = true;
            for (std::size_t earlier = 0; earlier < depth && consistent; ++earlier) {
                const int y2 = order[earlier];
                const int key = vx.at(x, psi[static_cast<std::size_t>(y2)]);
                const int val = vy.at(y, y2);
                if (fmap[static_cast<std::size_t>(key)] == -1 &&
                    finv[static_cast<std::size_t>(val)] == -1) {
                    fmap[static_cast<std::size_t>(key)] = val;
                    finv[static_cast<std::size_t>(val)] = key;
                    journal.push_back(key);
                } else if (fmap[static_cast<std::size_t>(key)] != val) {
                    consistent = false;
                }
            }
            if (consistent) {
                psi[static_cast<std::size_t>(y)] = x;
                used[static_cast<std::size_t>(x)] = 1;
                if (assign(depth + 1)) {
                    return true;
                }
                psi[static_cast<std::size_t>(y)] = -1;
                used[static_cast<std::size_t>(x)] = 0;
            }
            for (const int key : journal) {
                finv[static_cast<std::size_t>(fmap[static_cast<std::size_t>(key)])] = -1;
                fmap[static_cast<std::size_t>(key)] = -1;
            }
        }
        return false;
    }
};

SimilaritySearch search_witness(const PseudometricSpace& x, const PseudometricSpace& y,
                                int bound, bool identity_values) {
    SimilaritySearch result;
    if (x.size() != y.size()) {
        result.rejection = "point counts differ (" + std::to_string(x.size()) + " vs " +
                           std::to_string(y.size()) + ")";
        return result;
    }
    const int n = x.size();
    if (n > bound) {
        fail(ErrorKind::TooLarge, std::to_string(n) + " points exceeds the search bound " +
                                      std::to_string(bound));
    }
    const ValueMatrix vx = value_matrix(x);
    const ValueMatrix vy = value_matrix(y);
    if (vx.value_count != vy.value_count) {
        result.rejection = "range sizes differ (" + std::to_string(vx.value_count) + " vs " +
                           std::to_string(vy.value_count) + ")";
        return result;
    }
    if (sorted_zero_block_sizes(x) != sorted_zero_block_sizes(y)) {
        result.rejection = "zero-class size multisets differ";
        return result;
    }
    if (sorted_fiber_sizes(vx) != sorted_fiber_sizes(vy)) {
        result.rejection = "fiber size multisets differ";
        return result;
    }
    const DistanceRange rx = range(x);
    const DistanceRange ry = range(y);
    if (identity_values && !(rx.values == ry.values)) {
        result.rejection = "distance ranges differ as value sets";
        return result;
    }

    Backtracker bt{vx, vy, {}, {}, {}, {}, {}, {}};
    bt.psi.assign(static_cast<std::size_t>(n), -1);
    bt.used.assign(static_cast<std::size_t>(n), 0);
    bt.fmap.assign(static_cast<std::size_t>(vx.value_count), -1);
    bt.finv.assign(static_cast<std::size_t>(vy.value_count), -1);
    if (identity_values) {
        // Equal ranges mean value id k names the same rational on both
        // sides, so pinning f to the identity pins the id map too.
        for (int k = 0; k < vx.value_count; ++k) {
            bt.fmap[static_cast<std::size_t>(k)] = k;
            bt.finv[static_cast<std::size_t>(k)] = k;
        }
    } else {
        bt.fmap[0] = 0;
        bt.finv[0] = 0;
    }

    const std::vector<RowProfile> px = row_profiles(vx);
    const std::vector<RowProfile> py = row_profiles(vy);
    bt.candidate_ok.assign(static_cast<std::size_t>(n) * n, 0);
    for (int yy = 0; yy < n; ++yy) {
        int count = 0;
        for (int xx = 0; xx < n; ++xx) {
            if (px[static_cast<std::size_t>(xx)] == py[static_cast<std::size_t>(yy)]) {
                bt.candidate_ok[static_cast<std::size_t>(yy) * n + xx] = 1;
                ++count;
            }
        }
        if (count == 0) {
            result.rejection = "a point of the second space matches no point of the first";
            return result;
        }
    }

    // Most constrained points first; ties by index for determinism.
    bt.order.resize(static_cast<std::size_t>(n));
    std::iota(bt.order.begin(), bt.order.end(), 0);
    const auto candidates_of = [&](int yy) {
        int count = 0;
        for (int xx = 0; xx < n; ++xx) {
            count += bt.candidate_ok[static_cast<std::size_t>(yy) * n + xx];
        }
        return count;
    };
    std::stable_sort(bt.order.begin(), bt.order.end(),
                     [&](int a, int b) { return candidates_of(a) < candidates_of(b); });

    if (!bt.assign(0)) {
        result.rejection = "exhaustive search found no witness";
        return result;
    }

    SimilarityWitness witness;
    witness.psi = bt.psi;
    witness.f.reserve(rx.size());
    for (int k = 0; k < vx.value_count; ++k) {
        witness.f.emplace_back(rx.values[static_cast<std::size_t>(k)],
                               ry.values[static_cast<std::size_t>(bt.fmap[static_cast<std::size_t>(k)])]);
    }
    witness.verify(x, y);
    result.witness = std::move(witness);
    return result;
}

}  // namespace

SimilaritySearch find_similarity_explain(const PseudometricSpace& x,
                                         const PseudometricSpace& y, int bound) {
    return search_witness(x, y, bound, false);
}

std::optional<SimilarityWitness> find_similarity(const PseudometricSpace& x,
                                                 const PseudometricSpace& y, int bound) {
    return search_witness(x, y, bound, false).witness;
}

std::optional<std::vector<int>> find_isometry(const PseudometricSpace& x,
                                              const PseudometricSpace& y, int bound) {
    SimilaritySearch search = search_witness(x, y, bound, true);
    if (!search.witness) {
        return std::nullopt;
    }
    return std::move(search.witness->psi);
}

bool are_pseudoisometric(const PseudometricSpace& x, const PseudometricSpace& y, int bound) {
    const MetricReflection rx = metric_reflection(x);
    const MetricReflection ry = metric_reflection(y);
    return find_isometry(rx.space, ry.space, bound).has_value();
}

ZeroCriterionResult similar_iff_same_zero(const PseudometricSpace& x,
                                          const PseudometricSpace& y, int bound) {
    if (x.points() != y.points()) {
        fail(ErrorKind::PointSetMismatch, "the two spaces must list the same points");
    }
    ZeroCriterionResult result;
    const bool both_discrete = is_discrete_structural(x) && is_discrete_structural(y);
    const bool both_rigid = is_strongly_rigid_structural(x) && is_strongly_rigid_structural(y);
    const bool both_rect =
        is_pseudorectangle_structural(x) && is_pseudorectangle_structural(y);
    result.theorem_applicable = both_discrete || both_rigid || both_rect;
    if (result.theorem_applicable) {
        result.similar = zero_relation(x) == zero_relation(y);
    } else {
        result.similar = find_similarity(x, y, bound).has_value();
    }
    return result;
}

std::optional<SimilarityWitness> identity_similarity_from_fibers(const PseudometricSpace& x,
                                                                 const PseudometricSpace& y) {
    if (x.points() != y.points()) {
        fail(ErrorKind::PointSetMismatch, "the two spaces must list the same points");
    }
    const int n = x.size();
    // d-value -> rho-value read off the pairs; the fibers coincide exactly
    // when this map is well defined and injective.
    std::map<Rational, Rational> forward;
    std::map<Rational, Rational> backward;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& from = x.dist(i, j);
            const Rational& to = y.dist(i, j);
            const auto [fit, fresh] = forward.emplace(from, to);
            if (!fresh && !(fit->second == to)) {
                return std::nullopt;
            }
            const auto [bit, fresh_back] = backward.emplace(to, from);
            if (!fresh_back && !(bit->second == from)) {
                return std::nullopt;
            }
        }
    }
    SimilarityWitness witness;
    witness.psi.resize(static_cast<std::size_t>(n));
    std::iota(witness.psi.begin(), witness.psi.end(), 0);
    witness.f.assign(forward.begin(), forward.end());
    witness.verify(x, y);
    return witness;
}

}  // namespace combsim
