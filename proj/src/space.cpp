#include "combsim/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "combsim/errors.hpp"

namespace combsim {

namespace {

std::string tuple2(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

PseudometricSpace PseudometricSpace::validate(std::vector<std::string> points,
                                              std::vector<Rational> matrix) {
    const std::size_t n = points.size();
    if (n == 0) {
        fail(ErrorKind::EmptySpace, "a pseudometric space needs at least one point");
    }
    {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < n; ++i) {
            if (!seen.insert(points[i]).second) {
                fail(ErrorKind::DuplicateLabel,
                     "label '" + points[i] + "' appears more than once");
            }
        }
    }
    if (matrix.size() != n * n) {
        fail(ErrorKind::NonSquare, "expected " + std::to_string(n * n) + " entries for " +
                                       std::to_string(n) + " points, got " +
                                       std::to_string(matrix.size()));
    }
    const auto at = [&](std::size_t i, std::size_t j) -> const Rational& {
        return matrix[i * n + j];
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j).is_negative()) {
                fail(ErrorKind::NegativeDistance,
                     "at " + tuple2(static_cast<int>(i), static_cast<int>(j)) + ": " +
                         at(i, j).str());
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!at(i, i).is_zero()) {
            fail(ErrorKind::NonZeroDiagonal,
                 "at " + tuple2(static_cast<int>(i), static_cast<int>(i)) + ": " +
                     at(i, i).str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(at(i, j) == at(j, i))) {
                fail(ErrorKind::Asymmetric,
                     "at " + tuple2(static_cast<int>(i), static_cast<int>(j)) + ": " +
                         at(i, j).str() + " != " + at(j, i).str());
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (at(i, k) > at(i, j) + at(j, k)) {
                    fail(ErrorKind::TriangleViolation,
                         "at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + "): " + at(i, k).str() + " > " +
                             at(i, j).str() + " + " + at(j, k).str());
                }
            }
        }
    }
    return PseudometricSpace(std::move(points), std::move(matrix));
}

int PseudometricSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == label) {
            return static_cast<int>(i);
        }
    }
    fail(ErrorKind::UnknownLabel, "no point named '" + label + "'");
}

int DistanceRange::index_of(const Rational& t) const {
    const auto it = std::lower_bound(values.begin(), values.end(), t);
    if (it == values.end() || !(*it == t)) {
        return -1;
    }
    return static_cast<int>(it - values.begin());
}

DistanceRange range(const PseudometricSpace& space) {
    std::set<Rational> distinct;
    for (const Rational& v : space.matrix()) {
        distinct.insert(v);
    }
    DistanceRange result;
    result.values.assign(distinct.begin(), distinct.end());
    return result;
}

std::vector<std::pair<int, int>> fiber(const PseudometricSpace& space, const Rational& t) {
    const int n = space.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (space.dist(i, j) == t) {
                pairs.emplace_back(i, j);
            }
        }
    }
    if (pairs.empty()) {
        fail(ErrorKind::ValueNotInRange, t.str() + " is not a distance of the space");
    }
    return pairs;
}

PseudometricSpace subspace(const PseudometricSpace& space, const std::vector<int>& subset) {
    if (subset.empty()) {
        fail(ErrorKind::EmptySubset, "subspace of no points");
    }
    const int n = space.size();
    std::vector<std::string> points;
    points.reserve(subset.size());
    for (const int i : subset) {
        if (i < 0 || i >= n) {
            fail(ErrorKind::UnknownLabel, "point index " + std::to_string(i) + " out of range");
        }
        points.push_back(space.label(i));
    }
    std::vector<Rational> matrix;
    matrix.reserve(subset.size() * subset.size());
    for (const int i : subset) {
        for (const int j : subset) {
            matrix.push_back(space.dist(i, j));
        }
    }
    return PseudometricSpace::validate(std::move(points), std::move(matrix));
}

PseudometricSpace subspace(const PseudometricSpace& space,
                           const std::vector<std::string>& subset) {
    std::vector<int> indices;
    indices.reserve(subset.size());
    for (const std::string& label : subset) {
        indices.push_back(space.index_of(label));
    }
    return subspace(space, indices);
}

bool is_metric_subspace(const PseudometricSpace& space, const std::vector<int>& subset) {
    if (subset.empty()) {
        fail(ErrorKind::EmptySubset, "metric-subspace test on no points");
    }
    for (const int i : subset) {
        if (i < 0 || i >= space.size()) {
            fail(ErrorKind::UnknownLabel, "point index " + std::to_string(i) + " out of range");
        }
    }
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            if (subset[a] == subset[b]) {
                fail(ErrorKind::DuplicateLabel,
                     "point index " + std::to_string(subset[a]) + " repeated");
            }
            if (space.dist(subset[a], subset[b]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool is_metric_subspace(const PseudometricSpace& space,
                        const std::vector<std::string>& subset) {
    std::vector<int> indices;
    indices.reserve(subset.size());
    for (const std::string& label : subset) {
        indices.push_back(space.index_of(label));
    }
    return is_metric_subspace(space, indices);
}

ValueMatrix value_matrix(const PseudometricSpace& space) {
    const int n = space.size();
    std::map<Rational, int> rank;
    for (const Rational& v : space.matrix()) {
        rank.emplace(v, 0);
    }
    int next = 0;
    for (auto& entry : rank) {
        entry.second = next++;
    }
    ValueMatrix vm;
    vm.n = n;
    vm.value_count = next;
    vm.id.resize(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < vm.id.size(); ++k) {
        vm.id[k] = rank.at(space.matrix()[k]);
    }
    return vm;
}

}  // namespace combsim
