#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combsim/rational.hpp"

namespace combsim {

/// A finite pseudometric space: labelled points and an exact, symmetric
/// distance matrix with zero diagonal satisfying the triangle inequality.
/// Instances are immutable; `validate` is the only way to build one, so a
/// held space always satisfies the axioms.
class PseudometricSpace {
public:
    /// `matrix` is row-major n*n. Rejects (in this order): empty point set,
    /// duplicate labels, a non-square matrix, a negative entry, a nonzero
    /// diagonal entry, an asymmetric pair and a triangle violation. Each
    /// error names the first offending index tuple in row-major scan order.
    static PseudometricSpace validate(std::vector<std::string> points,
                                      std::vector<Rational> matrix);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const Rational& dist(int i, int j) const {
        return dist_[static_cast<std::size_t>(i) * points_.size() + static_cast<std::size_t>(j)];
    }
    const std::vector<Rational>& matrix() const { return dist_; }

    int index_of(const std::string& label) const;

    friend bool operator==(const PseudometricSpace&, const PseudometricSpace&) = default;

private:
    PseudometricSpace(std::vector<std::string> points, std::vector<Rational> matrix)
        : points_(std::move(points)), dist_(std::move(matrix)) {}

    std::vector<std::string> points_;
    std::vector<Rational> dist_;
};

/// The distinct distance values of a space, sorted ascending. The first
/// value is always 0.
struct DistanceRange {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    /// Index of `t` in `values`, or -1 if absent.
    int index_of(const Rational& t) const;
};

DistanceRange range(const PseudometricSpace& space);

/// All ordered pairs <x, y> with d(x, y) = t, sorted lexicographically by
/// index. `t` must occur in the range of the space.
std::vector<std::pair<int, int>> fiber(const PseudometricSpace& space, const Rational& t);

PseudometricSpace subspace(const PseudometricSpace& space, const std::vector<int>& subset);
PseudometricSpace subspace(const PseudometricSpace& space,
                           const std::vector<std::string>& subset);

/// True iff the restriction of d to `subset` is a metric, i.e. positive on
/// distinct points.
bool is_metric_subspace(const PseudometricSpace& space, const std::vector<int>& subset);
bool is_metric_subspace(const PseudometricSpace& space, const std::vector<std::string>& subset);

/// Distance matrix with every entry replaced by the rank of its value in the
/// sorted range. Rank 0 is always the value 0, so `at(i, j) == 0` is exactly
/// "d(i, j) = 0". This is what the enumeration-heavy code paths work on.
struct ValueMatrix {
    int n = 0;
    int value_count = 0;
    std::vector<int> id;

    int at(int i, int j) const { return id[static_cast<std::size_t>(i) * n + j]; }
};

ValueMatrix value_matrix(const PseudometricSpace& space);

}  // namespace combsim
