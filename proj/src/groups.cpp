#include "combsim/groups.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "combsim/classify.hpp"
#include "combsim/errors.hpp"

namespace combsim {

namespace {

std::atomic<std::uint64_t> g_enumerations{0};

void check_degree(const PseudometricSpace& space, const Permutation& phi) {
    if (phi.degree() != space.size()) {
        fail(ErrorKind::SizeMismatch, "permutation of degree " + std::to_string(phi.degree()) +
                                          " on a space of " + std::to_string(space.size()) +
                                          " points");
    }
}

void check_bound(const PseudometricSpace& space, int bound) {
    if (space.size() > bound) {
        fail(ErrorKind::TooLarge, std::to_string(space.size()) +
                                      " points exceeds the brute-force bound " +
                                      std::to_string(bound));
    }
}

// Builds the map d(phi x, phi y) -> d(x, y) over value ids and checks it is
// well defined and injective. `vm` must come from the space `perm` acts on.
bool induced_value_map_ok(const ValueMatrix& vm, const std::vector<int>& perm) {
    const int n = vm.n;
    std::vector<int> image(static_cast<std::size_t>(vm.value_count), -1);
    std::vector<char> hit(static_cast<std::size_t>(vm.value_count), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int key = vm.at(perm[static_cast<std::size_t>(i)],
                                  perm[static_cast<std::size_t>(j)]);
            const int val = vm.at(i, j);
            const int seen = image[static_cast<std::size_t>(key)];
            if (seen == -1) {
                if (hit[static_cast<std::size_t>(val)]) {
                    return false;  // two keys would share a value
                }
                image[static_cast<std::size_t>(key)] = val;
                hit[static_cast<std::size_t>(val)] = 1;
            } else if (seen != val) {
                return false;  // not well defined
            }
        }
    }
    // The diagonal forces 0 -> 0; anything else is a bug upstream.
    if (image[0] != 0) {
        fail(ErrorKind::InternalCheck, "induced value map does not fix 0");
    }
    return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    std::vector<char> seen(map_.size(), 0);
    for (const int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)]) {
            fail(ErrorKind::NotABijection, "mapping is not a bijection of 0.." +
                                               std::to_string(map_.size() ? map_.size() - 1 : 0));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (inner.degree() != degree()) {
        fail(ErrorKind::SizeMismatch, "composing permutations of different degrees");
    }
    std::vector<int> map(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        map[i] = map_[static_cast<std::size_t>(inner.map_[i])];
    }
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
    std::vector<int> map(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        map[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

bool PermutationGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

void PermutationGroup::verify_group_axioms() const {
    if (!std::is_sorted(elements.begin(), elements.end())) {
        fail(ErrorKind::InternalCheck, "group elements not in canonical order");
    }
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        fail(ErrorKind::InternalCheck, "duplicate group element");
    }
    if (!contains(Permutation::identity(degree))) {
        fail(ErrorKind::InternalCheck, "group without identity");
    }
    for (const Permutation& p : elements) {
        if (!contains(p.inverse())) {
            fail(ErrorKind::InternalCheck, "group not closed under inverses");
        }
    }
    for (const Permutation& a : elements) {
        for (const Permutation& b : elements) {
            if (!contains(a.compose(b))) {
                fail(ErrorKind::InternalCheck, "group not closed under composition");
            }
        }
    }
}

bool is_self_similarity(const PseudometricSpace& space, const Permutation& phi) {
    check_degree(space, phi);
    return induced_value_map_ok(value_matrix(space), phi.mapping());
}

bool is_self_similarity_quadruple(const PseudometricSpace& space, const Permutation& phi) {
    check_degree(space, phi);
    const ValueMatrix vm = value_matrix(space);
    const int n = vm.n;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    const bool before = vm.at(x, y) == vm.at(u, v);
                    const bool after = vm.at(phi(x), phi(y)) == vm.at(phi(u), phi(v));
                    if (before != after) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool is_pseudoidentity(const PseudometricSpace& space, const Permutation& phi) {
    check_degree(space, phi);
    for (int x = 0; x < space.size(); ++x) {
        if (!space.dist(x, phi(x)).is_zero()) {
            return false;
        }
    }
    return true;
}

PermutationGroup cs_group(const PseudometricSpace& space, int bound) {
    check_bound(space, bound);
    ++g_enumerations;
    const ValueMatrix vm = value_matrix(space);
    PermutationGroup group;
    group.degree = space.size();
    std::vector<int> perm(static_cast<std::size_t>(space.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (induced_value_map_ok(vm, perm)) {
            group.elements.push_back(Permutation(perm));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Identity and inverses are cheap to confirm on every call; the full
    // closure table is left to verify_group_axioms.
    if (group.elements.empty() || !group.elements.front().is_identity()) {
        fail(ErrorKind::InternalCheck, "self-similarity group without identity");
    }
    for (const Permutation& p : group.elements) {
        if (!group.contains(p.inverse())) {
            fail(ErrorKind::InternalCheck, "self-similarity group not closed under inverses");
        }
    }
    return group;
}

PermutationGroup pi_group(const PseudometricSpace& space, int bound) {
    check_bound(space, bound);
    ++g_enumerations;
    const ValueMatrix vm = value_matrix(space);
    const int n = space.size();
    PermutationGroup group;
    group.degree = n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            ok = vm.at(x, perm[static_cast<std::size_t>(x)]) == 0;
        }
        if (ok) {
            group.elements.push_back(Permutation(perm));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const Permutation& p : group.elements) {
        if (!group.contains(p.inverse())) {
            fail(ErrorKind::InternalCheck, "pseudoidentity group not closed under inverses");
        }
    }
    return group;
}

std::size_t ReflectionHom::image_order() const {
    std::vector<Permutation> distinct = image;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return distinct.size();
}

void ReflectionHom::verify_homomorphism_law() const {
    const auto image_of = [&](const Permutation& phi) -> const Permutation& {
        const auto it = std::lower_bound(source.elements.begin(), source.elements.end(), phi);
        if (it == source.elements.end() || !(*it == phi)) {
            fail(ErrorKind::InternalCheck, "composite escaped the source group");
        }
        return image[static_cast<std::size_t>(it - source.elements.begin())];
    };
    for (std::size_t a = 0; a < source.elements.size(); ++a) {
        for (std::size_t b = 0; b < source.elements.size(); ++b) {
            const Permutation composite = source.elements[a].compose(source.elements[b]);
            if (!(image_of(composite) == image[a].compose(image[b]))) {
                fail(ErrorKind::InternalCheck, "homomorphism law violated");
            }
        }
    }
}

ReflectionHom reflection_hom(const PseudometricSpace& space, int bound) {
    MetricReflection refl = metric_reflection(space);
    ReflectionHom hom{space,
                      refl.space,
                      refl.projection,
                      cs_group(space, bound),
                      cs_group(refl.space, bound),
                      {}};
    const int classes = hom.reflection.size();
    hom.image.reserve(hom.source.elements.size());
    for (const Permutation& phi : hom.source.elements) {
        std::vector<int> class_image(static_cast<std::size_t>(classes), -1);
        for (int x = 0; x < space.size(); ++x) {
            const int from = hom.projection[static_cast<std::size_t>(x)];
            const int to = hom.projection[static_cast<std::size_t>(phi(x))];
            if (class_image[static_cast<std::size_t>(from)] == -1) {
                class_image[static_cast<std::size_t>(from)] = to;
            } else if (class_image[static_cast<std::size_t>(from)] != to) {
                // A self-similarity always carries zero-classes onto
                // zero-classes, so this cannot happen for group elements.
                fail(ErrorKind::InternalCheck, "projection image of a class is ambiguous");
            }
        }
        Permutation psi(std::move(class_image));
        if (!hom.target.contains(psi)) {
            fail(ErrorKind::InternalCheck, "image is not a self-similarity of the reflection");
        }
        hom.image.push_back(std::move(psi));
    }
    return hom;
}

PermutationGroup kernel(const ReflectionHom& hom) {
    PermutationGroup result;
    result.degree = hom.source.degree;
    for (std::size_t k = 0; k < hom.source.elements.size(); ++k) {
        if (hom.image[k].is_identity()) {
            result.elements.push_back(hom.source.elements[k]);
        }
    }
    return result;
}

bool lift_self_similarity(const PseudometricSpace& space, const Permutation& reflection_psi,
                          const Permutation& phi) {
    check_degree(space, phi);
    MetricReflection refl = metric_reflection(space);
    if (reflection_psi.degree() != refl.space.size()) {
        fail(ErrorKind::SizeMismatch,
             "reflection permutation of degree " + std::to_string(reflection_psi.degree()) +
                 " against " + std::to_string(refl.space.size()) + " zero-classes");
    }
    for (int x = 0; x < space.size(); ++x) {
        if (reflection_psi(refl.projection[static_cast<std::size_t>(x)]) !=
            refl.projection[static_cast<std::size_t>(phi(x))]) {
            return false;
        }
    }
    if (is_self_similarity(refl.space, reflection_psi) && !is_self_similarity(space, phi)) {
        fail(ErrorKind::InternalCheck,
             "a lift through a reflection self-similarity must itself be one");
    }
    return true;
}

std::uint64_t enumeration_count() { return g_enumerations.load(); }

}  // namespace combsim
