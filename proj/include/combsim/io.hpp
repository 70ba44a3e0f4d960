#pragma once

#include <string>
#include <vector>

#include "combsim/classify.hpp"
#include "combsim/groups.hpp"
#include "combsim/partition.hpp"
#include "combsim/similarity.hpp"
#include "combsim/space.hpp"

namespace combsim::io {

/// Space documents are JSON objects with `points` (list of distinct strings)
/// and `distances` (row-major list of n*n entries, each an integer or a
/// rational string "p/q"). Relation documents carry `points` and `blocks`
/// (a list of lists of labels covering the points). Rendered output is
/// byte-stable: keys sorted, rationals in canonical form.

PseudometricSpace parse_space_document(const std::string& text);
PseudometricSpace read_space_file(const std::string& path);

struct RelationDocument {
    std::vector<std::string> points;
    EquivalenceRelation relation;
};

RelationDocument parse_relation_document(const std::string& text);
RelationDocument read_relation_file(const std::string& path);

EquivalenceRelation relation_from_label_blocks(const std::vector<std::string>& points,
                                               const std::vector<std::vector<std::string>>& blocks);

std::string space_document(const PseudometricSpace& space);

enum class Format { Document, Plain };
Format format_from_name(const std::string& name);

std::string render_space(const PseudometricSpace& space, Format format);
std::string render_classification(const ClassificationReport& report, Format format);
std::string render_ip(const ClassificationReport& report, Format format);
std::string render_groups(const ReflectionHom& hom, const PermutationGroup& pi, Format format);
/// Facts available without any enumeration: the pseudoidentity count, the
/// sufficient condition for Cs = PI (pairwise distinct zero-class sizes) and
/// whether the reflection's self-similarity group is full.
std::string render_groups_structural(const PseudometricSpace& space, Format format);
std::string render_similarity(const PseudometricSpace& x, const PseudometricSpace& y,
                              const SimilaritySearch& search, Format format);

}  // namespace combsim::io
