#include "combsim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "combsim/errors.hpp"

namespace combsim::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        fail(ErrorKind::ParseError, "input is not valid JSON");
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> parse_points(const json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        fail(ErrorKind::ParseError, "expected an object with a 'points' array");
    }
    std::vector<std::string> points;
    for (const json& p : doc["points"]) {
        if (!p.is_string()) {
            fail(ErrorKind::ParseError, "point labels must be strings");
        }
        points.push_back(p.get<std::string>());
    }
    return points;
}

Rational parse_entry(const json& entry) {
    if (entry.is_number_integer()) {
        return Rational(entry.get<long long>());
    }
    if (entry.is_string()) {
        return Rational::parse(entry.get<std::string>());
    }
    fail(ErrorKind::ParseError,
         "distance entries must be integers or rational strings, got " + entry.dump());
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string plain_lines(const json& doc, const std::string& prefix = "") {
    std::string out;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            out += plain_lines(value, prefix + key + ".");
        } else {
            out += prefix + key + ": " + (value.is_string() ? value.get<std::string>()
                                                            : value.dump()) + "\n";
        }
    }
    return out;
}

std::string render(const json& doc, Format format) {
    if (format == Format::Document) {
        return doc.dump(2) + "\n";
    }
    return plain_lines(doc);
}

json permutation_labels(const Permutation& p, const std::vector<std::string>& labels) {
    json arr = json::array();
    for (int i = 0; i < p.degree(); ++i) {
        arr.push_back(labels[static_cast<std::size_t>(p(i))]);
    }
    return arr;
}

json group_json(const PermutationGroup& group, const std::vector<std::string>& labels) {
    json g;
    g["order"] = group.order();
    json elements = json::array();
    for (const Permutation& p : group.elements) {
        elements.push_back(permutation_labels(p, labels));
    }
    g["elements"] = std::move(elements);
    return g;
}

json classification_json(const ClassificationReport& report) {
    json doc;
    doc["point_count"] = report.point_count;
    doc["range_size"] = report.range_size;
    doc["reflection_size"] = report.reflection_size;
    doc["zero_block_sizes"] = report.zero_block_sizes;
    doc["is_discrete"] = report.is_discrete;
    doc["is_strongly_rigid"] = report.is_strongly_rigid;
    doc["is_pseudorectangle"] = report.is_pseudorectangle;
    doc["ip_member"] = report.ip_member;
    doc["method"] = {
        {"discrete", method_tag_name(report.discrete_method)},
        {"strongly_rigid", method_tag_name(report.strongly_rigid_method)},
        {"pseudorectangle", method_tag_name(report.pseudorectangle_method)},
        {"ip", method_tag_name(report.ip_method)},
    };
    if (report.cs_order) {
        doc["cs_order"] = *report.cs_order;
    }
    if (report.pi_order) {
        doc["pi_order"] = *report.pi_order;
    }
    return doc;
}

}  // namespace

PseudometricSpace parse_space_document(const std::string& text) {
    const json doc = parse_json(text);
    std::vector<std::string> points = parse_points(doc);
    if (!doc.contains("distances") || !doc["distances"].is_array()) {
        fail(ErrorKind::ParseError, "expected a 'distances' array");
    }
    std::vector<Rational> matrix;
    matrix.reserve(doc["distances"].size());
    for (const json& entry : doc["distances"]) {
        matrix.push_back(parse_entry(entry));
    }
    return PseudometricSpace::validate(std::move(points), std::move(matrix));
}

PseudometricSpace read_space_file(const std::string& path) {
    return parse_space_document(read_file(path));
}

EquivalenceRelation relation_from_label_blocks(
    const std::vector<std::string>& points, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<int>> index_blocks;
    index_blocks.reserve(blocks.size());
    const auto index_of = [&](const std::string& label) {
        const auto it = std::find(points.begin(), points.end(), label);
        if (it == points.end()) {
            fail(ErrorKind::UnknownLabel, "block member '" + label + "' is not a point");
        }
        return static_cast<int>(it - points.begin());
    };
    for (const auto& block : blocks) {
        std::vector<int> indices;
        indices.reserve(block.size());
        for (const std::string& label : block) {
            indices.push_back(index_of(label));
        }
        index_blocks.push_back(std::move(indices));
    }
    const Partition partition(static_cast<int>(points.size()), std::move(index_blocks));
    return relation_from_partition(partition);
}

RelationDocument parse_relation_document(const std::string& text) {
    const json doc = parse_json(text);
    std::vector<std::string> points = parse_points(doc);
    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
        fail(ErrorKind::ParseError, "expected a 'blocks' array");
    }
    std::vector<std::vector<std::string>> blocks;
    for (const json& block : doc["blocks"]) {
        if (!block.is_array()) {
            fail(ErrorKind::ParseError, "each block must be an array of labels");
        }
        std::vector<std::string> labels;
        for (const json& label : block) {
            if (!label.is_string()) {
                fail(ErrorKind::ParseError, "block members must be strings");
            }
            labels.push_back(label.get<std::string>());
        }
        blocks.push_back(std::move(labels));
    }
    EquivalenceRelation relation = relation_from_label_blocks(points, blocks);
    return RelationDocument{std::move(points), std::move(relation)};
}

RelationDocument read_relation_file(const std::string& path) {
    return parse_relation_document(read_file(path));
}

std::string space_document(const PseudometricSpace& space) {
    json doc;
    doc["points"] = space.points();
    json distances = json::array();
    for (const Rational& v : space.matrix()) {
        distances.push_back(v.str());
    }
    doc["distances"] = std::move(distances);
    return doc.dump(2) + "\n";
}

Format format_from_name(const std::string& name) {
    if (name == "document") return Format::Document;
    if (name == "plain") return Format::Plain;
    fail(ErrorKind::ParseError, "unknown format '" + name + "'");
}

std::string render_space(const PseudometricSpace& space, Format format) {
    if (format == Format::Document) {
        return space_document(space);
    }
    std::string out;
    for (int i = 0; i < space.size(); ++i) {
        out += space.label(i) + ":";
        for (int j = 0; j < space.size(); ++j) {
            out += " " + space.dist(i, j).str();
        }
        out += "\n";
    }
    return out;
}

std::string render_classification(const ClassificationReport& report, Format format) {
    return render(classification_json(report), format);
}

std::string render_ip(const ClassificationReport& report, Format format) {
    json doc;
    doc["ip_member"] = report.ip_member;
    doc["method"] = method_tag_name(report.ip_method);
    doc["zero_block_sizes"] = report.zero_block_sizes;
    doc["is_discrete"] = report.is_discrete;
    doc["is_strongly_rigid"] = report.is_strongly_rigid;
    doc["is_pseudorectangle"] = report.is_pseudorectangle;
    return render(doc, format);
}

std::string render_groups(const ReflectionHom& hom, const PermutationGroup& pi, Format format) {
    json doc;
    doc["points"] = hom.space.points();
    doc["reflection_points"] = hom.reflection.points();
    doc["cs"] = group_json(hom.source, hom.space.points());
    doc["pi"] = group_json(pi, hom.space.points());
    json table = json::array();
    for (std::size_t k = 0; k < hom.source.elements.size(); ++k) {
        json row;
        row["phi"] = permutation_labels(hom.source.elements[k], hom.space.points());
        row["image"] = permutation_labels(hom.image[k], hom.reflection.points());
        table.push_back(std::move(row));
    }
    doc["hom"] = std::move(table);
    doc["image_order"] = hom.image_order();
    doc["kernel_order"] = kernel(hom).order();
    return render(doc, format);
}

std::string render_groups_structural(const PseudometricSpace& space, Format format) {
    const Partition classes = zero_partition(space);
    json doc;
    doc["points"] = space.points();
    doc["reflection_size"] = classes.block_count();
    std::vector<int> sizes = classes.block_sizes();
    std::sort(sizes.begin(), sizes.end());
    doc["zero_block_sizes"] = sizes;
    // |PI| is the product of the class factorials; no enumeration needed.
    Rational::Integer pi_order = 1;
    for (const int size : sizes) {
        for (int k = 2; k <= size; ++k) {
            pi_order *= k;
        }
    }
    doc["pi_order"] = pi_order.str();
    const bool distinct = std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end();
    doc["cs_equals_pi"] = distinct ? "yes" : "unknown";
    doc["reflection_sym_full"] = reflection_sym_full(space);
    return render(doc, format);
}

std::string render_similarity(const PseudometricSpace& x, const PseudometricSpace& y,
                              const SimilaritySearch& search, Format format) {
    json doc;
    doc["similar"] = search.witness.has_value();
    if (search.witness) {
        const SimilarityWitness& witness = *search.witness;
        json psi;
        for (int j = 0; j < y.size(); ++j) {
            psi[y.label(j)] = x.label(witness.psi[static_cast<std::size_t>(j)]);
        }
        doc["psi"] = std::move(psi);
        json f = json::array();
        for (const auto& [from, to] : witness.f) {
            f.push_back(json::array({from.str(), to.str()}));
        }
        doc["f"] = std::move(f);
    } else {
        doc["reason"] = search.rejection;
    }
    if (format == Format::Plain) {
        std::string out = search.witness ? "SIMILAR\n" : "NOT SIMILAR\n";
        if (search.witness) {
            out += plain_lines(doc["psi"], "psi.");
            for (const auto& pair : doc["f"]) {
                out += "f: " + pair[0].get<std::string>() + " -> " +
                       pair[1].get<std::string>() + "\n";
            }
        } else {
            out += "reason: " + search.rejection + "\n";
        }
        return out;
    }
    return render(doc, format);
}

}  // namespace combsim::io
