#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primelab/graph.hpp"

namespace primelab {

using Label = std::uint32_t;

/// Vertex id -> label map. Not validated on construction so that broken
/// labelings can still be handed to verify_labeling for a full report.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](VertexId v) const { return labels_.at(v); }
    std::span<const Label> labels() const noexcept { return labels_; }

    /// True iff the labels are exactly a permutation of 1..size().
    bool is_bijection() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

struct RangeViolation {
    VertexId vertex;
    Label label;
    friend bool operator==(const RangeViolation&, const RangeViolation&) = default;
};

struct DuplicateLabel {
    Label label;
    std::vector<VertexId> vertices;
    friend bool operator==(const DuplicateLabel&, const DuplicateLabel&) = default;
};

struct CoprimalityViolation {
    Edge edge;
    Label label_u;
    Label label_v;
    std::uint64_t gcd;
    friend bool operator==(const CoprimalityViolation&, const CoprimalityViolation&) = default;
};

struct VerificationReport {
    bool is_prime = false;
    std::vector<RangeViolation> range_violations;
    std::vector<DuplicateLabel> duplicate_labels;
    std::vector<CoprimalityViolation> coprimality_violations;
};

/// Checks every vertex and every edge; all violations are reported, in
/// vertex / label / canonical edge order. Throws InvalidParameter when the
/// labeling does not cover exactly the graph's vertices.
VerificationReport verify_labeling(const Graph& g, const Labeling& labeling);

}  // namespace primelab
