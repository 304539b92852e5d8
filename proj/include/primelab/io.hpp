#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primelab/families.hpp"
#include "primelab/labeling.hpp"
#include "primelab/search.hpp"

namespace primelab {

inline constexpr const char* kDocumentFormat = "primelab-graph";
inline constexpr int kDocumentVersion = 1;

struct FamilyDescriptor {
    std::string name;
    std::vector<int> params;
    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// On-disk graph document. Edges are canonical (u < v) and sorted; roles and
/// labeling, when present, are indexed by vertex id.
struct GraphDocument {
    int version = kDocumentVersion;
    std::optional<FamilyDescriptor> family;
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Role> roles;
    std::optional<std::vector<Label>> labeling;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument make_document(const Graph& g, std::optional<FamilyDescriptor> family = std::nullopt);
GraphDocument make_document(const FamilyInstance& instance, const std::optional<Labeling>& labeling = std::nullopt);

/// Canonical JSON text: fixed key order, two-space indent, trailing newline.
std::string serialize_document(const GraphDocument& doc);
/// Throws InvalidParameter on malformed or non-canonical input.
GraphDocument parse_document(const std::string& text);

std::string serialize_json(const FamilyInstance& instance, const std::optional<Labeling>& labeling = std::nullopt);

/// Validated graph of a document (connectivity, simplicity).
Graph document_graph(const GraphDocument& doc);

/// Graphviz text. Nodes are named by label when the document is labeled,
/// by vertex id otherwise; edges follow canonical order.
std::string export_dot(const GraphDocument& doc);
std::string export_dot(const FamilyInstance& instance, const std::optional<Labeling>& labeling = std::nullopt);

/// Machine-readable reports (JSON text, two-space indent).
std::string report_to_json(const VerificationReport& report);
std::string outcome_to_json(const SearchOutcome& outcome);

/// One-line human summaries.
std::string summarize(const VerificationReport& report);
std::string summarize(const SearchOutcome& outcome);

}  // namespace primelab
