#include "primelab/io.hpp"

#include <json.hpp>
#include <sstream>

#include "primelab/error.hpp"

namespace primelab {

using ordered_json = nlohmann::ordered_json;

GraphDocument make_document(const Graph& g, std::optional<FamilyDescriptor> family) {
    GraphDocument doc;
    doc.family = std::move(family);
    doc.vertex_count = g.vertex_count();
    doc.edges.assign(g.edges().begin(), g.edges().end());
    return doc;
}

GraphDocument make_document(const FamilyInstance& instance, const std::optional<Labeling>& labeling) {
    GraphDocument doc = make_document(
        instance.graph(), FamilyDescriptor{family_name(instance.family()), family_arguments(instance.family())});
    doc.roles = instance.roles();
    if (labeling) {
        if (labeling->size() != doc.vertex_count) {
            throw InvalidParameter("labeling does not match the instance");
        }
        doc.labeling.emplace(labeling->labels().begin(), labeling->labels().end());
    }
    return doc;
}

std::string serialize_document(const GraphDocument& doc) {
    ordered_json j;
    j["format"] = kDocumentFormat;
    j["version"] = doc.version;
    if (doc.family) {
        j["family"] = {{"name", doc.family->name}, {"params", doc.family->params}};
    }
    j["vertex_count"] = doc.vertex_count;
    auto edges = ordered_json::array();
    for (const Edge& e : doc.edges) {
        edges.push_back({e.u, e.v});
    }
    j["edges"] = std::move(edges);
    if (!doc.roles.empty()) {
        auto roles = ordered_json::array();
        for (std::size_t v = 0; v < doc.roles.size(); ++v) {
            roles.push_back({{"vertex", v}, {"name", doc.roles[v].name}, {"index", doc.roles[v].index}});
        }
        j["roles"] = std::move(roles);
    }
    if (doc.labeling) {
        j["labeling"] = *doc.labeling;
    }
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InvalidParameter("malformed graph document: " + what); }

}  // namespace

GraphDocument parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
    if (!j.is_object()) {
        malformed("top level is not an object");
    }

    GraphDocument doc;
    try {
        if (j.value("format", std::string()) != kDocumentFormat) {
            malformed("missing or unknown format tag");
        }
        doc.version = j.at("version").get<int>();
        if (doc.version != kDocumentVersion) {
            malformed("unsupported version " + std::to_string(doc.version));
        }
        if (j.contains("family")) {
            const auto& f = j.at("family");
            doc.family = FamilyDescriptor{f.at("name").get<std::string>(), f.at("params").get<std::vector<int>>()};
        }
        doc.vertex_count = j.at("vertex_count").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                malformed("edge is not a pair");
            }
            const Edge edge{e[0].get<VertexId>(), e[1].get<VertexId>()};
            if (edge.u >= edge.v) {
                malformed("edge [" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "] is not canonical");
            }
            if (!doc.edges.empty() && !(doc.edges.back() < edge)) {
                malformed("edge list is not sorted and duplicate-free");
            }
            doc.edges.push_back(edge);
        }
        if (j.contains("roles")) {
            const auto& roles = j.at("roles");
            if (roles.size() != doc.vertex_count) {
                malformed("roles must cover every vertex");
            }
            for (std::size_t v = 0; v < roles.size(); ++v) {
                const auto& r = roles[v];
                if (r.at("vertex").get<std::size_t>() != v) {
                    malformed("roles must be listed by vertex id");
                }
                doc.roles.push_back({r.at("name").get<std::string>(), r.at("index").get<std::vector<int>>()});
            }
        }
        if (j.contains("labeling")) {
            doc.labeling = j.at("labeling").get<std::vector<Label>>();
            if (doc.labeling->size() != doc.vertex_count) {
                malformed("labeling length differs from vertex_count");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
    return doc;
}

std::string serialize_json(const FamilyInstance& instance, const std::optional<Labeling>& labeling) {
    return serialize_document(make_document(instance, labeling));
}

Graph document_graph(const GraphDocument& doc) { return Graph(doc.vertex_count, doc.edges); }

std::string export_dot(const GraphDocument& doc) {
    auto node = [&](VertexId v) {
        return "\"" + std::to_string(doc.labeling ? (*doc.labeling)[v] : v) + "\"";
    };
    std::ostringstream out;
    std::string name = "G";
    if (doc.family) {
        name = doc.family->name;
        for (int p : doc.family->params) {
            name += "_" + std::to_string(p);
        }
    }
    out << "graph \"" << name << "\" {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < doc.vertex_count; ++v) {
        out << "  " << node(v);
        if (v < doc.roles.size()) {
            out << " [comment=\"" << doc.roles[v].to_string() << "\"]";
        }
        out << ";\n";
    }
    for (const Edge& e : doc.edges) {
        out << "  " << node(e.u) << " -- " << node(e.v) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const FamilyInstance& instance, const std::optional<Labeling>& labeling) {
    return export_dot(make_document(instance, labeling));
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["is_prime"] = report.is_prime;
    auto range = ordered_json::array();
    for (const auto& r : report.range_violations) {
        range.push_back({{"vertex", r.vertex}, {"label", r.label}});
    }
    auto dups = ordered_json::array();
    for (const auto& d : report.duplicate_labels) {
        dups.push_back({{"label", d.label}, {"vertices", d.vertices}});
    }
    auto coprime = ordered_json::array();
    for (const auto& c : report.coprimality_violations) {
        coprime.push_back(
            {{"edge", {c.edge.u, c.edge.v}}, {"labels", {c.label_u, c.label_v}}, {"gcd", c.gcd}});
    }
    j["range_violations"] = std::move(range);
    j["duplicate_labels"] = std::move(dups);
    j["coprimality_violations"] = std::move(coprime);
    return j.dump(2) + "\n";
}

std::string outcome_to_json(const SearchOutcome& outcome) {
    ordered_json j;
    j["status"] = to_string(outcome.status);
    j["nodes_explored"] = outcome.nodes_explored;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(outcome.elapsed).count();
    if (outcome.labeling) {
        j["labeling"] = std::vector<Label>(outcome.labeling->labels().begin(), outcome.labeling->labels().end());
    }
    return j.dump(2) + "\n";
}

std::string summarize(const VerificationReport& report) {
    std::ostringstream out;
    if (report.is_prime) {
        out << "prime labeling: yes";
    } else {
        out << "prime labeling: no (" << report.range_violations.size() << " range, "
            << report.duplicate_labels.size() << " duplicate, " << report.coprimality_violations.size()
            << " coprimality violation(s))";
    }
    return out.str();
}

std::string summarize(const SearchOutcome& outcome) {
    std::ostringstream out;
    out << "search: " << to_string(outcome.status) << " after " << outcome.nodes_explored << " node(s)";
    return out.str();
}

}  // namespace primelab
