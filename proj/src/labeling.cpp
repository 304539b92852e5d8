#include "primelab/labeling.hpp"

#include <map>
#include <string>

#include "primelab/error.hpp"
#include "primelab/number_theory.hpp"

namespace primelab {

bool Labeling::is_bijection() const {
    std::vector<bool> seen(labels_.size() + 1, false);
    for (Label l : labels_) {
        if (l < 1 || l > labels_.size() || seen[l]) {
            return false;
        }
        seen[l] = true;
    }
    return true;
}

VerificationReport verify_labeling(const Graph& g, const Labeling& labeling) {
    if (labeling.size() != g.vertex_count()) {
        throw InvalidParameter("labeling covers " + std::to_string(labeling.size()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    const auto n = Label(g.vertex_count());
    VerificationReport report;

    std::map<Label, std::vector<VertexId>> owners;
    for (VertexId v = 0; v < n; ++v) {
        const Label l = labeling[v];
        if (l < 1 || l > n) {
            report.range_violations.push_back({v, l});
        }
        owners[l].push_back(v);
    }
    for (auto& [label, vertices] : owners) {
        if (vertices.size() > 1) {
            report.duplicate_labels.push_back({label, std::move(vertices)});
        }
    }

    for (const Edge& e : g.edges()) {
        const Label a = labeling[e.u];
        const Label b = labeling[e.v];
        // A zero label has no meaningful gcd; it is already a range violation.
        if (a == 0 || b == 0) {
            continue;
        }
        const auto d = gcd(a, b);
        if (d != 1) {
            report.coprimality_violations.push_back({e, a, b, d});
        }
    }

    report.is_prime = report.range_violations.empty() && report.duplicate_labels.empty() &&
                      report.coprimality_violations.empty();
    return report;
}

}  // namespace primelab
