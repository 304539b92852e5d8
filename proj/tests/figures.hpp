#pragma once

// Reference labeled drawings, transcribed by hand. Each drawing is reduced
// to its set of labeled edges {label_a, label_b}, which is what a drawing
// fixes independently of vertex numbering.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "primelab/families.hpp"
#include "primelab/labeling.hpp"

namespace figures {

using primelab::Label;
using LabeledEdges = std::set<std::pair<Label, Label>>;

inline void add(LabeledEdges& edges, Label a, Label b) { edges.insert({std::min(a, b), std::max(a, b)}); }

inline void add_ring(LabeledEdges& edges, const std::vector<Label>& ring) {
    for (std::size_t t = 0; t < ring.size(); ++t) {
        add(edges, ring[t], ring[(t + 1) % ring.size()]);
    }
}

inline LabeledEdges labeled_edges(const primelab::Graph& g, const primelab::Labeling& l) {
    LabeledEdges edges;
    for (const auto& e : g.edges()) {
        add(edges, l[e.u], l[e.v]);
    }
    return edges;
}

struct PendantBlock {
    Label cycle;
    Label pendant;
    std::vector<Label> leaves;
};

struct Figure {
    std::string name;
    primelab::FamilyParams family;
    std::size_t vertex_count;
    LabeledEdges edges;
};

// Blocks listed in the order their cycle vertices are joined around the cycle.
inline Figure pendant_star_figure(std::string name, int n, int m, const std::vector<PendantBlock>& blocks) {
    Figure f{std::move(name), primelab::CyclePendantStar{n, m}, 0, {}};
    std::vector<Label> ring;
    for (const auto& b : blocks) {
        ring.push_back(b.cycle);
        add(f.edges, b.cycle, b.pendant);
        for (Label leaf : b.leaves) {
            add(f.edges, b.pendant, leaf);
        }
        f.vertex_count += 2 + b.leaves.size();
    }
    add_ring(f.edges, ring);
    return f;
}

// Each cycle as drawn, in cyclic order; consecutive cycles share one label.
inline Figure ring_figure(std::string name, primelab::FamilyParams family, std::size_t vertex_count,
                          const std::vector<std::vector<Label>>& rings) {
    Figure f{std::move(name), family, vertex_count, {}};
    for (const auto& ring : rings) {
        add_ring(f.edges, ring);
    }
    return f;
}

inline Figure prism_figure(std::string name, const std::vector<Label>& inner, const std::vector<Label>& outer) {
    Figure f{std::move(name), primelab::Prism{int(inner.size())}, 2 * inner.size(), {}};
    add_ring(f.edges, inner);
    add_ring(f.edges, outer);
    for (std::size_t i = 0; i < inner.size(); ++i) {
        add(f.edges, inner[i], outer[i]);
    }
    return f;
}

// rows[k-1][i-1] is the label of leaf k on page i; centers are 1..m.
inline Figure book_figure(std::string name, const std::vector<std::vector<Label>>& rows) {
    const auto m = rows.front().size();
    Figure f{std::move(name), primelab::Book{int(rows.size()), int(m)}, (rows.size() + 1) * m, {}};
    for (Label c = 1; c < m; ++c) {
        add(f.edges, c, c + 1);
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < m; ++i) {
            add(f.edges, row[i], Label(i + 1));
            if (i + 1 < m) {
                add(f.edges, row[i], row[i + 1]);
            }
        }
    }
    return f;
}

inline std::vector<Figure> all_figures() {
    std::vector<Figure> figs;

    figs.push_back(pendant_star_figure("C4*P2*S4", 4, 4,
                                       {{1, 5, {2, 3, 4, 6}},
                                        {7, 11, {8, 9, 10, 12}},
                                        {13, 17, {14, 15, 16, 18}},
                                        {19, 23, {20, 21, 22, 24}}}));
    figs.push_back(pendant_star_figure("C3*P2*S5", 3, 5,
                                       {{1, 5, {2, 3, 4, 6, 7}},
                                        {8, 11, {9, 10, 12, 13, 14}},
                                        {15, 19, {16, 17, 18, 20, 21}}}));
    figs.push_back(pendant_star_figure("C5*P2*S6", 5, 6,
                                       {{1, 5, {2, 3, 4, 6, 7, 8}},
                                        {9, 13, {10, 11, 12, 14, 15, 16}},
                                        {17, 19, {18, 20, 21, 22, 23, 24}},
                                        {25, 29, {26, 27, 28, 30, 31, 32}},
                                        {33, 37, {34, 35, 36, 38, 39, 40}}}));
    figs.push_back(pendant_star_figure("C4*P2*S7", 4, 7,
                                       {{1, 5, {2, 3, 4, 6, 7, 8, 9}},
                                        {10, 13, {11, 12, 14, 15, 16, 17, 18}},
                                        {19, 23, {20, 21, 22, 24, 25, 26, 27}},
                                        {28, 31, {29, 30, 32, 33, 34, 35, 36}}}));
    figs.push_back(pendant_star_figure("C3*P2*S8", 3, 8,
                                       {{1, 7, {2, 3, 4, 5, 6, 8, 9, 10}},
                                        {11, 17, {12, 13, 14, 15, 16, 18, 19, 20}},
                                        {21, 23, {22, 24, 25, 26, 27, 28, 29, 30}}}));

    figs.push_back(ring_figure("C4^4", primelab::CycleChain{4, 4}, 13,
                               {{5, 4, 3, 2}, {7, 6, 5, 8}, {11, 9, 7, 10}, {13, 12, 11, 1}}));
    figs.push_back(ring_figure("C4^5", primelab::CycleChain{4, 5}, 16,
                               {{5, 4, 3, 2}, {7, 6, 5, 8}, {11, 9, 7, 10}, {13, 12, 11, 14}, {1, 15, 13, 16}}));
    figs.push_back(ring_figure("C6^5", primelab::CycleChain{6, 5}, 26,
                               {{1, 2, 3, 4, 5, 6},
                                {11, 8, 7, 1, 9, 10},
                                {16, 13, 12, 11, 14, 15},
                                {19, 18, 17, 16, 21, 20},
                                {26, 23, 22, 19, 24, 25}}));
    figs.push_back(ring_figure("C8^5", primelab::CycleChain{8, 5}, 36,
                               {{1, 2, 3, 4, 5, 6, 7, 8},
                                {15, 11, 10, 9, 1, 12, 13, 14},
                                {19, 18, 17, 16, 15, 22, 21, 20},
                                {29, 25, 24, 23, 19, 26, 27, 28},
                                {33, 32, 31, 30, 29, 36, 35, 34}}));
    // Unlabeled placeholder nodes in the drawing are the next spine vertex.
    figs.push_back(ring_figure("C_F^5", primelab::FibonacciChain{5}, 21,
                               {{1, 2, 3},
                                {4, 3, 5},
                                {5, 6, 7, 8},
                                {10, 9, 8, 13, 12, 11},
                                {13, 14, 15, 16, 17, 18, 19, 20, 21}}));

    figs.push_back(prism_figure("C6xP2", {5, 2, 3, 4, 1, 12}, {6, 7, 8, 9, 10, 11}));

    figs.push_back(book_figure("S6xP3", {{6, 5, 4}, {8, 9, 7}, {12, 11, 10}, {14, 15, 13}, {18, 17, 16}, {20, 21, 19}}));
    figs.push_back(book_figure("S6xP4", {{6, 7, 8, 5},
                                         {12, 11, 10, 9},
                                         {16, 15, 14, 13},
                                         {18, 19, 20, 17},
                                         {24, 23, 22, 21},
                                         {28, 27, 26, 25}}));
    figs.push_back(book_figure("S7xP5", {{10, 9, 8, 7, 6},
                                         {12, 13, 14, 15, 11},
                                         {18, 19, 20, 17, 16},
                                         {24, 23, 22, 25, 21},
                                         {30, 29, 28, 27, 26},
                                         {32, 33, 34, 35, 31},
                                         {38, 39, 40, 37, 36}}));
    figs.push_back(book_figure("S8xP6", {{12, 11, 10, 9, 8, 7},
                                         {18, 17, 16, 15, 14, 13},
                                         {20, 21, 22, 23, 24, 19},
                                         {30, 29, 28, 27, 26, 25},
                                         {36, 35, 34, 33, 32, 31},
                                         {42, 41, 40, 39, 38, 37},
                                         {48, 47, 46, 45, 44, 43},
                                         {50, 51, 52, 53, 54, 49}}));
    return figs;
}

}  // namespace figures
