#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "primelab/graph.hpp"
#include "primelab/labeling.hpp"

namespace primelab {

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Labeling> labeling;  // set iff status == Found
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Node and wall-clock limits. A default-constructed budget is unbounded.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::nanoseconds> max_time;

    static SearchBudget unbounded() { return {}; }
    static SearchBudget nodes(std::uint64_t n) { return {n, std::nullopt}; }
    bool is_unbounded() const { return !max_nodes && !max_time; }
};

struct SearchOptions {
    /// Worker threads. With more than one, the search splits on the label of
    /// the first vertex in the static order and each branch receives
    /// ceil(max_nodes / branches) nodes. The returned labeling is the one
    /// found in the lowest-labeled branch, which is what a sequential run
    /// would return; node counts are only reproducible with one thread.
    unsigned threads = 1;
    /// Label 1 and every prime above n/2 are coprime to every other label in
    /// 1..n, so they are interchangeable. When set, these labels are placed in
    /// increasing order along the vertex order. Off by default so that an
    /// Exhausted result enumerates the unreduced space.
    bool symmetry_reduction = false;
};

/// Depth-first search assigning labels 1..n to vertices in a fixed order
/// (degree descending, ties by id), pruning as soon as two assigned
/// neighbours share a factor. Labels are tried in increasing order, so Found
/// returns the lexicographically first prime labeling along that order.
SearchOutcome backtracking_search(const Graph& g, const SearchBudget& budget = {}, const SearchOptions& options = {});

/// Maximum vertex count accepted by brute_force_search.
inline constexpr std::size_t kBruteForceMaxVertices = 10;

/// Tries all |V|! label permutations in lexicographic order. Throws
/// InvalidParameter above kBruteForceMaxVertices vertices.
SearchOutcome brute_force_search(const Graph& g);

/// Smallest s <= limit such that every element of {s, ..., s+k-1} shares a
/// factor > 1 with some other element of the window. Throws
/// InvalidParameter unless k >= 2 and limit >= k.
std::optional<std::uint64_t> pillai_witness(int k, std::uint64_t limit);

}  // namespace primelab
