#include "primelab/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "primelab/error.hpp"
#include "primelab/number_theory.hpp"

namespace primelab {

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// Static search plan shared by every branch.
struct Plan {
    std::size_t n = 0;
    std::vector<VertexId> order;
    // earlier[d]: neighbours of order[d] placed before depth d.
    std::vector<std::vector<VertexId>> earlier;
    // Rank of a label among the interchangeable labels, or -1.
    std::vector<int> universal_rank;
    std::vector<Label> universal;
    bool symmetry = false;
};

Plan make_plan(const Graph& g, bool symmetry) {
    Plan plan;
    plan.n = g.vertex_count();
    plan.symmetry = symmetry;
    plan.order.resize(plan.n);
    std::iota(plan.order.begin(), plan.order.end(), VertexId(0));
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    std::vector<std::size_t> position(plan.n);
    for (std::size_t d = 0; d < plan.n; ++d) {
        position[plan.order[d]] = d;
    }
    plan.earlier.resize(plan.n);
    for (std::size_t d = 0; d < plan.n; ++d) {
        for (VertexId w : g.neighbors(plan.order[d])) {
            if (position[w] < d) {
                plan.earlier[d].push_back(w);
            }
        }
    }

    plan.universal_rank.assign(plan.n + 1, -1);
    for (Label l = 1; l <= plan.n; ++l) {
        if (l == 1 || (2 * std::uint64_t(l) > plan.n && is_prime(l))) {
            plan.universal_rank[l] = int(plan.universal.size());
            plan.universal.push_back(l);
        }
    }
    return plan;
}

class Searcher {
public:
    Searcher(const Plan& plan, std::optional<std::uint64_t> max_nodes, std::optional<Clock::time_point> deadline,
             const std::atomic<int>* cancel_above = nullptr, int branch = 0)
        : plan_(plan),
          max_nodes_(max_nodes),
          deadline_(deadline),
          cancel_above_(cancel_above),
          branch_(branch),
          label_of_(plan.n, 0),
          used_(plan.n + 1, false) {}

    // Runs from depth 0, or with the first vertex pinned to first_label.
    SearchStatus run(std::optional<Label> first_label = std::nullopt) {
        if (first_label) {
            if (!allowed(*first_label)) {
                return SearchStatus::Exhausted;
            }
            place(0, *first_label);
            if (stopped_) {
                return SearchStatus::BudgetExceeded;
            }
            const bool found = descend(1);
            return status(found);
        }
        return status(descend(0));
    }

    std::uint64_t nodes() const { return nodes_; }
    Labeling labeling() const { return Labeling(label_of_); }

private:
    SearchStatus status(bool found) const {
        if (found) {
            return SearchStatus::Found;
        }
        return stopped_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }

    bool allowed(Label l) const {
        if (used_[l]) {
            return false;
        }
        if (plan_.symmetry) {
            const int rank = plan_.universal_rank[l];
            if (rank > 0 && !used_[plan_.universal[std::size_t(rank - 1)]]) {
                return false;
            }
        }
        return true;
    }

    bool fits(std::size_t depth, Label l) const {
        for (VertexId w : plan_.earlier[depth]) {
            if (gcd(l, label_of_[w]) != 1) {
                return false;
            }
        }
        return true;
    }

    void place(std::size_t depth, Label l) {
        label_of_[plan_.order[depth]] = l;
        used_[l] = true;
        ++nodes_;
        if (max_nodes_ && nodes_ > *max_nodes_) {
            stopped_ = true;
        } else if ((nodes_ & 0x3ff) == 0) {
            if (deadline_ && Clock::now() >= *deadline_) {
                stopped_ = true;
            } else if (cancel_above_ && cancel_above_->load(std::memory_order_relaxed) < branch_) {
                stopped_ = true;
            }
        }
    }

    void unplace(std::size_t depth) {
        used_[label_of_[plan_.order[depth]]] = false;
        label_of_[plan_.order[depth]] = 0;
    }

    bool descend(std::size_t depth) {
        if (depth == plan_.n) {
            return true;
        }
        for (Label l = 1; l <= plan_.n; ++l) {
            if (!allowed(l) || !fits(depth, l)) {
                continue;
            }
            place(depth, l);
            if (stopped_) {
                return false;
            }
            if (descend(depth + 1)) {
                return true;
            }
            if (stopped_) {
                return false;
            }
            unplace(depth);
        }
        return false;
    }

    const Plan& plan_;
    std::optional<std::uint64_t> max_nodes_;
    std::optional<Clock::time_point> deadline_;
    const std::atomic<int>* cancel_above_;
    int branch_;
    std::vector<Label> label_of_;
    std::vector<bool> used_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

SearchOutcome parallel_search(const Plan& plan, const SearchBudget& budget, std::optional<Clock::time_point> deadline,
                              unsigned threads) {
    const int branches = int(plan.n);
    std::optional<std::uint64_t> per_branch;
    if (budget.max_nodes) {
        per_branch = (*budget.max_nodes + std::uint64_t(branches) - 1) / std::uint64_t(branches);
    }

    struct BranchResult {
        SearchStatus status = SearchStatus::Exhausted;
        std::optional<Labeling> labeling;
        std::uint64_t nodes = 0;
    };
    std::vector<BranchResult> results(static_cast<std::size_t>(branches));
    std::atomic<int> next{0};
    std::atomic<int> best_found{std::numeric_limits<int>::max()};

    auto worker = [&] {
        for (int b = next.fetch_add(1); b < branches; b = next.fetch_add(1)) {
            if (best_found.load() < b) {
                // A lower branch already succeeded; this one cannot matter.
                results[std::size_t(b)].status = SearchStatus::BudgetExceeded;
                continue;
            }
            Searcher searcher(plan, per_branch, deadline, &best_found, b);
            auto& slot = results[std::size_t(b)];
            slot.status = searcher.run(Label(b + 1));
            slot.nodes = searcher.nodes();
            if (slot.status == SearchStatus::Found) {
                slot.labeling = searcher.labeling();
                int current = best_found.load();
                while (b < current && !best_found.compare_exchange_weak(current, b)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();

    SearchOutcome outcome;
    bool exceeded = false;
    for (auto& r : results) {
        outcome.nodes_explored += r.nodes;
    }
    for (auto& r : results) {
        if (r.status == SearchStatus::Found) {
            outcome.status = SearchStatus::Found;
            outcome.labeling = std::move(r.labeling);
            return outcome;
        }
        exceeded = exceeded || r.status == SearchStatus::BudgetExceeded;
    }
    outcome.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    return outcome;
}

}  // namespace

SearchOutcome backtracking_search(const Graph& g, const SearchBudget& budget, const SearchOptions& options) {
    const auto start = Clock::now();
    const Plan plan = make_plan(g, options.symmetry_reduction);
    std::optional<Clock::time_point> deadline;
    if (budget.max_time) {
        deadline = start + *budget.max_time;
    }

    SearchOutcome outcome;
    if (options.threads > 1 && plan.n > 1) {
        outcome = parallel_search(plan, budget, deadline, options.threads);
    } else {
        Searcher searcher(plan, budget.max_nodes, deadline);
        outcome.status = searcher.run();
        outcome.nodes_explored = searcher.nodes();
        if (outcome.status == SearchStatus::Found) {
            outcome.labeling = searcher.labeling();
        }
    }
    outcome.elapsed = Clock::now() - start;
    return outcome;
}

SearchOutcome brute_force_search(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kBruteForceMaxVertices) {
        throw InvalidParameter("brute force search is limited to " + std::to_string(kBruteForceMaxVertices) +
                               " vertices, graph has " + std::to_string(n));
    }
    const auto start = Clock::now();
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label(1));

    SearchOutcome outcome;
    do {
        ++outcome.nodes_explored;
        const bool prime = std::all_of(g.edges().begin(), g.edges().end(),
                                       [&](const Edge& e) { return std::gcd(labels[e.u], labels[e.v]) == 1; });
        if (prime) {
            outcome.status = SearchStatus::Found;
            outcome.labeling = Labeling(labels);
            break;
        }
    } while (std::next_permutation(labels.begin(), labels.end()));
    outcome.elapsed = Clock::now() - start;
    return outcome;
}

std::optional<std::uint64_t> pillai_witness(int k, std::uint64_t limit) {
    if (k < 2) {
        throw InvalidParameter("window length k must be >= 2");
    }
    if (limit < std::uint64_t(k)) {
        throw InvalidParameter("limit must be >= k");
    }
    if (limit + std::uint64_t(k) > std::numeric_limits<std::uint32_t>::max()) {
        throw InvalidParameter("limit too large for the factor sieve");
    }
    const auto top = std::uint32_t(limit + std::uint64_t(k));
    const auto spf = smallest_prime_factor_sieve(top);

    // x has a partner in [s, s+k) iff one of its prime factors p also divides
    // x - p or x + p inside the window.
    auto has_partner = [&](std::uint64_t x, std::uint64_t s) {
        std::uint64_t rest = x;
        while (rest > 1) {
            const std::uint64_t p = spf[rest];
            if ((x >= s + p) || (x + p < s + std::uint64_t(k))) {
                return true;
            }
            while (rest % p == 0) {
                rest /= p;
            }
        }
        return false;
    };

    for (std::uint64_t s = 1; s <= limit; ++s) {
        bool all = true;
        for (std::uint64_t x = s; x < s + std::uint64_t(k); ++x) {
            if (!has_partner(x, s)) {
                all = false;
                break;
            }
        }
        if (all) {
            return s;
        }
    }
    return std::nullopt;
}

}  // namespace primelab
