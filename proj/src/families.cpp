#include "primelab/families.hpp"

#include <bit>
#include <sstream>

#include "primelab/error.hpp"
#include "primelab/number_theory.hpp"

namespace primelab {

namespace {

// Keeps every id, label and edge count comfortably inside 32 bits.
constexpr std::int64_t kMaxVertices = std::int64_t(1) << 28;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw InvalidParameter(message);
    }
}

void require_size(std::int64_t vertices) {
    require(vertices <= kMaxVertices, "family instance too large: " + std::to_string(vertices) + " vertices");
}

bool is_chain_cycle_length(int n) {
    if (n == 4 || n == 6) {
        return true;
    }
    if (n < 8 || !std::has_single_bit(unsigned(n))) {
        return false;
    }
    return is_prime(std::uint64_t(n) - 1);
}

}  // namespace

std::string Role::to_string() const {
    std::ostringstream out;
    out << name << '(';
    for (std::size_t i = 0; i < index.size(); ++i) {
        out << (i ? "," : "") << index[i];
    }
    out << ')';
    return out.str();
}

std::string family_name(const FamilyParams& params) {
    return std::visit(Overloaded{
                          [](const CyclePendantStar&) { return std::string("cps"); },
                          [](const CycleChain&) { return std::string("chain"); },
                          [](const FibonacciChain&) { return std::string("fib"); },
                          [](const Prism&) { return std::string("prism"); },
                          [](const Book&) { return std::string("book"); },
                      },
                      params);
}

std::vector<int> family_arguments(const FamilyParams& params) {
    return std::visit(Overloaded{
                          [](const CyclePendantStar& p) { return std::vector<int>{p.n, p.m}; },
                          [](const CycleChain& p) { return std::vector<int>{p.n, p.m}; },
                          [](const FibonacciChain& p) { return std::vector<int>{p.m}; },
                          [](const Prism& p) { return std::vector<int>{p.n}; },
                          [](const Book& p) { return std::vector<int>{p.n, p.m}; },
                      },
                      params);
}

FamilyParams make_family_params(const std::string& name, const std::vector<int>& args) {
    auto arity = [&](std::size_t expected) {
        require(args.size() == expected, "family '" + name + "' takes " + std::to_string(expected) +
                                             " parameter(s), got " + std::to_string(args.size()));
    };
    if (name == "cps") {
        arity(2);
        return CyclePendantStar{args[0], args[1]};
    }
    if (name == "chain") {
        arity(2);
        return CycleChain{args[0], args[1]};
    }
    if (name == "fib") {
        arity(1);
        return FibonacciChain{args[0]};
    }
    if (name == "prism") {
        arity(1);
        return Prism{args[0]};
    }
    if (name == "book") {
        arity(2);
        return Book{args[0], args[1]};
    }
    throw InvalidParameter("unknown family '" + name + "'");
}

void validate(const FamilyParams& params) {
    std::visit(Overloaded{
                   [](const CyclePendantStar& p) {
                       require(p.n >= 3 && p.m >= 0, "cycle pendant star requires n >= 3 and m >= 0");
                       require_size(std::int64_t(p.n) * (p.m + 2));
                   },
                   [](const CycleChain& p) {
                       require(is_chain_cycle_length(p.n),
                               "cycle chain requires n in {4, 6, 8} or n = 2^k with 2^k - 1 prime, got " +
                                   std::to_string(p.n));
                       require(p.m >= 1, "cycle chain requires m >= 1");
                       require_size(std::int64_t(p.n - 1) * p.m + 1);
                   },
                   [](const FibonacciChain& p) {
                       require(p.m >= 1, "fibonacci chain requires m >= 1");
                       require(p.m <= 30, "fibonacci chain with m > 30 is too large");
                   },
                   [](const Prism& p) {
                       require(p.n >= 3, "prism requires n >= 3");
                       require_size(std::int64_t(p.n) * 2);
                   },
                   [](const Book& p) {
                       require(p.n >= 1 && p.m >= 2, "book requires n >= 1 and m >= 2");
                       require_size(std::int64_t(p.n + 1) * p.m);
                   },
               },
               params);
}

FamilyInstance::FamilyInstance(Graph graph, FamilyParams family, std::vector<Role> role_of_vertex)
    : graph_(std::move(graph)), family_(std::move(family)), role_of_vertex_(std::move(role_of_vertex)) {
    if (role_of_vertex_.size() != graph_.vertex_count()) {
        throw InvalidParameter("role map does not cover every vertex");
    }
    for (VertexId v = 0; v < role_of_vertex_.size(); ++v) {
        if (!vertex_of_role_.emplace(role_of_vertex_[v], v).second) {
            throw InvalidParameter("duplicate role " + role_of_vertex_[v].to_string());
        }
    }
}

VertexId FamilyInstance::vertex(const Role& role) const {
    auto it = vertex_of_role_.find(role);
    if (it == vertex_of_role_.end()) {
        throw InvalidParameter("no vertex with role " + role.to_string());
    }
    return it->second;
}

FamilyInstance build_cycle_pendant_star(int n, int m) {
    const CyclePendantStar params{n, m};
    validate(params);
    const auto block = VertexId(m + 2);
    auto c = [&](int i) { return VertexId(i - 1) * block; };

    std::vector<Role> roles(std::size_t(n) * block);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        const VertexId ci = c(i);
        const VertexId pi = ci + 1;
        roles[ci] = {"c", {i}};
        roles[pi] = {"p", {i}};
        edges.push_back({ci, c(i % n + 1)});
        edges.push_back({ci, pi});
        for (int k = 1; k <= m; ++k) {
            roles[pi + VertexId(k)] = {"o", {i, k}};
            edges.push_back({pi, pi + VertexId(k)});
        }
    }
    Graph g(roles.size(), std::move(edges));
    return FamilyInstance(std::move(g), params, std::move(roles));
}

namespace {

// Cyclic order of the k-indices of cycle i >= 2, following the shared vertex
// with cycle i-1. See build_cycle_chain in the header.
std::vector<int> chain_cycle_order(int n, int i) {
    std::vector<int> order;
    if (n == 4) {
        order = (i % 2 == 0) ? std::vector<int>{1, 2, 3} : std::vector<int>{2, 3, 1};
    } else if (n == 6) {
        order = (i % 3 == 1) ? std::vector<int>{5, 4, 3, 2, 1} : std::vector<int>{3, 4, 5, 2, 1};
    } else {
        const int half = n / 2;
        if (i % 2 == 0) {
            for (int k = half; k <= n - 1; ++k) order.push_back(k);
            for (int k = half - 1; k >= 1; --k) order.push_back(k);
        } else {
            for (int k = n - 1; k >= 1; --k) order.push_back(k);
        }
    }
    return order;
}

}  // namespace

FamilyInstance build_cycle_chain(int n, int m) {
    const CycleChain params{n, m};
    validate(params);

    const auto total = std::size_t(n - 1) * std::size_t(m) + 1;
    std::vector<Role> roles(total);
    std::vector<Edge> edges;
    auto id = [n](int i, int k) {
        if (i == 1) {
            return VertexId(k - 1);
        }
        return VertexId(n) + VertexId(i - 2) * VertexId(n - 1) + VertexId(k - 1);
    };

    for (int k = 1; k <= n; ++k) {
        roles[id(1, k)] = {"c", {1, k}};
        edges.push_back({id(1, k), id(1, k % n + 1)});
    }
    VertexId shared = id(1, n == 4 ? 4 : 1);

    for (int i = 2; i <= m; ++i) {
        std::vector<VertexId> ring{shared};
        for (int k : chain_cycle_order(n, i)) {
            roles[id(i, k)] = {"c", {i, k}};
            ring.push_back(id(i, k));
        }
        for (std::size_t t = 0; t < ring.size(); ++t) {
            edges.push_back({ring[t], ring[(t + 1) % ring.size()]});
        }
        shared = ring[ring.size() / 2];
    }
    return FamilyInstance(Graph(total, std::move(edges)), params, std::move(roles));
}

FamilyInstance build_fibonacci_chain(int m) {
    const FibonacciChain params{m};
    validate(params);

    const int spine = m + 2;
    std::vector<Role> roles;
    std::vector<Edge> edges;
    for (int j = 1; j <= spine; ++j) {
        roles.push_back({"p", {j}});
    }
    auto p = [](int j) { return VertexId(j - 1); };
    for (int j = 1; j < spine; ++j) {
        edges.push_back({p(j), p(j + 1)});
    }
    edges.push_back({p(1), p(3)});

    for (int i = 3; i <= m + 1; ++i) {
        const auto detour_edges = fibonacci(i);
        VertexId previous = p(i);
        for (std::uint64_t t = 1; t < detour_edges; ++t) {
            const auto v = VertexId(roles.size());
            roles.push_back({"d", {i, int(t)}});
            edges.push_back({previous, v});
            previous = v;
        }
        edges.push_back({previous, p(i + 1)});
    }
    const std::size_t total = roles.size();
    return FamilyInstance(Graph(total, std::move(edges)), params, std::move(roles));
}

FamilyInstance build_prism(int n) {
    const Prism params{n};
    validate(params);
    Graph g = cartesian_product(cycle(n), path(2));
    std::vector<Role> roles(g.vertex_count());
    for (int i = 1; i <= n; ++i) {
        for (int ring = 1; ring <= 2; ++ring) {
            roles[VertexId(i - 1) * 2 + VertexId(ring - 1)] = {"c", {ring, i}};
        }
    }
    return FamilyInstance(std::move(g), params, std::move(roles));
}

FamilyInstance build_book(int n, int m) {
    const Book params{n, m};
    validate(params);
    Graph g = cartesian_product(star(n), path(m));
    std::vector<Role> roles(g.vertex_count());
    for (int i = 1; i <= m; ++i) {
        roles[VertexId(i - 1)] = {"c", {i}};
        for (int k = 1; k <= n; ++k) {
            roles[VertexId(k) * VertexId(m) + VertexId(i - 1)] = {"v", {i, k}};
        }
    }
    return FamilyInstance(std::move(g), params, std::move(roles));
}

FamilyInstance build_family(const FamilyParams& params) {
    return std::visit(Overloaded{
                          [](const CyclePendantStar& p) { return build_cycle_pendant_star(p.n, p.m); },
                          [](const CycleChain& p) { return build_cycle_chain(p.n, p.m); },
                          [](const FibonacciChain& p) { return build_fibonacci_chain(p.m); },
                          [](const Prism& p) { return build_prism(p.n); },
                          [](const Book& p) { return build_book(p.n, p.m); },
                      },
                      params);
}

}  // namespace primelab
