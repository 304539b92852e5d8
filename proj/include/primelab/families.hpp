#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "primelab/graph.hpp"

namespace primelab {

/// C_n * P_2 * S_m: an n-cycle, a pendant vertex on every cycle vertex, and
/// m leaves on every pendant vertex.
struct CyclePendantStar {
    int n;
    int m;
    friend bool operator==(const CyclePendantStar&, const CyclePendantStar&) = default;
};

/// m consecutive n-cycles, neighbours sharing exactly one vertex.
struct CycleChain {
    int n;
    int m;
    friend bool operator==(const CycleChain&, const CycleChain&) = default;
};

/// Spine path p_1..p_{m+2}, chord p_1-p_3, and a detour of F_i edges between
/// p_i and p_{i+1} for 3 <= i <= m+1.
struct FibonacciChain {
    int m;
    friend bool operator==(const FibonacciChain&, const FibonacciChain&) = default;
};

/// C_n x P_2.
struct Prism {
    int n;
    friend bool operator==(const Prism&, const Prism&) = default;
};

/// Generalized book S_n x P_m.
struct Book {
    int n;
    int m;
    friend bool operator==(const Book&, const Book&) = default;
};

using FamilyParams = std::variant<CyclePendantStar, CycleChain, FibonacciChain, Prism, Book>;

/// Short CLI / document name of the family ("cps", "chain", "fib", "prism", "book").
std::string family_name(const FamilyParams& params);
std::vector<int> family_arguments(const FamilyParams& params);
/// Inverse of family_name/family_arguments. Throws InvalidParameter.
FamilyParams make_family_params(const std::string& name, const std::vector<int>& args);

/// Throws InvalidParameter when the parameters violate the family's domain.
void validate(const FamilyParams& params);

/// Symbolic vertex coordinate, e.g. {"o", {2, 5}} for o_{2,5}.
struct Role {
    std::string name;
    std::vector<int> index;

    std::string to_string() const;
    friend auto operator<=>(const Role&, const Role&) = default;
    friend bool operator==(const Role&, const Role&) = default;
};

class FamilyInstance {
public:
    FamilyInstance(Graph graph, FamilyParams family, std::vector<Role> role_of_vertex);

    const Graph& graph() const noexcept { return graph_; }
    const FamilyParams& family() const noexcept { return family_; }

    /// Vertex carrying the given role; throws InvalidParameter if absent.
    VertexId vertex(const Role& role) const;
    VertexId vertex(const std::string& name, std::initializer_list<int> index) const {
        return vertex(Role{name, std::vector<int>(index)});
    }
    const Role& role(VertexId v) const { return role_of_vertex_.at(v); }
    const std::vector<Role>& roles() const noexcept { return role_of_vertex_; }

private:
    Graph graph_;
    FamilyParams family_;
    std::vector<Role> role_of_vertex_;
    std::map<Role, VertexId> vertex_of_role_;
};

/// Roles c(i), p(i), o(i,k). Vertex ids: c_i = (i-1)(m+2), p_i = c_i + 1,
/// o_{i,k} = c_i + 1 + k.
FamilyInstance build_cycle_pendant_star(int n, int m);

/// Roles c(i,k): k = 1..n on the first cycle, k = 1..n-1 on later cycles
/// (the vertex shared with the previous cycle belongs to that cycle).
///
/// Each later cycle is wired as an explicit cyclic order of its roles,
/// starting from the vertex it shares with its predecessor; the vertex it
/// shares with its successor sits opposite, n/2 steps away:
///
///   n = 4, i even:        prev, c1, c2, c3          (next = c2)
///   n = 4, i odd:         prev, c2, c3, c1          (next = c3)
///   n = 6, i = 0,2 mod 3: prev, c3, c4, c5, c2, c1  (next = c5)
///   n = 6, i = 1 mod 3:   prev, c5, c4, c3, c2, c1  (next = c3)
///   n = 2^k, i even:      prev, c_{n/2} .. c_{n-1}, c_{n/2-1} .. c1  (next = c_{n-1})
///   n = 2^k, i odd:       prev, c_{n-1} .. c1       (next = c_{n/2})
///
/// The first cycle is c1..cn in order, sharing c(1,4) when n = 4 and c(1,1)
/// otherwise. These orders reproduce the reference labeled drawings.
FamilyInstance build_cycle_chain(int n, int m);

/// Roles p(j) for the spine (ids 0..m+1) and d(i,t), t = 1..F_i - 1, for the
/// detour vertices between p_i and p_{i+1}, listed from the p_i end.
FamilyInstance build_fibonacci_chain(int m);

/// Roles c(1,i) inner and c(2,i) outer, both cycles indexed in the same
/// rotational direction with spokes c(1,i)-c(2,i).
FamilyInstance build_prism(int n);

/// Roles c(j) for the star centers and v(i,k) for leaf k of page i.
FamilyInstance build_book(int n, int m);

FamilyInstance build_family(const FamilyParams& params);

}  // namespace primelab
