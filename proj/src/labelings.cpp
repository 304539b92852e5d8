#include "primelab/labelings.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "primelab/error.hpp"
#include "primelab/number_theory.hpp"

namespace primelab {

namespace {

template <class T>
const T& family_as(const FamilyInstance& instance, const char* scheme) {
    const T* params = std::get_if<T>(&instance.family());
    if (params == nullptr) {
        throw InvalidParameter(std::string(scheme) + " scheme applied to a " + family_name(instance.family()) +
                               " instance");
    }
    return *params;
}

// Accumulates role -> label assignments into a vertex-indexed labeling.
class LabelWriter {
public:
    explicit LabelWriter(const FamilyInstance& instance)
        : instance_(instance), labels_(instance.graph().vertex_count(), 0) {}

    void set(const std::string& name, std::initializer_list<int> index, std::int64_t label) {
        labels_[instance_.vertex(name, index)] = Label(label);
    }

    Labeling finish() && { return Labeling(std::move(labels_)); }

private:
    const FamilyInstance& instance_;
    std::vector<Label> labels_;
};

bool divides(int modulus, int i) { return i % modulus == 0; }

// ---------------------------------------------------------------------------
// Cycle pendant stars. Block i holds c_i, p_i and o_{i,1..m}; it is labeled
// with the (m+2) consecutive integers ending at (m+2)i. Where congruence
// branches overlap, the more specific modulus is tested first.

void cps_block_m4(LabelWriter& out, int i) {
    const std::int64_t b = 6 * std::int64_t(i);
    out.set("c", {i}, b - 5);
    out.set("p", {i}, b - 1);
    out.set("o", {i, 1}, b - 2);
    out.set("o", {i, 2}, b - 3);
    out.set("o", {i, 3}, b - 4);
    out.set("o", {i, 4}, b);
}

void cps_block_m5(LabelWriter& out, int i) {
    const std::int64_t b = 7 * std::int64_t(i);
    const int r6 = i % 6;
    const bool div30 = divides(30, i);

    std::int64_t p = 0;
    if (div30) {
        p = b - 1;
    } else if (r6 == 1 || r6 == 3) {
        p = b - 2;
    } else if (r6 == 2 || r6 == 4) {
        p = b - 3;
    } else if (r6 == 5) {
        p = b - 4;
    } else {
        p = b - 5;
    }
    out.set("c", {i}, b - 6);
    out.set("p", {i}, p);
    out.set("o", {i, 1}, (r6 != 0 || div30) ? b - 5 : b - 4);
    out.set("o", {i, 2}, ((r6 != 0 && r6 != 5) || div30) ? b - 4 : b - 3);
    // The two listed branches for o_{i,3} overlap at i = 0 mod 30; the first
    // branch is taken there, which is the only choice keeping the block a
    // permutation of 7i-6..7i.
    out.set("o", {i, 3}, (r6 == 1 || r6 == 3 || div30) ? b - 3 : b - 2);
    out.set("o", {i, 4}, div30 ? b - 2 : b - 1);
    out.set("o", {i, 5}, b);
}

void cps_block_m6(LabelWriter& out, int i) {
    const std::int64_t b = 8 * std::int64_t(i);
    const bool div3 = divides(3, i);
    const bool div15 = divides(15, i);

    std::int64_t p = b - 3;
    if (div15) {
        p = b - 1;
    } else if (div3) {
        p = b - 5;
    }
    out.set("c", {i}, b - 7);
    out.set("p", {i}, p);
    out.set("o", {i, 1}, b - 6);
    out.set("o", {i, 2}, (!div3 || div15) ? b - 5 : b - 3);
    out.set("o", {i, 3}, b - 4);
    out.set("o", {i, 4}, div15 ? b - 3 : b - 1);
    out.set("o", {i, 5}, b - 2);
    out.set("o", {i, 6}, b);
}

void cps_block_m7(LabelWriter& out, int i) {
    const std::int64_t b = 9 * std::int64_t(i);
    const bool odd = i % 2 == 1;
    const bool div10 = divides(10, i);
    const bool div70 = divides(70, i);

    std::int64_t p = b - 5;
    if (odd) {
        p = b - 4;
    } else if (div70) {
        p = b - 1;
    } else if (div10) {
        p = b - 7;
    }
    out.set("c", {i}, b - 8);
    out.set("p", {i}, p);
    out.set("o", {i, 1}, (!div10 || div70) ? b - 7 : b - 5);
    out.set("o", {i, 2}, b - 6);
    out.set("o", {i, 3}, (odd || div70) ? b - 5 : b - 4);
    out.set("o", {i, 4}, div70 ? b - 4 : b - 1);
    out.set("o", {i, 5}, b - 3);
    out.set("o", {i, 6}, b - 2);
    out.set("o", {i, 7}, b);
}

void cps_block_m8(LabelWriter& out, int i) {
    const std::int64_t b = 10 * std::int64_t(i);
    const bool div3 = divides(3, i);
    const bool div21 = divides(21, i);

    std::int64_t p = b - 3;
    if (div21) {
        p = b - 1;
    } else if (div3) {
        p = b - 7;
    }
    out.set("c", {i}, b - 9);
    out.set("p", {i}, p);
    out.set("o", {i, 1}, b - 8);
    out.set("o", {i, 2}, (div21 || !div3) ? b - 7 : b - 3);
    out.set("o", {i, 3}, b - 6);
    out.set("o", {i, 4}, b - 5);
    out.set("o", {i, 5}, b - 4);
    out.set("o", {i, 6}, div21 ? b - 3 : b - 1);
    out.set("o", {i, 7}, b - 2);
    out.set("o", {i, 8}, b);
}

// ---------------------------------------------------------------------------
// Generalized books. Centers carry 1..m; row k carries m(k)+1 .. m(k)+m.

std::int64_t book_m3(int i, int k) {
    if (k % 2 == 1) {
        return 3 * std::int64_t(k) - i + 4;
    }
    static constexpr int kEven[] = {2, 3, 1};
    return 3 * std::int64_t(k) + kEven[i - 1];
}

std::int64_t book_m4(int i, int k) {
    if (k % 3 == 1) {
        static constexpr int kShifted[] = {2, 3, 4, 1};
        return 4 * std::int64_t(k) + kShifted[i - 1];
    }
    return 4 * std::int64_t(k) - i + 5;
}

std::int64_t book_m5(int i, int k) {
    const std::int64_t base = 5 * std::int64_t(k);
    if (k == 1) {
        return 11 - i;
    }
    switch ((k - 1) % 6) {
        case 1:
        case 5:
            return i <= 4 ? base + 1 + i : base + 1;
        case 0:
        case 2:
            return i <= 3 ? base + 2 + i : base + 6 - i;
        case 3:
            if (i <= 3) return base + 5 - i;
            return i == 4 ? base + 5 : base + 1;
        default:  // 4
            return base + 6 - i;
    }
}

std::int64_t book_m6(int i, int k) {
    const std::int64_t base = 6 * std::int64_t(k);
    auto ascending = [&] { return i <= 5 ? base + 1 + i : base + 1; };
    // Descending rows use 6(k+1)+1-i, so row k holds 6k+1..6k+6. Writing
    // 6k+1-i instead would reuse the previous row's labels (S_8 x P_6 rows
    // 4 and 5 are 30..25 and 36..31).
    auto descending = [&] { return base + 7 - i; };
    if (k <= 2) {
        return descending();
    }
    if (k == 3) {
        return ascending();
    }
    return (k - 3) % 5 == 0 ? ascending() : descending();
}

std::int64_t book_m7(int i, int k) {
    const char pattern = kBookSevenRowPattern[std::size_t(k - 1) % kBookSevenRowPattern.size()];
    return row_permutation(pattern, k)[std::size_t(i - 1)];
}

}  // namespace

// ---------------------------------------------------------------------------

Labeling label_cps(const FamilyInstance& instance) {
    const auto& params = family_as<CyclePendantStar>(instance, "cycle pendant star");
    if (params.m < 4 || params.m > 8) {
        throw UnsupportedScheme("no cycle pendant star labeling implemented for m = " + std::to_string(params.m) +
                                " (supported: 4..8)");
    }
    LabelWriter out(instance);
    for (int i = 1; i <= params.n; ++i) {
        switch (params.m) {
            case 4: cps_block_m4(out, i); break;
            case 5: cps_block_m5(out, i); break;
            case 6: cps_block_m6(out, i); break;
            case 7: cps_block_m7(out, i); break;
            default: cps_block_m8(out, i); break;
        }
    }
    return std::move(out).finish();
}

Labeling label_chain4(const FamilyInstance& instance) {
    const auto& params = family_as<CycleChain>(instance, "C4 chain");
    if (params.n != 4) {
        throw UnsupportedScheme("C4 chain scheme needs 4-cycles");
    }
    const int m = params.m;
    LabelWriter out(instance);
    for (int k = 1; k <= 4; ++k) {
        out.set("c", {1, k}, k + 1);
    }
    for (int i = 2; i <= m; ++i) {
        for (int k = 1; k <= 3; ++k) {
            out.set("c", {i, k}, 3 * std::int64_t(i) + k - 1);
        }
    }
    // Label 1 goes last, onto the vertex that would otherwise carry 3m+2.
    if (m == 1) {
        out.set("c", {1, 4}, 1);
    } else {
        out.set("c", {m, 3}, 1);
    }
    return std::move(out).finish();
}

namespace {

Labeling label_even_chain(const FamilyInstance& instance, int n, int m) {
    LabelWriter out(instance);
    for (int k = 1; k <= n; ++k) {
        out.set("c", {1, k}, k);
    }
    for (int i = 2; i <= m; ++i) {
        for (int k = 1; k <= n - 1; ++k) {
            out.set("c", {i, k}, std::int64_t(n - 1) * i + k - (n - 2));
        }
    }
    return std::move(out).finish();
}

}  // namespace

Labeling label_chain6(const FamilyInstance& instance) {
    const auto& params = family_as<CycleChain>(instance, "C6 chain");
    if (params.n != 6) {
        throw UnsupportedScheme("C6 chain scheme needs 6-cycles");
    }
    return label_even_chain(instance, 6, params.m);
}

Labeling label_chain8(const FamilyInstance& instance) {
    const auto& params = family_as<CycleChain>(instance, "C8 chain");
    if (params.n != 8) {
        throw UnsupportedScheme("C8 chain scheme needs 8-cycles");
    }
    return label_even_chain(instance, 8, params.m);
}

int mersenne_chain_length(int k) {
    if (k < 3 || k > 30) {
        throw UnsupportedScheme("Mersenne chain scheme needs 3 <= k <= 30, got k = " + std::to_string(k));
    }
    const std::uint64_t n = std::uint64_t(1) << k;
    if (!is_prime(n - 1)) {
        throw UnsupportedScheme("2^" + std::to_string(k) + " - 1 = " + std::to_string(n - 1) + " is not prime");
    }
    return int(n);
}

Labeling label_chain_mersenne(const FamilyInstance& instance) {
    const auto& params = family_as<CycleChain>(instance, "Mersenne chain");
    if (params.n < 8 || !std::has_single_bit(unsigned(params.n))) {
        throw UnsupportedScheme("Mersenne chain scheme needs cycle length 2^k with k >= 3");
    }
    mersenne_chain_length(std::countr_zero(unsigned(params.n)));
    return label_even_chain(instance, params.n, params.m);
}

Labeling label_fibonacci_chain(const FamilyInstance& instance) {
    const auto& params = family_as<FibonacciChain>(instance, "Fibonacci chain");
    const int m = params.m;
    LabelWriter out(instance);
    for (int j = 1; j <= m + 2; ++j) {
        out.set("p", {j}, std::int64_t(fibonacci(j + 1)));
    }
    for (int i = 3; i <= m + 1; ++i) {
        const auto start = std::int64_t(fibonacci(i + 1));
        const auto detour = int(fibonacci(i));
        for (int t = 1; t < detour; ++t) {
            out.set("d", {i, t}, start + t);
        }
    }
    return std::move(out).finish();
}

Labeling label_prism(const FamilyInstance& instance) {
    const int n = family_as<Prism>(instance, "prism").n;
    if (n % 2 == 1) {
        throw NotApplicable("C_" + std::to_string(n) + " x P_2 has odd n and admits no prime labeling");
    }
    if (n < 4 || !is_prime(std::uint64_t(n) - 1)) {
        throw UnsupportedScheme("prism scheme needs n - 1 prime; " + std::to_string(n - 1) + " is not");
    }
    LabelWriter out(instance);
    for (int i = 1; i <= n; ++i) {
        std::int64_t inner = i;
        if (i == 1) {
            inner = n - 1;
        } else if (i == n - 1) {
            inner = 1;
        } else if (i == n) {
            inner = 2 * std::int64_t(n);
        }
        out.set("c", {1, i}, inner);
        out.set("c", {2, i}, i == 1 ? n : std::int64_t(i) + n - 1);
    }
    return std::move(out).finish();
}

Labeling label_book(const FamilyInstance& instance) {
    const auto& params = family_as<Book>(instance, "book");
    const int m = params.m;
    if (m < 3 || m > 7) {
        throw UnsupportedScheme("no generalized book labeling implemented for m = " + std::to_string(m) +
                                " (supported: 3..7)");
    }
    LabelWriter out(instance);
    for (int j = 1; j <= m; ++j) {
        out.set("c", {j}, j);
    }
    for (int k = 1; k <= params.n; ++k) {
        for (int i = 1; i <= m; ++i) {
            std::int64_t label = 0;
            switch (m) {
                case 3: label = book_m3(i, k); break;
                case 4: label = book_m4(i, k); break;
                case 5: label = book_m5(i, k); break;
                case 6: label = book_m6(i, k); break;
                default: label = book_m7(i, k); break;
            }
            out.set("v", {i, k}, label);
        }
    }
    return std::move(out).finish();
}

std::array<Label, 7> row_permutation(char pattern, int k) {
    if (k < 1) {
        throw InvalidParameter("row index must be >= 1");
    }
    // 1-line notation: entry t is the index j of w_j placed at position t.
    static constexpr std::array<std::array<int, 7>, 10> kPatterns = {{
        {2, 3, 4, 5, 6, 7, 1},  // A
        {2, 3, 6, 7, 4, 5, 1},  // B
        {3, 2, 7, 6, 5, 4, 1},  // C
        {5, 6, 7, 2, 3, 4, 1},  // D
        {4, 5, 6, 7, 2, 3, 1},  // E
        {3, 4, 5, 6, 7, 2, 1},  // F
        {6, 7, 2, 3, 4, 5, 1},  // G
        {2, 1, 3, 7, 6, 5, 4},  // H
        {7, 6, 1, 2, 3, 4, 5},  // I
        {7, 6, 5, 4, 3, 2, 1},  // J
    }};
    if (pattern < 'A' || pattern > 'J') {
        throw InvalidParameter(std::string("unknown row pattern '") + pattern + "'");
    }
    const auto& order = kPatterns[std::size_t(pattern - 'A')];
    std::array<Label, 7> row{};
    for (std::size_t t = 0; t < 7; ++t) {
        row[t] = Label(7 * k + order[t]);
    }
    return row;
}

// ---------------------------------------------------------------------------

std::string scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::CyclePendantStar: return "cycle-pendant-star";
        case SchemeId::Chain4: return "chain4";
        case SchemeId::Chain6: return "chain6";
        case SchemeId::Chain8: return "chain8";
        case SchemeId::ChainMersenne: return "chain-mersenne";
        case SchemeId::FibonacciChain: return "fibonacci-chain";
        case SchemeId::Prism: return "prism";
        case SchemeId::Book: return "book";
    }
    return "unknown";
}

bool LabelingScheme::applies(const FamilyParams& params) const {
    switch (id) {
        case SchemeId::CyclePendantStar: {
            const auto* p = std::get_if<CyclePendantStar>(&params);
            return p && p->n >= 3 && p->m >= 4 && p->m <= 8;
        }
        case SchemeId::Chain4:
        case SchemeId::Chain6:
        case SchemeId::Chain8: {
            const auto* p = std::get_if<CycleChain>(&params);
            const int n = id == SchemeId::Chain4 ? 4 : id == SchemeId::Chain6 ? 6 : 8;
            return p && p->n == n && p->m >= 1;
        }
        case SchemeId::ChainMersenne: {
            const auto* p = std::get_if<CycleChain>(&params);
            if (!p || p->m < 1 || p->n < 8 || !std::has_single_bit(unsigned(p->n))) {
                return false;
            }
            return is_prime(std::uint64_t(p->n) - 1);
        }
        case SchemeId::FibonacciChain: {
            const auto* p = std::get_if<FibonacciChain>(&params);
            return p && p->m >= 1;
        }
        case SchemeId::Prism: {
            const auto* p = std::get_if<Prism>(&params);
            return p && p->n >= 4 && p->n % 2 == 0 && is_prime(std::uint64_t(p->n) - 1);
        }
        case SchemeId::Book: {
            const auto* p = std::get_if<Book>(&params);
            return p && p->n >= 1 && p->m >= 3 && p->m <= 7;
        }
    }
    return false;
}

Labeling LabelingScheme::apply(const FamilyInstance& instance) const {
    if (!applies(instance.family())) {
        throw UnsupportedScheme(scheme_name(id) + " scheme does not cover " + family_name(instance.family()) +
                                " instance");
    }
    switch (id) {
        case SchemeId::CyclePendantStar: return label_cps(instance);
        case SchemeId::Chain4: return label_chain4(instance);
        case SchemeId::Chain6: return label_chain6(instance);
        case SchemeId::Chain8: return label_chain8(instance);
        case SchemeId::ChainMersenne: return label_chain_mersenne(instance);
        case SchemeId::FibonacciChain: return label_fibonacci_chain(instance);
        case SchemeId::Prism: return label_prism(instance);
        case SchemeId::Book: return label_book(instance);
    }
    throw UnsupportedScheme("unknown scheme");
}

LabelingScheme select_scheme(const FamilyParams& params) {
    validate(params);
    if (const auto* prism = std::get_if<Prism>(&params); prism && prism->n % 2 == 1) {
        throw NotApplicable("C_" + std::to_string(prism->n) + " x P_2 has odd n and admits no prime labeling");
    }
    for (SchemeId id : {SchemeId::CyclePendantStar, SchemeId::Chain4, SchemeId::Chain6, SchemeId::Chain8,
                        SchemeId::ChainMersenne, SchemeId::FibonacciChain, SchemeId::Prism, SchemeId::Book}) {
        LabelingScheme scheme{id};
        if (scheme.applies(params)) {
            return scheme;
        }
    }
    throw UnsupportedScheme("no labeling scheme covers " + family_name(params) + " with these parameters");
}

Labeling label_family(const FamilyInstance& instance) { return select_scheme(instance.family()).apply(instance); }

}  // namespace primelab
