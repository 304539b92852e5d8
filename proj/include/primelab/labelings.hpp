#pragma once

#include <array>
#include <string>

#include "primelab/families.hpp"
#include "primelab/labeling.hpp"

namespace primelab {

/// Closed-form prime labelings, one per supported family. Every scheme reads
/// its parameters from the instance and addresses vertices by role only.
enum class SchemeId {
    CyclePendantStar,  // C_n * P_2 * S_m, 4 <= m <= 8
    Chain4,
    Chain6,
    Chain8,
    ChainMersenne,  // C_{2^k} chains, 2^k - 1 prime, k >= 3
    FibonacciChain,
    Prism,  // C_n x P_2, n even, n - 1 prime
    Book,   // S_n x P_m, 3 <= m <= 7
};

std::string scheme_name(SchemeId id);

struct LabelingScheme {
    SchemeId id;
    /// True iff the parameters are inside the scheme's proven range.
    bool applies(const FamilyParams& params) const;
    Labeling apply(const FamilyInstance& instance) const;
};

/// Scheme covering the parameters. Throws UnsupportedScheme when none does,
/// NotApplicable for odd prisms (which have no prime labeling at all).
LabelingScheme select_scheme(const FamilyParams& params);

/// select_scheme(instance.family()).apply(instance).
Labeling label_family(const FamilyInstance& instance);

Labeling label_cps(const FamilyInstance& instance);
Labeling label_chain4(const FamilyInstance& instance);
Labeling label_chain6(const FamilyInstance& instance);
Labeling label_chain8(const FamilyInstance& instance);
Labeling label_chain_mersenne(const FamilyInstance& instance);
Labeling label_fibonacci_chain(const FamilyInstance& instance);
Labeling label_prism(const FamilyInstance& instance);
Labeling label_book(const FamilyInstance& instance);

/// Cycle length 2^k for the Mersenne chain scheme. Throws UnsupportedScheme
/// unless k >= 3 and 2^k - 1 is prime.
int mersenne_chain_length(int k);

/// The seven labels of row k (k >= 1) of an S_n x P_7 book under pattern
/// 'A'..'J', where w_j = 7k + j.
std::array<Label, 7> row_permutation(char pattern, int k);

/// The repeating 30-row pattern sequence for S_n x P_7.
inline constexpr std::array<char, 30> kBookSevenRowPattern = {
    'C', 'E', 'J', 'A', 'J', 'A', 'D', 'E', 'J', 'A', 'F', 'G', 'C', 'H', 'J',
    'A', 'J', 'A', 'I', 'E', 'F', 'E', 'J', 'A', 'D', 'E', 'J', 'A', 'J', 'A',
};

}  // namespace primelab
