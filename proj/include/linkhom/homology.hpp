#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linkhom/int_types.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

/// All 2^{n+1} subsets of the index set get materialized; this guard keeps
/// a stray large input from exhausting memory. Raise it deliberately.
struct HomologyOptions {
    std::size_t max_dim_parameter = 20;  // largest accepted n
};

/// Per-subset data of the torsion algorithm, indexed by bit mask over
/// {0,...,n}. c values are the inductive gcd quotients (always positive
/// integers), kappa the inclusion-exclusion rationals, k = kappa gated by
/// the parity rule (k = 0 whenever n - |S| + 1 is even).
struct SubsetTable {
    std::size_t index_count = 0;  // n+1
    std::vector<Int> c;
    std::vector<Rational> kappa;
    std::vector<Rational> k;

    std::size_t subset_count() const { return std::size_t{1} << index_count; }
};

/// Middle Betti number b_{n-1}(L): alternating subset sum of
/// u-products over v-products times lcm, evaluated in exact rationals.
/// Throws NonIntegerBetti if the sum fails to be a nonnegative integer.
Int betti(const LinkDescriptor& link, const HomologyOptions& opts = {});

/// The c recursion: c(S) = gcd(u_j : j not in S) / prod_{J proper subset
/// of S} c(J), processed so divisors are computed before they are used.
/// The full index set is assigned c = 1 and never enters any product.
/// Throws InexactDivision if a quotient fails to be integral.
SubsetTable orlik_c_coefficients(const LinkDescriptor& link, const HomologyOptions& opts = {});

/// kappa and k for every subset. Values may be non-integral rationals;
/// flooring happens only in orlik_torsion.
SubsetTable orlik_k_values(const LinkDescriptor& link, const HomologyOptions& opts = {});

/// Torsion coefficients d_1, d_2, ..., largest first, each d_{j+1}
/// dividing d_j, trivial d_j = 1 factors dropped:
/// d_j = product of c(S) over subsets with k(S) >= j, 1 <= j <= floor(max k).
std::vector<Int> orlik_torsion(const LinkDescriptor& link, const HomologyOptions& opts = {});

struct HomologyResult {
    Int betti;
    std::vector<Int> torsion;
    std::string group_label;

    bool operator==(const HomologyResult& other) const = default;
};

/// "Z^b ⊕ Z/d_1 ⊕ (Z/d)^m ..." with repeated factors grouped; "0" for the
/// trivial group.
std::string group_label(const Int& betti, const std::vector<Int>& torsion);

HomologyResult homology_summary(const LinkDescriptor& link, const HomologyOptions& opts = {});

}  // namespace linkhom
