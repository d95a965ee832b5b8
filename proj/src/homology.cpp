#include "linkhom/homology.hpp"

#include <bit>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

void check_dimension(const LinkDescriptor& link, const HomologyOptions& opts) {
    if (link.dim_parameter() > opts.max_dim_parameter)
        throw SubsetLimitExceeded("n = " + std::to_string(link.dim_parameter()) +
                                  " exceeds the subset sweep limit n <= " +
                                  std::to_string(opts.max_dim_parameter));
}

// Alternating subset sum, streamed over an include/exclude recursion so no
// per-mask tables are kept. `sign_flip` tracks (-1)^{n+1-s}: every index
// left OUT of the subset flips the sign of the s = n+1 base case (+1).
void betti_sum(const LinkDescriptor& link, std::size_t i, const Int& u_prod, const Int& v_prod,
               const Int& u_lcm, bool negate, Rational& acc) {
    if (i == link.size()) {
        Rational term(u_prod, v_prod * u_lcm);
        if (negate)
            acc -= term;
        else
            acc += term;
        return;
    }
    betti_sum(link, i + 1, u_prod * link.u[i], v_prod * link.v[i], lcm(u_lcm, link.u[i]), negate,
              acc);
    betti_sum(link, i + 1, u_prod, v_prod, u_lcm, !negate, acc);
}

// g(S) = (prod u_i) / (prod v_i * lcm u_i) over i in S; g(empty) = 1.
std::vector<Rational> subset_terms(const LinkDescriptor& link) {
    const std::size_t masks = std::size_t{1} << link.size();
    std::vector<Int> pu(masks), pv(masks), ul(masks);
    pu[0] = 1;
    pv[0] = 1;
    ul[0] = 1;
    std::vector<Rational> g(masks);
    g[0] = 1;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t rest = mask ^ low;
        pu[mask] = pu[rest] * link.u[i];
        pv[mask] = pv[rest] * link.v[i];
        ul[mask] = lcm(ul[rest], link.u[i]);
        g[mask] = Rational(pu[mask], pv[mask] * ul[mask]);
    }
    return g;
}

SubsetTable build_table(const LinkDescriptor& link, bool want_c, bool want_k) {
    const std::size_t m = link.size();
    const std::size_t masks = std::size_t{1} << m;
    const std::size_t full = masks - 1;

    SubsetTable table;
    table.index_count = m;

    if (want_k) {
        // kappa(S) = (-1)^{|S|} * sum_{J subset of S} (-1)^{|J|} g(J),
        // evaluated for every S at once by a zeta transform over the
        // subset lattice.
        std::vector<Rational> acc = subset_terms(link);
        for (std::size_t mask = 0; mask < masks; ++mask)
            if (std::popcount(mask) & 1) acc[mask] = -acc[mask];
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t bit = std::size_t{1} << i;
            for (std::size_t mask = 0; mask < masks; ++mask)
                if (mask & bit) acc[mask] += acc[mask ^ bit];
        }
        for (std::size_t mask = 0; mask < masks; ++mask)
            if (std::popcount(mask) & 1) acc[mask] = -acc[mask];
        table.kappa = std::move(acc);

        table.k.resize(masks);
        for (std::size_t mask = 0; mask < masks; ++mask) {
            const std::size_t s = static_cast<std::size_t>(std::popcount(mask));
            // epsilon_{n-s+1} with n+1 = m: keep kappa only when m-s is odd
            if ((m - s) % 2 == 1) table.k[mask] = table.kappa[mask];
        }
    }

    if (want_c) {
        std::vector<Int> gcd_sub(masks);  // gcd of u_i over mask members; gcd({}) = 0
        for (std::size_t mask = 1; mask < masks; ++mask) {
            const std::size_t low = mask & (~mask + 1);
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
            gcd_sub[mask] = gcd(gcd_sub[mask ^ low], link.u[i]);
        }

        table.c.resize(masks);
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (mask == full) {
                // gcd over the empty complement is undefined; k is forced
                // to 0 here, so assign 1 and keep it out of every product.
                table.c[mask] = 1;
                continue;
            }
            const Int& numer = gcd_sub[full ^ mask];
            Int denom = 1;
            if (mask != 0) {
                for (std::size_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
                    if (table.c[sub] != 1) denom *= table.c[sub];
                    if (sub == 0) break;
                }
            }
            Int q, r;
            boost::multiprecision::divide_qr(numer, denom, q, r);
            if (r != 0)
                throw InexactDivision("c recursion: " + numer.str() + " not divisible by " +
                                      denom.str());
            table.c[mask] = std::move(q);
        }
    }

    return table;
}

}  // namespace

Int betti(const LinkDescriptor& link, const HomologyOptions& opts) {
    check_dimension(link, opts);
    Rational acc = 0;
    betti_sum(link, 0, 1, 1, 1, false, acc);
    if (denominator(acc) != 1)
        throw NonIntegerBetti("Betti sum is not an integer: " +
                              Rational(acc).str());
    if (acc < 0)
        throw NonIntegerBetti("Betti sum is negative: " + Rational(acc).str());
    return numerator(acc);
}

SubsetTable orlik_c_coefficients(const LinkDescriptor& link, const HomologyOptions& opts) {
    check_dimension(link, opts);
    return build_table(link, /*want_c=*/true, /*want_k=*/false);
}

SubsetTable orlik_k_values(const LinkDescriptor& link, const HomologyOptions& opts) {
    check_dimension(link, opts);
    return build_table(link, /*want_c=*/false, /*want_k=*/true);
}

std::vector<Int> orlik_torsion(const LinkDescriptor& link, const HomologyOptions& opts) {
    check_dimension(link, opts);
    SubsetTable table = build_table(link, /*want_c=*/true, /*want_k=*/true);
    const std::size_t masks = table.subset_count();
    const std::size_t full = masks - 1;

    // r = floor(max k). The full set always carries k = 0, so max >= 0.
    Rational max_k = 0;
    for (const Rational& k : table.k)
        if (k > max_k) max_k = k;
    Int r = rational_floor(max_k);

    // Subsets with c = 1 contribute nothing; beyond the largest floor(k)
    // among the others every d_j is a dropped trivial factor.
    Int j_cap = 0;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        if (mask == full || table.c[mask] == 1) continue;
        Int f = rational_floor(table.k[mask]);
        if (f > j_cap) j_cap = f;
    }
    if (r > j_cap) r = j_cap;

    std::vector<Int> torsion;
    for (Int j = 1; j <= r; ++j) {
        Int d = 1;
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (mask == full || table.c[mask] == 1) continue;
            if (table.k[mask] >= Rational(j)) d *= table.c[mask];
        }
        if (d == 1) break;  // divisibility chain: all later d_j are 1 too
        torsion.push_back(std::move(d));
    }
    return torsion;
}

std::string group_label(const Int& betti, const std::vector<Int>& torsion) {
    std::vector<std::string> parts;
    if (betti == 1) {
        parts.push_back("Z");
    } else if (betti > 1) {
        parts.push_back("Z^" + betti.str());
    }
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t run = i;
        while (run < torsion.size() && torsion[run] == torsion[i]) ++run;
        const std::size_t count = run - i;
        if (count == 1)
            parts.push_back("Z/" + torsion[i].str());
        else
            parts.push_back("(Z/" + torsion[i].str() + ")^" + std::to_string(count));
        i = run;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
    return out;
}

HomologyResult homology_summary(const LinkDescriptor& link, const HomologyOptions& opts) {
    HomologyResult result;
    result.betti = betti(link, opts);
    result.torsion = orlik_torsion(link, opts);
    result.group_label = group_label(result.betti, result.torsion);
    return result;
}

}  // namespace linkhom
