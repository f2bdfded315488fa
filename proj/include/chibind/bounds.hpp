#pragma once

// Color budgets f_p(omega) promised by the constructive colorers for
// {pK2, companion}-free graphs.  Every family shares f_p(1) = 1 and
// f_p(2) = 3 (p = 2) / 2p - 2 (p >= 3); the strategy-2 families (k2p4, hvn,
// k5e) also share f_p(3) = 2p^2 - 3p + 4 for p >= 3.  The remaining cells
// follow the per-family recurrences below, which mirror how the colorers
// spend fresh colors level by level.

#include <stdexcept>
#include <vector>

#include "recognition.hpp"

namespace chibind {

namespace detail {

inline long long choose2(long long m) { return m * (m + 1) / 2; }  // C(m+1,2)

// Base row p = 2 (matching number at most 1 beyond a single edge pair).
inline long long bound_base(Family fam, int m) {
    if (m == 1) return 1;
    if (m == 2) return 3;
    switch (fam) {
        case Family::gem:
        case Family::diamond: return m;
        case Family::k2p4: return m == 3 ? 4 : m + 2;
        case Family::hvn: return m == 3 ? 4 : m;
        case Family::k5e: return m == 3 ? 4 : (m == 4 ? 6 : m);
        case Family::butterfly:
        case Family::gemplus:
        case Family::dart: return m == 3 ? 4 : choose2(m);
        case Family::k1c4:
        case Family::c4: return m + 1;
        case Family::house: return 3LL * m / 2;
        case Family::none: return choose2(m);
    }
    throw std::invalid_argument("bad family");
}

// f[q][m] for q in [2,p], m in [1,omega].  Builds the gem table first when a
// recurrence references it.
inline std::vector<std::vector<long long>> bound_table(Family fam, int p, int omega) {
    std::vector<std::vector<long long>> gem_tab;
    if (fam == Family::k2p4 || fam == Family::k5e)
        gem_tab = bound_table(Family::gem, p, omega);
    std::vector<std::vector<long long>> f(p + 1, std::vector<long long>(omega + 1, 0));
    for (int m = 1; m <= omega; ++m) f[2][m] = bound_base(fam, m);
    for (int q = 3; q <= p; ++q) {
        f[q][1] = 1;
        if (omega >= 2) f[q][2] = 2LL * q - 2;
        std::vector<long long> prefix(omega + 1, 0);  // prefix[m] = sum_{j=2..m} f[q-1][j]
        for (int m = 2; m <= omega; ++m) prefix[m] = prefix[m - 1] + f[q - 1][m];
        for (int m = 3; m <= omega; ++m) {
            switch (fam) {
                case Family::gem:
                case Family::diamond: f[q][m] = f[q - 1][m] + 2LL * m - 2; break;
                case Family::k2p4:
                    f[q][m] = m == 3 ? 2LL * q * q - 3 * q + 4
                                     : f[q - 1][m] + 2 * gem_tab[q - 1][m - 1] + 3LL * m - 6;
                    break;
                case Family::hvn:
                    f[q][m] = m == 3 ? 2LL * q * q - 3 * q + 4
                                     : f[q - 1][m] + 2 * f[q - 1][m - 1];
                    break;
                case Family::k5e:
                    f[q][m] = m == 3 ? 2LL * q * q - 3 * q + 4
                                     : f[q - 1][m] + 2 * gem_tab[q - 1][m - 1] + 3LL * m - 6;
                    break;
                case Family::butterfly: f[q][m] = f[q - 1][m] + choose2(m) - 1; break;
                case Family::gemplus:
                case Family::dart: f[q][m] = f[q - 1][m] + choose2(m) + m - 2; break;
                case Family::k1c4: f[q][m] = prefix[m] + f[q - 1][m - 1] + 1; break;
                case Family::c4: f[q][m] = prefix[m] + 1; break;
                case Family::house: f[q][m] = m + prefix[m]; break;
                case Family::none:
                    if (m == 3)
                        f[q][m] = 2LL * q * q - 3 * q + 4;
                    else
                        throw std::invalid_argument(
                            "binding_bound: no bound without a companion for omega >= 4, p >= 3");
                    break;
            }
        }
    }
    return f;
}

}  // namespace detail

// Guaranteed palette size for a {pK2, companion}-free graph with clique
// number omega.  Undefined cells (p < 2, omega < 1, or companion 'none' with
// p >= 3 and omega >= 4) raise std::invalid_argument.
inline long long binding_bound(Family fam, int p, int omega) {
    if (p < 2) throw std::invalid_argument("binding_bound: undefined for p < 2");
    if (omega < 1) throw std::invalid_argument("binding_bound: undefined for omega < 1");
    return detail::bound_table(fam, p, omega)[p][omega];
}

inline long long binding_bound(const FamilySpec& fam, int omega) {
    return binding_bound(fam.companion, fam.p, omega);
}

}  // namespace chibind
