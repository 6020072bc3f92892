// Brute-force reference implementations used to cross-check the library.
// Each one follows the definition directly and shares no code with core/.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "radlat/lattice.hpp"
#include "radlat/relation.hpp"

namespace oracle {

using radlat::Elem;
using radlat::Lattice;
using radlat::Relation;
using Matrix = std::vector<std::vector<bool>>;

inline Elem join(const Lattice& L, Elem a, Elem b) {
    std::vector<Elem> ub;
    for (Elem x = 0; x < L.size(); ++x)
        if (L.leq(a, x) && L.leq(b, x)) ub.push_back(x);
    for (Elem x : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](Elem y) { return L.leq(x, y); })) return x;
    return -1;
}

inline Elem meet(const Lattice& L, Elem a, Elem b) {
    std::vector<Elem> lb;
    for (Elem x = 0; x < L.size(); ++x)
        if (L.leq(x, a) && L.leq(x, b)) lb.push_back(x);
    for (Elem x : lb)
        if (std::all_of(lb.begin(), lb.end(), [&](Elem y) { return L.leq(y, x); })) return x;
    return -1;
}

// Every permutation, kept when it preserves and reflects the order.
inline std::vector<std::vector<Elem>> automorphisms(const Lattice& L) {
    std::vector<Elem> p(L.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Elem>> out;
    do {
        bool ok = true;
        for (Elem a = 0; a < L.size() && ok; ++a)
            for (Elem b = 0; b < L.size() && ok; ++b) ok = L.leq(a, b) == L.leq(p[a], p[b]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool distributive(const Lattice& L) {
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
            for (Elem c = 0; c < L.size(); ++c)
                if (meet(L, a, join(L, b, c)) != join(L, meet(L, a, b), meet(L, a, c))) return false;
    return true;
}

inline Matrix matrix(const Relation& R) {
    Matrix m(R.size(), std::vector<bool>(R.size()));
    for (Elem a = 0; a < R.size(); ++a)
        for (Elem b = 0; b < R.size(); ++b) m[a][b] = R(a, b);
    return m;
}

// Floyd-Warshall reachability.
inline Matrix closure(const Relation& R) {
    Matrix m = matrix(R);
    const int n = R.size();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = true;
    return m;
}

// Depth-first search for a chain a = x1 << x2 << ... << xk = b.
inline bool chain_exists(const Relation& R, Elem a, Elem b) {
    std::vector<bool> seen(R.size());
    std::function<bool(Elem)> go = [&](Elem x) {
        if (x == b) return true;
        seen[x] = true;
        for (Elem y = 0; y < R.size(); ++y)
            if (!seen[y] && R(x, y) && go(y)) return true;
        return false;
    };
    return go(a);
}

// a << b and a <= c imply c << b v c.
inline bool h_relation(const Relation& R) {
    const Lattice& L = R.lattice();
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
            if (R(a, b))
                for (Elem c = 0; c < L.size(); ++c)
                    if (L.leq(a, c) && !R(c, join(L, b, c))) return false;
    return true;
}

// a << b and c <= b imply a ^ c << c.
inline bool dual_h_relation(const Relation& R) {
    const Lattice& L = R.lattice();
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
            if (R(a, b))
                for (Elem c = 0; c < L.size(); ++c)
                    if (L.leq(c, b) && !R(meet(L, a, c), c)) return false;
    return true;
}

// a <-<< b iff a <= b and the only x in [a,b] with a << x is a.
inline Matrix comp_left(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix m(L.size(), std::vector<bool>(L.size()));
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
            if (!L.leq(a, b)) continue;
            bool ok = true;
            for (Elem x = 0; x < L.size(); ++x)
                if (x != a && L.leq(a, x) && L.leq(x, b) && R(a, x)) ok = false;
            m[a][b] = ok;
        }
    return m;
}

inline Matrix comp_right(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix m(L.size(), std::vector<bool>(L.size()));
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
            if (!L.leq(a, b)) continue;
            bool ok = true;
            for (Elem x = 0; x < L.size(); ++x)
                if (x != b && L.leq(a, x) && L.leq(x, b) && R(x, b)) ok = false;
            m[a][b] = ok;
        }
    return m;
}

// a <<^up b iff every x in [a,b] other than b has a << successor y != x in [a,b].
inline Matrix up(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix m(L.size(), std::vector<bool>(L.size()));
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
            if (!L.leq(a, b)) continue;
            bool ok = true;
            for (Elem x = 0; x < L.size() && ok; ++x) {
                if (x == b || !L.leq(a, x) || !L.leq(x, b)) continue;
                bool succ = false;
                for (Elem y = 0; y < L.size(); ++y)
                    if (y != x && L.leq(y, b) && R(x, y)) succ = true;
                ok = succ;
            }
            m[a][b] = ok;
        }
    return m;
}

inline Matrix lo(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix m(L.size(), std::vector<bool>(L.size()));
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
            if (!L.leq(a, b)) continue;
            bool ok = true;
            for (Elem x = 0; x < L.size() && ok; ++x) {
                if (x == a || !L.leq(a, x) || !L.leq(x, b)) continue;
                bool pred = false;
                for (Elem y = 0; y < L.size(); ++y)
                    if (y != x && L.leq(a, y) && R(y, x)) pred = true;
                ok = pred;
            }
            m[a][b] = ok;
        }
    return m;
}

// r with 0 << r and r <-<< 1.
inline std::vector<Elem> radicals(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix cl = oracle::comp_left(R);
    std::vector<Elem> out;
    for (Elem r = 0; r < L.size(); ++r)
        if (R(L.bottom(), r) && cl[r][L.top()]) out.push_back(r);
    return out;
}

inline std::vector<Elem> dual_radicals(const Relation& R) {
    const Lattice& L = R.lattice();
    Matrix cr = oracle::comp_right(R);
    std::vector<Elem> out;
    for (Elem p = 0; p < L.size(); ++p)
        if (cr[L.bottom()][p] && R(p, L.top())) out.push_back(p);
    return out;
}

// ------------------------------------------------------ model algebras

using Multiset = std::vector<int>;

inline Multiset sorted(Multiset m) {
    std::sort(m.begin(), m.end());
    return m;
}

// Every sub-multiset, as sorted vectors, with repetition removed.
inline std::vector<Multiset> sub_multisets(const Multiset& a0) {
    Multiset a = sorted(a0);
    std::set<Multiset> out;
    for (unsigned m = 0; m < (1u << a.size()); ++m) {
        Multiset s;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (m >> i & 1) s.push_back(a[i]);
        out.insert(s);
    }
    return {out.begin(), out.end()};
}

inline Multiset minus(const Multiset& a, const Multiset& s) {
    Multiset out = sorted(a);
    for (int x : s) out.erase(std::find(out.begin(), out.end(), x));
    return out;
}

using Pred = std::function<bool(const Multiset&)>;

// Every nonzero quotient has a nonzero ideal in P.
inline Pred G(Pred P) {
    return [P](const Multiset& a) {
        for (const auto& i : sub_multisets(a)) {
            Multiset q = minus(a, i);
            if (q.empty()) continue;
            bool found = false;
            for (const auto& j : sub_multisets(q))
                if (!j.empty() && P(j)) found = true;
            if (!found) return false;
        }
        return true;
    };
}

// Every nonzero ideal has a nonzero quotient in P.
inline Pred dG(Pred P) {
    return [P](const Multiset& a) {
        for (const auto& i : sub_multisets(a)) {
            if (i.empty()) continue;
            bool found = false;
            for (const auto& j : sub_multisets(i))
                if (j.size() < i.size() && P(minus(i, j))) found = true;
            if (!found) return false;
        }
        return true;
    };
}

// No nonzero ideal in P.
inline Pred NG(Pred P) {
    return [P](const Multiset& a) {
        for (const auto& i : sub_multisets(a))
            if (!i.empty() && P(i)) return false;
        return true;
    };
}

// Every single block lies in P.
inline Pred Rop(Pred P) {
    return [P](const Multiset& a) {
        for (int x : a)
            if (!P({x})) return false;
        return true;
    };
}

inline bool upper_stable(const Pred& P, const std::vector<Multiset>& U) {
    for (const auto& a : U)
        if (P(a))
            for (const auto& i : sub_multisets(a))
                if (!P(minus(a, i))) return false;
    return true;
}

inline bool lower_stable(const Pred& P, const std::vector<Multiset>& U) {
    for (const auto& a : U)
        if (P(a))
            for (const auto& i : sub_multisets(a))
                if (!P(i)) return false;
    return true;
}

inline bool extension_stable(const Pred& P, const std::vector<Multiset>& U) {
    for (const auto& a : U)
        for (const auto& i : sub_multisets(a))
            if (P(i) && P(minus(a, i)) && !P(a)) return false;
    return true;
}

} // namespace oracle
