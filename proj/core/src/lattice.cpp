#include "radlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <tuple>

#include "radlat/caps.hpp"
#include "radlat/errors.hpp"

namespace radlat {

namespace {

struct BitRows {
    int n, w;
    std::vector<std::uint64_t> bits;
    explicit BitRows(int n_) : n(n_), w((n_ + 63) / 64), bits(std::size_t(n_) * w, 0) {}
    std::uint64_t* row(int i) { return bits.data() + std::size_t(i) * w; }
    const std::uint64_t* row(int i) const { return bits.data() + std::size_t(i) * w; }
    void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    int count(int i) const {
        int c = 0;
        for (int k = 0; k < w; ++k) c += std::popcount(row(i)[k]);
        return c;
    }
};

std::string pair_text(Elem a, Elem b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_size(std::size_t n) {
    if (n > caps().lattice_size)
        throw SizeLimitExceeded("lattice of " + std::to_string(n) + " elements exceeds cap " +
                                std::to_string(caps().lattice_size));
}

} // namespace

LatticePtr Lattice::build(int n, const std::vector<std::pair<Elem, Elem>>& pairs, PairMode mode,
                          std::vector<std::string> labels, std::string name) {
    if (n < 1) throw InputError("lattice needs at least one element");
    check_size(std::size_t(n));
    (void)mode; // both modes take the reflexive-transitive closure
    BitRows up(n);
    for (int i = 0; i < n; ++i) up.set(i, i);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InputError("pair " + pair_text(a, b) + " out of range");
        up.set(a, b);
    }
    // Warshall on bit rows: row(i) |= row(k) whenever i <= k.
    for (int k = 0; k < n; ++k) {
        const std::uint64_t* rk = up.row(k);
        for (int i = 0; i < n; ++i) {
            if (i == k || !up.get(i, k)) continue;
            std::uint64_t* ri = up.row(i);
            for (int t = 0; t < up.w; ++t) ri[t] |= rk[t];
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (up.get(a, b) && up.get(b, a))
                throw NotAPoset("antisymmetry fails for " + pair_text(a, b));

    std::shared_ptr<Lattice> L(new Lattice());
    L->n_ = n;
    L->name_ = std::move(name);
    L->leq_.assign(std::size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) L->leq_[L->idx(a, b)] = up.get(a, b);

    BitRows down(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (up.get(a, b)) down.set(b, a);
    std::vector<int> up_count(n), down_count(n);
    for (int i = 0; i < n; ++i) {
        up_count[i] = up.count(i);
        down_count[i] = down.count(i);
    }

    L->join_.assign(std::size_t(n) * n, -1);
    L->meet_.assign(std::size_t(n) * n, -1);
    std::vector<std::uint64_t> tmp(up.w);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            int c = 0;
            for (int t = 0; t < up.w; ++t) {
                tmp[t] = up.row(a)[t] & up.row(b)[t];
                c += std::popcount(tmp[t]);
            }
            Elem j = -1;
            for (int t = 0; t < up.w && j < 0; ++t) {
                std::uint64_t word = tmp[t];
                while (word) {
                    int u = t * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (up_count[u] == c) {
                        j = u;
                        break;
                    }
                }
            }
            if (j < 0) throw NotALattice("no unique join for " + pair_text(a, b));
            c = 0;
            for (int t = 0; t < up.w; ++t) {
                tmp[t] = down.row(a)[t] & down.row(b)[t];
                c += std::popcount(tmp[t]);
            }
            Elem m = -1;
            for (int t = 0; t < up.w && m < 0; ++t) {
                std::uint64_t word = tmp[t];
                while (word) {
                    int u = t * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (down_count[u] == c) {
                        m = u;
                        break;
                    }
                }
            }
            if (m < 0) throw NotALattice("no unique meet for " + pair_text(a, b));
            L->join_[L->idx(a, b)] = L->join_[L->idx(b, a)] = j;
            L->meet_[L->idx(a, b)] = L->meet_[L->idx(b, a)] = m;
        }
    }
    labels.resize(std::size_t(n));
    L->labels_ = std::move(labels);
    L->finish();
    return L;
}

void Lattice::finish() {
    bottom_ = 0;
    top_ = 0;
    for (int i = 0; i < n_; ++i) {
        bottom_ = meet(bottom_, i);
        top_ = join(top_, i);
    }
    up_.assign(n_, {});
    down_.assign(n_, {});
    covers_.clear();
    BitRows above(n_), below_rows(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (lt(a, b)) {
                above.set(a, b);
                below_rows.set(b, a);
            }
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (int t = 0; t < above.w && cover; ++t)
                if (above.row(a)[t] & below_rows.row(b)[t]) cover = false;
            if (cover) {
                covers_.emplace_back(a, b);
                up_[a].push_back(b);
                down_[b].push_back(a);
            }
        }
    }
    // Longest chain from bottom, computed in a linear extension.
    std::vector<Elem> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (leq(b, a)) ++below[a];
    std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return below[x] < below[y]; });
    rank_.assign(n_, 0);
    for (Elem a : order)
        for (Elem b : down_[a]) rank_[a] = std::max(rank_[a], rank_[b] + 1);
}

std::string Lattice::label(Elem a) const {
    if (a >= 0 && a < n_ && !labels_[a].empty()) return labels_[a];
    return std::to_string(a);
}

std::vector<Elem> Lattice::atoms() const {
    if (n_ == 1) return {};
    return up_[bottom_];
}

std::vector<Elem> Lattice::coatoms() const {
    if (n_ == 1) return {};
    return down_[top_];
}

std::vector<Elem> Lattice::interval(Elem a, Elem b) const {
    if (!leq(a, b)) throw NotComparable(std::to_string(a) + " is not below " + std::to_string(b));
    std::vector<Elem> out;
    for (int z = 0; z < n_; ++z)
        if (leq(a, z) && leq(z, b)) out.push_back(z);
    return out;
}

Elem Lattice::join_all(const std::vector<Elem>& xs) const {
    Elem r = bottom_;
    for (Elem x : xs) r = join(r, x);
    return r;
}

Elem Lattice::meet_all(const std::vector<Elem>& xs) const {
    Elem r = top_;
    for (Elem x : xs) r = meet(r, x);
    return r;
}

LatticePtr Lattice::sublattice(Elem a, Elem b, std::vector<Elem>* from) const {
    std::vector<Elem> members = interval(a, b);
    int m = int(members.size());
    std::vector<Elem> to(n_, -1);
    for (int i = 0; i < m; ++i) to[members[i]] = i;
    std::shared_ptr<Lattice> S(new Lattice());
    S->n_ = m;
    S->name_ = name_ + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    S->leq_.assign(std::size_t(m) * m, 0);
    S->join_.assign(std::size_t(m) * m, 0);
    S->meet_.assign(std::size_t(m) * m, 0);
    S->labels_.resize(m);
    for (int i = 0; i < m; ++i) {
        S->labels_[i] = labels_[members[i]];
        for (int j = 0; j < m; ++j) {
            S->leq_[S->idx(i, j)] = leq(members[i], members[j]);
            S->join_[S->idx(i, j)] = to[join(members[i], members[j])];
            S->meet_[S->idx(i, j)] = to[meet(members[i], members[j])];
        }
    }
    S->finish();
    if (from) *from = members;
    return S;
}

LatticePtr Lattice::permuted(const std::vector<Elem>& perm) const {
    std::shared_ptr<Lattice> P(new Lattice());
    P->n_ = n_;
    P->name_ = name_;
    P->leq_.assign(leq_.size(), 0);
    P->join_.assign(join_.size(), 0);
    P->meet_.assign(meet_.size(), 0);
    P->labels_.resize(n_);
    for (int a = 0; a < n_; ++a) {
        P->labels_[perm[a]] = labels_[a];
        for (int b = 0; b < n_; ++b) {
            P->leq_[P->idx(perm[a], perm[b])] = leq(a, b);
            P->join_[P->idx(perm[a], perm[b])] = perm[join(a, b)];
            P->meet_[P->idx(perm[a], perm[b])] = perm[meet(a, b)];
        }
    }
    P->finish();
    return P;
}

LatticePtr boolean_lattice(int k) {
    if (k < 0) throw InputError("negative atom count");
    if (k > 30 || (std::size_t(1) << k) > caps().lattice_size)
        throw SizeLimitExceeded("boolean lattice with " + std::to_string(k) + " atoms exceeds cap");
    int n = 1 << k;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < k; ++i)
            if (!(s >> i & 1)) pairs.emplace_back(s, s | (1 << i));
    return Lattice::build(n, pairs, PairMode::covers, {}, "B" + std::to_string(k));
}

LatticePtr chain(int m) {
    if (m < 1) throw InputError("chain length must be positive");
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int i = 0; i + 1 < m; ++i) pairs.emplace_back(i, i + 1);
    return Lattice::build(m, pairs, PairMode::covers, {}, "C" + std::to_string(m));
}

LatticePtr m3() {
    return Lattice::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, PairMode::covers, {},
                          "M3");
}

LatticePtr n5() {
    return Lattice::build(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, PairMode::covers, {}, "N5");
}

LatticePtr dual_lattice(const Lattice& L) {
    int n = L.size();
    std::vector<std::pair<Elem, Elem>> pairs;
    for (auto [a, b] : L.covers()) pairs.emplace_back(b, a);
    auto D = Lattice::build(n, pairs, PairMode::covers, L.labels(), L.name() + "^op");
    return D;
}

DistributivityResult is_distributive(const Lattice& L) {
    DistributivityResult r;
    int n = L.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (L.meet(L.join(a, b), c) != L.join(L.meet(a, c), L.meet(b, c))) {
                    r.distributive = false;
                    r.witness = std::array<Elem, 3>{a, b, c};
                    return r;
                }
    return r;
}

std::vector<Permutation> automorphisms(const Lattice& L) {
    int n = L.size();
    if (std::size_t(n) > caps().automorphism_size)
        throw SizeLimitExceeded("automorphism search on " + std::to_string(n) + " elements exceeds cap");
    using Sig = std::tuple<int, std::size_t, std::size_t>;
    std::vector<Sig> sig(n);
    for (int a = 0; a < n; ++a) sig[a] = {L.rank(a), L.upper_covers(a).size(), L.lower_covers(a).size()};
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return L.rank(x) < L.rank(y); });

    std::vector<Permutation> out;
    Permutation g(n, -1);
    std::vector<char> used(n, 0);
    const std::size_t max_results = 1000000;

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            if (out.size() >= max_results) throw SizeLimitExceeded("too many automorphisms");
            out.push_back(g);
            return;
        }
        Elem e = order[pos];
        for (Elem c = 0; c < n; ++c) {
            if (used[c] || sig[c] != sig[e]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                Elem x = order[q];
                if (L.leq(x, e) != L.leq(g[x], c) || L.leq(e, x) != L.leq(c, g[x])) ok = false;
            }
            if (!ok) continue;
            g[e] = c;
            used[c] = 1;
            self(self, pos + 1);
            used[c] = 0;
            g[e] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string lattice_law_violation(const Lattice& L) {
    int n = L.size();
    std::ostringstream os;
    for (int a = 0; a < n; ++a) {
        if (!L.leq(L.bottom(), a) || !L.leq(a, L.top())) {
            os << "bounds fail at " << a;
            return os.str();
        }
        for (int b = 0; b < n; ++b) {
            Elem j = L.join(a, b), m = L.meet(a, b);
            if (!L.leq(a, j) || !L.leq(m, a) || L.join(a, m) != a || L.meet(a, j) != a) {
                os << "join/meet law fails at " << pair_text(a, b);
                return os.str();
            }
        }
    }
    return {};
}

} // namespace radlat
