#include "radlat/cstar.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "radlat/caps.hpp"

namespace radlat {

// ------------------------------------------------------------ algebras

ModelAlgebra::ModelAlgebra(Blocks blocks) : blocks_(std::move(blocks)) {
    for (int b : blocks_)
        if (b < 1) throw InputError("block sizes must be positive");
    if (blocks_.size() > caps().model_blocks)
        throw SizeLimitExceeded("algebra with " + std::to_string(blocks_.size()) + " blocks exceeds cap");
}

long ModelAlgebra::dimension() const {
    long d = 0;
    for (int b : blocks_) d += long(b) * b;
    return d;
}

ModelAlgebra ModelAlgebra::canonical() const {
    Blocks b = blocks_;
    std::sort(b.begin(), b.end());
    ModelAlgebra A;
    A.blocks_ = std::move(b);
    return A;
}

ModelAlgebra ModelAlgebra::part(Mask m) const {
    ModelAlgebra A;
    for (int i = 0; i < count(); ++i)
        if (m >> i & 1) A.blocks_.push_back(blocks_[i]);
    return A;
}

ModelAlgebra ModelAlgebra::subquotient(Mask J, Mask I) const {
    if (I & ~J) throw InputError("subquotient needs I within J");
    return part(J & ~I);
}

std::string ModelAlgebra::text() const {
    std::string s = "[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(blocks_[i]);
    }
    return s + "]";
}

bool ModelAlgebra::operator<(const ModelAlgebra& o) const { return universe_less(*this, o); }

bool universe_less(const ModelAlgebra& a, const ModelAlgebra& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.blocks() < b.blocks();
}

ModelAlgebra parse_algebra(const std::string& text) {
    Blocks b;
    std::string item;
    std::stringstream ss(text);
    bool any = false;
    while (std::getline(ss, item, ',')) {
        any = true;
        auto first = item.find_first_not_of(" \t[]");
        auto last = item.find_last_not_of(" \t[]");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t[]") == std::string::npos) break;
            throw InputError("empty block size in '" + text + "'");
        }
        std::string t = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (...) {
            used = 0;
        }
        if (used != t.size() || v < 1) throw InputError("bad block size '" + t + "'");
        b.push_back(v);
    }
    (void)any;
    return ModelAlgebra(std::move(b));
}

LatticePtr ideal_lattice(const ModelAlgebra& A) {
    static std::mutex mu;
    static std::vector<LatticePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::size_t k = std::size_t(A.count());
    if (cache.size() <= k) cache.resize(k + 1);
    if (!cache[k]) cache[k] = boolean_lattice(int(k));
    return cache[k];
}

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

Mask compress(Mask m, Mask within) {
    Mask out = 0;
    int k = 0;
    for (int i = 0; i < 32; ++i)
        if (within >> i & 1) {
            if (m >> i & 1) out |= Mask(1) << k;
            ++k;
        }
    return out;
}

Mask expand(Mask m, Mask within) {
    Mask out = 0;
    int k = 0;
    for (int i = 0; i < 32; ++i)
        if (within >> i & 1) {
            if (m >> k & 1) out |= Mask(1) << i;
            ++k;
        }
    return out;
}

std::string IdealRef::text() const {
    std::string s = "{";
    bool first = true;
    for (int i : mask_indices(mask)) {
        if (!first) s += ",";
        s += "block#" + std::to_string(i);
        first = false;
    }
    return s + "}";
}

// ------------------------------------------------------------ properties

struct PropNode {
    PropKind kind = PropKind::all;
    long bound = 0;
    std::vector<Property> kids;
    std::string text;
    std::string key;
    CustomPredicate custom;
};

namespace {

int precedence(PropKind k) {
    switch (k) {
    case PropKind::Or: return 1;
    case PropKind::And: return 2;
    case PropKind::Not: return 3;
    default: return 4;
    }
}

const char* op_name(PropKind k) {
    switch (k) {
    case PropKind::G: return "G";
    case PropKind::dG: return "dG";
    case PropKind::NG: return "NG";
    case PropKind::dNG: return "dNG";
    case PropKind::R: return "R";
    case PropKind::GPi: return "GPi";
    default: return "?";
    }
}

std::string atom_text(PropKind k, long bound) {
    switch (k) {
    case PropKind::zero: return "zero";
    case PropKind::all: return "all";
    case PropKind::comm: return "comm";
    case PropKind::simple: return "simple";
    case PropKind::one: return "one";
    case PropKind::dim_le: return "dim<=" + std::to_string(bound);
    case PropKind::blockdim_le: return "blockdim<=" + std::to_string(bound);
    case PropKind::blocks_le: return "blocks<=" + std::to_string(bound);
    default: return "?";
    }
}

std::string wrap(const std::string& s, bool paren) { return paren ? "(" + s + ")" : s; }

std::atomic<unsigned long> custom_counter{0};

struct Memo {
    std::mutex mu;
    std::unordered_map<std::string, bool> table;
};
Memo& memo() {
    static Memo m;
    return m;
}

std::string blocks_key(const Blocks& b) {
    std::string s;
    for (int x : b) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

bool eval_canonical(const PropNode& node, const Blocks& blocks);

bool eval_child(const Property& p, const Blocks& sorted) { return p(ModelAlgebra(sorted)); }

Blocks part_sorted(const Blocks& blocks, Mask m) {
    Blocks out;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (m >> i & 1) out.push_back(blocks[i]);
    return out; // already sorted, as blocks is
}

// any[M]: some nonempty submask K of M has P(K).
std::vector<std::uint8_t> nonzero_p_parts(const Property& p, const Blocks& blocks) {
    Mask full = Mask((std::uint64_t(1) << blocks.size()) - 1);
    std::vector<std::uint8_t> any(std::size_t(full) + 1, 0);
    for (Mask m = 1; m <= full && m != 0; ++m) {
        bool v = eval_child(p, part_sorted(blocks, m));
        for (int i = 0; !v && i < int(blocks.size()); ++i)
            if (m >> i & 1) v = any[m & ~(Mask(1) << i)];
        any[m] = v;
        if (m == full) break;
    }
    return any;
}

bool eval_canonical(const PropNode& node, const Blocks& blocks) {
    if (blocks.empty()) return true;
    const int k = int(blocks.size());
    const Mask full = Mask((std::uint64_t(1) << k) - 1);
    switch (node.kind) {
    case PropKind::zero: return false;
    case PropKind::all: return true;
    case PropKind::comm: return std::all_of(blocks.begin(), blocks.end(), [](int b) { return b == 1; });
    case PropKind::simple: return k <= 1;
    case PropKind::one: return k == 1 && blocks[0] == 1;
    case PropKind::dim_le: {
        long d = 0;
        for (int b : blocks) d += long(b) * b;
        return d <= node.bound;
    }
    case PropKind::blockdim_le: return *std::max_element(blocks.begin(), blocks.end()) <= node.bound;
    case PropKind::blocks_le: return k <= node.bound;
    case PropKind::G: {
        // Each quotient by I != A is the block set M = A \ I; its ideals are
        // the submasks of M.
        auto any = nonzero_p_parts(node.kids[0], blocks);
        for (Mask I = 0; I < full; ++I)
            if (!any[full & ~I]) return false;
        return true;
    }
    case PropKind::dG: {
        // Each quotient of a nonzero ideal J by I strictly inside J is the
        // block set J \ I. In the model this coincides with G.
        auto any = nonzero_p_parts(node.kids[0], blocks);
        for (Mask J = 1; J <= full && J != 0; ++J) {
            if (!any[J]) return false;
            if (J == full) break;
        }
        return true;
    }
    case PropKind::NG: {
        auto any = nonzero_p_parts(node.kids[0], blocks);
        return !any[full];
    }
    case PropKind::dNG: {
        auto any = nonzero_p_parts(node.kids[0], blocks);
        return !any[full];
    }
    case PropKind::R:
        for (int b : blocks)
            if (!eval_child(node.kids[0], {b})) return false;
        return true;
    case PropKind::GPi:
        // A single block has no ideals besides 0 and itself.
        for (int b : blocks)
            if (!nonzero_p_parts(node.kids[0], {b})[1]) return false;
        return true;
    case PropKind::And: return node.kids[0](ModelAlgebra(blocks)) && node.kids[1](ModelAlgebra(blocks));
    case PropKind::Or: return node.kids[0](ModelAlgebra(blocks)) || node.kids[1](ModelAlgebra(blocks));
    case PropKind::Not: return !node.kids[0](ModelAlgebra(blocks));
    case PropKind::Custom: return node.custom(blocks);
    }
    return false;
}

} // namespace

Property::Property() : Property(atom(PropKind::all)) {}

Property Property::atom(PropKind k, long bound) {
    if (precedence(k) != 4 || k == PropKind::Custom || (k >= PropKind::G && k <= PropKind::GPi))
        throw InputError("not an atom kind");
    auto n = std::make_shared<PropNode>();
    n->kind = k;
    n->bound = bound;
    n->text = atom_text(k, bound);
    n->key = n->text;
    return Property(n);
}

Property Property::unary(PropKind op, Property p) {
    auto n = std::make_shared<PropNode>();
    n->kind = op;
    if (op == PropKind::Not) {
        n->text = "!" + wrap(p.str(), precedence(p.kind()) < 3);
        n->key = "!(" + p.key() + ")";
    } else if (op >= PropKind::G && op <= PropKind::GPi) {
        n->text = std::string(op_name(op)) + "(" + p.str() + ")";
        n->key = std::string(op_name(op)) + "(" + p.key() + ")";
    } else {
        throw InputError("not a unary operator");
    }
    n->kids.push_back(std::move(p));
    return Property(n);
}

Property Property::binary(PropKind op, Property a, Property b) {
    if (op != PropKind::And && op != PropKind::Or) throw InputError("not a binary operator");
    auto n = std::make_shared<PropNode>();
    n->kind = op;
    int pr = precedence(op);
    const char* sym = op == PropKind::And ? " & " : " | ";
    n->text = wrap(a.str(), precedence(a.kind()) < pr) + sym + wrap(b.str(), precedence(b.kind()) <= pr);
    n->key = "(" + a.key() + ")" + (op == PropKind::And ? "&" : "|") + "(" + b.key() + ")";
    n->kids = {std::move(a), std::move(b)};
    return Property(n);
}

Property Property::custom(std::string name, CustomPredicate pred) {
    auto n = std::make_shared<PropNode>();
    n->kind = PropKind::Custom;
    n->text = name;
    n->key = "custom#" + std::to_string(custom_counter.fetch_add(1)) + ":" + name;
    n->custom = std::move(pred);
    return Property(n);
}

Property Property::member_of(std::string name, const std::set<Blocks>& members) {
    auto shared = std::make_shared<std::set<Blocks>>(members);
    return custom(std::move(name), [shared](const Blocks& b) { return b.empty() || shared->count(b) > 0; });
}

PropKind Property::kind() const { return node_->kind; }
long Property::bound() const { return node_->bound; }
const std::vector<Property>& Property::children() const { return node_->kids; }
std::string Property::str() const { return node_->text; }
const std::string& Property::key() const { return node_->key; }

bool Property::same_ast(const Property& o) const {
    if (kind() != o.kind() || bound() != o.bound() || children().size() != o.children().size()) return false;
    if (kind() == PropKind::Custom) return key() == o.key();
    for (std::size_t i = 0; i < children().size(); ++i)
        if (!children()[i].same_ast(o.children()[i])) return false;
    return true;
}

bool Property::operator()(const ModelAlgebra& A) const {
    ModelAlgebra C = A.canonical();
    if (C.is_zero()) return true;
    std::string k = node_->key + "|" + blocks_key(C.blocks());
    Memo& m = memo();
    {
        std::lock_guard<std::mutex> lock(m.mu);
        auto it = m.table.find(k);
        if (it != m.table.end()) return it->second;
    }
    bool v = eval_canonical(*node_, C.blocks());
    std::lock_guard<std::mutex> lock(m.mu);
    m.table.emplace(std::move(k), v);
    return v;
}

Property operator&(const Property& a, const Property& b) { return Property::binary(PropKind::And, a, b); }
Property operator|(const Property& a, const Property& b) { return Property::binary(PropKind::Or, a, b); }
Property operator!(const Property& a) { return Property::unary(PropKind::Not, a); }
Property G(const Property& p) { return Property::unary(PropKind::G, p); }
Property dG(const Property& p) { return Property::unary(PropKind::dG, p); }
Property NG(const Property& p) { return Property::unary(PropKind::NG, p); }
Property dNG(const Property& p) { return Property::unary(PropKind::dNG, p); }
Property Rp(const Property& p) { return Property::unary(PropKind::R, p); }
Property GPi(const Property& p) { return Property::unary(PropKind::GPi, p); }

bool eval_property(const Property& P, const ModelAlgebra& A) { return P(A); }

void clear_property_cache() {
    std::lock_guard<std::mutex> lock(memo().mu);
    memo().table.clear();
}

std::size_t property_cache_size() {
    std::lock_guard<std::mutex> lock(memo().mu);
    return memo().table.size();
}

// ---------------------------------------------------- relations, radicals

Relation relation_of_property(const ModelAlgebra& A, const Property& P) {
    auto L = ideal_lattice(A);
    int n = L->size();
    std::vector<std::uint8_t> m(std::size_t(n) * n, 0);
    for (Mask J = 0; J < Mask(n); ++J)
        for (Mask I = 0; I < Mask(n); ++I)
            if ((I & ~J) == 0) m[std::size_t(I) * n + J] = P(A.subquotient(J, I));
    return Relation::from_matrix(L, std::move(m));
}

IdealRef radical_tri(const ModelAlgebra& A, const Property& P) {
    auto rads = find_radicals(rel_tri_right(relation_of_property(A, P)));
    if (rads.size() != 1)
        throw NoUniqueRadical("closure of <<_" + P.str() + " on " + A.text() + " has radicals " + elems_text(rads));
    return {A, Mask(rads[0])};
}

IdealRef dual_radical_tri(const ModelAlgebra& A, const Property& P) {
    auto rads = find_dual_radicals(rel_tri_left(relation_of_property(A, P)));
    if (rads.size() != 1)
        throw NoUniqueRadical("closure of <<_" + P.str() + " on " + A.text() + " has dual radicals " +
                              elems_text(rads));
    return {A, Mask(rads[0])};
}

Universe enumerate_algebras(int max_blocks, int max_block_size) {
    if (max_blocks < 0 || max_block_size < 0) throw InputError("negative universe bound");
    if (std::size_t(max_blocks) > caps().model_blocks)
        throw SizeLimitExceeded("universe with " + std::to_string(max_blocks) + " blocks exceeds cap");
    Universe out;
    Blocks cur;
    auto rec = [&](auto&& self, int lo) -> void {
        out.emplace_back(cur);
        if (int(cur.size()) == max_blocks) return;
        for (int s = lo; s <= max_block_size; ++s) {
            cur.push_back(s);
            self(self, s);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), universe_less);
    return out;
}

Universe close_universe(const Universe& U) {
    std::set<Blocks> seen;
    Universe out;
    for (const auto& A : U) {
        ModelAlgebra C = A.canonical();
        for (Mask m = 0; m <= C.full(); ++m) {
            Blocks b = C.part(m).blocks();
            if (seen.insert(b).second) out.emplace_back(b);
            if (m == C.full()) break;
        }
    }
    std::sort(out.begin(), out.end(), universe_less);
    return out;
}

std::string StabilityVerdict::text() const {
    if (ok || !witness) return ok ? "stable" : "unstable";
    return "A=" + witness->first.text() + " I=" + IdealRef{witness->first, witness->second}.text();
}

StabilityVerdict is_lower_stable(const Property& P, const Universe& U) {
    for (const auto& A : U) {
        if (!P(A)) continue;
        for (Mask I = 0; I <= A.full(); ++I) {
            if (!P(A.part(I))) return {false, std::pair{A, I}};
            if (I == A.full()) break;
        }
    }
    return {};
}

StabilityVerdict is_upper_stable(const Property& P, const Universe& U) {
    for (const auto& A : U) {
        if (!P(A)) continue;
        for (Mask I = 0; I <= A.full(); ++I) {
            if (!P(A.quotient(I))) return {false, std::pair{A, I}};
            if (I == A.full()) break;
        }
    }
    return {};
}

StabilityVerdict is_extension_stable(const Property& P, const Universe& U) {
    for (const auto& A : U) {
        if (P(A)) continue;
        for (Mask I = 0; I <= A.full(); ++I) {
            if (P(A.part(I)) && P(A.quotient(I))) return {false, std::pair{A, I}};
            if (I == A.full()) break;
        }
    }
    return {};
}

std::optional<ModelAlgebra> first_disagreement(const Property& P, const Property& Q, const Universe& U) {
    for (const auto& A : U)
        if (P(A) != Q(A)) return A;
    return std::nullopt;
}

} // namespace radlat
