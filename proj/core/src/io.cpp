#include "radlat/io.hpp"

#include <fstream>
#include <sstream>

#include "radlat/errors.hpp"

namespace radlat {

namespace {

// what() without the leading "Kind: ".
std::string message_of(const Error& e) { return std::string(e.what()).substr(e.kind().size() + 2); }

struct Line {
    int number;
    std::vector<std::string> words;
    std::string rest; // text after the first two words (labels)
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l{number, {}, {}};
        std::string w;
        while (ls >> w) l.words.push_back(w);
        if (l.words.empty()) continue;
        if (l.words.size() >= 3) {
            auto pos = raw.find(l.words[1]);
            pos = raw.find_first_not_of(" \t", pos + l.words[1].size());
            l.rest = raw.substr(pos);
            while (!l.rest.empty() && (l.rest.back() == ' ' || l.rest.back() == '\t' || l.rest.back() == '\r'))
                l.rest.pop_back();
        }
        out.push_back(std::move(l));
    }
    return out;
}

int to_int(const std::string& w, const std::string& where) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(w, &used);
    } catch (...) {
        used = 0;
    }
    if (used != w.size()) throw InputError(where + " expected an integer, got '" + w + "'");
    return v;
}

std::string where(const std::string& source, int line) { return source + ":" + std::to_string(line) + ":"; }

} // namespace

LatticePtr parse_lattice(const std::string& text, const std::string& source) {
    auto lines = tokenize(text);
    if (lines.empty()) throw InputError(source + ": empty lattice file");
    const Line& head = lines.front();
    std::string w0 = where(source, head.number);
    if (head.words.size() != 3 || head.words[0] != "lattice")
        throw InputError(w0 + " expected 'lattice <name> <n>'");
    std::string name = head.words[1];
    int n = to_int(head.words[2], w0);
    if (n < 1) throw InputError(w0 + " element count must be positive");
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<std::string> labels(n);
    bool have_cover = false, have_leq = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        std::string w = where(source, l.number);
        const std::string& kw = l.words[0];
        if (kw == "cover" || kw == "leq") {
            if (l.words.size() != 3) throw InputError(w + " expected '" + kw + " <i> <j>'");
            int a = to_int(l.words[1], w), b = to_int(l.words[2], w);
            if (a < 0 || b < 0 || a >= n || b >= n) throw InputError(w + " element index out of range");
            pairs.emplace_back(a, b);
            (kw == "cover" ? have_cover : have_leq) = true;
        } else if (kw == "label") {
            if (l.words.size() < 3) throw InputError(w + " expected 'label <i> <text>'");
            int a = to_int(l.words[1], w);
            if (a < 0 || a >= n) throw InputError(w + " element index out of range");
            labels[a] = l.rest;
        } else {
            throw InputError(w + " unknown directive '" + kw + "'");
        }
    }
    (void)have_leq;
    return Lattice::build(n, pairs, have_cover ? PairMode::covers : PairMode::leq, labels, name);
}

std::string write_lattice(const Lattice& L) {
    std::ostringstream os;
    os << "lattice " << L.name() << " " << L.size() << "\n";
    for (auto [a, b] : L.covers()) os << "cover " << a << " " << b << "\n";
    for (int i = 0; i < L.size(); ++i)
        if (!L.labels()[i].empty()) os << "label " << i << " " << L.labels()[i] << "\n";
    return os.str();
}

RelationFile parse_relation(const std::string& text, LatticePtr L, const std::string& source) {
    auto lines = tokenize(text);
    if (lines.empty()) throw InputError(source + ": empty relation file");
    const Line& head = lines.front();
    std::string w0 = where(source, head.number);
    if (head.words.size() != 4 || head.words[0] != "relation" || head.words[2] != "over")
        throw InputError(w0 + " expected 'relation <name> over <lattice-name>'");
    if (head.words[3] != L->name())
        throw InputError(w0 + " relation is over '" + head.words[3] + "' but lattice is '" + L->name() + "'");
    bool auto_reflexive = true;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        std::string w = where(source, l.number);
        const std::string& kw = l.words[0];
        if (kw == "pair") {
            if (l.words.size() != 3) throw InputError(w + " expected 'pair <i> <j>'");
            pairs.emplace_back(to_int(l.words[1], w), to_int(l.words[2], w));
        } else if (kw == "auto-reflexive") {
            if (l.words.size() != 2 || (l.words[1] != "on" && l.words[1] != "off"))
                throw InputError(w + " expected 'auto-reflexive on|off'");
            auto_reflexive = l.words[1] == "on";
        } else {
            throw InputError(w + " unknown directive '" + kw + "'");
        }
    }
    try {
        return {head.words[1], head.words[3], validate_relation(L, pairs, auto_reflexive)};
    } catch (const NotStrongerThanOrder& e) {
        throw NotStrongerThanOrder(source + ": " + message_of(e));
    } catch (const InputError& e) {
        throw InputError(source + ": " + message_of(e));
    }
}

std::string write_relation(const Relation& R, const std::string& name) {
    std::ostringstream os;
    os << "relation " << name << " over " << R.lattice().name() << "\n";
    os << "auto-reflexive on\n";
    for (auto [a, b] : R.pairs()) os << "pair " << a << " " << b << "\n";
    return os.str();
}

std::string to_dot(const Lattice& L, const std::map<Elem, std::string>& highlight) {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    os << "digraph " << quote(L.name()) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < L.size(); ++i) {
        os << "  n" << i << " [label=" << quote(L.label(i));
        auto it = highlight.find(i);
        if (it != highlight.end()) os << ", style=filled, fillcolor=" << quote(it->second);
        os << "];\n";
    }
    for (auto [a, b] : L.covers()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace radlat
