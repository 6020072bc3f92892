// Recursive-descent parser for property expressions.
#include <cctype>
#include <map>

#include "radlat/cstar.hpp"

namespace radlat {

namespace {

enum class Tok { ident, number, le, lparen, rparen, amp, bar, bang, end, bad };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

const std::vector<std::string>& primary_expected() {
    static const std::vector<std::string> v = {"!", "(", "G", "dG", "NG", "dNG", "R", "GPi", "zero", "all",
                                               "comm", "simple", "one", "dim<=k", "blockdim<=k", "blocks<=k"};
    return v;
}

class Parser {
public:
    explicit Parser(const std::string& s) : src_(s) { lex(); }

    Property parse() {
        Property p = parse_or();
        if (peek().kind != Tok::end) fail({"&", "|", "end of input"});
        return p;
    }

private:
    void lex() {
        std::size_t i = 0;
        while (i < src_.size()) {
            char c = src_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (i < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[i])) || src_[i] == '_')) ++i;
                toks_.push_back({Tok::ident, src_.substr(start, i - start), start});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
                toks_.push_back({Tok::number, src_.substr(start, i - start), start});
            } else if (c == '<' && i + 1 < src_.size() && src_[i + 1] == '=') {
                toks_.push_back({Tok::le, "<=", start});
                i += 2;
            } else {
                Tok k = c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : c == '&' ? Tok::amp
                      : c == '|' ? Tok::bar : c == '!' ? Tok::bang : Tok::bad;
                toks_.push_back({k, std::string(1, c), start});
                ++i;
            }
        }
        toks_.push_back({Tok::end, "", src_.size()});
    }

    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        std::string msg = "at position " + std::to_string(t.pos) + ": unexpected " + got + "; expected one of:";
        for (const auto& e : expected) msg += " " + e;
        throw PropertyParseError(t.pos, std::move(expected), msg);
    }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail({what});
        ++at_;
    }

    Property parse_or() {
        Property p = parse_and();
        while (peek().kind == Tok::bar) {
            ++at_;
            p = p | parse_and();
        }
        return p;
    }

    Property parse_and() {
        Property p = parse_unary();
        while (peek().kind == Tok::amp) {
            ++at_;
            p = p & parse_unary();
        }
        return p;
    }

    Property parse_unary() {
        if (peek().kind == Tok::bang) {
            ++at_;
            return !parse_unary();
        }
        return parse_primary();
    }

    Property parse_inner() {
        Property p = parse_or();
        if (peek().kind != Tok::rparen) fail({"&", "|", ")"});
        ++at_;
        return p;
    }

    Property parse_primary() {
        static const std::map<std::string, PropKind> ops = {{"G", PropKind::G},   {"dG", PropKind::dG},
                                                            {"NG", PropKind::NG}, {"dNG", PropKind::dNG},
                                                            {"R", PropKind::R},   {"GPi", PropKind::GPi}};
        static const std::map<std::string, PropKind> atoms = {{"zero", PropKind::zero},
                                                              {"all", PropKind::all},
                                                              {"comm", PropKind::comm},
                                                              {"simple", PropKind::simple},
                                                              {"one", PropKind::one}};
        static const std::map<std::string, PropKind> bounded = {{"dim", PropKind::dim_le},
                                                                {"blockdim", PropKind::blockdim_le},
                                                                {"blocks", PropKind::blocks_le}};
        const Token& t = peek();
        if (t.kind == Tok::lparen) {
            ++at_;
            return parse_inner();
        }
        if (t.kind != Tok::ident) fail(primary_expected());
        if (auto it = ops.find(t.text); it != ops.end()) {
            ++at_;
            expect(Tok::lparen, "(");
            return Property::unary(it->second, parse_inner());
        }
        if (auto it = atoms.find(t.text); it != atoms.end()) {
            ++at_;
            return Property::atom(it->second);
        }
        if (auto it = bounded.find(t.text); it != bounded.end()) {
            ++at_;
            expect(Tok::le, "<=");
            if (peek().kind != Tok::number) fail({"integer"});
            std::string digits = next().text;
            if (digits.size() > 12) {
                --at_;
                fail({"integer"});
            }
            return Property::atom(it->second, std::stol(digits));
        }
        fail(primary_expected());
    }

    std::string src_;
    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

} // namespace

Property parse_property(const std::string& text) { return Parser(text).parse(); }

} // namespace radlat
