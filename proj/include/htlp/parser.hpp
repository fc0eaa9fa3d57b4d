#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "htlp/errors.hpp"
#include "htlp/formula.hpp"
#include "htlp/theory.hpp"

namespace htlp {

// Concrete syntax, loosest binding first:
//
//   formula := impl ( "<->" formula )?
//   impl    := disj ( "->" impl )?
//   disj    := conj ( "|" conj )*
//   conj    := unary ( "&" unary )*
//   unary   := ( "~" | "not" ) unary | primary
//   primary := atom | "bot" | "top" | "(" formula ")"
//
// "%" starts a comment running to the end of the line.
namespace detail {

enum class Tok { Atom, Bot, Top, Not, And, Or, Arrow, Equiv, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline const char* describe(Tok t) {
    switch (t) {
    case Tok::Atom: return "atom";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Equiv: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            const std::size_t line = line_, col = column();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            const char c = text_[pos_];
            auto single = [&](Tok t) {
                out.push_back({t, std::string(1, c), line, col});
                ++pos_;
            };
            switch (c) {
            case '~': single(Tok::Not); continue;
            case '&': single(Tok::And); continue;
            case '|': single(Tok::Or); continue;
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            default: break;
            }
            if (text_.substr(pos_, 2) == "->") {
                out.push_back({Tok::Arrow, "->", line, col});
                pos_ += 2;
                continue;
            }
            if (text_.substr(pos_, 3) == "<->") {
                out.push_back({Tok::Equiv, "<->", line, col});
                pos_ += 3;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t end = pos_;
                while (end < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                    ++end;
                std::string word(text_.substr(pos_, end - pos_));
                pos_ = end;
                if (word == "bot") out.push_back({Tok::Bot, word, line, col});
                else if (word == "top") out.push_back({Tok::Top, word, line, col});
                else if (word == "not") out.push_back({Tok::Not, word, line, col});
                else if (is_valid_atom_name(word)) out.push_back({Tok::Atom, word, line, col});
                else throw ParseError(line, col, {"atom"}, "'" + word + "' (atoms start with a lowercase letter)");
                continue;
            }
            throw ParseError(line, col, {}, "unexpected character '" + std::string(1, c) + "'");
        }
    }

private:
    std::size_t column() const { return pos_ - line_start_ + 1; }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++pos_;
                ++line_;
                line_start_ = pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t line_start_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = formula();
        expect(Tok::End, {Tok::End, Tok::And, Tok::Or, Tok::Arrow, Tok::Equiv});
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
        std::vector<std::string> names;
        for (Tok t : expected) names.emplace_back(describe(t));
        const Token& t = peek();
        const std::string found = t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
        throw ParseError(t.line, t.column, std::move(names), found);
    }

    void expect(Tok kind, std::initializer_list<Tok> expected) {
        if (peek().kind != kind) fail(expected);
        ++pos_;
    }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    Formula formula() {
        Formula lhs = implication();
        if (accept(Tok::Equiv)) return Formula::equiv(lhs, formula());
        return lhs;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Tok::Arrow)) return Formula::implies(lhs, implication());
        return lhs;
    }

    Formula disjunction() {
        Formula acc = conjunction();
        while (accept(Tok::Or)) acc = Formula::disj(acc, conjunction());
        return acc;
    }

    Formula conjunction() {
        Formula acc = unary();
        while (accept(Tok::And)) acc = Formula::conj(acc, unary());
        return acc;
    }

    Formula unary() {
        if (accept(Tok::Not)) return Formula::neg(unary());
        return primary();
    }

    Formula primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Atom: {
            ++pos_;
            return Formula::atom(t.text);
        }
        case Tok::Bot: ++pos_; return Formula::bottom();
        case Tok::Top: ++pos_; return Formula::top();
        case Tok::LParen: {
            ++pos_;
            Formula f = formula();
            expect(Tok::RParen, {Tok::RParen, Tok::And, Tok::Or, Tok::Arrow, Tok::Equiv});
            return f;
        }
        default:
            fail({Tok::Atom, Tok::Bot, Tok::Top, Tok::Not, Tok::LParen});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline Formula parse_at(std::string_view text, std::size_t first_line) {
    return Parser(Lexer(text, first_line).run()).parse_all();
}

} // namespace detail

// Parses a single formula; it may span several lines.
inline Formula parse(std::string_view text) { return detail::parse_at(text, 1); }

// Parses a theory file: one formula per non-blank line, "%" comments, and optional
// "#signature a b c" lines that add atoms to the signature.
inline Theory parse_theory(std::string_view text, const Signature& extra = {}) {
    std::vector<Formula> formulas;
    std::vector<std::string> declared(extra.begin(), extra.end());
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line.substr(first, 10) == "#signature") {
            std::string_view rest = line.substr(first + 10);
            if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front())))
                throw ParseError(line_no, first + 1, {"'#signature'"}, "'" + std::string(line.substr(first)) + "'");
            std::size_t i = 0;
            while (i < rest.size()) {
                while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
                if (i < rest.size() && rest[i] == '%') break;
                std::size_t j = i;
                while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j])) && rest[j] != '%') ++j;
                if (j > i) {
                    std::string name(rest.substr(i, j - i));
                    if (!is_valid_atom_name(name) || is_reserved_word(name))
                        throw ParseError(line_no, first + 11 + i, {"atom"}, "'" + name + "'");
                    declared.push_back(std::move(name));
                }
                i = j;
            }
        } else {
            std::size_t content = line.find_first_not_of(" \t");
            if (content != std::string_view::npos && line[content] != '%') {
                // Columns stay relative to the physical line.
                std::string padded(content, ' ');
                padded.append(line.substr(content));
                formulas.push_back(detail::parse_at(padded, line_no));
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return Theory(std::move(formulas), Signature(std::move(declared)));
}

// Program text: one rule per line in the formula grammar.
inline Program parse_program(std::string_view text, const Signature& extra = {}) {
    Theory t = parse_theory(text, extra);
    std::vector<Rule> rules;
    for (const auto& f : t.formulas()) rules.push_back(Rule::from_formula(f));
    return Program(std::move(rules), t.signature());
}

} // namespace htlp
