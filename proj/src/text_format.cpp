#include "causelab/text_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "causelab/errors.hpp"

namespace causelab {

namespace {

enum class TokenKind { identifier, quoted, lparen, rparen, comma, period, implies, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        const std::size_t line = line_;
        const std::size_t column = column_;
        if (pos_ >= text_.size()) return {TokenKind::end, "", line, column};
        char c = text_[pos_];
        auto single = [&](TokenKind kind) {
            advance();
            return Token{kind, std::string(1, c), line, column};
        };
        switch (c) {
        case '(': return single(TokenKind::lparen);
        case ')': return single(TokenKind::rparen);
        case ',': return single(TokenKind::comma);
        case '.': return single(TokenKind::period);
        case ':':
            advance();
            if (pos_ < text_.size() && text_[pos_] == '-') {
                advance();
                return {TokenKind::implies, ":-", line, column};
            }
            throw ParseError("expected ':-'", line, column);
        case '"': {
            advance();
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') throw ParseError("unterminated string", line, column);
                value += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column);
            advance();
            return {TokenKind::quoted, value, line, column};
        }
        default:
            break;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string value;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                value += text_[pos_];
                advance();
            }
            return {TokenKind::identifier, value, line, column};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

    bool at_end() const { return current_.kind == TokenKind::end; }

    ParsedClause clause() {
        ParsedClause out;
        out.line = current_.line;
        if (current_.kind != TokenKind::implies) out.head = atom();
        expect(TokenKind::implies, "':-'");
        out.body.push_back(atom());
        while (current_.kind == TokenKind::comma) {
            shift();
            out.body.push_back(atom());
        }
        expect(TokenKind::period, "'.'");
        return out;
    }

    Atom atom() {
        if (current_.kind != TokenKind::identifier) fail("expected a relation name");
        Atom out{current_.text, {}};
        shift();
        if (current_.kind != TokenKind::lparen) return out;
        shift();
        if (current_.kind == TokenKind::rparen) {
            shift();
            return out;
        }
        out.terms.push_back(term());
        while (current_.kind == TokenKind::comma) {
            shift();
            out.terms.push_back(term());
        }
        expect(TokenKind::rparen, "')'");
        return out;
    }

    const Token& current() const { return current_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current_.line, current_.column);
    }

private:
    Term term() {
        Token t = current_;
        if (t.kind == TokenKind::quoted) {
            shift();
            return Term::constant(t.text);
        }
        if (t.kind != TokenKind::identifier) fail("expected a term");
        shift();
        char first = t.text.front();
        if (std::isupper(static_cast<unsigned char>(first)) || first == '_')
            return Term::variable(t.text);
        return Term::constant(t.text);
    }

    void shift() { current_ = lexer_.next(); }

    void expect(TokenKind kind, const char* what) {
        if (current_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

std::vector<ParsedClause> parse_clauses(std::string_view text) {
    Parser parser(text);
    std::vector<ParsedClause> out;
    while (!parser.at_end()) out.push_back(parser.clause());
    return out;
}

ConjunctiveQuery parse_query(std::string_view text) {
    std::vector<ParsedClause> clauses = parse_clauses(text);
    if (clauses.size() != 1) throw ParseError("expected exactly one query clause", 1, 1);
    ParsedClause& c = clauses.front();
    if (!c.head) throw ParseError("a query needs a head such as q()", c.line, 1);
    if (!c.head->terms.empty()) throw ParseError("queries must be boolean (zero-ary head)", c.line, 1);
    return ConjunctiveQuery(std::move(c.body));
}

std::vector<DenialConstraint> parse_constraints(std::string_view text) {
    std::vector<DenialConstraint> out;
    for (ParsedClause& c : parse_clauses(text)) {
        if (c.head) throw ParseError("a denial constraint has no head", c.line, 1);
        out.emplace_back(std::move(c.body));
    }
    if (out.empty()) throw ParseError("no denial constraint found", 1, 1);
    return out;
}

Program parse_program(std::string_view text, const std::string& answer_predicate) {
    std::vector<Rule> rules;
    for (ParsedClause& c : parse_clauses(text)) {
        if (!c.head) throw ParseError("a program rule needs a head", c.line, 1);
        rules.push_back(Rule{std::move(*c.head), std::move(c.body)});
    }
    return Program(std::move(rules), answer_predicate);
}

Tuple parse_ground_atom(std::string_view text) {
    while (!text.empty() && (std::isspace(static_cast<unsigned char>(text.back())) || text.back() == '.'))
        text.remove_suffix(1);
    Parser parser(text);
    Atom atom = parser.atom();
    if (!parser.at_end()) parser.fail("trailing input after atom");
    Tuple out{atom.relation, {}};
    for (const Term& t : atom.terms) {
        if (t.is_variable()) throw ParseError("ground atom contains variable " + t.name, 1, 1);
        out.constants.push_back(t.name);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace causelab
