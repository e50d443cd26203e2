#include "archdl/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace archdl {

namespace {

bool is_top_level_keyword(std::string_view word) {
    return word == "process" || word == "dialog" || word == "component" ||
           word == "external_system" || word == "class" || word == "node" ||
           word == "bind";
}

// Returns the byte offset of the first invalid UTF-8 sequence, if any.
std::optional<std::size_t> first_invalid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        unsigned cp_min;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp_min = 0x80;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp_min = 0x800;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp_min = 0x10000;
        } else {
            return i;
        }
        if (i + extra >= text.size()) return i;
        unsigned cp = c & (0x3F >> extra);
        for (std::size_t k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += extra + 1;
    }
    return std::nullopt;
}

struct Token {
    enum Type { Ident, Str, LBrace, RBrace, Arrow, Comma, Bad, End };
    Type type = End;
    std::string text;
    SourceLocation location;
};

std::string describe(const Token& token) {
    switch (token.type) {
        case Token::Ident: return "'" + token.text + "'";
        case Token::Str: return "string \"" + token.text + "\"";
        case Token::LBrace: return "'{'";
        case Token::RBrace: return "'}'";
        case Token::Arrow: return "'->'";
        case Token::Comma: return "','";
        case Token::Bad: return "character '" + token.text + "'";
        case Token::End: return "end of file";
    }
    return "?";
}

class Lexer {
public:
    Lexer(std::string_view text, std::string file)
        : text_(text), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
                continue;
            }
            SourceLocation loc = here();
            if (c == '{') {
                bump();
                tokens.push_back({Token::LBrace, "{", loc});
            } else if (c == '}') {
                bump();
                tokens.push_back({Token::RBrace, "}", loc});
            } else if (c == ',') {
                bump();
                tokens.push_back({Token::Comma, ",", loc});
            } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                bump();
                bump();
                tokens.push_back({Token::Arrow, "->", loc});
            } else if (c == '"') {
                tokens.push_back(lex_string(loc));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    word.push_back(text_[pos_]);
                    bump();
                }
                tokens.push_back({Token::Ident, std::move(word), loc});
            } else {
                bump();
                tokens.push_back({Token::Bad, std::string(1, c), loc});
            }
        }
        tokens.push_back({Token::End, "", here()});
        return tokens;
    }

private:
    SourceLocation here() const { return {file_, line_, column_}; }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    Token lex_string(SourceLocation loc) {
        bump();  // opening quote
        std::string value;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '"') {
                bump();
                return {Token::Str, std::move(value), loc};
            }
            if (c == '\n') break;
            if (c == '\\') {
                if (pos_ + 1 < text_.size() &&
                    (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
                    bump();
                    value.push_back(text_[pos_]);
                    bump();
                    continue;
                }
                return {Token::Bad, "\\", loc};
            }
            value.push_back(c);
            bump();
        }
        // unterminated
        return {Token::Bad, "\"", loc};
    }

    std::string_view text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct ParseError {
    Diagnostic diagnostic;
};

class Parser {
public:
    Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::pair<ast::ModelAst, std::vector<Diagnostic>> run() {
        ast::ModelAst model;
        while (peek().type != Token::End) {
            try {
                model.declarations.push_back(parse_declaration());
            } catch (const ParseError& error) {
                diagnostics_.push_back(error.diagnostic);
                recover();
            }
        }
        return {std::move(model), std::move(diagnostics_)};
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    Token advance() {
        Token token = peek();
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return token;
    }

    [[noreturn]] void fail(const Token& at, std::string message) {
        Diagnostic d;
        d.code = "E-SYNTAX";
        d.severity = Severity::Error;
        d.subjects = {"<syntax>"};
        d.message = std::move(message);
        d.location = at.location;
        throw ParseError{std::move(d)};
    }

    // Skip to the next top-level keyword outside the current brace nesting.
    void recover() {
        int depth = 0;
        while (peek().type != Token::End) {
            const Token& token = peek();
            if (token.type == Token::LBrace) {
                ++depth;
            } else if (token.type == Token::RBrace) {
                --depth;
            } else if (depth <= 0 && token.type == Token::Ident &&
                       is_top_level_keyword(token.text)) {
                return;
            }
            advance();
        }
    }

    Token expect(Token::Type type, const char* what) {
        if (peek().type != type) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
        return advance();
    }

    std::string expect_string() { return expect(Token::Str, "a quoted string").text; }

    Token expect_ident() {
        if (peek().type != Token::Ident) fail(peek(), "expected an identifier, found " + describe(peek()));
        return advance();
    }

    void expect_keyword(const char* word) {
        if (peek().type != Token::Ident || peek().text != word) {
            fail(peek(), std::string("expected '") + word + "', found " + describe(peek()));
        }
        advance();
    }

    bool at_keyword(const char* word) const {
        return peek().type == Token::Ident && peek().text == word;
    }

    ast::Declaration parse_declaration() {
        const Token& token = peek();
        if (token.type != Token::Ident || !is_top_level_keyword(token.text)) {
            fail(token, "expected a top-level declaration, found " + describe(token));
        }
        if (token.text == "process") return parse_process();
        if (token.text == "dialog") return parse_dialog();
        if (token.text == "component") return parse_component(false);
        if (token.text == "external_system") return parse_component(true);
        if (token.text == "class") return parse_class();
        if (token.text == "node") return parse_node();
        return parse_bind();
    }

    // <keyword> "<name>" as <ID>
    void parse_header(std::string& name, std::string& id) {
        name = expect_string();
        expect_keyword("as");
        id = expect_ident().text;
    }

    ast::ProcessDecl parse_process() {
        ast::ProcessDecl decl;
        decl.location = advance().location;
        parse_header(decl.name, decl.id);
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            if (!at_keyword("function")) {
                fail(peek(), "expected 'function', found " + describe(peek()));
            }
            decl.functions.push_back(parse_function());
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::FunctionDecl parse_function() {
        ast::FunctionDecl decl;
        decl.location = advance().location;  // 'function'
        parse_header(decl.name, decl.id);
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            if (at_keyword("function")) {
                decl.functions.push_back(parse_function());
            } else if (at_keyword("operation")) {
                decl.operations.push_back(parse_operation());
            } else {
                fail(peek(), "expected 'function' or 'operation', found " + describe(peek()));
            }
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::OperationDecl parse_operation() {
        ast::OperationDecl decl;
        decl.location = advance().location;  // 'operation'
        parse_header(decl.name, decl.id);
        if (at_keyword("automated")) {
            decl.automated = true;
            advance();
        }
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            if (at_keyword("performer")) {
                Token kw = advance();
                if (decl.performer) fail(kw, "duplicate 'performer' in operation '" + decl.id + "'");
                decl.performer = expect_string();
            } else if (at_keyword("service")) {
                Token kw = advance();
                if (decl.service) fail(kw, "duplicate 'service' in operation '" + decl.id + "'");
                ast::ServiceDecl service;
                service.location = kw.location;
                expect_keyword("as");
                service.id = expect_ident().text;
                expect(Token::LBrace, "'{'");
                while (!at_block_end()) {
                    expect_keyword("auto_fn");
                    ast::AutoFnDecl fn;
                    fn.location = tokens_[pos_ - 1].location;
                    parse_header(fn.name, fn.id);
                    service.auto_fns.push_back(std::move(fn));
                }
                expect(Token::RBrace, "'}'");
                decl.service = std::move(service);
            } else {
                fail(peek(), "expected 'performer' or 'service', found " + describe(peek()));
            }
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    std::vector<ast::Ref> parse_ref_list() {
        std::vector<ast::Ref> refs;
        Token first = expect_ident();
        refs.push_back({first.text, first.location});
        while (peek().type == Token::Comma) {
            advance();
            Token next = expect_ident();
            refs.push_back({next.text, next.location});
        }
        return refs;
    }

    ast::DialogDecl parse_dialog() {
        ast::DialogDecl decl;
        decl.location = advance().location;
        parse_header(decl.name, decl.id);
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            if (at_keyword("implements")) {
                advance();
                for (auto& ref : parse_ref_list()) decl.implements.push_back(std::move(ref));
            } else if (at_keyword("agent")) {
                Token kw = advance();
                Token value = expect_ident();
                if (value.text != "user" && value.text != "system" && value.text != "external") {
                    fail(value, "agent must be one of user, system, external");
                }
                if (decl.agent) fail(kw, "duplicate 'agent' in dialog '" + decl.id + "'");
                decl.agent = value.text;
            } else if (at_keyword("input") || at_keyword("output")) {
                bool is_input = peek().text == "input";
                Token kw = advance();
                expect_keyword(is_input ? "resource" : "product");
                ast::IoObjectDecl object;
                object.location = kw.location;
                parse_header(object.name, object.id);
                auto& slot = is_input ? decl.input : decl.output;
                if (slot) fail(kw, std::string("duplicate '") + (is_input ? "input" : "output") + "' in dialog '" + decl.id + "'");
                slot = std::move(object);
            } else if (at_keyword("form")) {
                Token kw = advance();
                if (decl.form) fail(kw, "duplicate 'form' in dialog '" + decl.id + "'");
                decl.form_location = kw.location;
                decl.form = expect_string();
            } else if (at_keyword("view_fn")) {
                ast::ViewFnDecl fn;
                fn.location = advance().location;
                parse_header(fn.name, fn.id);
                expect_keyword("category");
                Token category = expect_ident();
                if (category.text != "precondition" && category.text != "io" &&
                    category.text != "control" && category.text != "error" &&
                    category.text != "postcondition") {
                    fail(category, "unknown view function category '" + category.text + "'");
                }
                fn.category = category.text;
                decl.view_fns.push_back(std::move(fn));
            } else {
                fail(peek(), "unexpected " + describe(peek()) + " in dialog body");
            }
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::ComponentDecl parse_component(bool external) {
        ast::ComponentDecl decl;
        decl.external = external;
        decl.location = advance().location;
        parse_header(decl.name, decl.id);
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            expect_keyword("module");
            ast::ModuleDecl module;
            module.location = tokens_[pos_ - 1].location;
            parse_header(module.name, module.id);
            decl.modules.push_back(std::move(module));
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::ClassDecl parse_class() {
        ast::ClassDecl decl;
        decl.location = advance().location;
        parse_header(decl.name, decl.id);
        if (at_keyword("hosted_by")) {
            advance();
            Token host = expect_ident();
            decl.hosted_by = ast::Ref{host.text, host.location};
        }
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            expect_keyword("method");
            ast::MethodDecl method;
            method.location = tokens_[pos_ - 1].location;
            parse_header(method.name, method.id);
            decl.methods.push_back(std::move(method));
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::NodeDecl parse_node() {
        ast::NodeDecl decl;
        decl.location = advance().location;
        parse_header(decl.name, decl.id);
        expect(Token::LBrace, "'{'");
        while (!at_block_end()) {
            if (at_keyword("requirements")) {
                Token kw = advance();
                if (decl.requirements) fail(kw, "duplicate 'requirements' in node '" + decl.id + "'");
                decl.requirements = expect_string();
            } else if (at_keyword("deploys")) {
                advance();
                for (auto& ref : parse_ref_list()) decl.deploys.push_back(std::move(ref));
            } else {
                fail(peek(), "unexpected " + describe(peek()) + " in node body");
            }
        }
        expect(Token::RBrace, "'}'");
        return decl;
    }

    ast::BindStmt parse_bind() {
        ast::BindStmt stmt;
        stmt.location = advance().location;
        Token src = expect_ident();
        stmt.src = {src.text, src.location};
        expect(Token::Arrow, "'->'");
        stmt.dsts = parse_ref_list();
        return stmt;
    }

    bool at_block_end() {
        if (peek().type == Token::End) fail(peek(), "unexpected end of file, expected '}'");
        return peek().type == Token::RBrace;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::pair<ast::ModelAst, std::vector<Diagnostic>> parse(std::string_view text,
                                                        std::string source_name) {
    if (auto bad = first_invalid_utf8(text)) {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < *bad; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        Diagnostic d;
        d.code = "E-ENCODING";
        d.severity = Severity::Error;
        d.subjects = {"<input>"};
        d.message = "input is not valid UTF-8";
        d.location = SourceLocation{std::move(source_name), line, column};
        return {ast::ModelAst{}, {std::move(d)}};
    }
    Lexer lexer(text, std::move(source_name));
    Parser parser(lexer.run());
    return parser.run();
}

}  // namespace archdl
