#include "subtyper/decls.hpp"

#include <cctype>
#include <map>

namespace subtyper {

namespace {

struct Token {
    enum Kind { kw_class, kw_extends, ident, lt, gt, comma, lbrace, rbrace, eof };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        std::size_t line = line_, col = column_;
        if (pos_ >= src_.size()) return {Token::eof, "", line, col};
        char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '$') {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_' || src_[pos_] == '$'))
                advance();
            std::string word(src_.substr(start, pos_ - start));
            if (word == "class") return {Token::kw_class, word, line, col};
            if (word == "extends") return {Token::kw_extends, word, line, col};
            return {Token::ident, word, line, col};
        }
        advance();
        switch (ch) {
            case '<': return {Token::lt, "<", line, col};
            case '>': return {Token::gt, ">", line, col};
            case ',': return {Token::comma, ",", line, col};
            case '{': return {Token::lbrace, "{", line, col};
            case '}': return {Token::rbrace, "}", line, col};
            default:
                throw ParseError("unexpected character '" + std::string(1, ch) + "'",
                                 line, col);
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char ch = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else if (ch == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const std::set<std::string> reserved_names = {"O", "N", "Object", "Null"};

Label canonical_class_ref(const std::string& name) {
    if (name == "Object") return "O";
    if (name == "Null") return "N";
    return name;
}

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

class DeclParser {
public:
    explicit DeclParser(std::string_view src) : lexer_(src) { shift(); }

    ClassTable parse() {
        ClassTable table;
        while (look_.kind != Token::eof) {
            positions_.push_back({look_.line, look_.column});
            table.decls.push_back(parse_decl());
        }
        validate(table);
        return table;
    }

private:
    void shift() { look_ = lexer_.next(); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (look_.kind != kind)
            throw ParseError("expected " + what, look_.line, look_.column);
        Token t = look_;
        shift();
        return t;
    }

    ClassDecl parse_decl() {
        expect(Token::kw_class, "'class'");
        Token name = expect(Token::ident, "a class name");
        if (reserved_names.count(name.text))
            throw ParseError("'" + name.text + "' is a reserved class name", name.line,
                             name.column);
        ClassDecl decl;
        decl.name = name.text;
        if (look_.kind == Token::lt) {
            shift();
            decl.type_param = expect(Token::ident, "a type parameter name").text;
            if (look_.kind == Token::comma)
                throw ParseError(
                    "multiple type parameters are not supported; classes take at "
                    "most one",
                    look_.line, look_.column);
            expect(Token::gt, "'>'");
        }
        if (look_.kind == Token::kw_extends) {
            shift();
            Token super = expect(Token::ident, "a superclass name");
            decl.super_name = canonical_class_ref(super.text);
            if (look_.kind == Token::lt) parse_super_arg(decl);
        }
        expect(Token::lbrace, "'{'");
        expect(Token::rbrace, "'}'");
        return decl;
    }

    // The only supported superclass argument is the class's own type
    // variable; anything nested or foreign is out of construction scope.
    void parse_super_arg(ClassDecl& decl) {
        Token open = expect(Token::lt, "'<'");
        Token arg = look_;
        if (arg.kind != Token::ident)
            throw UnsupportedInstantiationError(
                "superclass type argument must be the class's type parameter",
                arg.line, arg.column);
        shift();
        if (look_.kind != Token::gt)
            throw UnsupportedInstantiationError(
                "superclass instantiation '" + decl.super_name.value_or("") + "<" +
                    arg.text + "...>' is not of the supported form 'extends Super<" +
                    decl.type_param.value_or("T") + ">'",
                open.line, open.column);
        shift();
        if (!decl.type_param || arg.text != *decl.type_param)
            throw UnsupportedInstantiationError(
                "superclass type argument '" + arg.text +
                    "' must be the class's own type parameter" +
                    (decl.type_param ? " '" + *decl.type_param + "'" : ""),
                arg.line, arg.column);
        decl.super_arg = arg.text;
    }

    void validate(ClassTable& table) {
        std::map<Label, std::size_t> byname;
        for (std::size_t i = 0; i < table.decls.size(); ++i) {
            const ClassDecl& d = table.decls[i];
            if (!byname.emplace(d.name, i).second)
                throw DuplicateClassError("class '" + d.name + "' is declared twice",
                                          positions_[i].line, positions_[i].column);
            table.names.insert(d.name);
        }
        for (std::size_t i = 0; i < table.decls.size(); ++i) {
            const ClassDecl& d = table.decls[i];
            const SourcePos& at = positions_[i];
            if (!d.super_name) continue;
            if (*d.super_name == "O") {
                if (d.super_arg)
                    throw UnsupportedInstantiationError(
                        "the top class takes no type arguments", at.line, at.column);
                continue;
            }
            auto it = byname.find(*d.super_name);
            if (it == byname.end())
                throw UnknownSuperclassError("unknown superclass '" + *d.super_name +
                                                 "' of class '" + d.name + "'",
                                             at.line, at.column);
            const ClassDecl& super = table.decls[it->second];
            if (super.type_param && !d.super_arg)
                throw UnsupportedInstantiationError(
                    "generic superclass '" + super.name +
                        "' cannot be extended raw; write 'extends " + super.name + "<" +
                        d.type_param.value_or("T") + ">'",
                    at.line, at.column);
            if (!super.type_param && d.super_arg)
                throw UnsupportedInstantiationError("superclass '" + super.name +
                                                        "' is not generic but was "
                                                        "given a type argument",
                                                    at.line, at.column);
        }
        for (std::size_t i = 0; i < table.decls.size(); ++i) {
            std::set<Label> seen{table.decls[i].name};
            const ClassDecl* cur = &table.decls[i];
            while (cur->super_name && *cur->super_name != "O") {
                cur = &table.decls[byname.at(*cur->super_name)];
                if (!seen.insert(cur->name).second)
                    throw ParseError("cyclic extends chain through class '" + cur->name +
                                         "'",
                                     positions_[i].line, positions_[i].column);
            }
        }
    }

    Lexer lexer_;
    Token look_{Token::eof, "", 1, 1};
    std::vector<SourcePos> positions_;
};

}  // namespace

ClassTable parse_decls(std::string_view source) { return DeclParser(source).parse(); }

std::string to_source(const ClassTable& table) {
    std::string out;
    for (const ClassDecl& d : table.decls) {
        out += "class " + d.name;
        if (d.type_param) out += "<" + *d.type_param + ">";
        if (d.super_name) {
            out += " extends " + *d.super_name;
            if (d.super_arg) out += "<" + *d.super_arg + ">";
        }
        out += " {}\n";
    }
    return out;
}

SubclassingGraph build_subclassing(const ClassTable& table, const NamingConfig& cfg) {
    SubclassingGraph out;
    for (const Label& name : table.names)
        if (name == cfg.top || name == cfg.bottom)
            throw NameCollisionError("class '" + name +
                                     "' collides with the top or bottom class");
    DirectedGraph raw;
    raw.add_vertex(cfg.top);
    raw.add_vertex(cfg.bottom);
    raw.add_edge(cfg.bottom, cfg.top);
    for (const ClassDecl& d : table.decls) {
        raw.add_vertex(d.name);
        raw.add_edge(cfg.bottom, d.name);
        if (d.super_name && *d.super_name != "O")
            raw.add_edge(d.name, *d.super_name);
        else
            raw.add_edge(d.name, cfg.top);
        if (d.type_param) out.generics.insert(d.name);
    }
    if (!is_dag(raw))
        throw CyclicGraphError("class hierarchy contains a cycle");
    out.graph = transitive_reduction(raw);
    return out;
}

}  // namespace subtyper
