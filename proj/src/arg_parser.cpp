#include "arg_parser.hpp"

#include <cctype>

namespace subtyper::detail {

namespace {

bool is_name_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '$';
}

bool is_name_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '$';
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Label resolve_alias(std::string name, const NamingConfig& cfg) {
    if (name == "Object") return cfg.top;
    if (name == "Null") return cfg.bottom;
    return name;
}

}  // namespace

void skip_ws(Cursor& c) {
    while (!c.done() && std::isspace(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
}

bool match_token(Cursor& c, std::string_view token) {
    std::string_view core = trimmed(token);
    if (core.empty()) return false;
    std::size_t save = c.pos;
    // Whitespace inside the token (as in "? <: ") matches any spacing,
    // including none.
    std::size_t at = 0;
    while (at < core.size()) {
        if (std::isspace(static_cast<unsigned char>(core[at]))) {
            ++at;
            continue;
        }
        std::size_t len = 0;
        while (at + len < core.size() &&
               !std::isspace(static_cast<unsigned char>(core[at + len])))
            ++len;
        skip_ws(c);
        if (c.text.substr(c.pos, len) != core.substr(at, len)) {
            c.pos = save;
            return false;
        }
        c.pos += len;
        at += len;
    }
    return true;
}

void fail(const Cursor& c, const std::string& what) {
    throw ParseError(what, 1, c.pos + 1);
}

Label parse_type_prefix(Cursor& c, const NamingConfig& cfg) {
    skip_ws(c);
    if (c.done() || !is_name_start(c.text[c.pos]))
        fail(c, "expected a type name");
    std::size_t start = c.pos;
    while (!c.done() && is_name_char(c.text[c.pos])) ++c.pos;
    Label name = resolve_alias(std::string(c.text.substr(start, c.pos - start)), cfg);
    // An instantiation bracket binds only when flush against the name;
    // a spaced '<' belongs to a bounds token instead.
    if (c.text.substr(c.pos, cfg.open_bracket.size()) == cfg.open_bracket) {
        c.pos += cfg.open_bracket.size();
        Interval arg = parse_arg_prefix(c, cfg);
        skip_ws(c);
        if (c.text.substr(c.pos, cfg.close_bracket.size()) != cfg.close_bracket)
            fail(c, "expected '" + cfg.close_bracket + "'");
        c.pos += cfg.close_bracket.size();
        return name + cfg.open_bracket + render_interval(arg, cfg) + cfg.close_bracket;
    }
    return name;
}

Interval parse_arg_prefix(Cursor& c, const NamingConfig& cfg) {
    skip_ws(c);
    if (match_token(c, cfg.lower_bounded_prefix))
        return {cfg.bottom, parse_type_prefix(c, cfg)};
    if (match_token(c, cfg.wildcard))
        return {cfg.bottom, cfg.top};
    Label lo = parse_type_prefix(c, cfg);
    if (match_token(c, cfg.upper_bounded_suffix))
        return {lo, cfg.top};
    if (match_token(c, cfg.interval_separator))
        return {lo, parse_type_prefix(c, cfg)};
    return {lo, lo};
}

void expect_end(Cursor& c) {
    skip_ws(c);
    if (!c.done()) fail(c, "unexpected trailing input");
}

}  // namespace subtyper::detail
