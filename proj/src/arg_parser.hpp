#pragma once

#include <string_view>

#include "subtyper/intervals.hpp"

namespace subtyper::detail {

// Recursive-descent cursor over rendered type/interval syntax. Tokens
// are matched against their whitespace-trimmed cores so inputs like
// "C< ? <: C<?> >" normalize to the rendered spelling. Brackets must sit
// flush against the class name; everything else tolerates spacing.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
};

void skip_ws(Cursor& c);

// Matches the trimmed core of `token` after optional whitespace;
// advances on success. Empty cores never match.
bool match_token(Cursor& c, std::string_view token);

[[noreturn]] void fail(const Cursor& c, const std::string& what);

// Parses a ground type expression prefix and returns its canonical
// label (aliases resolved, argument re-rendered via cfg).
Label parse_type_prefix(Cursor& c, const NamingConfig& cfg);

// Parses an interval argument prefix into canonical endpoint labels.
Interval parse_arg_prefix(Cursor& c, const NamingConfig& cfg);

void expect_end(Cursor& c);

}  // namespace subtyper::detail
