#pragma once

#include "golodkit/monomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace golodkit {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Unvalidated parse result: generators exactly as written.
struct IdealSource {
    std::vector<std::string> vars;
    std::vector<Monomial> generators;
};

/// `ring x1 x2; ideal x1*x2^2, x2;` ('#' starts a comment).
IdealSource parse_ideal_text(const std::string& text);
/// {"vars": [...], "generators": [[...], ...]}
IdealSource parse_ideal_json(const std::string& text);
/// Dispatches on the first non-blank character.
IdealSource parse_ideal_source(const std::string& text);

/// Parse then minimalize.
MonomialIdeal parse_ideal(const std::string& text);

std::string render_ideal(const MonomialIdeal& ideal);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

} // namespace golodkit
