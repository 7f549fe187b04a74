#include "golodkit/ideal_io.hpp"

#include <cctype>
#include <unordered_map>

namespace golodkit {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace {

// Recursive-descent reader over the text grammar.
class Reader {
public:
    explicit Reader(const std::string& text) : s_(text) {}

    IdealSource run()
    {
        IdealSource out;
        expect_keyword("ring");
        while (true) {
            skip();
            if (peek() == ';') {
                ++pos_;
                break;
            }
            auto [l, c] = where();
            std::string id = ident();
            if (index_.count(id))
                throw ParseError("duplicate variable '" + id + "'", l, c);
            index_[id] = out.vars.size();
            out.vars.push_back(id);
        }
        if (out.vars.empty())
            fail("ring declares no variables");
        expect_keyword("ideal");
        skip();
        if (peek() == ';')
            fail("empty generator list");
        while (true) {
            out.generators.push_back(term(out.vars.size()));
            skip();
            char c = peek();
            ++pos_;
            if (c == ';')
                break;
            if (c != ',') {
                --pos_;
                fail(c ? std::string("expected ',' or ';', found '") + c + "'" : "unexpected end of input");
            }
        }
        skip();
        if (pos_ < s_.size())
            fail("trailing input after ideal");
        return out;
    }

private:
    Monomial term(std::size_t nvars)
    {
        Monomial m(nvars);
        while (true) {
            skip();
            auto [l, c] = where();
            std::string id = ident();
            auto it = index_.find(id);
            if (it == index_.end())
                throw ParseError("unknown variable '" + id + "'", l, c);
            std::uint64_t e = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                e = uint();
            }
            std::uint64_t total = std::uint64_t{m[it->second]} + e;
            if (total > 0xffffffffull)
                throw ParseError("exponent overflow for '" + id + "'", l, c);
            m.set(it->second, static_cast<std::uint32_t>(total));
            skip();
            if (peek() != '*')
                return m;
            ++pos_;
        }
    }

    std::uint64_t uint()
    {
        auto [l, c] = where();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("malformed exponent", l, c);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > 0xffffffffull)
                throw ParseError("exponent exceeds 32 bits", l, c);
        }
        if (std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("malformed exponent", l, c);
        return v;
    }

    std::string ident()
    {
        char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail(c ? std::string("expected identifier, found '") + c + "'" : "expected identifier, found end of input");
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void expect_keyword(const std::string& kw)
    {
        skip();
        auto [l, c] = where();
        std::size_t save = pos_;
        std::string got = std::isalpha(static_cast<unsigned char>(peek())) ? ident() : std::string();
        if (got != kw) {
            pos_ = save;
            throw ParseError("expected '" + kw + "'", l, c);
        }
    }

    void skip()
    {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            else if (s_[pos_] == '#')
                while (pos_ < s_.size() && s_[pos_] != '\n')
                    ++pos_;
            else
                break;
        }
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::pair<int, int> where() const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        auto [l, c] = where();
        throw ParseError(msg, l, c);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace

IdealSource parse_ideal_text(const std::string& text)
{
    return Reader(text).run();
}

IdealSource parse_ideal_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    IdealSource out;
    try {
        out.vars = j.at("vars").get<std::vector<std::string>>();
        for (const auto& row : j.at("generators")) {
            auto e = row.get<std::vector<std::int64_t>>();
            if (e.size() != out.vars.size())
                throw ParseError("generator row has " + std::to_string(e.size()) + " exponents, expected " +
                                     std::to_string(out.vars.size()),
                                 1, 1);
            std::vector<std::uint32_t> u;
            for (auto v : e) {
                if (v < 0 || v > 0xffffffffll)
                    throw ParseError("malformed exponent " + std::to_string(v), 1, 1);
                u.push_back(static_cast<std::uint32_t>(v));
            }
            out.generators.emplace_back(u);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ideal JSON: ") + e.what(), 1, 1);
    }
    if (out.vars.empty())
        throw ParseError("ring declares no variables", 1, 1);
    if (out.generators.empty())
        throw ParseError("empty generator list", 1, 1);
    return out;
}

IdealSource parse_ideal_source(const std::string& text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '{' ? parse_ideal_json(text) : parse_ideal_text(text);
    }
    throw ParseError("empty input", 1, 1);
}

MonomialIdeal parse_ideal(const std::string& text)
{
    auto src = parse_ideal_source(text);
    return minimalize(std::move(src.vars), src.generators).ideal;
}

std::string render_ideal(const MonomialIdeal& ideal)
{
    return ideal.to_string();
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.generators())
        gens.push_back(g.exponents());
    return {{"vars", ideal.vars()}, {"generators", gens}};
}

} // namespace golodkit
