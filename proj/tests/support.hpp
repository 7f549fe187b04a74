#pragma once

#include "golodkit/ideal_io.hpp"

#include <fstream>
#include <iterator>
#include <memory>
#include <stdexcept>
#include <string>

namespace golodkit::testing {

inline std::string fixture_path(const std::string& name)
{
    return std::string(GOLODKIT_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name)
{
    std::ifstream f(fixture_path(name));
    if (!f)
        throw std::runtime_error("missing fixture " + name);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::shared_ptr<const MonomialIdeal> fixture_ideal(const std::string& name)
{
    return std::make_shared<const MonomialIdeal>(parse_ideal(read_fixture(name + ".ideal")));
}

inline std::shared_ptr<const MonomialIdeal> ideal(const std::string& text)
{
    return std::make_shared<const MonomialIdeal>(parse_ideal(text));
}

} // namespace golodkit::testing
