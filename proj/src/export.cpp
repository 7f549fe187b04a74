#include "golodkit/export.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace golodkit {

CellId parse_cell_name(const std::string& name, std::size_t r)
{
    auto bad = [&]() { return std::invalid_argument("malformed cell name '" + name + "'"); };
    if (name.size() < 2 || name[0] != 'u')
        throw bad();
    std::vector<int> idx;
    if (name[1] == '{') {
        if (name.back() != '}')
            throw bad();
        std::string body = name.substr(2, name.size() - 3);
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            idx.push_back(std::stoi(part));
        }
    } else {
        if (r > 9)
            throw std::invalid_argument("cell '" + name + "' needs braces when there are more than 9 generators");
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(name[k])) || name[k] == '0')
                throw bad();
            idx.push_back(name[k] - '0');
        }
    }
    CellId c = 0;
    for (int i : idx) {
        if (i < 1 || static_cast<std::size_t>(i) > r)
            throw std::invalid_argument("cell '" + name + "' refers to generator " + std::to_string(i) +
                                        " of " + std::to_string(r));
        CellId bit = CellId{1} << (i - 1);
        if (c & bit)
            throw std::invalid_argument("cell '" + name + "' repeats a generator");
        c |= bit;
    }
    return c;
}

std::string export_dot(const MorseGraph& g, const Matching& m)
{
    const auto& f = g.complex();
    const auto& ideal = f.ideal();
    std::size_t r = ideal.size();
    std::set<std::pair<CellId, CellId>> matched;
    for (const auto& a : m.arrows())
        matched.insert({a.from, a.to});
    std::ostringstream os;
    os << "digraph G {\n  rankdir=BT;\n  node [shape=box, fontname=\"Helvetica\"];\n";
    for (CellId c : f.cells())
        os << "  \"" << cell_name(c, r) << "\" [label=\"" << cell_name(c, r) << "\\n"
           << f.multidegree(c).to_string(ideal.vars()) << "\"];\n";
    for (const auto& e : g.edges()) {
        os << "  \"" << cell_name(e.from, r) << "\" -> \"" << cell_name(e.to, r) << "\"";
        if (matched.count({e.from, e.to}))
            os << " [color=red, penwidth=2.5]";
        else if (e.invertible)
            os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json subset_json(CellId c)
{
    auto a = nlohmann::json::array();
    for (int i : cell_indices(c))
        a.push_back(i + 1);
    return a;
}

CellId cell_from_json(const nlohmann::json& j, std::size_t r)
{
    if (j.is_string())
        return parse_cell_name(j.get<std::string>(), r);
    if (!j.is_array())
        throw std::invalid_argument("a cell is a name or an array of generator indices");
    std::vector<int> idx;
    for (const auto& x : j) {
        int i = x.get<int>();
        if (i < 1 || static_cast<std::size_t>(i) > r)
            throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
        idx.push_back(i - 1);
    }
    return cell_from_indices(idx);
}

} // namespace

nlohmann::json matching_to_json(const BasedComplex& f, const Matching& m, const std::string& construction)
{
    using nlohmann::json;
    std::size_t r = f.ideal().size();
    json j;
    j["schema"] = "golodkit.matching/1";
    j["construction"] = construction;
    json arrows = json::array();
    for (const auto& a : m.arrows()) {
        json x = {{"from", cell_name(a.from, r)},
                  {"to", cell_name(a.to, r)},
                  {"from_subset", subset_json(a.from)},
                  {"to_subset", subset_json(a.to)}};
        if (a.stage > 0) {
            x["stage"] = a.stage;
            x["substep"] = a.substep;
        }
        arrows.push_back(x);
    }
    j["arrows"] = arrows;
    json crit = json::array();
    for (CellId c : m.critical(f))
        crit.push_back(cell_name(c, r));
    j["critical"] = crit;
    return j;
}

Matching matching_from_json(const nlohmann::json& j, std::size_t r)
{
    if (!j.contains("arrows") || !j["arrows"].is_array())
        throw std::invalid_argument("matching JSON needs an \"arrows\" array");
    Matching m;
    for (const auto& a : j["arrows"]) {
        Arrow arrow;
        arrow.from = cell_from_json(a.at("from"), r);
        arrow.to = cell_from_json(a.at("to"), r);
        arrow.stage = a.value("stage", 0);
        arrow.substep = a.value("substep", 0);
        m.add(arrow);
    }
    return m;
}

std::string ainf_table_csv(const AInfTable& t, const MonomialIdeal& ideal)
{
    std::size_t r = ideal.size();
    const auto& vars = ideal.vars();
    std::ostringstream os;
    if (t.arity == 2) {
        os << (t.morse_coordinates ? "nu2" : "mu2");
        for (CellId c : t.basis)
            os << "," << cell_name(c, r);
        os << "\n";
        std::size_t k = t.basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            os << cell_name(t.basis[i], r);
            for (std::size_t j = 0; j < k; ++j)
                os << "," << t.entries[i * k + j].second.to_string(vars, r);
            os << "\n";
        }
        return os.str();
    }
    for (int i = 0; i < t.arity; ++i)
        os << "input" << i + 1 << ",";
    os << "value\n";
    for (const auto& [tuple, value] : t.entries) {
        for (CellId c : tuple)
            os << cell_name(c, r) << ",";
        os << value.to_string(vars, r) << "\n";
    }
    return os.str();
}

nlohmann::json ainf_table_json(const AInfTable& t, const MonomialIdeal& ideal)
{
    using nlohmann::json;
    std::size_t r = ideal.size();
    json j;
    j["schema"] = "golodkit.ainf-table/1";
    j["arity"] = t.arity;
    j["coordinates"] = t.morse_coordinates ? "morse" : "taylor";
    json basis = json::array();
    for (CellId c : t.basis)
        basis.push_back(cell_name(c, r));
    j["basis"] = basis;
    json entries = json::array();
    for (const auto& [tuple, value] : t.entries) {
        json in = json::array();
        for (CellId c : tuple)
            in.push_back(cell_name(c, r));
        entries.push_back({{"inputs", in}, {"value", value.to_string(ideal.vars(), r)}});
    }
    j["entries"] = entries;
    return j;
}

} // namespace golodkit
