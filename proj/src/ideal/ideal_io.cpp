#include "cwl/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cwl {

namespace {

std::vector<std::string> split_factors(const std::string& line) {
    std::vector<std::string> names;
    std::string current;
    for (char c : line + "*") {
        if (c == '*') {
            auto caret = current.find('^');
            std::string name = current.substr(0, caret);
            name.erase(std::remove_if(name.begin(), name.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                       name.end());
            if (!name.empty() && name != "1")
                names.push_back(name);
            current.clear();
        } else {
            current += c;
        }
    }
    return names;
}

} // namespace

MonomialIdeal parse_ideal_text(std::istream& in, const std::optional<std::vector<std::string>>& ambient) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::optional<std::vector<std::string>> ring = ambient;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (auto colon = line.find("ring:"); colon != std::string::npos) {
            std::istringstream names(line.substr(colon + 5));
            std::vector<std::string> vars;
            for (std::string v; names >> v;)
                vars.push_back(v);
            ring = vars;
            continue;
        }
        lines.emplace_back(line_no, line);
    }
    if (!ring) {
        std::vector<std::string> vars;
        for (const auto& [no, text] : lines)
            for (const auto& name : split_factors(text))
                if (std::find(vars.begin(), vars.end(), name) == vars.end())
                    vars.push_back(name);
        ring = vars;
    }
    std::vector<Monomial> gens;
    for (const auto& [no, text] : lines) {
        try {
            gens.push_back(parse_monomial(text, *ring));
        } catch (const Error& e) {
            throw ParseError(no, e.what());
        }
    }
    return MonomialIdeal(*ring, std::move(gens));
}

MonomialIdeal parse_ideal_text(const std::string& text, const std::optional<std::vector<std::string>>& ambient) {
    std::istringstream in(text);
    return parse_ideal_text(in, ambient);
}

std::string to_ideal_text(const MonomialIdeal& i) {
    std::string out = "ring:";
    for (const auto& v : i.ambient())
        out += " " + v;
    out += "\n";
    for (const auto& g : i.gens())
        out += g.to_string(i.ambient()) + "\n";
    return out;
}

nlohmann::json to_json(const MonomialIdeal& i) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : i.gens())
        gens.push_back(g.exponents());
    return {{"ambient", i.ambient()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    try {
        auto ambient = j.at("ambient").get<std::vector<std::string>>();
        std::vector<Monomial> gens;
        for (const auto& g : j.at("gens"))
            gens.emplace_back(g.get<std::vector<Exponent>>());
        return MonomialIdeal(std::move(ambient), std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad ideal JSON: ") + e.what());
    }
}

} // namespace cwl
