#include "qapf/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace qapf {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_positive(const std::string& text, const std::string& where)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 1) throw std::invalid_argument(where + ": expected a positive integer, got '" + text + "'");
    return value;
}

}  // namespace

Caps parse_caps(std::istream& in, const std::string& source)
{
    Caps caps;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string where = source + ":" + std::to_string(number);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "enumeration_cap") {
            caps.enumeration = parse_positive(value, where);
        } else if (key == "clique_cap") {
            caps.clique = parse_positive(value, where);
            if (caps.clique > 64) throw std::invalid_argument(where + ": clique_cap cannot exceed 64");
        } else {
            throw std::invalid_argument(where + ": unknown key '" + key + "'");
        }
    }
    return caps;
}

Caps read_caps_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    return parse_caps(in, path);
}

void check_acknowledged(const Caps& caps, bool acknowledged)
{
    if (caps.raised() && !acknowledged) {
        throw std::invalid_argument("config raises a cap above its default (enumeration " +
                                    std::to_string(kDefaultEnumerationCap) + ", clique " +
                                    std::to_string(kDefaultCliqueCap) + "); pass --acknowledge-caps to proceed");
    }
}

}  // namespace qapf
