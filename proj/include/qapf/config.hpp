#pragma once

#include <istream>
#include <string>

#include "qapf/graph.hpp"
#include "qapf/permutation.hpp"

namespace qapf {

/// Combinatorial limits guarding default runs.
struct Caps {
    int enumeration = kDefaultEnumerationCap;  // largest n walked over all of S_n
    int clique = kDefaultCliqueCap;            // largest graph for the exact clique solver

    bool raised() const { return enumeration > kDefaultEnumerationCap || clique > kDefaultCliqueCap; }
};

/// key = value lines; '#' starts a comment. Keys: enumeration_cap, clique_cap.
/// Unknown keys and malformed values are errors naming the line.
Caps parse_caps(std::istream& in, const std::string& source = "<config>");
Caps read_caps_file(const std::string& path);

/// Raising a cap above its default takes an explicit acknowledgment.
void check_acknowledged(const Caps& caps, bool acknowledged);

}  // namespace qapf
