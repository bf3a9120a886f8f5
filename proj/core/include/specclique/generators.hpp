#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "specclique/graph.hpp"

namespace specclique {

enum class Family {
    Complete,
    Cycle,
    Wheel,
    Barbell,
    Circulant,
    Kneser,
    Johnson,
    GcdGraph,
    FoldedCube,
    ComplementOf,
    Named,
};

/// Tagged generator description, written "name:arg:arg,arg"
/// (e.g. "circulant:16:1,2,3,4", "kneser:5:2", "complement:foldedcube:7").
struct FamilySpec {
    Family family = Family::Complete;
    std::vector<int> params;
    std::string name;                    // Named only
    std::shared_ptr<FamilySpec> inner;   // ComplementOf only

    std::string to_string() const;
};

/// Parses the mini-language. Throws std::invalid_argument on unknown family,
/// bad arity or out-of-range parameters.
FamilySpec parse_family_spec(std::string_view text);

/// Builds the graph for a validated spec. The result carries the canonical
/// spec string as its label.
Graph generate(const FamilySpec& spec);

inline Graph generate(std::string_view spec_text) { return generate(parse_family_spec(spec_text)); }

/// Graph6 literals for the named graphs (petersen, coxeter, schlafli).
const std::vector<std::string>& named_graph_names();

}  // namespace specclique
