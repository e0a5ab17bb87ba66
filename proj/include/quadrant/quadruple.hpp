#pragma once

#include "quadrant/group.hpp"

#include <string>
#include <string_view>

namespace quadrant {

/// Which realization of the quadruple N ⊂ P, Q ⊂ M the group data encodes.
///   crossed: N = S⋊L, P = S⋊H, Q = S⋊K, M = S⋊G
///   fixed:   N = S^G, P = S^H, Q = S^K, M = S   (base must be trivial)
enum class Picture { crossed, fixed };

std::string to_string(Picture picture);
Picture parse_picture(std::string_view text);

/// Whether trivial H or K are accepted in the crossed picture. The strict
/// form matches the standing assumption of the group examples; the relaxed
/// form is needed for batch scans and for the P = M, Q = N degenerate case.
enum class Strictness { strict, allow_degenerate };

struct QuadrupleSpec {
    GroupPtr group;
    Subgroup upper_left;   // H, defines P
    Subgroup upper_right;  // K, defines Q
    Subgroup base;         // L, defines N
    Picture picture = Picture::crossed;

    std::size_t group_order() const { return group->order(); }
};

QuadrupleSpec make_quadruple(GroupPtr group, Subgroup h, Subgroup k, Subgroup l, Picture picture,
                             Strictness strictness = Strictness::strict);

}  // namespace quadrant
