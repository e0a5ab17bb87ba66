#include "quadrant/quadruple.hpp"

#include "quadrant/error.hpp"

namespace quadrant {

std::string to_string(Picture picture) { return picture == Picture::crossed ? "crossed" : "fixed"; }

Picture parse_picture(std::string_view text) {
    if (text == "crossed") return Picture::crossed;
    if (text == "fixed") return Picture::fixed;
    throw InputError("picture must be 'crossed' or 'fixed', got '" + std::string(text) + "'");
}

QuadrupleSpec make_quadruple(GroupPtr group, Subgroup h, Subgroup k, Subgroup l, Picture picture,
                             Strictness strictness) {
    for (const Subgroup* s : {&h, &k, &l})
        if (s->parent() != group) throw DomainError("subgroup does not belong to the quadruple's group");
    if (!l.is_subgroup_of(h)) throw DomainError("base L is not contained in H");
    if (!l.is_subgroup_of(k)) throw DomainError("base L is not contained in K");
    if (picture == Picture::crossed && strictness == Strictness::strict && (h.is_trivial() || k.is_trivial()))
        throw DomainError("crossed picture requires non-trivial H and K");
    if (picture == Picture::fixed && !l.is_trivial())
        throw DomainError("fixed-point picture has N = S^G; base L must be trivial");
    return QuadrupleSpec{std::move(group), std::move(h), std::move(k), std::move(l), picture};
}

}  // namespace quadrant
