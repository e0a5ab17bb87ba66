#pragma once

#include "quadrant/permutation.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quadrant {

using ElementIndex = std::size_t;

struct GroupLimits {
    std::size_t order_cap = 200;
    std::size_t subgroup_enumeration_cap = 48;

    /// Default limits with the order cap taken from QUADRANT_CAP when set.
    static GroupLimits from_environment();
};

/// A finite permutation group with its Cayley table. Element 0 is the
/// identity; the rest follow breadth-first discovery order from the
/// generators, so indices are reproducible for a given generator list.
class FiniteGroup {
public:
    std::size_t order() const { return elements_.size(); }
    int degree() const { return degree_; }

    const Permutation& element(ElementIndex i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const { return elements_; }

    ElementIndex multiply(ElementIndex a, ElementIndex b) const { return cayley_[a * order() + b]; }
    ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
    static constexpr ElementIndex identity() { return 0; }

    std::optional<ElementIndex> index_of(const Permutation& p) const;
    ElementIndex element_order(ElementIndex a) const;

    /// Indices of the generators the group was built from (duplicates and
    /// identities dropped).
    const std::vector<ElementIndex>& generators() const { return generators_; }

    friend std::shared_ptr<const FiniteGroup> group_from_generators(std::span<const Permutation>, int,
                                                                    const GroupLimits&);

private:
    FiniteGroup() = default;

    int degree_ = 1;
    std::vector<Permutation> elements_;
    std::vector<ElementIndex> cayley_;
    std::vector<ElementIndex> inverses_;
    std::vector<ElementIndex> generators_;
    std::map<std::vector<int>, ElementIndex> lookup_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of the generators under composition. `degree` is used only when
/// the generator list is empty.
GroupPtr group_from_generators(std::span<const Permutation> gens, int degree = 1,
                               const GroupLimits& limits = {});

enum class GroupFamily { cyclic, dihedral, symmetric, alternating, klein4, quaternion8 };

GroupPtr named_group(GroupFamily family, int n, const GroupLimits& limits = {});

/// Parses "C6", "D4", "S3", "A4", "V4", "Q8".
GroupPtr named_group(std::string_view name, const GroupLimits& limits = {});

/// A subgroup stored as the sorted member indices of its parent group.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<ElementIndex> members);

    static Subgroup trivial(GroupPtr parent);
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<ElementIndex>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(ElementIndex g) const { return mask_[g] != 0; }
    bool is_trivial() const { return order() == 1; }
    bool is_subgroup_of(const Subgroup& other) const;

    /// A short generating set, greedily chosen in element-index order.
    std::vector<ElementIndex> generating_set() const;
    std::string generators_string() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b);

private:
    GroupPtr parent_;
    std::vector<ElementIndex> members_;
    std::vector<char> mask_;
};

/// Orders by (order, member list).
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup subgroup_closure(const GroupPtr& group, std::span<const ElementIndex> seed);

/// Subgroup generated by a list of cycle strings, e.g. "(1 2), (3 4)".
/// Every generator must already be an element of the group.
Subgroup subgroup_from_text(const GroupPtr& group, std::string_view generator_list);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// |{hk : h in H, k in K}|
std::size_t product_set_order(const Subgroup& h, const Subgroup& k);

/// Members of the product set HK, sorted.
std::vector<ElementIndex> product_set(const Subgroup& h, const Subgroup& k);

/// All subgroups, sorted by (order, member list).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const GroupLimits& limits = {});

}  // namespace quadrant
