#include "quadrant/group.hpp"

#include "quadrant/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>

namespace quadrant {

GroupLimits GroupLimits::from_environment() {
    GroupLimits limits;
    if (const char* env = std::getenv("QUADRANT_CAP"); env != nullptr && *env != '\0') {
        std::string_view text(env);
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || end != text.data() + text.size() || value == 0)
            throw InputError("QUADRANT_CAP must be a positive integer");
        limits.order_cap = value;
    }
    return limits;
}

std::optional<ElementIndex> FiniteGroup::index_of(const Permutation& p) const {
    auto it = lookup_.find(p.images());
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

ElementIndex FiniteGroup::element_order(ElementIndex a) const {
    ElementIndex n = 1;
    for (ElementIndex x = a; x != identity(); x = multiply(x, a)) ++n;
    return n;
}

GroupPtr group_from_generators(std::span<const Permutation> gens, int degree, const GroupLimits& limits) {
    if (!gens.empty()) degree = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw DomainError("generators have different degrees");

    std::shared_ptr<FiniteGroup> group(new FiniteGroup());
    group->degree_ = degree;
    auto add = [&](Permutation p) -> ElementIndex {
        auto [it, inserted] = group->lookup_.emplace(p.images(), group->elements_.size());
        if (inserted) {
            if (group->elements_.size() >= limits.order_cap)
                throw DomainError("group order exceeds cap " + std::to_string(limits.order_cap));
            group->elements_.push_back(std::move(p));
        }
        return it->second;
    };

    add(Permutation::identity(degree));
    std::vector<ElementIndex> gen_indices;
    for (std::size_t head = 0; head < group->elements_.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = group->elements_[head] * g;
            add(std::move(next));
        }
    }
    for (const auto& g : gens) {
        ElementIndex idx = *group->index_of(g);
        if (idx != FiniteGroup::identity() &&
            std::find(gen_indices.begin(), gen_indices.end(), idx) == gen_indices.end())
            gen_indices.push_back(idx);
    }
    group->generators_ = std::move(gen_indices);

    const std::size_t n = group->order();
    group->cayley_.resize(n * n);
    group->inverses_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            group->cayley_[a * n + b] = *group->index_of(group->elements_[a] * group->elements_[b]);
        }
        group->inverses_[a] = *group->index_of(group->elements_[a].inverse());
    }
    return group;
}

namespace {

Permutation cycle_of_length(int n, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(images));
}

Permutation transposition(int a, int b, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
    std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
    return Permutation(std::move(images));
}

// Quaternion units ±1, ±i, ±j, ±k as (basis, sign); index = 2*basis + negative.
std::vector<Permutation> quaternion_generators() {
    // basis product table: result basis and sign for basis a * basis b
    constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table = {{
        {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
        {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
        {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
        {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
    }};
    auto left_multiplication = [&](int basis) {
        std::vector<int> images(8);
        for (int x = 0; x < 8; ++x) {
            int xb = x / 2;
            int xs = (x % 2 == 0) ? 1 : -1;
            auto [rb, rs] = table[static_cast<std::size_t>(basis)][static_cast<std::size_t>(xb)];
            int sign = rs * xs;
            images[static_cast<std::size_t>(x)] = 2 * rb + (sign < 0 ? 1 : 0);
        }
        return Permutation(std::move(images));
    };
    return {left_multiplication(1), left_multiplication(2)};
}

}  // namespace

GroupPtr named_group(GroupFamily family, int n, const GroupLimits& limits) {
    std::vector<Permutation> gens;
    int degree = 1;
    switch (family) {
    case GroupFamily::cyclic:
        if (n < 1) throw DomainError("cyclic group needs n >= 1");
        degree = n;
        if (n > 1) gens.push_back(cycle_of_length(n, n));
        break;
    case GroupFamily::dihedral: {
        if (n < 3) throw DomainError("dihedral group D<n> needs n >= 3");
        degree = n;
        gens.push_back(cycle_of_length(n, n));
        std::vector<int> reflection(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) reflection[static_cast<std::size_t>(i)] = (n - i) % n;
        gens.emplace_back(std::move(reflection));
        break;
    }
    case GroupFamily::symmetric:
        if (n < 1) throw DomainError("symmetric group needs n >= 1");
        degree = n;
        if (n > 1) gens.push_back(transposition(0, 1, n));
        if (n > 2) gens.push_back(cycle_of_length(n, n));
        break;
    case GroupFamily::alternating:
        if (n < 1) throw DomainError("alternating group needs n >= 1");
        degree = n;
        for (int k = 2; k < n; ++k) {
            std::vector<int> images(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
            images[0] = 1;
            images[1] = k;
            images[static_cast<std::size_t>(k)] = 0;
            gens.emplace_back(std::move(images));
        }
        break;
    case GroupFamily::klein4:
        degree = 4;
        gens.emplace_back(std::vector<int>{1, 0, 3, 2});
        gens.emplace_back(std::vector<int>{2, 3, 0, 1});
        break;
    case GroupFamily::quaternion8:
        degree = 8;
        gens = quaternion_generators();
        break;
    }
    return group_from_generators(gens, degree, limits);
}

GroupPtr named_group(std::string_view name, const GroupLimits& limits) {
    if (name == "V4") return named_group(GroupFamily::klein4, 4, limits);
    if (name == "Q8") return named_group(GroupFamily::quaternion8, 8, limits);
    if (name.size() < 2) throw InputError("unknown group family '" + std::string(name) + "'");
    int n = 0;
    auto digits = name.substr(1);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size())
        throw InputError("unknown group family '" + std::string(name) + "'");
    switch (name.front()) {
    case 'C': return named_group(GroupFamily::cyclic, n, limits);
    case 'D': return named_group(GroupFamily::dihedral, n, limits);
    case 'S': return named_group(GroupFamily::symmetric, n, limits);
    case 'A': return named_group(GroupFamily::alternating, n, limits);
    default: throw InputError("unknown group family '" + std::string(name) + "'");
    }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementIndex> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_->order(), 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (ElementIndex g : members_) {
        if (g >= parent_->order()) throw DomainError("subgroup member index out of range");
        mask_[g] = 1;
    }
    if (members_.empty() || members_.front() != FiniteGroup::identity())
        throw DomainError("subgroup must contain the identity");
    for (ElementIndex a : members_) {
        if (!contains(parent_->inverse(a))) throw DomainError("subgroup not closed under inverses");
        for (ElementIndex b : members_)
            if (!contains(parent_->multiply(a, b))) throw DomainError("subgroup not closed under multiplication");
    }
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {FiniteGroup::identity()}); }

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<ElementIndex> all(parent->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    if (parent_ != other.parent_) throw DomainError("subgroups belong to different groups");
    return std::all_of(members_.begin(), members_.end(), [&](ElementIndex g) { return other.contains(g); });
}

std::vector<ElementIndex> Subgroup::generating_set() const {
    std::vector<ElementIndex> gens;
    Subgroup current = trivial(parent_);
    for (ElementIndex g : members_) {
        if (current.contains(g)) continue;
        gens.push_back(g);
        current = subgroup_closure(parent_, gens);
    }
    return gens;
}

std::string Subgroup::generators_string() const {
    std::string text;
    for (ElementIndex g : generating_set()) {
        if (!text.empty()) text += "; ";
        text += parent_->element(g).to_cycle_string();
    }
    return text.empty() ? "()" : text;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const ElementIndex> seed) {
    std::vector<char> in(group->order(), 0);
    std::vector<ElementIndex> members{FiniteGroup::identity()};
    in[FiniteGroup::identity()] = 1;
    for (ElementIndex g : seed)
        if (g >= group->order()) throw DomainError("seed index out of range");
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (ElementIndex g : seed) {
            ElementIndex next = group->multiply(members[head], g);
            if (!in[next]) {
                in[next] = 1;
                members.push_back(next);
            }
        }
    }
    return Subgroup(group, std::move(members));
}

Subgroup subgroup_from_text(const GroupPtr& group, std::string_view generator_list) {
    std::vector<ElementIndex> seed;
    for (const auto& text : split_generator_list(generator_list)) {
        Permutation p = parse_permutation(text, group->degree());
        auto idx = group->index_of(p);
        if (!idx) throw InputError("generator " + text + " is not an element of the group");
        seed.push_back(*idx);
    }
    return subgroup_closure(group, seed);
}

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw DomainError("subgroups belong to different groups");
}

}  // namespace

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<ElementIndex> common;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(common));
    return Subgroup(a.parent(), std::move(common));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<ElementIndex> seed = a.generating_set();
    auto more = b.generating_set();
    seed.insert(seed.end(), more.begin(), more.end());
    return subgroup_closure(a.parent(), seed);
}

std::vector<ElementIndex> product_set(const Subgroup& h, const Subgroup& k) {
    require_same_parent(h, k);
    const auto& group = *h.parent();
    std::vector<char> hit(group.order(), 0);
    for (ElementIndex x : h.members())
        for (ElementIndex y : k.members()) hit[group.multiply(x, y)] = 1;
    std::vector<ElementIndex> out;
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i]) out.push_back(i);
    return out;
}

std::size_t product_set_order(const Subgroup& h, const Subgroup& k) { return product_set(h, k).size(); }

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const GroupLimits& limits) {
    if (group->order() > limits.subgroup_enumeration_cap)
        throw DomainError("subgroup enumeration limited to groups of order <= " +
                          std::to_string(limits.subgroup_enumeration_cap));
    std::set<std::vector<ElementIndex>> seen;
    std::vector<Subgroup> found;
    auto insert = [&](Subgroup s) {
        if (seen.insert(s.members()).second) {
            found.push_back(std::move(s));
            return true;
        }
        return false;
    };
    for (ElementIndex g = 0; g < group->order(); ++g) {
        std::array<ElementIndex, 1> seed{g};
        insert(subgroup_closure(group, seed));
    }
    // close the cyclic subgroups under pairwise joins
    std::size_t done = 0;
    while (done < found.size()) {
        std::size_t end = found.size();
        for (std::size_t i = 0; i < end; ++i) {
            for (std::size_t j = std::max(i + 1, done); j < end; ++j) insert(join(found[i], found[j]));
        }
        done = end;
    }
    std::sort(found.begin(), found.end(), subgroup_less);
    return found;
}

}  // namespace quadrant
