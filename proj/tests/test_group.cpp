#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadrant/error.hpp"
#include "quadrant/group.hpp"
#include "quadrant/permutation.hpp"
#include "quadrant/rng.hpp"

#include <cstdlib>
#include <set>

using namespace quadrant;

namespace {

Permutation perm(std::string_view text, int degree) { return parse_permutation(text, degree); }

// Brute-force subgroup count: closure of every subset would be too slow, so
// close every pair of elements and then join to a fixpoint independently of
// the library routine.
std::set<std::vector<ElementIndex>> naive_subgroups(const GroupPtr& g) {
    std::set<std::vector<ElementIndex>> found;
    auto close = [&](std::vector<ElementIndex> seed) {
        std::set<ElementIndex> members(seed.begin(), seed.end());
        members.insert(0);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<ElementIndex> current(members.begin(), members.end());
            for (auto a : current)
                for (auto b : current) grew |= members.insert(g->multiply(a, b)).second;
        }
        return std::vector<ElementIndex>(members.begin(), members.end());
    };
    for (ElementIndex a = 0; a < g->order(); ++a)
        for (ElementIndex b = a; b < g->order(); ++b) found.insert(close({a, b}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<ElementIndex>> current(found.begin(), found.end());
        for (const auto& x : current)
            for (const auto& y : current) {
                std::vector<ElementIndex> seed = x;
                seed.insert(seed.end(), y.begin(), y.end());
                grew |= found.insert(close(seed)).second;
            }
    }
    return found;
}

}  // namespace

TEST_CASE("permutation parsing and composition") {
    const auto a = perm("(1 2)", 3);
    const auto b = perm("(1 2 3)", 3);
    // (a*b)(x) = a(b(x)); points are 0-based internally
    const auto ab = a * b;
    for (int x = 0; x < 3; ++x) CHECK(ab.images()[x] == a.images()[b.images()[x]]);
    CHECK(perm("", 3) == Permutation::identity(3));
    CHECK(perm("()", 3) == Permutation::identity(3));
    CHECK(perm("(1 2)(3 4)", 4).to_cycle_string() == "(1 2)(3 4)");
    CHECK((b * b.inverse()) == Permutation::identity(3));
    CHECK_THROWS_AS(perm("(1 2 2)", 3), InputError);
    CHECK_THROWS_AS(perm("(1 4)", 3), InputError);
    CHECK_THROWS_AS(perm("(1 x)", 3), InputError);
    CHECK_THROWS_AS(perm("(1 2", 3), InputError);
    CHECK(split_generator_list("(1 2), (3 4); (1 3)").size() == 3);
    CHECK(max_point("(1 7)(2 3)") == 7);
}

TEST_CASE("named group orders") {
    CHECK(named_group("C6")->order() == 6);
    CHECK(named_group("D4")->order() == 8);
    CHECK(named_group("S3")->order() == 6);
    CHECK(named_group("S4")->order() == 24);
    CHECK(named_group("A4")->order() == 12);
    CHECK(named_group("V4")->order() == 4);
    CHECK(named_group("Q8")->order() == 8);
    CHECK(named_group("C1")->order() == 1);
    CHECK_THROWS_AS(named_group("X9"), InputError);
    CHECK_THROWS_AS(named_group("D2"), DomainError);
}

TEST_CASE("order cap") {
    GroupLimits small;
    small.order_cap = 10;
    CHECK_THROWS_AS(named_group("S4", small), DomainError);
    CHECK_THROWS_AS(named_group("S6"), DomainError);  // 720 > 200
    setenv("QUADRANT_CAP", "1000", 1);
    CHECK(named_group("S6", GroupLimits::from_environment())->order() == 720);
    unsetenv("QUADRANT_CAP");
}

TEST_CASE("identity first and Cayley table associativity") {
    for (const char* name : {"S4", "D4", "Q8", "A4"}) {
        const auto g = named_group(name);
        CHECK(g->element(0) == Permutation::identity(g->degree()));
        CHECK(g->multiply(0, 3) == 3);
        CounterRng rng(11);
        for (int n = 0; n < 1000; ++n) {
            const auto a = rng.below(g->order()), b = rng.below(g->order()), c = rng.below(g->order());
            REQUIRE(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
        }
        for (ElementIndex a = 0; a < g->order(); ++a) {
            CHECK(g->multiply(a, g->inverse(a)) == 0);
            CHECK(g->element(g->multiply(a, 1)) == g->element(a) * g->element(1));
        }
    }
}

TEST_CASE("element orders") {
    const auto q8 = named_group("Q8");
    int involutions = 0;
    for (ElementIndex a = 0; a < q8->order(); ++a) involutions += q8->element_order(a) == 2;
    CHECK(involutions == 1);
    const auto c6 = named_group("C6");
    std::multiset<ElementIndex> orders;
    for (ElementIndex a = 0; a < 6; ++a) orders.insert(c6->element_order(a));
    CHECK(orders == std::multiset<ElementIndex>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("subgroup construction") {
    const auto g = named_group("S3");
    const auto h = subgroup_from_text(g, "(1 2)");
    CHECK(h.order() == 2);
    CHECK(subgroup_from_text(g, "").is_trivial());
    CHECK(subgroup_from_text(g, "(1 2), (1 2 3)").order() == 6);
    CHECK_THROWS_AS(subgroup_from_text(g, "(1 4)"), InputError);
    CHECK_THROWS_AS(Subgroup(g, {0, 1, 2}), DomainError);
    CHECK(Subgroup::trivial(g).is_subgroup_of(h));
    CHECK(h.is_subgroup_of(Subgroup::whole(g)));
    CHECK(subgroup_from_text(g, h.generators_string()) == h);
    CHECK(Subgroup::trivial(g).generators_string() == "()");

    const auto s4 = named_group("S4");
    CHECK_THROWS_AS(subgroup_from_text(s4, "(1 2 3 4 5)"), InputError);
}

TEST_CASE("subgroup counts") {
    CHECK(enumerate_subgroups(named_group("S3")).size() == 6);
    CHECK(enumerate_subgroups(named_group("S4")).size() == 30);
    CHECK(enumerate_subgroups(named_group("A4")).size() == 10);
    CHECK(enumerate_subgroups(named_group("D4")).size() == 10);
    CHECK(enumerate_subgroups(named_group("Q8")).size() == 6);
    CHECK(enumerate_subgroups(named_group("V4")).size() == 5);
    CHECK(enumerate_subgroups(named_group("C6")).size() == 4);
    CHECK(enumerate_subgroups(named_group("C1")).size() == 1);
}

TEST_CASE("enumeration matches a brute-force closure") {
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "V4", "C6"}) {
        CAPTURE(std::string(name));
        const auto g = named_group(name);
        const auto subgroups = enumerate_subgroups(g);
        std::set<std::vector<ElementIndex>> listed;
        for (const auto& s : subgroups) listed.insert(s.members());
        CHECK(listed.size() == subgroups.size());
        CHECK(listed == naive_subgroups(g));
        for (std::size_t i = 1; i < subgroups.size(); ++i) CHECK(subgroup_less(subgroups[i - 1], subgroups[i]));
    }
}

TEST_CASE("Lagrange, product formula and lattice closure") {
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "V4", "C6"}) {
        CAPTURE(std::string(name));
        const auto g = named_group(name);
        const auto subgroups = enumerate_subgroups(g);
        std::set<std::vector<ElementIndex>> listed;
        for (const auto& s : subgroups) {
            CHECK(g->order() % s.order() == 0);
            listed.insert(s.members());
        }
        for (const auto& h : subgroups)
            for (const auto& k : subgroups) {
                const auto hk = intersect(h, k);
                CHECK(product_set_order(h, k) * hk.order() == h.order() * k.order());
                CHECK(product_set(h, k).size() == product_set_order(h, k));
                CHECK(listed.count(hk.members()) == 1);
                CHECK(listed.count(join(h, k).members()) == 1);
                CHECK(hk.is_subgroup_of(h));
                CHECK(h.is_subgroup_of(join(h, k)));
            }
    }
}

TEST_CASE("enumeration cap") {
    GroupLimits limits;
    limits.subgroup_enumeration_cap = 10;
    CHECK_THROWS_AS(enumerate_subgroups(named_group("S4"), limits), DomainError);
}

TEST_CASE("group from generators") {
    const std::vector<Permutation> gens{perm("(1 2 3 4)", 4), perm("(1 3)", 4)};
    const auto g = group_from_generators(gens, 4);
    CHECK(g->order() == 8);
    CHECK(g->generators().size() == 2);
    const auto trivial = group_from_generators(std::vector<Permutation>{}, 3);
    CHECK(trivial->order() == 1);
}
