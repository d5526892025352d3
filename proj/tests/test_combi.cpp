#include <doctest.h>

#include <functional>
#include <set>

#include "schubcalc/combi.hpp"

using namespace schubcalc;

namespace {

// Every word of the given length over s_1..s_{n-1}, filtered by length.
std::set<ReducedWord> brute_force_words(const Permutation& w) {
    const int n = w.size();
    const int len = w.length();
    std::set<ReducedWord> out;
    ReducedWord cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == len) {
            if (word_product(n, cur) == w) out.insert(cur);
            return;
        }
        for (int i = 1; i < n; ++i) {
            cur.letters.push_back(i);
            rec();
            cur.letters.pop_back();
        }
    };
    rec();
    return out;
}

BoxPartition part(int rows, int cols, std::vector<int> p) { return BoxPartition(rows, cols, std::move(p)); }

}  // namespace

TEST_CASE("permutation basics") {
    const Permutation w({2, 3, 1});
    CHECK(w.length() == 2);
    CHECK(w.inverse() == Permutation({3, 1, 2}));
    CHECK(perm_compose(w, w.inverse()).is_identity());
    CHECK(Permutation::longest(4).length() == 6);
    CHECK(w.has_right_descent(2));
    CHECK_FALSE(w.has_right_descent(1));
    CHECK(w.has_left_descent(1));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS((void)w.times_simple(3), DomainError);
}

TEST_CASE("descents agree with lengths") {
    for (int n = 2; n <= 5; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            for (int i = 1; i < n; ++i) {
                const Permutation right = w.times_simple(i);
                const Permutation left = perm_compose(Permutation::simple(n, i), w);
                CHECK(w.has_right_descent(i) == (right.length() < w.length()));
                CHECK(w.has_left_descent(i) == (left.length() < w.length()));
            }
        }
    }
}

TEST_CASE("reduced words match brute-force enumeration") {
    CHECK(reduced_words(Permutation::longest(3)).size() == 2);
    CHECK(reduced_words(Permutation::longest(4)).size() == 16);
    for (int n = 2; n <= 4; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const auto words = reduced_words(w);
            CHECK(std::set<ReducedWord>(words.begin(), words.end()) == brute_force_words(w));
            CHECK(std::is_sorted(words.begin(), words.end()));
            CHECK(canonical_word(w) == words.front());
            for (const auto& word : words) CHECK(is_reduced(n, word));
        }
    }
    CHECK(reduced_words(Permutation::longest(5)).size() == 768);
    CHECK_THROWS_AS(reduced_words(Permutation::longest(6)), CapacityError);
}

TEST_CASE("support is word independent") {
    for (const Permutation& w : all_permutations(4)) {
        const auto supp = support_of(w);
        for (const auto& word : reduced_words(w)) {
            CHECK(std::set<int>(word.letters.begin(), word.letters.end()) == supp);
        }
    }
    CHECK(support_of(Permutation::identity(3)).empty());
    CHECK(support_of(Permutation::longest(4)) == std::set<int>{1, 2, 3});
}

TEST_CASE("word product order") {
    // s_1 s_2 in one-line notation: apply s_2 to positions then s_1.
    CHECK(word_product(3, ReducedWord{{1, 2}}) == Permutation({2, 3, 1}));
    CHECK_FALSE(is_reduced(3, ReducedWord{{1, 1}}));
}

TEST_CASE("box partitions") {
    const BoxPartition p = part(3, 4, {3, 1});
    CHECK(p.parts() == std::vector<int>{3, 1, 0});
    CHECK(p.weight() == 4);
    CHECK(p.fits(2, 3));
    CHECK_FALSE(p.fits(1, 4));
    CHECK_THROWS_AS(part(2, 2, {1, 2}), DomainError);
    CHECK_THROWS_AS(part(2, 2, {3, 0}), DomainError);
    CHECK_THROWS_AS(part(1, 2, {1, 1}), DomainError);
    CHECK(partition_dual(part(2, 2, {2, 1})) == part(2, 2, {1, 0}));
    CHECK(partition_dual(partition_dual(p)) == p);
    CHECK(partition_dualZ(part(2, 2, {1, 0}), 1, 1) == part(1, 1, {0}));
    CHECK_THROWS_AS(partition_dualZ(part(2, 2, {2, 0}), 1, 1), DomainError);
    CHECK(partition_leq(part(2, 2, {1, 0}), part(2, 2, {1, 1})));
    CHECK_FALSE(partition_leq(part(2, 2, {2, 0}), part(2, 2, {1, 1})));
}

TEST_CASE("partitions in a box") {
    const auto ps = partitions_in_box(2, 2);
    REQUIRE(ps.size() == 6);
    CHECK(ps[0].parts() == std::vector<int>{0, 0});
    CHECK(ps[1].parts() == std::vector<int>{1, 0});
    CHECK(ps[2].parts() == std::vector<int>{2, 0});
    CHECK(ps[3].parts() == std::vector<int>{1, 1});
    CHECK(ps[4].parts() == std::vector<int>{2, 1});
    CHECK(ps[5].parts() == std::vector<int>{2, 2});
    CHECK(partitions_in_box(2, 3).size() == 10);
    CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("grassmannian permutations") {
    CHECK(partition_to_perm(part(2, 2, {0, 0}), 2, 4).is_identity());
    CHECK(partition_to_perm(part(2, 2, {1, 0}), 2, 4) == Permutation({1, 3, 2, 4}));
    CHECK(partition_to_perm(part(2, 2, {2, 2}), 2, 4) == Permutation({3, 4, 1, 2}));
    for (const BoxPartition& lambda : partitions_in_box(2, 3)) {
        const Permutation w = partition_to_perm(lambda, 2, 5);
        CHECK(w.length() == lambda.weight());
        for (int i = 1; i < 5; ++i) {
            if (i != 2) CHECK_FALSE(w.has_right_descent(i));
        }
    }
    CHECK_THROWS_AS(partition_to_perm(part(2, 3, {3, 0}), 2, 4), DomainError);
}

TEST_CASE("text forms") {
    CHECK(render_word(ReducedWord{{3, 1, 2}}) == "3,1,2");
    CHECK(parse_word("3,1,2") == ReducedWord{{3, 1, 2}});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("1,x"), ParseError);
    CHECK(render_partition(part(2, 2, {2, 1})) == "2,1");
    CHECK(render_perm(Permutation({2, 1, 3})) == "2,1,3");
}
