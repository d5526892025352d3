#pragma once

// Type-A indexing: permutations in one-line notation, words in the simple
// reflections s_1..s_{n-1}, and partitions inside a rows x cols box.

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "schubcalc/errors.hpp"

namespace schubcalc {

/// Sequence of simple-reflection indices (i_1, ..., i_r) standing for
/// s_{i_1} s_{i_2} ... s_{i_r}.
struct ReducedWord {
    std::vector<int> letters;

    [[nodiscard]] std::size_t size() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }

    friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

class Permutation {
public:
    /// Validates that `oneline` is a bijection of 1..n.
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);
    /// w_0(i) = n + 1 - i.
    static Permutation longest(int n);
    static Permutation simple(int n, int i);

    [[nodiscard]] int size() const { return static_cast<int>(oneline_.size()); }
    /// w(i), 1-based.
    [[nodiscard]] int operator()(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] const std::vector<int>& oneline() const { return oneline_; }
    [[nodiscard]] bool is_identity() const;

    /// Inversion count.
    [[nodiscard]] int length() const;
    [[nodiscard]] Permutation inverse() const;
    /// w s_i: swaps positions i and i+1.
    [[nodiscard]] Permutation times_simple(int i) const;
    /// l(w s_i) < l(w)
    [[nodiscard]] bool has_right_descent(int i) const;
    /// l(s_i w) < l(w)
    [[nodiscard]] bool has_left_descent(int i) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> oneline_;
};

/// (u o v)(i) = u(v(i)).
Permutation perm_compose(const Permutation& u, const Permutation& v);

/// s_{i_1} ... s_{i_r} in S_n. Letters must lie in [1, n-1].
Permutation word_product(int n, const ReducedWord& word);
bool is_reduced(int n, const ReducedWord& word);

inline constexpr int kMaxWordEnumerationRank = 5;

/// Every reduced word of w, in lexicographic order. CapacityError for n > 5.
std::vector<ReducedWord> reduced_words(const Permutation& w);

/// Lexicographically smallest reduced word.
ReducedWord canonical_word(const Permutation& w);

std::set<int> support_of(const Permutation& w);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Partition with at most `rows` nonzero parts, each at most `cols`. Parts are
/// stored padded with zeros to exactly `rows` entries.
class BoxPartition {
public:
    BoxPartition(int rows, int cols, std::vector<int> parts);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    /// lambda_i, 1-based; zero past the end.
    [[nodiscard]] int part(int i) const;
    [[nodiscard]] int weight() const;
    [[nodiscard]] bool fits(int rows, int cols) const;

    friend auto operator<=>(const BoxPartition&, const BoxPartition&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> parts_;
};

/// lambda^vee_i = cols - lambda_{rows+1-i}, complement in its own box.
BoxPartition partition_dual(const BoxPartition& lambda);

/// mu_i = b - lambda_{a+1-i}, complement inside the a x b box.
BoxPartition partition_dualZ(const BoxPartition& lambda, int a, int b);

/// Componentwise order.
bool partition_leq(const BoxPartition& lambda, const BoxPartition& mu);

/// Re-box a partition (padding or dropping trailing zeros).
BoxPartition rebox(const BoxPartition& lambda, int rows, int cols);

/// Grassmannian permutation w_lambda with w(i) = lambda_{k+1-i} + i for i <= k
/// and the remaining values increasing.
Permutation partition_to_perm(const BoxPartition& lambda, int k, int n);

/// All partitions in the rows x cols box, ordered by weight then reverse-lex
/// (for 2x2: (0,0),(1,0),(2,0),(1,1),(2,1),(2,2)).
std::vector<BoxPartition> partitions_in_box(int rows, int cols);

std::string render_word(const ReducedWord& w);
ReducedWord parse_word(const std::string& s);
std::string render_partition(const BoxPartition& p);
std::vector<int> parse_int_list(const std::string& s);
std::string render_perm(const Permutation& w);

}  // namespace schubcalc
