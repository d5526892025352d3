#include "schubcalc/combi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace schubcalc {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    const int n = size();
    if (n < 1) throw DomainError("empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : oneline_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) { return identity(n).times_simple(i); }

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= size(); ++i) {
        for (int j = i + 1; j <= size(); ++j) inv += (*this)(i) > (*this)(j) ? 1 : 0;
    }
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(oneline_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::times_simple(int i) const {
    if (i < 1 || i > size() - 1) {
        throw DomainError("simple reflection s_" + std::to_string(i) + " not in S_" + std::to_string(size()));
    }
    std::vector<int> v = oneline_;
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    return Permutation(std::move(v));
}

bool Permutation::has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

bool Permutation::has_left_descent(int i) const {
    // s_i w swaps the values i and i+1; it shortens w iff i+1 sits left of i.
    const auto& v = oneline_;
    const auto pos_i = std::find(v.begin(), v.end(), i);
    const auto pos_next = std::find(v.begin(), v.end(), i + 1);
    return pos_next < pos_i;
}

Permutation perm_compose(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("permutation size mismatch");
    std::vector<int> out(static_cast<std::size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(out));
}

Permutation word_product(int n, const ReducedWord& word) {
    Permutation w = Permutation::identity(n);
    for (int i : word.letters) w = w.times_simple(i);
    return w;
}

bool is_reduced(int n, const ReducedWord& word) {
    return word_product(n, word).length() == static_cast<int>(word.size());
}

std::vector<ReducedWord> reduced_words(const Permutation& w) {
    if (w.size() > kMaxWordEnumerationRank) {
        throw CapacityError("reduced-word enumeration is limited to n <= " +
                            std::to_string(kMaxWordEnumerationRank));
    }
    std::map<Permutation, std::vector<ReducedWord>> memo;
    // Every reduced word of w ends in a right descent i, preceded by a reduced
    // word of w s_i.
    auto rec = [&](auto&& self, const Permutation& p) -> const std::vector<ReducedWord>& {
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        std::vector<ReducedWord> out;
        if (p.is_identity()) {
            out.push_back({});
        } else {
            for (int i = 1; i < p.size(); ++i) {
                if (!p.has_right_descent(i)) continue;
                for (ReducedWord word : self(self, p.times_simple(i))) {
                    word.letters.push_back(i);
                    out.push_back(std::move(word));
                }
            }
            std::sort(out.begin(), out.end());
        }
        return memo.emplace(p, std::move(out)).first->second;
    };
    return rec(rec, w);
}

ReducedWord canonical_word(const Permutation& w) {
    // The first letter of a reduced word is a left descent; taking the
    // smallest one at every step yields the lexicographic minimum.
    ReducedWord word;
    Permutation rest = w;
    while (!rest.is_identity()) {
        for (int i = 1; i < rest.size(); ++i) {
            if (rest.has_left_descent(i)) {
                word.letters.push_back(i);
                rest = perm_compose(Permutation::simple(rest.size(), i), rest);
                break;
            }
        }
    }
    return word;
}

std::set<int> support_of(const Permutation& w) {
    const ReducedWord word = canonical_word(w);
    return {word.letters.begin(), word.letters.end()};
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---------------------------------------------------------------------------

BoxPartition::BoxPartition(int rows, int cols, std::vector<int> parts)
    : rows_(rows), cols_(cols), parts_(std::move(parts)) {
    if (rows < 0 || cols < 0) throw DomainError("negative box dimensions");
    while (static_cast<int>(parts_.size()) > rows && !parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > rows) {
        throw DomainError("partition has more than " + std::to_string(rows) + " nonzero parts");
    }
    parts_.resize(static_cast<std::size_t>(rows), 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || parts_[i] > cols) {
            throw DomainError("partition part " + std::to_string(parts_[i]) + " outside [0," + std::to_string(cols) +
                              "]");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

int BoxPartition::part(int i) const {
    return i >= 1 && i <= rows_ ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int BoxPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool BoxPartition::fits(int rows, int cols) const {
    for (int i = 1; i <= rows_; ++i) {
        const int p = part(i);
        if (p > cols || (i > rows && p != 0)) return false;
    }
    return true;
}

BoxPartition partition_dual(const BoxPartition& lambda) {
    const int k = lambda.rows();
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) out[static_cast<std::size_t>(i - 1)] = lambda.cols() - lambda.part(k + 1 - i);
    return BoxPartition(k, lambda.cols(), std::move(out));
}

BoxPartition partition_dualZ(const BoxPartition& lambda, int a, int b) {
    if (a < 0 || b < 0 || !lambda.fits(a, b)) {
        throw DomainError("partition " + render_partition(lambda) + " does not fit the " + std::to_string(a) + "x" +
                          std::to_string(b) + " box");
    }
    std::vector<int> out(static_cast<std::size_t>(a));
    for (int i = 1; i <= a; ++i) out[static_cast<std::size_t>(i - 1)] = b - lambda.part(a + 1 - i);
    return BoxPartition(a, b, std::move(out));
}

bool partition_leq(const BoxPartition& lambda, const BoxPartition& mu) {
    const int len = std::max(lambda.rows(), mu.rows());
    for (int i = 1; i <= len; ++i) {
        if (lambda.part(i) > mu.part(i)) return false;
    }
    return true;
}

BoxPartition rebox(const BoxPartition& lambda, int rows, int cols) {
    if (!lambda.fits(rows, cols)) {
        throw DomainError("partition " + render_partition(lambda) + " does not fit the " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " box");
    }
    std::vector<int> parts(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) parts[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    return BoxPartition(rows, cols, std::move(parts));
}

Permutation partition_to_perm(const BoxPartition& lambda, int k, int n) {
    if (k < 1 || k >= n || !lambda.fits(k, n - k)) {
        throw DomainError("partition " + render_partition(lambda) + " is not in P(" + std::to_string(k) + "," +
                          std::to_string(n) + ")");
    }
    std::vector<int> v;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= k; ++i) {
        v.push_back(lambda.part(k + 1 - i) + i);
        used[static_cast<std::size_t>(v.back())] = true;
    }
    for (int val = 1; val <= n; ++val) {
        if (!used[static_cast<std::size_t>(val)]) v.push_back(val);
    }
    return Permutation(std::move(v));
}

std::vector<BoxPartition> partitions_in_box(int rows, int cols) {
    std::vector<BoxPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        if (static_cast<int>(cur.size()) == rows) {
            out.emplace_back(rows, cols, cur);
            return;
        }
        for (int p = max_part; p >= 0; --p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::stable_sort(out.begin(), out.end(), [](const BoxPartition& l, const BoxPartition& r) {
        if (l.weight() != r.weight()) return l.weight() < r.weight();
        return l.parts() > r.parts();
    });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

std::string render_word(const ReducedWord& w) { return join(w.letters); }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

ReducedWord parse_word(const std::string& s) { return ReducedWord{parse_int_list(s)}; }

std::string render_partition(const BoxPartition& p) { return join(p.parts()); }

std::string render_perm(const Permutation& w) { return join(w.oneline()); }

}  // namespace schubcalc
