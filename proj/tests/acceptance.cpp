// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "schubcalc/coinv.hpp"
#include "schubcalc/grass.hpp"
#include "schubcalc/hecke.hpp"
#include "schubcalc/parallel.hpp"
#include "schubcalc/schubert.hpp"

using namespace schubcalc;

namespace {

const FglSpec kAdd(FglKind::additive);
const FglSpec kMult(FglKind::multiplicative);
const FglSpec kHyp(FglKind::hyperbolic);
const FglSpec kLor(FglKind::lorentz);
const std::vector<FglSpec> kAllSpecs{kAdd, kMult, kHyp, kLor};

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [" << what << "]";
        }
    }
    void require(const Report& r, const std::string& what) {
        if (!r.passed()) {
            ok = false;
            note << " [" << what << ": " << r.count(Status::fail) << "/" << r.cases.size() << " fail]";
        }
    }
};

std::size_t index_of(const std::vector<BoxPartition>& parts, std::vector<int> p) {
    const BoxPartition target(2, 2, std::move(p));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] == target) return j;
    }
    throw DomainError("partition not found");
}

void c1(Outcome& o) {
    const auto basis = gr24_basis(kHyp);
    const auto table = gr24_table();
    for (std::size_t j = 0; j < table.size(); ++j) {
        o.require(normal_form(basis[j]) == normal_form(table[j]), "class " + std::to_string(j));
    }
}

void c2(Outcome& o) {
    const auto basis = gr24_basis(kHyp);
    const auto parts = partitions_in_box(2, 2);
    const std::size_t i21 = index_of(parts, {2, 1});
    const auto c = expand_in_basis(normal_form(basis[i21] * basis[i21]), basis);
    std::vector<Poly> want(parts.size(), Poly(4));
    want[index_of(parts, {2, 0})] = Poly::one(4);
    want[index_of(parts, {1, 1})] = Poly::one(4);
    want[index_of(parts, {1, 0})] = -Poly::mu1(4);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        o.require(c[j] == want[j], "coefficient of (" + render_partition(parts[j]) + ") is " + render_text(c[j]));
    }
}

void c3(Outcome& o, int threads) {
    const Report r = cross_check_gr24(kHyp, threads);
    o.require(r.cases.size() == 24, "24 cases");
    o.require(r, "gr24");
    for (const auto& c : r.cases) {
        if (c.status == Status::fail) o.note << " {" << c.label << " -> " << c.detail.dump() << "}";
    }
}

void c4(Outcome& o, int threads) {
    for (const FglSpec& spec : {kAdd, kMult}) {
        for (int n : {4, 5}) o.require(chow_k_cross_check(2, n, spec, threads), "Gr(2," + std::to_string(n) + ")");
    }
}

void c5(Outcome& o) {
    for (int n : {2, 3, 4}) {
        const Report r = verify_fk_identity(kHyp, n);
        for (const auto& c : r.cases) {
            if (c.label.rfind("(i)", 0) == 0) o.require(c.status == Status::pass, "n=" + std::to_string(n) + " " + c.label);
        }
    }
}

void c6(Outcome& o, int threads) {
    bool saw_n2_finding = false;
    for (int n : {2, 3, 4}) {
        const Report r = verify_fk_identity(kHyp, n, {threads});
        o.require(r, "n=" + std::to_string(n));
        if (n == 2) {
            for (const auto& c : r.cases) {
                saw_n2_finding |= c.status == Status::finding && c.label.find("w=2,1 ") != std::string::npos;
            }
        }
    }
    o.require(saw_n2_finding, "n=2 w=s_1 finding under the supp(w0 w) reading");
}

void c7(Outcome& o, int threads) {
    for (int n : {2, 3, 4}) o.require(verify_coeff_corollary(kHyp, n, {threads}), "n=" + std::to_string(n));
}

void c8(Outcome& o) {
    for (int n : {2, 3, 4}) {
        o.require(verify_local_identities(kHyp, n, SeriesCap{8}), "local n=" + std::to_string(n));
        o.require(verify_ybe(kHyp, n), "ybe n=" + std::to_string(n));
    }
}

void c9(Outcome& o) {
    for (int n : {2, 3, 4}) {
        o.require(vandermonde_check(kHyp, n, SeriesCap{n * (n - 1) / 2 + 2}), "n=" + std::to_string(n));
    }
}

void c10(Outcome& o, int threads) {
    constexpr std::size_t kSamples = 50;
    constexpr std::uint64_t kSeed = 42;
    for (int n : {3, 4}) {
        const OperatorContext ctx(kHyp, n);
        for (int i = 1; i + 1 < n; ++i) {
            o.require(twisted_braid_check(ctx, i, kSamples, kSeed, threads), "twisted n=" + std::to_string(n));
        }
    }
    for (const FglSpec& spec : {kAdd, kMult, FglSpec(FglKind::hyperbolic, std::nullopt, 0)}) {
        o.require(naive_braid_check(OperatorContext(spec, 3), 1, kSamples, kSeed, threads), "naive " + spec.describe());
    }
    const Report naive = naive_braid_check(OperatorContext(kHyp, 3), 1, kSamples, kSeed, threads);
    o.require(naive.count(Status::fail) > 0, "hyperbolic naive braid counterexample");
    for (const FglSpec& spec : kAllSpecs) {
        const OperatorContext ctx(spec, 4);
        for (int i = 1; i < 4; ++i) {
            o.require(delta_identity_check(ctx, i, kSamples, kSeed, threads), "Delta " + spec.describe());
        }
    }
}

void c11(Outcome& o) {
    const SchubertContext ctx(kHyp, 4);
    for (const auto& w : all_permutations(4)) {
        for (const auto& word : reduced_words(w)) {
            const auto d = graded_degree(schubert_polynomial(ctx, word));
            o.require(d.homogeneous && d.degree && *d.degree == 6 - static_cast<int>(word.size()),
                      "homogeneity of (" + render_word(word) + ")");
        }
    }
    for (int n : {2, 3, 4}) {
        const auto basis = staircase_monomials(n);
        std::size_t fact = 1;
        for (int j = 2; j <= n; ++j) fact *= static_cast<std::size_t>(j);
        o.require(basis.size() == fact, "rank n=" + std::to_string(n));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto c = expand_in_basis(basis[j], basis);
            for (std::size_t k = 0; k < c.size(); ++k) {
                o.require(c[k] == (k == j ? Poly::one(n) : Poly(n)), "identity expansion n=" + std::to_string(n));
            }
        }
    }
    for (const FglSpec& spec : kAllSpecs) {
        o.require(diff_kernel_self_check(spec, SeriesCap{10}), "kernel " + spec.describe());
    }
    o.require(kappa_of(kAdd).is_zero(), "kappa additive");
    o.require(kappa_of(kMult) == Poly::mu1(2), "kappa multiplicative");
    o.require(kappa_of(kHyp) == Poly::mu1(2), "kappa hyperbolic");
    o.require(kappa_of(kLor).is_zero(), "kappa lorentz");
}

void c12(Outcome& o) {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
        for (auto family : {SmoothFamily::rows, SmoothFamily::cols}) {
            const int top = family == SmoothFamily::rows ? k : n - k;
            for (int p = 1; p <= top; ++p) {
                const Poly ref = smooth_monomial(k, n, family, p);
                for (const FglSpec& spec : kAllSpecs) o.require(spec.apply(ref) == ref, "smooth class " + spec.describe());
            }
        }
    }
    const Poly line = gr24_smooth_poly({1, 1});
    o.require(!(kAdd.apply(line) == kHyp.apply(line)), "line class depends on the law");
    const Poly lg10 = schubert_polynomial(SchubertContext(kHyp, 4), gr24_word(BoxPartition(2, 2, {1, 0})));
    o.require(equals_mod_S(line, lg10), "line class equals LG along the (10) word");
}

}  // namespace

int main() {
    const int threads = default_threads();
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {"C1 Gr(2,4) table", c1},
        {"C2 LG_(21)^2 structure constants", c2},
        {"C3 smooth product rule on Gr(2,4)", [&](Outcome& o) { c3(o, threads); }},
        {"C4 Chow and K specializations", [&](Outcome& o) { c4(o, threads); }},
        {"C5 Hecke identity -Delta_i S = S u_i", c5},
        {"C6 coefficient congruence mod J(supp w)", [&](Outcome& o) { c6(o, threads); }},
        {"C7 LG - KLG mod J(supp w)", [&](Outcome& o) { c7(o, threads); }},
        {"C8 local identities and Yang-Baxter", c8},
        {"C9 Vandermonde", c9},
        {"C10 operator relations", [&](Outcome& o) { c10(o, threads); }},
        {"C11 structural invariants", c11},
        {"C12 smooth-class symmetry", c12},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time_buf[32];
        std::snprintf(time_buf, sizeof time_buf, "%.2fs", secs);
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << time_buf << ")" << o.note.str() << '\n';
        failed += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
