#include "schubcalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schubcalc {

namespace {

void check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxVars) {
        throw DomainError("variable count " + std::to_string(nvars) + " outside [1," +
                          std::to_string(kMaxVars) + "]");
    }
}

void check_index(int i, int nvars) {
    if (i < 1 || i > nvars - 1) {
        throw DomainError("index " + std::to_string(i) + " outside [1," + std::to_string(nvars - 1) +
                          "]");
    }
}

}  // namespace

int Monomial::x_degree() const {
    return std::accumulate(x.begin(), x.end(), 0);
}

bool Monomial::divisible_by(const Monomial& m) const {
    for (int v = 0; v < kMaxVars; ++v) {
        if (x[v] < m.x[v]) return false;
    }
    return mu1 >= m.mu1 && mu2 >= m.mu2;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) r.x[v] = static_cast<std::uint16_t>(a.x[v] + b.x[v]);
    r.mu1 = static_cast<std::uint16_t>(a.mu1 + b.mu1);
    r.mu2 = static_cast<std::uint16_t>(a.mu2 + b.mu2);
    return r;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.x_degree();
    const int db = b.x_degree();
    if (da != db) return da < db;
    for (int v = kMaxVars - 1; v >= 0; --v) {
        if (a.x[v] != b.x[v]) return a.x[v] < b.x[v];
    }
    if (a.mu1 != b.mu1) return a.mu1 < b.mu1;
    return a.mu2 < b.mu2;
}

// ---------------------------------------------------------------------------

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly::Poly(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
    check_nvars(nvars);
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

Poly Poly::constant(int nvars, const mpz_class& c) {
    Poly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    check_nvars(nvars);
    if (i < 1 || i > nvars) throw DomainError("variable x_" + std::to_string(i) + " out of range");
    Monomial m;
    m.x[i - 1] = 1;
    return monomial(nvars, m);
}

Poly Poly::mu1(int nvars) {
    Monomial m;
    m.mu1 = 1;
    return monomial(nvars, m);
}

Poly Poly::mu2(int nvars) {
    Monomial m;
    m.mu2 = 1;
    return monomial(nvars, m);
}

Poly Poly::monomial(int nvars, const Monomial& m, const mpz_class& c) {
    Poly p(nvars);
    for (int v = nvars; v < kMaxVars; ++v) {
        if (m.x[v] != 0) throw DomainError("monomial uses a variable beyond nvars");
    }
    p.add_term(m, c);
    return p;
}

Poly Poly::monomial(int nvars, std::span<const int> exps, int a, int b, const mpz_class& c) {
    if (static_cast<int>(exps.size()) > nvars) throw DomainError("too many exponents");
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] < 0) throw DomainError("negative exponent");
        m.x[v] = static_cast<std::uint16_t>(exps[v]);
    }
    if (a < 0 || b < 0) throw DomainError("negative mu exponent");
    m.mu1 = static_cast<std::uint16_t>(a);
    m.mu2 = static_cast<std::uint16_t>(b);
    return monomial(nvars, m, c);
}

mpz_class Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Poly::max_x_degree() const {
    // Terms are sorted by x-degree first.
    return terms_.empty() ? -1 : terms_.rbegin()->first.x_degree();
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& g) {
    require_same_nvars(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& g) {
    require_same_nvars(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

bool operator==(const Poly& f, const Poly& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
}

void require_same_nvars(const Poly& f, const Poly& g) {
    if (f.nvars() != g.nvars()) {
        throw DomainError("variable-count mismatch: " + std::to_string(f.nvars()) + " vs " +
                          std::to_string(g.nvars()));
    }
}

Poly add(const Poly& f, const Poly& g) {
    Poly r = f;
    r += g;
    return r;
}

Poly operator+(const Poly& f, const Poly& g) { return add(f, g); }

Poly operator-(const Poly& f, const Poly& g) {
    Poly r = f;
    r -= g;
    return r;
}

Poly operator-(const Poly& f) {
    Poly r = f;
    r *= -1;
    return r;
}

Poly operator*(const mpz_class& c, const Poly& f) {
    Poly r = f;
    r *= c;
    return r;
}

// ---------------------------------------------------------------------------
// Multiplication kernels

namespace {

void accumulate_products(const Poly& f, const Poly& g, std::size_t begin, std::size_t end,
                         Poly::TermMap& out) {
    auto it = f.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(begin));
    mpz_class prod;
    for (std::size_t k = begin; k < end; ++k, ++it) {
        for (const auto& [mg, cg] : g.terms()) {
            prod = it->second * cg;
            auto [slot, inserted] = out.try_emplace(it->first * mg, prod);
            if (!inserted) slot->second += prod;
        }
    }
}

constexpr std::size_t kParallelWorkThreshold = 4096;

}  // namespace

Poly mul_serial(const Poly& f, const Poly& g) {
    require_same_nvars(f, g);
    Poly::TermMap out;
    accumulate_products(f, g, 0, f.size(), out);
    return Poly(f.nvars(), std::move(out));
}

Poly mul_parallel(const Poly& f, const Poly& g) {
    require_same_nvars(f, g);
#ifdef _OPENMP
    const int threads = std::max(1, std::min<int>(omp_get_max_threads(), static_cast<int>(f.size())));
    if (threads == 1) return mul_serial(f, g);
    std::vector<Poly::TermMap> partial(static_cast<std::size_t>(threads));
    const std::size_t n = f.size();
#pragma omp parallel num_threads(threads)
    {
        const auto t = static_cast<std::size_t>(omp_get_thread_num());
        const std::size_t begin = n * t / static_cast<std::size_t>(threads);
        const std::size_t end = n * (t + 1) / static_cast<std::size_t>(threads);
        accumulate_products(f, g, begin, end, partial[t]);
    }
    Poly::TermMap out = std::move(partial[0]);
    for (std::size_t t = 1; t < partial.size(); ++t) {
        for (auto& [m, c] : partial[t]) {
            auto [slot, inserted] = out.try_emplace(m, c);
            if (!inserted) slot->second += c;
        }
    }
    return Poly(f.nvars(), std::move(out));
#else
    return mul_serial(f, g);
#endif
}

Poly mul(const Poly& f, const Poly& g) {
#ifdef _OPENMP
    if (f.size() * g.size() >= kParallelWorkThreshold && omp_get_max_threads() > 1 &&
        !omp_in_parallel()) {
        return mul_parallel(f, g);
    }
#endif
    return mul_serial(f, g);
}

Poly operator*(const Poly& f, const Poly& g) { return mul(f, g); }

Poly pow(const Poly& f, int e) {
    if (e < 0) throw DomainError("negative power");
    Poly r = Poly::one(f.nvars());
    for (int k = 0; k < e; ++k) r = r * f;
    return r;
}

// ---------------------------------------------------------------------------

Poly sigma_apply(int i, const Poly& f) {
    check_index(i, f.nvars());
    Poly::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        std::swap(s.x[i - 1], s.x[i]);
        out.emplace(s, c);
    }
    return Poly(f.nvars(), std::move(out));
}

Poly exact_div_diff(const Poly& f, int i) {
    check_index(i, f.nvars());
    // Split every term as rest * a^j * b^(d-j) with a = x_i, b = x_{i+1}. For a
    // fixed (rest, d) the bivariate form sum_j c_j a^j b^(d-j) equals (a - b) *
    // sum_j q_j a^j b^(d-1-j) iff q_j = -(c_0 + ... + c_j) and sum_j c_j = 0.
    struct GroupKey {
        Monomial rest;
        int d;
    };
    struct GroupLess {
        bool operator()(const GroupKey& l, const GroupKey& r) const {
            if (l.d != r.d) return l.d < r.d;
            return CanonicalOrder{}(l.rest, r.rest);
        }
    };
    std::map<GroupKey, std::map<int, mpz_class>, GroupLess> groups;
    for (const auto& [m, c] : f.terms()) {
        GroupKey key{m, m.x[i - 1] + m.x[i]};
        const int j = m.x[i - 1];
        key.rest.x[i - 1] = 0;
        key.rest.x[i] = 0;
        groups[key][j] += c;
    }
    Poly q(f.nvars());
    for (const auto& [key, coeffs] : groups) {
        mpz_class running = 0;
        for (int j = 0; j < key.d; ++j) {
            if (auto it = coeffs.find(j); it != coeffs.end()) running += it->second;
            if (running != 0) {
                Monomial m = key.rest;
                m.x[i - 1] = static_cast<std::uint16_t>(j);
                m.x[i] = static_cast<std::uint16_t>(key.d - 1 - j);
                q.add_term(m, -running);
            }
        }
        if (auto it = coeffs.find(key.d); it != coeffs.end()) running += it->second;
        if (running != 0) {
            throw DivisionFailure("division by x_" + std::to_string(i) + " - x_" +
                                  std::to_string(i + 1) + " left a remainder");
        }
    }
    return q;
}

Poly truncate(const Poly& f, SeriesCap cap) {
    if (cap.cap < 0) throw DomainError("negative series cap");
    Poly::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        if (m.x_degree() > cap.cap) break;
        out.emplace_hint(out.end(), m, c);
    }
    return Poly(f.nvars(), std::move(out));
}

Poly x_degree_part(const Poly& f, int d) {
    Poly::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        if (m.x_degree() == d) out.emplace_hint(out.end(), m, c);
    }
    return Poly(f.nvars(), std::move(out));
}

Poly series_invert_unit(const Poly& f, SeriesCap cap) {
    if (cap.cap < 0) throw DomainError("negative series cap");
    const Poly f0 = x_degree_part(f, 0);
    const int n = f.nvars();
    mpz_class c0;
    if (f0 == Poly::one(n)) {
        c0 = 1;
    } else if (f0 == Poly::constant(n, -1)) {
        c0 = -1;
    } else {
        throw DomainError("series inversion needs constant term 1 or -1, got " + render_text(f0));
    }
    // g_d = -c0 * sum_{j=1..d} f_j g_{d-j}
    std::vector<Poly> parts;
    for (int d = 0; d <= cap.cap; ++d) parts.push_back(x_degree_part(f, d));
    std::vector<Poly> g{Poly::constant(n, c0)};
    for (int d = 1; d <= cap.cap; ++d) {
        Poly acc(n);
        for (int j = 1; j <= d; ++j) {
            if (!parts[j].is_zero()) acc += parts[j] * g[d - j];
        }
        acc *= -c0;
        g.push_back(std::move(acc));
    }
    Poly out(n);
    for (const Poly& p : g) out += p;
    return out;
}

DegreeReport graded_degree(const Poly& f) {
    DegreeReport r;
    for (const auto& [m, c] : f.terms()) {
        const int d = m.graded_degree();
        if (!r.degree) {
            r.degree = d;
        } else if (*r.degree != d) {
            return DegreeReport{false, std::nullopt};
        }
    }
    return r;
}

Poly embed(const Poly& f, int nvars, std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != f.nvars()) {
        throw DomainError("embed needs one target per source variable");
    }
    for (int t : targets) {
        if (t < 1 || t > nvars) throw DomainError("embed target out of range");
    }
    Poly out(nvars);
    for (const auto& [m, c] : f.terms()) {
        Monomial r;
        r.mu1 = m.mu1;
        r.mu2 = m.mu2;
        for (int v = 0; v < f.nvars(); ++v) {
            r.x[targets[v] - 1] = static_cast<std::uint16_t>(r.x[targets[v] - 1] + m.x[v]);
        }
        out.add_term(r, c);
    }
    return out;
}

Poly specialize(const Poly& f, std::optional<int> mu1, std::optional<int> mu2) {
    if (!mu1 && !mu2) return f;
    Poly out(f.nvars());
    mpz_class scale;
    for (const auto& [m, c] : f.terms()) {
        Monomial r = m;
        scale = c;
        if (mu1) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(*mu1).get_mpz_t(), m.mu1);
            scale *= p;
            r.mu1 = 0;
        }
        if (mu2) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(*mu2).get_mpz_t(), m.mu2);
            scale *= p;
            r.mu2 = 0;
        }
        out.add_term(r, scale);
    }
    return out;
}

Poly delete_multiples(const Poly& f, std::span<const Monomial> generators) {
    if (generators.empty()) return f;
    Poly::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        const bool killed = std::any_of(generators.begin(), generators.end(),
                                        [&](const Monomial& gen) { return m.divisible_by(gen); });
        if (!killed) out.emplace_hint(out.end(), m, c);
    }
    return Poly(f.nvars(), std::move(out));
}

// ---------------------------------------------------------------------------
// Text form

std::string render_text(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (m.mu1 > 0) os << "*m1^" << m.mu1;
        if (m.mu2 > 0) os << "*m2^" << m.mu2;
        os << "*x[";
        for (int v = 0; v < f.nvars(); ++v) os << (v ? "," : "") << m.x[v];
        os << ']';
    }
    return os.str();
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_small(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError("expected a non-negative integer, got '" + s + "'");
    }
    const int v = std::stoi(s);
    if (v > 0xFFFF) throw ParseError("exponent too large: " + s);
    return v;
}

void parse_term(const std::string& term, int nvars, Poly& out) {
    std::vector<std::string> factors;
    std::size_t start = 0;
    // '*' never appears inside x[...], so a flat split is enough.
    while (true) {
        const auto pos = term.find('*', start);
        factors.push_back(trim(term.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    mpz_class c;
    if (c.set_str(factors.front(), 10) != 0) throw ParseError("bad coefficient '" + factors.front() + "'");
    Monomial m;
    bool have_x = false;
    for (std::size_t k = 1; k < factors.size(); ++k) {
        const std::string& fac = factors[k];
        if (fac.rfind("m1^", 0) == 0) {
            m.mu1 = static_cast<std::uint16_t>(parse_small(fac.substr(3)));
        } else if (fac.rfind("m2^", 0) == 0) {
            m.mu2 = static_cast<std::uint16_t>(parse_small(fac.substr(3)));
        } else if (fac.size() >= 3 && fac[0] == 'x' && fac[1] == '[' && fac.back() == ']') {
            const std::string body = fac.substr(2, fac.size() - 3);
            int v = 0;
            std::size_t s = 0;
            while (true) {
                const auto comma = body.find(',', s);
                if (v >= nvars) throw ParseError("exponent list longer than " + std::to_string(nvars));
                m.x[v++] = static_cast<std::uint16_t>(
                    parse_small(trim(body.substr(s, comma == std::string::npos ? std::string::npos : comma - s))));
                if (comma == std::string::npos) break;
                s = comma + 1;
            }
            if (v != nvars) throw ParseError("exponent list shorter than " + std::to_string(nvars));
            have_x = true;
        } else {
            throw ParseError("unrecognized factor '" + fac + "'");
        }
    }
    if (!have_x) throw ParseError("term '" + term + "' lacks an x[...] factor");
    out.add_term(m, c);
}

}  // namespace

Poly parse_text(const std::string& s, int nvars) {
    Poly out(nvars);
    const std::string body = trim(s);
    if (body == "0") return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = body.find(" + ", start);
        parse_term(trim(body.substr(start, pos == std::string::npos ? std::string::npos : pos - start)), nvars,
                   out);
        if (pos == std::string::npos) break;
        start = pos + 3;
    }
    return out;
}

}  // namespace schubcalc
