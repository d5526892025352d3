#include "schubcalc/io.hpp"

namespace schubcalc {

nlohmann::json poly_to_json(const Poly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> x(m.x.begin(), m.x.begin() + f.nvars());
        terms.push_back({{"x", x}, {"mu", {m.mu1, m.mu2}}, {"c", c.get_str()}});
    }
    return {{"nvars", f.nvars()}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    try {
        const int nvars = j.at("nvars").get<int>();
        Poly out(nvars);
        for (const auto& t : j.at("terms")) {
            const auto x = t.at("x").get<std::vector<int>>();
            if (static_cast<int>(x.size()) != nvars) throw ParseError("term exponent list has wrong length");
            const auto mu = t.at("mu").get<std::vector<int>>();
            if (mu.size() != 2) throw ParseError("mu must have two entries");
            mpz_class c;
            if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
            out += Poly::monomial(nvars, x, mu[0], mu[1], c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace schubcalc
