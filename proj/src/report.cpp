#include "schubcalc/report.hpp"

#include <algorithm>
#include <sstream>

namespace schubcalc {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::finding: return "finding";
    }
    return "?";
}

void Report::add(std::string label, bool ok, nlohmann::json detail) {
    cases.push_back({std::move(label), ok ? Status::pass : Status::fail, std::move(detail)});
}

void Report::append(const Report& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CheckCase& c) { return c.status == s; }));
}

bool Report::passed(bool strict) const {
    return count(Status::fail) == 0 && (!strict || count(Status::finding) == 0);
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["check"] = name;
    j["pass"] = count(Status::pass);
    j["fail"] = count(Status::fail);
    j["finding"] = count(Status::finding);
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json cj{{"label", c.label}, {"status", to_string(c.status)}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["cases"].push_back(std::move(cj));
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << name << ": " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::finding) << " finding\n";
    for (const auto& c : cases) {
        if (c.status == Status::pass) continue;
        os << "  [" << to_string(c.status) << "] " << c.label;
        if (!c.detail.empty()) os << "  " << c.detail.dump();
        os << '\n';
    }
    return os.str();
}

}  // namespace schubcalc
