#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schubcalc {

/// `finding` marks a documented discrepancy that is reported but does not
/// fail a run unless strict literal checking is requested.
enum class Status { pass, fail, finding };

std::string to_string(Status s);

struct CheckCase {
    std::string label;
    Status status = Status::pass;
    nlohmann::json detail = nlohmann::json::object();
};

struct Report {
    std::string name;
    std::vector<CheckCase> cases;

    void add(std::string label, bool ok, nlohmann::json detail = nlohmann::json::object());
    void add(CheckCase c) { cases.push_back(std::move(c)); }
    void append(const Report& other);

    [[nodiscard]] std::size_t count(Status s) const;
    /// No failures; with `strict`, no findings either.
    [[nodiscard]] bool passed(bool strict = false) const;
    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string to_text() const;
};

}  // namespace schubcalc
