#include "dortho/report.hpp"

#include <algorithm>

namespace dortho {

void VerificationReport::check_equal(std::string identity, int n, Poly lhs, Poly rhs) {
    ReportEntry e;
    e.identity = std::move(identity);
    e.n = n;
    e.pass = lhs == rhs;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.expect = "== rhs";
    entries_.push_back(std::move(e));
}

void VerificationReport::check_scalar(std::string identity, int n, const Rational& value, bool want_zero,
                                      std::optional<int> m, std::optional<int> nu) {
    ReportEntry e;
    e.identity = std::move(identity);
    e.n = n;
    e.pass = value.is_zero() == want_zero;
    e.lhs = Poly::constant(value);
    e.m = m;
    e.nu = nu;
    e.expect = want_zero ? "== 0" : "!= 0";
    entries_.push_back(std::move(e));
}

void VerificationReport::merge(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool VerificationReport::passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.pass; }));
}

const ReportEntry* VerificationReport::first_failure() const {
    const auto it = std::find_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.pass; });
    return it == entries_.end() ? nullptr : &*it;
}

}  // namespace dortho
