#ifndef DORTHO_REPORT_HPP
#define DORTHO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dortho/poly.hpp"

namespace dortho {

/// One checked instance of an identity. For polynomial identities `lhs` and
/// `rhs` hold both sides; scalar conditions store the value in `lhs` as a
/// constant and the expectation in `expect`.
struct ReportEntry {
    std::string identity;
    int n = 0;
    bool pass = false;
    Poly lhs;
    Poly rhs;
    std::optional<int> m;
    std::optional<int> nu;
    std::string expect;  // "== rhs", "== 0", "!= 0"

    Poly residual() const { return lhs - rhs; }
};

class VerificationReport {
   public:
    /// Exact polynomial equality lhs == rhs.
    void check_equal(std::string identity, int n, Poly lhs, Poly rhs);
    /// Scalar condition on `value`: zero when want_zero, nonzero otherwise.
    void check_scalar(std::string identity, int n, const Rational& value, bool want_zero, std::optional<int> m = {},
                      std::optional<int> nu = {});
    void add(ReportEntry e) { entries_.push_back(std::move(e)); }
    void merge(const VerificationReport& other);
    void note(std::string text) { notes_.push_back(std::move(text)); }

    bool passed() const;
    std::size_t failures() const;
    const ReportEntry* first_failure() const;
    const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

   private:
    std::vector<ReportEntry> entries_;
    std::vector<std::string> notes_;
};

}  // namespace dortho

#endif
