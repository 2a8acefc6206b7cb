#ifndef BRAIDHOPF_REPORT_HPP
#define BRAIDHOPF_REPORT_HPP

#include "braidhopf/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace braidhopf {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    /// First violated matrix entry, for identity checks that fail.
    std::optional<EntryDifference> entry;
    /// Free-form witness for failing checks that are not matrix identities,
    /// or the reason a check was skipped.
    std::string witness;

    bool passed() const noexcept { return status == Status::pass; }
    std::string witness_text() const;
};

/// Informational line; never affects the overall status.
struct Note {
    std::string name;
    std::string value;
};

enum class ReportFormat { plain, machine };

/// Ordered collection of named checks. Every failing check carries a witness.
class Report {
public:
    Report() = default;
    explicit Report(std::string command) : command_(std::move(command)) {}

    const std::string& command() const noexcept { return command_; }
    void set_command(std::string c) { command_ = std::move(c); }

    /// Exact matrix identity; a shape mismatch is itself a failure.
    const Check& expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs);
    const Check& expect(const std::string& name, bool ok, const std::string& witness_if_false);
    const Check& skip(const std::string& name, const std::string& reason);
    const Check& add(Check check);
    void note(const std::string& name, const std::string& value);

    /// Appends all checks and notes of other, prefixing names with prefix.
    void merge(const Report& other, const std::string& prefix = "");

    bool passed() const noexcept;
    std::size_t count(Status s) const noexcept;
    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::vector<Note>& notes() const noexcept { return notes_; }
    const Check* find(const std::string& name) const;
    /// True if the named check exists and passed.
    bool passed(const std::string& name) const;

    std::string format(ReportFormat fmt) const;

private:
    std::string command_;
    std::vector<Check> checks_;
    std::vector<Note> notes_;
};

}  // namespace braidhopf

#endif
