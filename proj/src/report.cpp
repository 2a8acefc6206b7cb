#include "braidhopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace braidhopf {

namespace {

std::string no_spaces(std::string s) {
    std::replace(s.begin(), s.end(), ' ', '_');
    std::replace(s.begin(), s.end(), '\n', '_');
    return s;
}

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

std::string Check::witness_text() const {
    if (entry) {
        std::ostringstream os;
        os << "(" << entry->row << "," << entry->col << "):lhs=" << entry->lhs.get_str()
           << ",rhs=" << entry->rhs.get_str();
        return os.str();
    }
    return witness.empty() ? "-" : witness;
}

const Check& Report::expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    Check c;
    c.name = name;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.status = Status::fail;
        c.witness = "shape:lhs=" + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                    ",rhs=" + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    } else if (auto d = first_difference(lhs, rhs)) {
        c.status = Status::fail;
        c.entry = std::move(*d);
    }
    return add(std::move(c));
}

const Check& Report::expect(const std::string& name, bool ok, const std::string& witness_if_false) {
    Check c;
    c.name = name;
    if (!ok) {
        c.status = Status::fail;
        c.witness = witness_if_false.empty() ? "violated" : witness_if_false;
    }
    return add(std::move(c));
}

const Check& Report::skip(const std::string& name, const std::string& reason) {
    Check c;
    c.name = name;
    c.status = Status::skipped;
    c.witness = reason;
    return add(std::move(c));
}

const Check& Report::add(Check check) {
    checks_.push_back(std::move(check));
    return checks_.back();
}

void Report::note(const std::string& name, const std::string& value) { notes_.push_back({name, value}); }

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
    for (auto n : other.notes_) {
        n.name = prefix + n.name;
        notes_.push_back(std::move(n));
    }
}

bool Report::passed() const noexcept {
    return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; });
}

std::size_t Report::count(Status s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed();
}

std::string Report::format(ReportFormat fmt) const {
    std::ostringstream os;
    if (fmt == ReportFormat::machine) {
        os << "command=" << no_spaces(command_) << "\n";
        for (const auto& c : checks_)
            os << "check=" << c.name << " status=" << status_name(c.status)
               << " witness=" << no_spaces(c.status == Status::pass ? std::string("-") : c.witness_text()) << "\n";
        for (const auto& n : notes_) os << "note=" << n.name << " value=" << no_spaces(n.value) << "\n";
        os << "overall=" << (passed() ? "pass" : "fail") << "\n";
        return os.str();
    }
    if (!command_.empty()) os << "# " << command_ << "\n";
    for (const auto& c : checks_) {
        switch (c.status) {
            case Status::pass: os << "[PASS] " << c.name << "\n"; break;
            case Status::fail: os << "[FAIL] " << c.name << "  witness " << c.witness_text() << "\n"; break;
            case Status::skipped: os << "[SKIP] " << c.name << "  " << c.witness << "\n"; break;
        }
    }
    for (const auto& n : notes_) os << "  note " << n.name << ": " << n.value << "\n";
    os << (passed() ? "OK" : "FAILED") << " (" << count(Status::pass) << " passed, " << count(Status::fail)
       << " failed, " << count(Status::skipped) << " skipped)\n";
    return os.str();
}

}  // namespace braidhopf
