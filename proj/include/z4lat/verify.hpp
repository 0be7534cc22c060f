#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace z4lat {

enum class Scope { Table1, Table2, Table3, Swe26, Theta41, Frames, All };

std::optional<Scope> scope_from_string(const std::string& name);
std::string scope_name(Scope scope);

struct CheckResult {
    std::string id;
    std::string expected;
    std::string computed;
    enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
    std::string note;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    int skipped() const;
    bool all_ok() const { return failed() == 0; }  // exit status 0 iff no fail
};

struct VerifyOptions {
    int jobs = 1;
    unsigned long long frame_budget = 0;  // 0: library default
};

VerificationReport verify(Scope scope, const VerifyOptions& options = {});

void print_text(std::ostream& out, const VerificationReport& report);
// One JSON object per line; deterministic byte-for-byte across runs and
// worker counts (timings are excluded by design).
void write_jsonl(std::ostream& out, const VerificationReport& report);

// Dataset labels that verify(All) must exercise (coverage assertion hook).
std::vector<std::string> expected_check_ids();

}  // namespace z4lat
