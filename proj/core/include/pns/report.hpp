#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pns {

enum class CheckStatus { Pass, Fail, Finding, Unresolved };

std::string status_text(CheckStatus s);

// Result of one checker sweep, before it is tied to a report id.
struct CheckOutcome {
    bool pass = true;
    std::string witness;  // replayable description of the first violation
    long instances = 0;   // how many instances the sweep covered
    std::vector<std::pair<std::string, std::string>> values;  // exact values, text form
    std::string note;
};

struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    std::vector<std::pair<std::string, std::string>> values;
    std::string details;
    long duration_ms = 0;  // human report only; kept out of the machine report
};

CheckRecord make_record(std::string id, const CheckOutcome& outcome,
                        CheckStatus status_on_violation = CheckStatus::Fail);

class VerificationReport {
public:
    void set_config_echo(nlohmann::ordered_json echo) { config_echo_ = std::move(echo); }
    void add(CheckRecord record) { records_.push_back(std::move(record)); }
    void merge(const VerificationReport& other);

    const std::vector<CheckRecord>& records() const { return records_; }
    bool passed() const;  // no record with status Fail
    long fail_count() const;

    // Machine-readable form. Deterministic: fixed key order, rationals as
    // "p/q" strings, no timings.
    nlohmann::ordered_json to_json() const;

    // Human-readable form, one line per record, with timings.
    std::string to_text() const;

private:
    nlohmann::ordered_json config_echo_ = nlohmann::ordered_json::object();
    std::vector<CheckRecord> records_;
};

}  // namespace pns
