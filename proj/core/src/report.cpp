#include "pns/report.hpp"

#include <sstream>

namespace pns {

std::string status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Finding: return "finding";
        case CheckStatus::Unresolved: return "unresolved";
    }
    return "unknown";
}

CheckRecord make_record(std::string id, const CheckOutcome& outcome, CheckStatus status_on_violation) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.status = outcome.pass ? CheckStatus::Pass : status_on_violation;
    rec.witness = outcome.witness;
    rec.values = outcome.values;
    std::ostringstream details;
    details << outcome.instances << " instance" << (outcome.instances == 1 ? "" : "s") << " checked";
    if (!outcome.note.empty()) details << "; " << outcome.note;
    rec.details = details.str();
    return rec;
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& r : other.records_) records_.push_back(r);
}

bool VerificationReport::passed() const { return fail_count() == 0; }

long VerificationReport::fail_count() const {
    long n = 0;
    for (const auto& r : records_)
        if (r.status == CheckStatus::Fail) ++n;
    return n;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["config"] = config_echo_;
    auto recs = nlohmann::ordered_json::array();
    for (const auto& r : records_) {
        nlohmann::ordered_json jr;
        jr["id"] = r.id;
        jr["status"] = status_text(r.status);
        if (!r.witness.empty()) jr["witness"] = r.witness;
        if (!r.values.empty()) {
            auto vals = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.values) vals[k] = v;
            jr["values"] = vals;
        }
        if (!r.details.empty()) jr["details"] = r.details;
        recs.push_back(std::move(jr));
    }
    doc["records"] = std::move(recs);
    doc["verdict"] = passed() ? "pass" : "fail";
    return doc;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    for (const auto& r : records_) {
        out << "[" << status_text(r.status) << "] " << r.id;
        if (!r.details.empty()) out << "  (" << r.details << ")";
        if (r.duration_ms > 0) out << "  [" << r.duration_ms << " ms]";
        out << "\n";
        if (!r.witness.empty()) out << "    witness: " << r.witness << "\n";
        for (const auto& [k, v] : r.values) out << "    " << k << " = " << v << "\n";
    }
    out << "verdict: " << (passed() ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace pns
