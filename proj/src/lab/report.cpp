#include "cwl/report.hpp"

#include <sstream>

#include "cwl/error.hpp"

namespace cwl {

nlohmann::json to_json(const VerificationReport& r, bool include_timing) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"graph", f.graph}, {"params", f.params}, {"expected", f.expected}, {"got", f.got}});
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : r.skipped)
        skipped.push_back({{"graph", s.graph}, {"params", s.params}, {"reason", s.reason}});
    nlohmann::json j = {
        {"schema_version", kReportSchemaVersion},
        {"suite", r.suite},
        {"passed", r.passed()},
        {"instances_tested", r.instances_tested},
        {"failures", failures},
        {"skipped", skipped},
        {"notes", r.notes},
        {"config", r.config},
    };
    if (include_timing)
        j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kReportSchemaVersion)
            throw Error(ErrorCode::Parse, "unsupported report schema version " + std::to_string(version));
        VerificationReport r;
        r.suite = j.at("suite").get<std::string>();
        r.instances_tested = j.at("instances_tested").get<std::size_t>();
        for (const auto& f : j.at("failures"))
            r.failures.push_back({f.at("graph").get<std::string>(), f.at("params"), f.at("expected").get<std::string>(),
                                  f.at("got").get<std::string>()});
        for (const auto& s : j.at("skipped"))
            r.skipped.push_back({s.at("graph").get<std::string>(), s.at("params"), s.at("reason").get<std::string>()});
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.config = j.at("config");
        if (j.contains("elapsed_seconds"))
            r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
        if (j.at("passed").get<bool>() != r.passed())
            throw Error(ErrorCode::Parse, "report 'passed' disagrees with its failures");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("report json: ") + e.what());
    }
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances_tested << " instances, "
        << r.failures.size() << " failures, " << r.skipped.size() << " skipped)\n";
    for (const auto& f : r.failures)
        out << "  failure " << f.graph << ' ' << f.params.dump() << ": expected " << f.expected << ", got " << f.got
            << '\n';
    for (const auto& s : r.skipped)
        out << "  skipped " << s.graph << ' ' << s.params.dump() << ": " << s.reason << '\n';
    for (const auto& n : r.notes)
        out << "  note: " << n << '\n';
    return out.str();
}

} // namespace cwl
