#include "brtk/verify/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "brtk/error.hpp"

namespace brtk {

  std::string_view status_name(Status s) noexcept {
    switch (s) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      case Status::hypothesis_not_met: return "hypothesis-not-met";
      case Status::skipped: return "skipped";
    }
    return "?";
  }

  void VerificationReport::add(CheckRecord record) {
    if (record.status == Status::fail && record.detail.empty()) {
      throw ValidationError("failed check " + record.tag + " on " + record.instance + " has no witness");
    }
    if (record.status == Status::skipped && record.detail.empty()) {
      throw ValidationError("skipped check " + record.tag + " on " + record.instance + " has no reason");
    }
    _records.push_back(std::move(record));
  }

  void VerificationReport::pass(std::string suite, std::string tag, std::string instance, std::string note) {
    add({std::move(suite), std::move(tag), std::move(instance), Status::pass, std::move(note)});
  }

  void VerificationReport::fail(std::string suite, std::string tag, std::string instance, std::string witness) {
    add({std::move(suite), std::move(tag), std::move(instance), Status::fail, std::move(witness)});
  }

  void VerificationReport::skip(std::string suite, std::string tag, std::string instance, std::string reason) {
    add({std::move(suite), std::move(tag), std::move(instance), Status::skipped, std::move(reason)});
  }

  void VerificationReport::check(bool        ok,
                                 bool        hypothesis,
                                 std::string suite,
                                 std::string tag,
                                 std::string instance,
                                 std::string witness) {
    Status const s = ok ? Status::pass : (hypothesis ? Status::fail : Status::hypothesis_not_met);
    add({std::move(suite), std::move(tag), std::move(instance), s, ok ? std::string{} : std::move(witness)});
  }

  void VerificationReport::merge(VerificationReport const& other) {
    _records.insert(_records.end(), other._records.begin(), other._records.end());
  }

  void VerificationReport::sort() {
    std::sort(_records.begin(), _records.end());
  }

  ReportSummary VerificationReport::summary() const {
    ReportSummary                                s;
    std::set<std::pair<std::string, std::string>> instances;
    for (auto const& r : _records) {
      ++s.checks;
      switch (r.status) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::hypothesis_not_met: ++s.hypothesis_not_met; break;
        case Status::skipped: ++s.skipped; break;
      }
      instances.emplace(r.suite, r.instance);
    }
    s.instances = instances.size();
    return s;
  }

  bool VerificationReport::ok() const noexcept {
    return std::none_of(_records.begin(), _records.end(), [](auto const& r) { return r.status == Status::fail; });
  }

  std::string VerificationReport::format(ReportFormat f) const {
    std::ostringstream out;
    auto const         s = summary();
    if (f == ReportFormat::records) {
      for (auto const& r : _records) {
        nlohmann::ordered_json j;
        j["suite"]    = r.suite;
        j["tag"]      = r.tag;
        j["instance"] = r.instance;
        j["status"]   = status_name(r.status);
        if (!r.detail.empty()) {
          j[r.status == Status::fail ? "witness" : (r.status == Status::skipped ? "reason" : "note")] = r.detail;
        }
        out << j.dump() << '\n';
      }
      nlohmann::ordered_json footer;
      footer["summary"] = {{"suite", _suite},
                           {"seed", _seed},
                           {"instances", s.instances},
                           {"checks", s.checks},
                           {"pass", s.pass},
                           {"fail", s.fail},
                           {"hypothesis-not-met", s.hypothesis_not_met},
                           {"skipped", s.skipped}};
      out << footer.dump() << '\n';
      return out.str();
    }
    out << "suite " << _suite << ", seed " << _seed << '\n';
    for (auto const& r : _records) {
      out << status_name(r.status) << "  " << r.suite << "  " << r.tag << "  " << r.instance;
      if (!r.detail.empty()) {
        out << "  | " << r.detail;
      }
      out << '\n';
    }
    out << "summary: " << s.checks << " checks over " << s.instances << " instances; " << s.pass << " pass, "
        << s.fail << " fail, " << s.hypothesis_not_met << " hypothesis-not-met, " << s.skipped << " skipped\n";
    return out.str();
  }

}  // namespace brtk
