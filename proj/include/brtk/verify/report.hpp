#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace brtk {

  enum class Status { pass, fail, hypothesis_not_met, skipped };

  std::string_view status_name(Status s) noexcept;

  struct CheckRecord {
    std::string suite;
    std::string tag;
    std::string instance;
    Status      status = Status::pass;
    // counterexample for fail, reason for skipped, note otherwise
    std::string detail;

    auto operator<=>(CheckRecord const&) const = default;
  };

  struct ReportSummary {
    std::size_t checks             = 0;
    std::size_t pass               = 0;
    std::size_t fail               = 0;
    std::size_t hypothesis_not_met = 0;
    std::size_t skipped            = 0;
    std::size_t instances          = 0;
  };

  enum class ReportFormat { text, records };

  class VerificationReport {
   public:
    VerificationReport() = default;
    VerificationReport(std::string suite, std::uint64_t seed) : _suite(std::move(suite)), _seed(seed) {}

    // Throws ValidationError for a fail without a witness or a skip without
    // a reason.
    void add(CheckRecord record);
    void pass(std::string suite, std::string tag, std::string instance, std::string note = {});
    void fail(std::string suite, std::string tag, std::string instance, std::string witness);
    void skip(std::string suite, std::string tag, std::string instance, std::string reason);
    // pass when ok, otherwise fail (witness) or hypothesis-not-met (note)
    void check(bool ok, bool hypothesis, std::string suite, std::string tag, std::string instance,
               std::string witness);

    void merge(VerificationReport const& other);

    // Canonical order: suite, tag, instance, then status and detail.
    void sort();

    std::string const& suite() const noexcept {
      return _suite;
    }
    std::uint64_t seed() const noexcept {
      return _seed;
    }
    std::vector<CheckRecord> const& records() const noexcept {
      return _records;
    }

    ReportSummary summary() const;
    bool          ok() const noexcept;

    std::string format(ReportFormat f) const;

   private:
    std::string              _suite;
    std::uint64_t            _seed = 0;
    std::vector<CheckRecord> _records;
  };

}  // namespace brtk
