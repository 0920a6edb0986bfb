#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace brtk {

  // Sizes, budgets and seeds of the verification suites. Every field can be
  // set from a JSON object with the same keys; unknown keys are rejected.
  struct VerifyConfig {
    std::uint64_t seed   = 1;
    std::size_t   budget = 2'000'000;  // search nodes per instance

    // exel: exhaustive premorphisms G -> I(X), and the catalog
    std::size_t exhaustive_max_group_order = 3;
    std::size_t exhaustive_max_points      = 2;
    std::size_t catalog_max_group_order    = 4;
    std::size_t catalog_max_points         = 3;

    // theorem-4-8 / lemma-4-7: intermediate extensions
    std::size_t extension_exhaustive_max_order = 3;
    std::size_t extension_samples              = 16;  // random closures per group of order 4
    std::size_t premorphisms_per_group         = 24;  // seeded subset of the suite premorphisms
    bool        explore_non_monoid             = true;

    // topology
    std::size_t topology_max_points = 3;  // every topology up to this size
    std::size_t discrete_max_points = 4;
    std::size_t domain_meet_samples = 8;  // random η per (space, Z)
    std::size_t pi_bound            = 10;
  };

  VerifyConfig load_config(std::filesystem::path const& path);
  VerifyConfig parse_config(std::string const& json_text);

  // Deterministic JSON with every field.
  std::string format_config(VerifyConfig const& c);

}  // namespace brtk
