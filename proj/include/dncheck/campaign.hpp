#pragma once

// Batched verification over a prime range. Workers process chunks of primes
// independently; records are merged and emitted in ascending (p, statement)
// order, so the output does not depend on the thread count.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dncheck/congruence.hpp"

namespace dncheck {

enum class OutputFormat { Jsonl, Csv, Human };

std::optional<OutputFormat> parse_format(std::string_view name);

struct CampaignConfig {
    std::vector<StatementId> statements;
    u64 pmin = 3;
    u64 pmax = 3;
    /// Arguments for DSQUARE_X / SUN_ALTERNATING; default_arguments() if empty.
    std::vector<SmallRational> xs;
    unsigned threads = 1;
    OutputFormat format = OutputFormat::Jsonl;
    /// Empty means standard output.
    std::string out_path;
    bool fail_fast = false;
    /// Primes per work unit.
    std::size_t chunk_size = 256;
};

struct StatementTally {
    u64 checked = 0;
    u64 ok = 0;
    u64 failed = 0;
    u64 out_of_domain = 0;
    std::optional<VerificationRecord> first_counterexample;
};

struct CampaignSummary {
    std::map<StatementId, StatementTally> per_statement;
    double wall_seconds = 0.0;
    bool stopped_early = false;

    u64 total_failed() const;
};

/// Throws UsageError on an invalid configuration.
void validate(const CampaignConfig& cfg);

/// Computes all records (sorted) without emitting them.
std::vector<VerificationRecord> collect_records(const CampaignConfig& cfg, bool* stopped_early = nullptr);

/// One serialized line, without the trailing newline.
std::string emit_record(const VerificationRecord& rec, OutputFormat format);
std::string csv_header();

CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream& out);
/// Writes to cfg.out_path (or stdout). Throws std::runtime_error on IO failure.
CampaignSummary run_campaign(const CampaignConfig& cfg);

std::string format_summary(const CampaignSummary& summary);

/// 0 without failed records, 1 otherwise.
int exit_code(const CampaignSummary& summary);

}  // namespace dncheck
