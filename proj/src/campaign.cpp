#include "dncheck/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "dncheck/errors.hpp"
#include "dncheck/ntheory.hpp"

namespace dncheck {

namespace {

bool counts_indices(StatementId id) {
    return id == StatementId::CENTRAL_REDUCTION || id == StatementId::VANISHING_RANGE;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt_to_string(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

std::vector<StatementId> canonical_statements(std::vector<StatementId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "jsonl") return OutputFormat::Jsonl;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "human") return OutputFormat::Human;
    return std::nullopt;
}

u64 CampaignSummary::total_failed() const {
    u64 n = 0;
    for (const auto& [id, t] : per_statement) n += t.failed;
    return n;
}

void validate(const CampaignConfig& cfg) {
    if (cfg.statements.empty()) throw UsageError("no statements selected");
    if (cfg.pmin > cfg.pmax) throw UsageError("pmin > pmax");
    if (cfg.pmax >= (u64{1} << 31)) throw UsageError("pmax must be below 2^31");
    if (cfg.threads == 0) throw UsageError("threads must be positive");
    if (cfg.chunk_size == 0) throw UsageError("chunk size must be positive");
    for (const auto& x : cfg.xs) {
        if (x.den == 0) throw UsageError("zero denominator in x");
    }
}

std::vector<VerificationRecord> collect_records(const CampaignConfig& cfg, bool* stopped_early) {
    validate(cfg);
    const std::vector<u64> primes = sieve_primes(cfg.pmin, cfg.pmax);
    const std::vector<StatementId> statements = canonical_statements(cfg.statements);
    const std::vector<SmallRational> xs = cfg.xs.empty() ? default_arguments() : cfg.xs;

    const std::size_t n_chunks = (primes.size() + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<std::vector<VerificationRecord>> results(n_chunks);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const std::size_t chunk = next.fetch_add(1);
            if (chunk >= n_chunks) return;
            const std::size_t begin = chunk * cfg.chunk_size;
            const std::size_t end = std::min(primes.size(), begin + cfg.chunk_size);
            auto& out = results[chunk];
            for (std::size_t i = begin; i < end; ++i) {
                if (cfg.fail_fast && stop.load()) return;
                bool failed = false;
                for (StatementId id : statements) {
                    for (auto& rec : verify_statement(id, primes[i], xs)) {
                        failed = failed || rec.verdict() == Verdict::Failed;
                        out.push_back(std::move(rec));
                    }
                }
                if (cfg.fail_fast && failed) stop.store(true);
            }
        }
    };

    const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n_chunks)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }

    std::vector<VerificationRecord> merged;
    for (auto& chunk : results) {
        for (auto& rec : chunk) merged.push_back(std::move(rec));
    }
    if (stopped_early) *stopped_early = stop.load();
    return merged;
}

std::string emit_record(const VerificationRecord& rec, OutputFormat format) {
    switch (format) {
        case OutputFormat::Jsonl: {
            nlohmann::ordered_json j;
            j["statement"] = std::string(to_string(rec.statement));
            j["p"] = rec.p;
            j["e"] = rec.e;
            j["lhs"] = rec.lhs ? nlohmann::ordered_json(*rec.lhs) : nlohmann::ordered_json(nullptr);
            j["rhs"] = rec.rhs ? nlohmann::ordered_json(*rec.rhs) : nlohmann::ordered_json(nullptr);
            j["ok"] = rec.ok;
            j["note"] = rec.note;
            return j.dump();
        }
        case OutputFormat::Csv:
            return std::string(to_string(rec.statement)) + "," + std::to_string(rec.p) + "," +
                   std::to_string(rec.e) + "," + opt_to_string(rec.lhs) + "," + opt_to_string(rec.rhs) + "," +
                   (rec.ok ? "true" : "false") + "," + csv_field(rec.note);
        case OutputFormat::Human: {
            std::ostringstream os;
            os << to_string(rec.statement) << " p=" << rec.p << " ";
            if (rec.out_of_domain) {
                os << "OUT_OF_DOMAIN";
                if (rec.lhs) os << " (lhs " << *rec.lhs << ")";
            } else if (counts_indices(rec.statement)) {
                os << (rec.ok ? "OK" : "FAIL") << " (" << opt_to_string(rec.lhs) << "/" << opt_to_string(rec.rhs)
                   << " indices)";
            } else {
                u64 m = rec.p;
                if (rec.e == 2) m *= rec.p;
                os << (rec.ok ? "OK" : "FAIL") << " (" << opt_to_string(rec.lhs) << (rec.ok ? " ≡ " : " ≢ ")
                   << opt_to_string(rec.rhs) << " mod " << m << ")";
            }
            if (!rec.note.empty()) os << " [" << rec.note << "]";
            return os.str();
        }
    }
    throw std::invalid_argument("unknown output format");
}

std::string csv_header() { return "statement,p,e,lhs,rhs,ok,note"; }

CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    CampaignSummary summary;
    for (StatementId id : cfg.statements) summary.per_statement[id];

    const auto records = collect_records(cfg, &summary.stopped_early);
    if (cfg.format == OutputFormat::Csv) out << csv_header() << '\n';
    for (const auto& rec : records) {
        out << emit_record(rec, cfg.format) << '\n';
        StatementTally& t = summary.per_statement[rec.statement];
        ++t.checked;
        switch (rec.verdict()) {
            case Verdict::Ok: ++t.ok; break;
            case Verdict::OutOfDomain: ++t.out_of_domain; break;
            case Verdict::Failed:
                ++t.failed;
                if (!t.first_counterexample) t.first_counterexample = rec;
                break;
        }
    }
    out.flush();
    if (!out) throw std::runtime_error("IoError: failed writing records");
    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
    if (cfg.out_path.empty()) return run_campaign(cfg, std::cout);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("IoError: cannot open " + cfg.out_path);
    return run_campaign(cfg, file);
}

std::string format_summary(const CampaignSummary& summary) {
    std::ostringstream os;
    for (const auto& [id, t] : summary.per_statement) {
        os << to_string(id) << ": checked " << t.checked << ", ok " << t.ok << ", failed " << t.failed
           << ", out_of_domain " << t.out_of_domain << '\n';
        if (t.first_counterexample) {
            os << "  first counterexample: " << emit_record(*t.first_counterexample, OutputFormat::Human) << '\n';
        }
    }
    if (summary.stopped_early) os << "stopped early (fail-fast)\n";
    os << "wall time " << summary.wall_seconds << " s\n";
    return os.str();
}

int exit_code(const CampaignSummary& summary) { return summary.total_failed() == 0 ? 0 : 1; }

}  // namespace dncheck
