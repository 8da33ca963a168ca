#include "wsnsim/csv_io.hpp"

#include <charconv>
#include <locale>
#include <stdexcept>
#include <system_error>

namespace wsnsim {

namespace {

// Integers go through operator<<, so pin the stream to the classic locale
// while writing.
class ClassicLocale {
 public:
  explicit ClassicLocale(std::ostream& out) : out_(out), saved_(out.imbue(std::locale::classic())) {}
  ~ClassicLocale() { out_.imbue(saved_); }
  ClassicLocale(const ClassicLocale&) = delete;
  ClassicLocale& operator=(const ClassicLocale&) = delete;

 private:
  std::ostream& out_;
  std::locale saved_;
};

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

void write_rounds_csv(std::ostream& out, const LifetimeSummary& summary) {
  const ClassicLocale classic(out);
  out << "round,alive,total_energy_j,head_ids,jumps\n";
  for (const RoundRecord& r : summary.rounds) {
    out << r.round << ',' << r.alive << ',' << format_double(r.total_energy) << ',';
    for (std::size_t k = 0; k < r.heads.size(); ++k) {
      if (k > 0) out << ';';
      out << r.heads[k].value;
    }
    out << ',' << r.jumps << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const RunResult> runs) {
  const ClassicLocale classic(out);
  out << "protocol,seed,fnd,hnd,lnd\n";
  for (const RunResult& run : runs)
    out << to_string(run.kind) << ',' << run.seed << ',' << run.summary.fnd << ',' << run.summary.hnd << ','
        << run.summary.lnd << '\n';
}

void write_trace_csv(std::ostream& out, const LifetimeSummary& summary) {
  const ClassicLocale classic(out);
  out << "round,generation,best_cost\n";
  for (const RoundRecord& r : summary.rounds)
    for (std::size_t g = 0; g < r.cost_trace.size(); ++g)
      out << r.round << ',' << g << ',' << format_double(r.cost_trace[g]) << '\n';
}

void write_jumps_csv(std::ostream& out, const LifetimeSummary& summary) {
  const ClassicLocale classic(out);
  out << "round,generation,firefly\n";
  for (const RoundRecord& r : summary.rounds)
    for (const JumpEvent& e : r.jump_events) out << r.round << ',' << e.generation << ',' << e.firefly << '\n';
}

}  // namespace wsnsim
