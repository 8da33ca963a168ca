#ifndef WSNSIM_CSV_IO_HPP
#define WSNSIM_CSV_IO_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "wsnsim/simulation.hpp"

namespace wsnsim {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double value);

/// `round,alive,total_energy_j,head_ids,jumps`; head ids are ';'-separated.
void write_rounds_csv(std::ostream& out, const LifetimeSummary& summary);

/// `protocol,seed,fnd,hnd,lnd`, one line per run.
void write_summary_csv(std::ostream& out, std::span<const RunResult> runs);

/// `round,generation,best_cost` for every optimizer generation.
void write_trace_csv(std::ostream& out, const LifetimeSummary& summary);

/// `round,generation,firefly` for every jump taken.
void write_jumps_csv(std::ostream& out, const LifetimeSummary& summary);

}  // namespace wsnsim

#endif  // WSNSIM_CSV_IO_HPP
