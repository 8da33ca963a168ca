#ifndef WSNSIM_RADIO_HPP
#define WSNSIM_RADIO_HPP

#include <cstddef>

namespace wsnsim {

/// First-order radio model constants, SI units. Defaults are the reference
/// deployment's values.
struct RadioParams {
  double e_elec = 50e-9;       // J/bit, transmitter/receiver electronics
  double e_da = 50e-9;         // J/bit/signal, data aggregation
  double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
  double payload_bits = 4000;  // l, bits per data frame

  void validate() const;
};

/// Free-space / multipath crossover distance sqrt(eps_fs / eps_mp).
double threshold_distance(const RadioParams& params);

/// Energy to send `bits` over `distance` meters.
double tx_energy(const RadioParams& params, double bits, double distance);

double rx_energy(const RadioParams& params, double bits);

/// Energy to fuse `signals` frames of `payload_bits` each.
double aggregation_energy(const RadioParams& params, std::size_t signals);

/**
 * Per-round energy of a cluster head with `members` non-head members that
 * forwards one fused frame `d_to_bs` meters to the base station.
 *
 * The head receives every member frame, aggregates members + 1 signals
 * (its own included) and transmits once with the distance-switched model.
 */
double ch_round_energy(const RadioParams& params, std::size_t members, double d_to_bs);

}  // namespace wsnsim

#endif  // WSNSIM_RADIO_HPP
