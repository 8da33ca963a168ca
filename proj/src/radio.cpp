#include "wsnsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace wsnsim {

void RadioParams::validate() const {
  if (!(e_elec > 0.0)) throw std::invalid_argument("e_elec must be positive");
  if (!(e_da > 0.0)) throw std::invalid_argument("e_da must be positive");
  if (!(eps_fs > 0.0)) throw std::invalid_argument("eps_fs must be positive");
  if (!(eps_mp > 0.0)) throw std::invalid_argument("eps_mp must be positive");
  if (!(payload_bits > 0.0)) throw std::invalid_argument("payload_bits must be positive");
}

double threshold_distance(const RadioParams& params) {
  if (!(params.eps_fs > 0.0) || !(params.eps_mp > 0.0))
    throw std::invalid_argument("amplifier constants must be positive");
  return std::sqrt(params.eps_fs / params.eps_mp);
}

double tx_energy(const RadioParams& params, double bits, double distance) {
  const double d2 = distance * distance;
  const double amp = distance < threshold_distance(params) ? params.eps_fs * d2 : params.eps_mp * d2 * d2;
  return bits * params.e_elec + bits * amp;
}

double rx_energy(const RadioParams& params, double bits) { return bits * params.e_elec; }

double aggregation_energy(const RadioParams& params, std::size_t signals) {
  return static_cast<double>(signals) * params.payload_bits * params.e_da;
}

double ch_round_energy(const RadioParams& params, std::size_t members, double d_to_bs) {
  const double l = params.payload_bits;
  return static_cast<double>(members) * rx_energy(params, l) + aggregation_energy(params, members + 1) +
         tx_energy(params, l, d_to_bs);
}

}  // namespace wsnsim
