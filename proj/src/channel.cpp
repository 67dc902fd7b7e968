#include "secnoma/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace secnoma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void SystemParams::validate() const {
  require_positive(d1, "d1");
  require_positive(d2, "d2");
  require_positive(lp, "lp");
  require_positive(e, "e");
  if (!std::isfinite(rho_t_db)) {
    throw std::invalid_argument("rho_t_db must be finite");
  }
}

double SystemParams::rho_t() const { return db_to_linear(rho_t_db); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double mean_gain(const SystemParams& params, Device device) {
  const double d = device == Device::U1 ? params.d1 : params.d2;
  return params.lp * std::pow(d, -params.e);
}

ChannelRealization::ChannelRealization(double g1, double g2) : g1_(g1), g2_(g2) {
  if (!(g2 > 0.0) || !(g1 > g2) || !std::isfinite(g1)) {
    throw std::invalid_argument("channel gains must satisfy g1 > g2 > 0");
  }
}

RealizationStream::RealizationStream(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ (index * 0xd6e8feb86659fd93ULL + 1))) {}

double RealizationStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RealizationStream::unit_exponential() { return -std::log1p(-uniform()); }

double draw_gain(const SystemParams& params, Device device, RealizationStream& stream) {
  return mean_gain(params, device) * stream.unit_exponential();
}

ChannelRealization draw_realization(const SystemParams& params, RealizationStream& stream) {
  for (;;) {
    const double g1 = draw_gain(params, Device::U1, stream);
    const double g2 = draw_gain(params, Device::U2, stream);
    // Ties and zero draws are rejected along with inverted pairs.
    if (g2 > 0.0 && g1 > g2) {
      return ChannelRealization(g1, g2);
    }
  }
}

ChannelRealization realization_at(const SystemParams& params, std::uint64_t seed,
                                  std::uint64_t index) {
  RealizationStream stream(seed, index);
  return draw_realization(params, stream);
}

}  // namespace secnoma
