#pragma once

#include <cstdint>
#include <random>

namespace secnoma {

enum class Device { U1 = 1, U2 = 2 };

/// Deployment geometry and transmit SNR. Device 1 is the strong (near) device.
struct SystemParams {
  double d1 = 50.0;
  double d2 = 100.0;
  double lp = 1.0;
  double e = 3.0;
  double rho_t_db = 60.0;

  /// Throws std::invalid_argument when a distance or path-loss term is not positive.
  void validate() const;

  /// Transmit SNR Pt/sigma^2 on a linear scale.
  double rho_t() const;
};

double db_to_linear(double db);

/// Mean channel power gain lp * d^(-e) of the given device.
double mean_gain(const SystemParams& params, Device device);

/// Ordered channel power gains of one fading draw; g1 > g2 > 0 always holds.
class ChannelRealization {
 public:
  ChannelRealization(double g1, double g2);

  double g1() const { return g1_; }
  double g2() const { return g2_; }
  double gain(Device device) const { return device == Device::U1 ? g1_ : g2_; }

  friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;

 private:
  double g1_;
  double g2_;
};

/// Random stream owned by a single realization index. The engine state is a
/// pure function of (seed, index), so realizations can be generated in any
/// order or concurrently and still reproduce the serial sequence.
class RealizationStream {
 public:
  RealizationStream(std::uint64_t seed, std::uint64_t index);

  /// Uniform variate in [0, 1) with 53 random bits.
  double uniform();
  /// Exponential variate with unit mean.
  double unit_exponential();

 private:
  std::mt19937_64 engine_;
};

/// One exponential power gain with the device's mean, without any ordering.
double draw_gain(const SystemParams& params, Device device, RealizationStream& stream);

/// Draws (g1, g2) pairs until g1 > g2 strictly.
ChannelRealization draw_realization(const SystemParams& params, RealizationStream& stream);

/// Convenience: the realization for stream (seed, index).
ChannelRealization realization_at(const SystemParams& params, std::uint64_t seed,
                                  std::uint64_t index);

}  // namespace secnoma
