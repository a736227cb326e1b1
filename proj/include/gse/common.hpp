#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gse {

inline double db_to_linear(double db) { return std::pow(10.0, db / 20.0); }
inline double linear_to_db(double g) { return 20.0 * std::log10(g); }

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic random source. Distribution sampling is implemented here
// (uniform bit mapping, Box-Muller) rather than via std:: distributions so
// that identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal(double mu, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return mu + sigma * r * std::cos(a);
  }

  bool bernoulli(double p) { return uniform() < p; }

  size_t index(size_t n) { return static_cast<size_t>(uniform() * static_cast<double>(n)); }

  // Independent child stream. Derived from the original seed, so the order
  // in which children are split off does not matter.
  Rng split(uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream))); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  size_t size() const { return samples.size(); }
  double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

struct MultichannelWaveform {
  std::vector<Waveform> channels;

  size_t num_channels() const { return channels.size(); }
  size_t num_samples() const { return channels.empty() ? 0 : channels[0].size(); }
  int sample_rate() const { return channels.empty() ? 0 : channels[0].sample_rate; }

  void validate() const {
    if (channels.empty()) throw std::invalid_argument("multichannel waveform needs >= 1 channel");
    for (const auto& ch : channels) {
      if (ch.size() != channels[0].size()) throw std::invalid_argument("channel lengths differ");
      if (ch.sample_rate != channels[0].sample_rate)
        throw std::invalid_argument("channel sample rates differ");
    }
  }
};

inline double mean_power(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

inline double energy(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

}  // namespace gse
