#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gse/common.hpp"

namespace gse {

enum class WavEncoding { pcm16, float32 };

namespace detail {

inline void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

inline void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
}

inline void put_f32(std::vector<uint8_t>& out, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(out, bits);
}

struct ByteReader {
  const uint8_t* p;
  size_t n;
  size_t pos = 0;

  bool has(size_t k) const { return pos + k <= n; }
  uint16_t u16() {
    require(2);
    uint16_t v = static_cast<uint16_t>(p[pos] | (p[pos + 1] << 8));
    pos += 2;
    return v;
  }
  uint32_t u32() {
    require(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(p[pos + i]) << (8 * i);
    pos += 4;
    return v;
  }
  float f32() {
    uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  void require(size_t k) const {
    if (!has(k)) throw std::runtime_error("wav: truncated file");
  }
  std::string tag() {
    require(4);
    std::string s(reinterpret_cast<const char*>(p + pos), 4);
    pos += 4;
    return s;
  }
};

inline std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  f.seekg(0, std::ios::end);
  std::streamoff len = f.tellg();
  f.seekg(0, std::ios::beg);
  std::vector<uint8_t> buf(static_cast<size_t>(len));
  if (len > 0) f.read(reinterpret_cast<char*>(buf.data()), len);
  if (!f) throw std::runtime_error("i/o error reading: " + path);
  return buf;
}

inline void write_file(const std::string& path, const std::vector<uint8_t>& buf) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path);
  f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!f) throw std::runtime_error("i/o error writing: " + path);
}

}  // namespace detail

// PCM-16 samples map to [-1, 1) by division with 32768; writing clamps to
// [-1, 1] and rounds half away from zero (so +1.0 stores as 32767).
inline MultichannelWaveform read_wav(const std::string& path) {
  auto buf = detail::read_file(path);
  detail::ByteReader r{buf.data(), buf.size()};
  if (r.tag() != "RIFF") throw std::runtime_error("wav: missing RIFF header");
  uint32_t riff_size = r.u32();
  if (static_cast<size_t>(riff_size) + 8 != buf.size())
    throw std::runtime_error("wav: declared RIFF size disagrees with file size");
  if (r.tag() != "WAVE") throw std::runtime_error("wav: not a WAVE file");

  bool have_fmt = false;
  uint16_t format = 0, num_channels = 0, bits = 0, block_align = 0;
  uint32_t sample_rate = 0;
  while (true) {
    if (!r.has(8)) throw std::runtime_error("wav: no data chunk");
    std::string id = r.tag();
    uint32_t size = r.u32();
    if (id == "fmt ") {
      if (size < 16) throw std::runtime_error("wav: malformed fmt chunk");
      size_t end = r.pos + size;
      format = r.u16();
      num_channels = r.u16();
      sample_rate = r.u32();
      r.u32();  // byte rate
      block_align = r.u16();
      bits = r.u16();
      r.require(end - r.pos);
      r.pos = end + (size & 1);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw std::runtime_error("wav: data chunk before fmt");
      if (!r.has(size)) throw std::runtime_error("wav: declared data length disagrees with actual length");
      if (num_channels == 0) throw std::runtime_error("wav: zero channels");
      bool is_pcm16 = format == 1 && bits == 16;
      bool is_f32 = format == 3 && bits == 32;
      if (!is_pcm16 && !is_f32) throw std::runtime_error("wav: unsupported encoding");
      uint16_t bytes_per_sample = bits / 8;
      if (block_align != bytes_per_sample * num_channels)
        throw std::runtime_error("wav: malformed block alignment");
      if (size % block_align != 0)
        throw std::runtime_error("wav: data size not a multiple of the frame size");
      size_t frames = size / block_align;
      MultichannelWaveform out;
      out.channels.resize(num_channels);
      for (auto& ch : out.channels) {
        ch.sample_rate = static_cast<int>(sample_rate);
        ch.samples.resize(frames);
      }
      for (size_t t = 0; t < frames; ++t) {
        for (size_t c = 0; c < num_channels; ++c) {
          if (is_pcm16) {
            int16_t v = static_cast<int16_t>(r.u16());
            out.channels[c].samples[t] = static_cast<double>(v) / 32768.0;
          } else {
            out.channels[c].samples[t] = static_cast<double>(r.f32());
          }
        }
      }
      return out;
    } else {
      r.require(size);
      r.pos += size + (size & 1);
    }
  }
}

inline void write_wav(const std::string& path, const MultichannelWaveform& wave,
                      WavEncoding encoding = WavEncoding::float32) {
  wave.validate();
  const size_t channels = wave.num_channels();
  const size_t frames = wave.num_samples();
  for (const auto& ch : wave.channels)
    for (double v : ch.samples)
      if (!std::isfinite(v)) throw std::invalid_argument("write_wav: non-finite sample");

  const uint16_t bytes_per_sample = encoding == WavEncoding::pcm16 ? 2 : 4;
  const uint32_t data_size = static_cast<uint32_t>(frames * channels * bytes_per_sample);

  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  detail::put_u32(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  detail::put_u32(out, 16);
  detail::put_u16(out, encoding == WavEncoding::pcm16 ? 1 : 3);
  detail::put_u16(out, static_cast<uint16_t>(channels));
  detail::put_u32(out, static_cast<uint32_t>(wave.sample_rate()));
  detail::put_u32(out, static_cast<uint32_t>(wave.sample_rate() * channels * bytes_per_sample));
  detail::put_u16(out, static_cast<uint16_t>(channels * bytes_per_sample));
  detail::put_u16(out, static_cast<uint16_t>(bytes_per_sample * 8));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  detail::put_u32(out, data_size);

  for (size_t t = 0; t < frames; ++t) {
    for (size_t c = 0; c < channels; ++c) {
      double v = wave.channels[c].samples[t];
      if (encoding == WavEncoding::pcm16) {
        double clamped = std::max(-1.0, std::min(1.0, v));
        long q = std::lround(clamped * 32768.0);  // rounds half away from zero
        q = std::max(-32768l, std::min(32767l, q));
        detail::put_u16(out, static_cast<uint16_t>(static_cast<int16_t>(q)));
      } else {
        detail::put_f32(out, static_cast<float>(v));
      }
    }
  }
  detail::write_file(path, out);
}

inline void write_wav(const std::string& path, const Waveform& wave,
                      WavEncoding encoding = WavEncoding::float32) {
  write_wav(path, MultichannelWaveform{{wave}}, encoding);
}

}  // namespace gse
