#pragma once

#include <string>
#include <vector>

#include "rsmm/channel.hpp"

namespace rsmm {

enum class DecoderKind { Bm, Gs, Acd, AcdRe, Kv, KvRe };

struct DecoderSpec {
  DecoderKind kind = DecoderKind::Bm;
  int m = 1;
  int l = 1;
  int eta = 0;

  std::string tag() const;
  static DecoderSpec parse(const std::string& name, int m, int l, int eta);
};

struct TrialReport {
  double snr_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t frame_errors = 0;
  std::uint64_t symbol_errors = 0;
  double fer = 0.0;
  double ser = 0.0;
  double avg_mults = 0.0;
  std::string decoder;
};

// One decode of a frame's worth of soft information; used by the campaign
// and by the CLI decode path.
struct FrameDecode {
  std::vector<Message> candidates;
  std::optional<Message> best;
  MulCounter ops;
};
FrameDecode decode_frame(const RsCode& code, const ReliabilityMatrix& pi,
                         const DecoderSpec& spec);

// Monte-Carlo sweep; one report per SNR point, deterministic in the seed.
std::vector<TrialReport> run_campaign(const RsCode& code, const DecoderSpec& spec,
                                      double snr_start, double snr_stop,
                                      double snr_step, std::uint64_t frames,
                                      std::uint64_t seed);

// Header: snr_db,frames,frame_errors,fer,symbol_errors,ser,avg_mults,decoder
std::string to_csv(const std::vector<TrialReport>& reports);

}  // namespace rsmm
