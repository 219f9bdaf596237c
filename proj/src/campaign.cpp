#include "rsmm/campaign.hpp"

#include <cstdio>
#include <stdexcept>

#include "rsmm/acd.hpp"
#include "rsmm/kv.hpp"

namespace rsmm {

std::string DecoderSpec::tag() const {
  switch (kind) {
    case DecoderKind::Bm: return "bm";
    case DecoderKind::Gs: return "gs";
    case DecoderKind::Acd: return "acd";
    case DecoderKind::AcdRe: return "acd-re";
    case DecoderKind::Kv: return "kv";
    case DecoderKind::KvRe: return "kv-re";
  }
  return "?";
}

DecoderSpec DecoderSpec::parse(const std::string& name, int m, int l, int eta) {
  DecoderSpec spec;
  spec.m = m;
  spec.l = l;
  spec.eta = eta;
  if (name == "bm") spec.kind = DecoderKind::Bm;
  else if (name == "gs") spec.kind = DecoderKind::Gs;
  else if (name == "acd") spec.kind = DecoderKind::Acd;
  else if (name == "acd-re") spec.kind = DecoderKind::AcdRe;
  else if (name == "kv") spec.kind = DecoderKind::Kv;
  else if (name == "kv-re") spec.kind = DecoderKind::KvRe;
  else throw std::invalid_argument("unknown decoder: " + name);
  return spec;
}

FrameDecode decode_frame(const RsCode& code, const ReliabilityMatrix& pi,
                         const DecoderSpec& spec) {
  FrameDecode out;
  switch (spec.kind) {
    case DecoderKind::Bm: {
      const Gf gf(code.field(), &out.ops);
      auto msg = bm_decode(gf, code, pi.hard_word());
      if (msg) {
        out.candidates.push_back(*msg);
        out.best = std::move(*msg);
      }
      break;
    }
    case DecoderKind::Gs: {
      const Gf gf(code.field(), &out.ops);
      const Word hard = pi.hard_word();
      TestVector tv;
      tv.symbols = hard;
      GsTrace tr = gs_decode_word(gf, code, tv, spec.m, spec.l);
      out.candidates = std::move(tr.roots);
      if (!out.candidates.empty())
        out.best = pick_best_hard(gf, code, out.candidates, hard);
      break;
    }
    case DecoderKind::Acd:
    case DecoderKind::AcdRe: {
      AcdResult r = (spec.kind == DecoderKind::Acd)
                        ? acd_mm_decode(code, pi, spec.eta, spec.m, spec.l)
                        : acd_mm_re_decode(code, pi, spec.eta, spec.m, spec.l);
      out.candidates = std::move(r.candidates);
      out.best = std::move(r.best);
      out.ops = r.ops;
      break;
    }
    case DecoderKind::Kv:
    case DecoderKind::KvRe: {
      KvResult r = (spec.kind == DecoderKind::Kv)
                       ? kv_mm_decode(code, pi, spec.l)
                       : kv_mm_re_decode(code, pi, spec.l);
      out.candidates = std::move(r.candidates);
      out.best = std::move(r.best);
      out.ops = r.ops;
      break;
    }
  }
  return out;
}

std::vector<TrialReport> run_campaign(const RsCode& code, const DecoderSpec& spec,
                                      double snr_start, double snr_stop,
                                      double snr_step, std::uint64_t frames,
                                      std::uint64_t seed) {
  if (frames < 1) throw std::invalid_argument("need at least one frame");
  if (snr_step <= 0) throw std::invalid_argument("snr step must be positive");
  std::vector<TrialReport> reports;
  const Gf gf(code.field());
  for (double snr = snr_start; snr <= snr_stop + 1e-9; snr += snr_step) {
    TrialReport rep;
    rep.snr_db = snr;
    rep.frames = frames;
    rep.decoder = spec.tag();
    std::uint64_t mults = 0;
    for (std::uint64_t fr = 0; fr < frames; ++fr) {
      FrameRng msg_rng(splitmix64(seed), fr + 0x517cc1b727220a95ULL);
      Message msg(static_cast<std::size_t>(code.k()));
      for (auto& s : msg) s = msg_rng.symbol(code.field().size());
      const TransmitResult tr = transmit(code, msg, {snr, seed}, fr);
      const FrameDecode dec = decode_frame(code, tr.pi, spec);
      mults += dec.ops.total();
      if (!dec.best || *dec.best != msg) ++rep.frame_errors;
      const Word out_cw =
          dec.best ? code.encode(gf, *dec.best) : tr.pi.hard_word();
      rep.symbol_errors +=
          static_cast<std::uint64_t>(hamming_distance(out_cw, tr.codeword));
    }
    rep.fer = static_cast<double>(rep.frame_errors) / static_cast<double>(frames);
    rep.ser = static_cast<double>(rep.symbol_errors) /
              (static_cast<double>(frames) * code.n());
    rep.avg_mults = static_cast<double>(mults) / static_cast<double>(frames);
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string to_csv(const std::vector<TrialReport>& reports) {
  std::string out = "snr_db,frames,frame_errors,fer,symbol_errors,ser,avg_mults,decoder\n";
  char line[256];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof(line), "%.6g,%llu,%llu,%.6g,%llu,%.6g,%.6g,%s\n",
                  r.snr_db, static_cast<unsigned long long>(r.frames),
                  static_cast<unsigned long long>(r.frame_errors), r.fer,
                  static_cast<unsigned long long>(r.symbol_errors), r.ser,
                  r.avg_mults, r.decoder.c_str());
    out += line;
  }
  return out;
}

}  // namespace rsmm
