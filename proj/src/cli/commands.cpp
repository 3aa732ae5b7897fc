// Copyright 2026 The fovcodec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fovc/cli.hpp"

namespace fovc::cli {

FmscSpec FmscSpec::parse(const std::string& text) {
  FmscSpec s;
  std::string number = text;
  if (text.size() > 2 && (text[0] == 'H' || text[0] == 'h') && text[1] == '/') {
    s.kind = Kind::HeightDivisor;
    number = text.substr(2);
  } else {
    s.kind = Kind::Pixels;
  }
  std::size_t used = 0;
  try {
    s.value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || !(s.value > 0) || !std::isfinite(s.value)) {
    throw ConfigError("invalid FMSC '" + text + "' (expected H/k or a pixel count)");
  }
  return s;
}

double FmscSpec::pixels(int frame_height) const {
  return kind == Kind::HeightDivisor ? frame_height / value : value;
}

std::string FmscSpec::label() const {
  std::ostringstream s;
  if (kind == Kind::HeightDivisor) s << "H/";
  s << value;
  return s.str();
}

std::uint8_t FmscSpec::code() const {
  if (kind != Kind::HeightDivisor || value != std::floor(value) || value < 1 || value > 255) return 0;
  return static_cast<std::uint8_t>(value);
}

std::vector<FmscSpec> default_fmsc_sweep() {
  return {FmscSpec::divisor(10), FmscSpec::divisor(8), FmscSpec::divisor(6),
          FmscSpec::divisor(4),  FmscSpec::divisor(3), FmscSpec::divisor(2)};
}

DisplayGeometry<double> EncodeConfig::geometry(int width, int height) const {
  auto g = DisplayGeometry<double>::for_frame(width, height);
  if (screen_width) g.screen_width = *screen_width;
  if (viewing_distance) g.viewing_distance = *viewing_distance;
  if (!(g.screen_width > 0) || !(g.viewing_distance > 0)) {
    throw ConfigError("screen width and viewing distance must be positive");
  }
  return g;
}

std::vector<FrameFoveation> build_maps(const VideoSequence& seq, const std::vector<Gaze>& gaze,
                                       const FmscSpec& fmsc, bool csf_map,
                                       const DisplayGeometry<double>& geom) {
  std::vector<FrameFoveation> maps;
  maps.reserve(seq.frame_count());
  for (std::size_t t = 0; t < seq.frame_count(); ++t) {
    if (csf_map) {
      maps.push_back({foveation_map(geom, gaze[t]), 0});
    } else {
      maps.push_back({gaussian_map(gaze[t], fmsc.pixels(seq.height()), seq.width(), seq.height()),
                      fmsc.code()});
    }
  }
  return maps;
}

namespace {

QuantSchedule make_schedule(const EncodeConfig& cfg) {
  if (cfg.q_base < 1 || cfg.q_base > 4096) throw ConfigError("--qbase must be in [1, 4096]");
  if (cfg.levels < 2 || cfg.levels > 16) throw ConfigError("--levels must be in [2, 16]");
  return QuantSchedule(cfg.q_base, cfg.levels);
}

EncodedSequence encode_with(const VideoSequence& seq, const std::vector<Gaze>& gaze,
                            const FmscSpec& fmsc, const EncodeConfig& cfg) {
  const auto geom = cfg.geometry(seq.width(), seq.height());
  const auto maps = build_maps(seq, gaze, fmsc, cfg.csf_map, geom);
  return encode_sequence(seq, maps, make_schedule(cfg), CodecConfig{cfg.select_displacement}, geom);
}

}  // namespace

EncodeSummary cmd_encode(const std::string& input, const std::string& output,
                         const EncodeConfig& cfg, std::ostream& log) {
  if (cfg.fmsc.size() != 1) throw ConfigError("encode takes exactly one --fmsc value");
  const VideoSequence seq = load_y4m(input);
  const auto gaze = resolve_gaze(cfg.gaze, seq.frame_count(), seq.width(), seq.height(), !cfg.hold_gaze);
  const EncodedSequence enc = encode_with(seq, gaze, cfg.fmsc.front(), cfg);
  write_file_bytes(output, enc.stream.serialize());

  EncodeSummary summary;
  summary.bpp = enc.stream.bits_per_pixel();
  for (const auto& f : enc.stream.frames) summary.frame_bits.push_back(f.bits.bit_length());
  log << std::fixed << std::setprecision(6) << "bpp " << summary.bpp << '\n';
  for (std::size_t t = 0; t < summary.frame_bits.size(); ++t) {
    log << "frame " << t << " bits " << summary.frame_bits[t] << '\n';
  }
  return summary;
}

void cmd_decode(const std::string& input, const std::string& output, std::ostream& log) {
  const auto bytes = read_file_bytes(input);
  const VideoSequence seq = decode_sequence(bytes);
  save_y4m(seq, output);
  log << "decoded " << seq.frame_count() << " frames " << seq.width() << 'x' << seq.height() << '\n';
}

std::vector<SweepRow> rd_sweep(const VideoSequence& seq, const EncodeConfig& cfg) {
  const auto gaze = resolve_gaze(cfg.gaze, seq.frame_count(), seq.width(), seq.height(), !cfg.hold_gaze);
  const auto geom = cfg.geometry(seq.width(), seq.height());
  std::vector<FmscSpec> points = cfg.fmsc;
  std::stable_sort(points.begin(), points.end(), [&](const FmscSpec& a, const FmscSpec& b) {
    return a.pixels(seq.height()) < b.pixels(seq.height());
  });

  auto run_point = [&](const FmscSpec& fmsc) {
    const EncodedSequence enc = encode_with(seq, gaze, fmsc, cfg);
    const VideoSequence decoded = decode_sequence(enc.stream);
    SweepRow row{fmsc, enc.stream.bits_per_pixel()};
    for (std::size_t t = 0; t < seq.frame_count(); ++t) {
      if (!(decoded.frame(t) == enc.frames[t].recon)) {
        throw BitstreamError("decoder diverged from encoder at frame " + std::to_string(t), 0);
      }
      const QualityReport q = evaluate_frame(seq.frame(t).y, decoded.frame(t).y, gaze[t], geom);
      row.mean_ssim += q.mean_ssim;
      row.fw_ssim += q.fw_ssim;
      row.fwqi_approx += q.fwqi_approx;
    }
    const double n = double(seq.frame_count());
    row.mean_ssim /= n;
    row.fw_ssim /= n;
    row.fwqi_approx /= n;
    return row;
  };

  std::vector<std::future<SweepRow>> jobs;
  for (const auto& p : points) jobs.push_back(std::async(std::launch::async, run_point, p));
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n' << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    out << r.fmsc.label() << ',' << r.bpp << ',' << r.mean_ssim << ',' << r.fw_ssim << ','
        << r.fwqi_approx << '\n';
  }
}

std::vector<SweepRow> cmd_rd_sweep(const std::string& input, const std::string& csv_out,
                                   const EncodeConfig& cfg) {
  const VideoSequence seq = load_y4m(input);
  const auto rows = rd_sweep(seq, cfg);
  std::ofstream out(csv_out);
  if (!out) throw IoError("cannot open '" + csv_out + "' for writing");
  write_sweep_csv(rows, out);
  if (!out) throw IoError("write to '" + csv_out + "' failed");
  return rows;
}

std::vector<QualityReport> cmd_metrics(const std::string& ref, const std::string& test,
                                       const std::string& bits, const EncodeConfig& cfg,
                                       std::ostream& csv) {
  const VideoSequence a = load_y4m(ref);
  const VideoSequence b = load_y4m(test);
  if (a.width() != b.width() || a.height() != b.height() || a.frame_count() != b.frame_count()) {
    throw ConfigError("reference and test clips differ in geometry or length");
  }
  std::vector<std::uint64_t> frame_bits(a.frame_count(), 0);
  if (!bits.empty()) {
    const auto stream = SequenceBitstream::parse(read_file_bytes(bits));
    if (stream.frames.size() != a.frame_count()) {
      throw ConfigError("bitstream frame count does not match the clips");
    }
    for (std::size_t t = 0; t < frame_bits.size(); ++t) frame_bits[t] = stream.frames[t].bits.bit_length();
  }
  const auto gaze = resolve_gaze(cfg.gaze, a.frame_count(), a.width(), a.height(), !cfg.hold_gaze);
  const auto geom = cfg.geometry(a.width(), a.height());
  std::vector<QualityReport> rows;
  for (std::size_t t = 0; t < a.frame_count(); ++t) {
    const double bpp = double(frame_bits[t]) / (double(a.width()) * a.height());
    QualityReport q = evaluate_frame(a.frame(t).y, b.frame(t).y, gaze[t], geom, bpp);
    q.frame_idx = t;
    rows.push_back(std::move(q));
  }
  write_report_csv(rows, csv);
  return rows;
}

namespace {

void add_geometry_flags(CLI::App* cmd, EncodeConfig& cfg) {
  cmd->add_option("--screen-width", cfg.screen_width, "Physical screen width in meters (default 0.02)");
  cmd->add_option("--distance", cfg.viewing_distance, "Viewing distance in meters (default 0.012)");
}

void add_gaze_flags(CLI::App* cmd, EncodeConfig& cfg) {
  cmd->add_option("--gaze", cfg.gaze,
                  "'center' or a CSV of frame_idx,x,y rows; coordinates are clamped into the frame")
      ->capture_default_str();
  cmd->add_flag("--hold-gaze", cfg.hold_gaze,
                "Accept tracks that stop early; the last gaze row is held for remaining frames");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Foveated displaced-difference video codec"};
  app.require_subcommand(1);

  EncodeConfig cfg;
  std::string input, output, ref, test, bits, fmsc_text = "H/4";
  std::vector<std::string> sweep_set;

  auto* enc = app.add_subcommand("encode", "Encode a Y4M clip into an .fmvc bitstream");
  enc->add_option("--input", input, "Input .y4m")->required();
  enc->add_option("--output", output, "Output .fmvc")->required();
  enc->add_option("--fmsc", fmsc_text, "Gaussian map width: H/k or pixels")->capture_default_str();
  enc->add_flag("--csf-map", cfg.csf_map, "Use the error-sensitivity map instead of a gaussian");
  enc->add_option("--qbase", cfg.q_base, "Quantizer step at the highest level")->capture_default_str();
  enc->add_option("--levels", cfg.levels, "Number of foveation levels")->capture_default_str();
  enc->add_flag("--no-displacement", [&](std::int64_t) { cfg.select_displacement = false; },
                "Code every block against the undisplaced reference");
  add_gaze_flags(enc, cfg);
  add_geometry_flags(enc, cfg);

  auto* dec = app.add_subcommand("decode", "Decode an .fmvc bitstream to Y4M");
  dec->add_option("--input", input, "Input .fmvc")->required();
  dec->add_option("--output", output, "Output .y4m")->required();

  auto* sweep = app.add_subcommand("rd-sweep", "Encode over a set of FMSCs and report rate/quality");
  sweep->add_option("--input", input, "Input .y4m")->required();
  sweep->add_option("--out", output, "Output CSV")->required();
  sweep->add_option("--fmsc-set", sweep_set, "FMSC values (default H/10 H/8 H/6 H/4 H/3 H/2)");
  sweep->add_option("--qbase", cfg.q_base, "Quantizer step at the highest level")->capture_default_str();
  add_gaze_flags(sweep, cfg);
  add_geometry_flags(sweep, cfg);

  auto* met = app.add_subcommand("metrics", "Per-frame SSIM, foveated SSIM and FWQI");
  met->add_option("--ref", ref, "Reference .y4m")->required();
  met->add_option("--test", test, "Test .y4m")->required();
  met->add_option("--bits", bits, "Bitstream used to report bpp");
  met->add_option("--out", output, "Output CSV (default stdout)");
  add_gaze_flags(met, cfg);
  add_geometry_flags(met, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*enc) {
      cfg.fmsc = {FmscSpec::parse(fmsc_text)};
      cmd_encode(input, output, cfg, out);
    } else if (*dec) {
      cmd_decode(input, output, out);
    } else if (*sweep) {
      cfg.fmsc.clear();
      for (const auto& s : sweep_set) cfg.fmsc.push_back(FmscSpec::parse(s));
      if (cfg.fmsc.empty()) cfg.fmsc = default_fmsc_sweep();
      cmd_rd_sweep(input, output, cfg);
      out << "wrote " << cfg.fmsc.size() << " rows to " << output << '\n';
    } else if (*met) {
      if (output.empty()) {
        cmd_metrics(ref, test, bits, cfg, out);
      } else {
        std::ofstream csv(output);
        if (!csv) throw IoError("cannot open '" + output + "' for writing");
        cmd_metrics(ref, test, bits, cfg, csv);
      }
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ContractViolation& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const BitstreamError& e) {
    err << "bitstream error: " << e.what() << '\n';
    return kExitBitstream;
  } catch (const Error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace fovc::cli
