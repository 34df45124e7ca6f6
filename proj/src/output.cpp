#include "tdho/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "tdho/error.hpp"

namespace tdho {

double record_value(const DynamicsRecord& r, std::string_view name, EntropyUnits units) {
  const double scale = units == EntropyUnits::bits ? 1.0 / std::log(2.0) : 1.0;
  if (name == "t") return r.t;
  if (name == "S_L") return r.S_L;
  if (name == "S_von") return r.S_von >= kDivergenceCap ? r.S_von : r.S_von * scale;
  if (name == "negativity") return r.negativity >= kDivergenceCap ? r.negativity : r.negativity * scale;
  if (name == "U1") return r.U1;
  if (name == "U2") return r.U2;
  if (name == "alpha") return r.alpha;
  if (name == "gamma") return r.gamma;
  if (name == "gamma1") return r.gamma1;
  if (name == "gamma2") return r.gamma2;
  if (name == "h1") return r.h1;
  if (name == "h2") return r.h2;
  throw ConfigError("unknown output '" + std::string(name) + "'");
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string format_csv(std::span<const DynamicsRecord> records, EntropyUnits units) {
  static constexpr std::array<std::string_view, 8> cols{"t", "S_L", "S_von", "negativity", "U1", "U2", "alpha", "gamma"};
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    for (auto c : cols) {
      out += format_number(record_value(r, c, units));
      out += ',';
    }
    out += r.diverged ? "1\n" : "0\n";
  }
  return out;
}

std::string format_aux_csv(std::span<const DynamicsRecord> records, const std::vector<std::string>& outputs) {
  std::vector<std::string> cols;
  for (const auto& o : outputs) {
    if (o == "gamma1" || o == "gamma2" || o == "h1" || o == "h2") cols.push_back(o);
  }
  if (cols.empty()) return {};
  std::string out = "t";
  for (const auto& c : cols) out += "," + c;
  out += '\n';
  for (const auto& r : records) {
    out += format_number(r.t);
    for (const auto& c : cols) out += "," + format_number(record_value(r, c));
    out += '\n';
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string fixed(double v) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(std::string_view title, std::string_view quantity, std::span<const Series> series,
                       EntropyUnits units) {
  constexpr double W = 640, H = 400, L = 60, R = 130, T = 40, B = 40;
  double t0 = std::numeric_limits<double>::infinity(), t1 = -t0, y0 = t0, y1 = -t0;
  for (const auto& s : series) {
    for (const auto& r : s.records) {
      t0 = std::min(t0, r.t);
      t1 = std::max(t1, r.t);
      if (r.diverged) continue;
      const double v = record_value(r, quantity, units);
      y0 = std::min(y0, v);
      y1 = std::max(y1, v);
    }
  }
  if (!(t1 > t0)) t0 = 0, t1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  const auto px = [&](double t) { return L + (t - t0) / (t1 - t0) * (W - L - R); };
  const auto py = [&](double v) { return H - B - (v - y0) / (y1 - y0) * (H - T - B); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed(W / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  out += "<rect x=\"" + fixed(L) + "\" y=\"" + fixed(T) + "\" width=\"" + fixed(W - L - R) + "\" height=\"" +
         fixed(H - T - B) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (auto [v, y] : {std::pair{y0, H - B}, std::pair{y1, T}}) {
    out += "<text x=\"" + fixed(L - 4) + "\" y=\"" + fixed(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + format_number(v) + "</text>\n";
  }
  for (auto [v, x] : {std::pair{t0, L}, std::pair{t1, W - R}}) {
    out += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(H - B + 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + format_number(v) + "</text>\n";
  }
  out += "<text x=\"" + fixed((W - R + L) / 2) + "\" y=\"" + fixed(H - 8) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">t</text>\n";
  out += "<text x=\"14\" y=\"" + fixed(H / 2) + "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(quantity) +
         "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto colour = kPalette[i % kPalette.size()];
    std::string pts;
    for (const auto& r : series[i].records) {
      if (r.diverged) continue;
      if (!pts.empty()) pts += ' ';
      pts += fixed(px(r.t)) + "," + fixed(py(record_value(r, quantity, units)));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.2\" points=\"" + pts +
           "\"/>\n";
    const double ly = T + 14 + 16 * static_cast<double>(i);
    out += "<line x1=\"" + fixed(W - R + 10) + "\" y1=\"" + fixed(ly - 4) + "\" x2=\"" + fixed(W - R + 30) +
           "\" y2=\"" + fixed(ly - 4) + "\" stroke=\"" + std::string(colour) + "\"/>\n";
    out += "<text x=\"" + fixed(W - R + 34) + "\" y=\"" + fixed(ly) + "\" font-family=\"sans-serif\" font-size=\"10\">" +
           escape(series[i].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string value_tag(double v) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace tdho
