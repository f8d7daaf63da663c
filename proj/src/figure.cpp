// SPDX-License-Identifier: Apache-2.0
#include "affsemi/figure.hpp"

#include <array>
#include <cstdio>

#include "affsemi/pingpong.hpp"

namespace affsemi {

namespace {

constexpr double kSide = 1000.0;
constexpr double kMargin = 0.05 * kSide;

std::string num(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  return buf.data();
}

std::string escape(const std::string& s) {
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

std::string plot_certificate(const MapSystem& sys, const FreenessCertificate& cert) {
  if (!cert.left || !cert.right || cert.intervals.size() != cert.permutation.size()) {
    throw Error(ErrorCode::NotCertified, "certificate carries no interval picture");
  }
  const double left = cert.left->to_double();
  const double right = cert.right->to_double();
  const double width = right - left;
  auto px = [&](double x) { return kMargin + (x - left) / width * kSide; };
  auto py = [&](double y) { return kMargin + kSide - (y - left) / width * kSide; };

  static constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                      "#17becf"};
  const std::string extent = num(kSide + 2 * kMargin);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " + extent + " " + extent +
         "\" width=\"" + extent + "\" height=\"" + extent + "\">\n";
  svg += "  <title>" + escape(std::string(to_string(cert.verdict))) + ": inverse maps on [" +
         escape(to_string(*cert.left)) + ", " + escape(to_string(*cert.right)) + "]</title>\n";
  svg += "  <rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kSide) + "\" height=\"" +
         num(kSide) + "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  svg += "  <line class=\"diagonal\" x1=\"" + num(px(left)) + "\" y1=\"" + num(py(left)) + "\" x2=\"" +
         num(px(right)) + "\" y2=\"" + num(py(right)) + "\" stroke=\"#888\" stroke-dasharray=\"8 6\"/>\n";

  for (std::size_t k = 0; k < cert.permutation.size(); ++k) {
    const AffineMap g = inverse(sys.generator(cert.permutation[k]));
    const double y0 = evaluate(g, *cert.left).to_double();
    const double y1 = evaluate(g, *cert.right).to_double();
    const char* color = kColors[k % kColors.size()];
    const std::string label = "g" + std::to_string(cert.permutation[k]);
    svg += "  <line class=\"graph\" data-generator=\"" + std::to_string(cert.permutation[k]) + "\" x1=\"" +
           num(px(left)) + "\" y1=\"" + num(py(y0)) + "\" x2=\"" + num(px(right)) + "\" y2=\"" + num(py(y1)) +
           "\" stroke=\"" + color + "\" stroke-width=\"3\"/>\n";
    svg += "  <text x=\"" + num(px(left) + 8) + "\" y=\"" + num(py(y0) - 8) + "\" font-size=\"24\" fill=\"" + color +
           "\">" + label + "</text>\n";

    const Interval& iv = cert.intervals[k];
    svg += "  <line class=\"interval\" data-lo=\"" + escape(to_string(iv.lo())) + "\" data-hi=\"" +
           escape(to_string(iv.hi())) + "\" x1=\"" + num(px(right)) + "\" y1=\"" + num(py(iv.lo().to_double())) +
           "\" x2=\"" + num(px(right)) + "\" y2=\"" + num(py(iv.hi().to_double())) + "\" stroke=\"" + color +
           "\" stroke-width=\"12\" stroke-opacity=\"0.6\"/>\n";
    const double mid = 0.5 * (iv.lo().to_double() + iv.hi().to_double());
    svg += "  <text x=\"" + num(px(right) + 12) + "\" y=\"" + num(py(mid) + 8) + "\" font-size=\"24\" fill=\"" +
           color + "\">I" + std::to_string(k + 1) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string plot_figure(const MapSystem& sys) {
  if (sys.size() >= 2) {
    const auto t1 = certify_theorem1(sys);
    if (t1.verdict == Verdict::FreeTheorem1) return plot_certificate(sys, t1);
  }
  if (sys.size() == 2) {
    try {
      const auto t2 = certify_theorem2(sys.maps()[0], sys.maps()[1]);
      if (t2.verdict == Verdict::FreeTheorem2) return plot_certificate(sys, t2);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SlopePreconditionViolated) throw;
    }
  }
  throw Error(ErrorCode::NotCertified, "no interval certificate for this system");
}

}  // namespace affsemi
