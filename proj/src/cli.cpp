#include "fermat5/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermat5/certificate.hpp"
#include "fermat5/error.hpp"

namespace fermat5::cli {

namespace {

struct Config {
  std::string t_text;
  unsigned height = 10;
  int digits = 3;
  int precision = 6;
  int cert_precision = 0;  // 0: no numeric points in the certificate
  std::string out_path;
  std::string format = "cert";
};

Rational pow10(int e) { return Rational(10).pow(e); }

// Writes to --out when given, else to the console stream.
bool emit(const Config& cfg, std::ostream& console, std::ostream& err, const std::string& text) {
  if (cfg.out_path.empty()) {
    console << text;
    return true;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << cfg.out_path << "\n";
    return false;
  }
  file << text;
  return true;
}

Rational parse_parameter(const Config& cfg) {
  Rational t = Rational::parse(cfg.t_text);
  if (t == Rational(2)) throw MathError(Errc::DegenerateParameter, "t = 2 is excluded from the family");
  return t;
}

int cmd_certify(const Config& cfg, std::ostream& out, std::ostream& err) {
  Rational t = parse_parameter(cfg);
  std::optional<Rational> precision;
  if (cfg.cert_precision > 0) precision = pow10(-cfg.cert_precision);
  Certificate cert = certify(t, precision);
  if (!emit(cfg, out, err, to_json(cert).dump(2) + "\n")) return kUsage;
  if (!cert.ok()) {
    for (const auto& f : cert.failures) err << "check failed: " << f << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

int cmd_isolate_r(const Config& cfg, std::ostream& out) {
  const PolyQ r_poly = r_polynomial();
  IsolatingInterval iv{0, 1, r_poly};
  for (const auto& cand : isolate_real_roots(r_poly))
    if (cand.hi > Rational(0)) iv = cand;
  const Rational scale = pow10(cfg.digits);
  iv = refine(iv, pow10(-cfg.digits - 1));
  while (floor(iv.lo * scale) != floor(iv.hi * scale)) iv = refine(iv, iv.width() / Rational(2));

  out << "r: the positive real root of " << r_poly.pretty() << "\n";
  out << "enclosure: [" << to_decimal(iv.lo, cfg.digits + 2, false) << ", " << to_decimal(iv.hi, cfg.digits + 2, true)
      << "]\n";
  out << "r = " << to_decimal(iv.lo, cfg.digits, false) << "...\n";
  out << "lo = " << iv.lo.str() << "\n";
  out << "hi = " << iv.hi.str() << "\n";
  return kSuccess;
}

int cmd_search(const Config& cfg, std::ostream& out, std::ostream& err) {
  SearchResult result = search_distinct_fields(cfg.height);
  out << std::left << std::setw(10) << "t" << std::setw(14) << "kernel" << std::setw(14) << "totally_real"
      << "new_field" << "\n";
  bool all_ok = true;
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const auto& e : result.entries) {
    const auto& tr = e.certificate.totally_real;
    out << std::left << std::setw(10) << e.t.str() << std::setw(14) << signed_str(e.kernel) << std::setw(14)
        << (tr && tr->verdict ? "true" : "false") << (e.new_kernel ? "*" : "") << "\n";
    all_ok = all_ok && e.certificate.ok() && tr && tr->verdict;
    certs.push_back(to_json(e.certificate));
  }
  out << "candidates: " << result.entries.size() << "\n";
  out << "distinct kernels: " << result.distinct_kernels.size() << "\n";
  if (!cfg.out_path.empty() && !emit(cfg, out, err, certs.dump(2) + "\n")) return kUsage;
  return all_ok ? kSuccess : kCheckFailed;
}

int cmd_points(const Config& cfg, std::ostream& out, std::ostream& err) {
  Rational t = parse_parameter(cfg);
  ParamData pd = build_params(t);
  std::vector<NumericPoint> pts;
  try {
    pts = numeric_points(pd, pow10(-cfg.precision));
  } catch (const MathError& e) {
    if (e.code() != Errc::NotTotallyReal) throw;
    err << "error: K_t is not totally real at t = " << t.str() << " (" << e.what() << ")\n";
    return kCheckFailed;
  }
  std::string text;
  if (cfg.format == "svg") {
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : pts) xy.emplace_back(p.x_mid.to_double(), p.y_mid.to_double());
    text = render_svg(t, xy);
  } else {
    std::ostringstream os;
    os << kPointsCsvHeader << "\n";
    for (const auto& row : points_csv_rows(t, pts)) os << row << "\n";
    text = os.str();
  }
  return emit(cfg, out, err, text) ? kSuccess : kUsage;
}

}  // namespace

std::string to_decimal(const Rational& q, int places, bool round_up) {
  Rational scaled = q * pow10(places);
  BigInt n = floor(scaled);
  if (round_up && !scaled.is_integer()) n += 1;
  bool neg = n < 0;
  std::string digits = BigInt(abs(n)).get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<size_t>(places)) digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
  }
  return (neg ? "-" : "") + digits;
}

std::string render_svg(const Rational& t, const std::vector<std::pair<double, double>>& points) {
  const double tt = t.to_double();
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
  for (const auto& [x, y] : points) {
    x0 = std::min(x0, x - 0.5);
    x1 = std::max(x1, x + 0.5);
    y0 = std::min(y0, y - 0.5);
    y1 = std::max(y1, y + 0.5);
  }
  const double w = 600, h = 600;
  auto sx = [&](double x) { return (x - x0) / (x1 - x0) * w; };
  auto sy = [&](double y) { return h - (y - y0) / (y1 - y0) * h; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << " " << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << w << "\" y2=\"" << sy(0) << "\" stroke=\"#ccc\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\"" << h << "\" stroke=\"#ccc\"/>\n";

  const int samples = 800;
  // Conic branches: y^2 + t(x+1) y + (x^2 + t x + 1) = 0.
  for (int branch : {1, -1}) {
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" points=\"";
    for (int i = 0; i <= samples; ++i) {
      double x = x0 + (x1 - x0) * i / samples;
      double b = tt * (x + 1), c = x * x + tt * x + 1;
      double disc = b * b - 4 * c;
      if (disc < 0) continue;
      double y = (-b + branch * std::sqrt(disc)) / 2;
      if (y < y0 || y > y1) continue;
      os << sx(x) << "," << sy(y) << " ";
    }
    os << "\"/>\n";
  }
  // Real branch of the quintic: y = -(1 + x^5)^(1/5).
  os << "<polyline fill=\"none\" stroke=\"#d62728\" points=\"";
  for (int i = 0; i <= samples; ++i) {
    double x = x0 + (x1 - x0) * i / samples;
    double s = 1 + std::pow(x, 5);
    double y = -std::copysign(std::pow(std::fabs(s), 0.2), s);
    if (y < y0 || y > y1) continue;
    os << sx(x) << "," << sy(y) << " ";
  }
  os << "\"/>\n";
  for (const auto& [x, y] : points)
    os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"4\" fill=\"black\"/>\n";
  os << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">t = " << t.str() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Totally real degree-6 points on x^5 + y^5 + z^5 = 0"};
  app.require_subcommand(1);

  auto* certify_cmd = app.add_subcommand("certify", "certify every claim for one parameter t");
  certify_cmd->add_option("--t", cfg.t_text, "rational parameter p/q")->required();
  certify_cmd->add_option("--out", cfg.out_path, "write the certificate here");
  certify_cmd->add_option("--precision", cfg.cert_precision, "embed numeric points refined to 10^-N")
      ->check(CLI::Range(1, 200));
  certify_cmd->add_option("--format", cfg.format, "cert")->check(CLI::IsMember({"cert"}));

  auto* isolate_cmd = app.add_subcommand("isolate-r", "enclose the root r of 7X^5-10X^4-20X^3-4");
  isolate_cmd->add_option("--digits", cfg.digits, "decimal digits")->check(CLI::Range(1, 200));

  auto* search_cmd = app.add_subcommand("search", "find parameters with pairwise distinct fields");
  search_cmd->add_option("--height", cfg.height, "denominator bound for t");
  search_cmd->add_option("--out", cfg.out_path, "write all certificates here");

  auto* points_cmd = app.add_subcommand("points", "numeric coordinates of the six real points");
  points_cmd->add_option("--t", cfg.t_text, "rational parameter p/q")->required();
  points_cmd->add_option("--precision", cfg.precision, "interval width 10^-N")->check(CLI::Range(1, 200));
  points_cmd->add_option("--format", cfg.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  points_cmd->add_option("--out", cfg.out_path, "output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (certify_cmd->parsed()) return cmd_certify(cfg, out, err);
    if (isolate_cmd->parsed()) return cmd_isolate_r(cfg, out);
    if (search_cmd->parsed()) return cmd_search(cfg, out, err);
    if (points_cmd->parsed()) return cmd_points(cfg, out, err);
  } catch (const MathError& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::DegenerateParameter) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    }
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace fermat5::cli
