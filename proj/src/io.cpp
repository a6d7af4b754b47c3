#include "mplab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace mplab {

using nlohmann::json;

Rational parse_rational(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  auto digits = [&](std::string& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = std::string(s.substr(start, i - start));
    return !out.empty();
  };
  std::string num, den = "1";
  if (!digits(num)) throw ParseError("bad rational '" + std::string(s) + "'");
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits(den)) throw ParseError("bad rational '" + std::string(s) + "'");
  }
  if (i != s.size()) throw ParseError("trailing characters in rational '" + std::string(s) + "'");
  const Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational q(Integer(num), d);
  return neg ? Rational(-q) : q;
}

json polytope_to_json(const RationalPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& x : v) {
      row.push_back(numerator(x).str());
      row.push_back(denominator(x).str());
    }
    verts.push_back(std::move(row));
  }
  return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

RationalPolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs 'dim' and 'vertices'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 0) throw ParseError("polytope JSON: bad 'dim'");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<RatVector> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.size() != 2 * dim) throw ParseError("polytope JSON: vertex must hold 2*dim strings");
    RatVector v;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!row[2 * i].is_string() || !row[2 * i + 1].is_string())
        throw ParseError("polytope JSON: coordinates must be decimal strings");
      v.push_back(parse_rational(row[2 * i].get<std::string>() + "/" + row[2 * i + 1].get<std::string>()));
    }
    pts.push_back(std::move(v));
  }
  return hull(pts, dim);
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  FlagPoint point() {
    const GaussianRational a1 = gauss();
    expect(',');
    const GaussianRational c1 = gauss();
    expect(';');
    const GaussianRational a2 = gauss();
    expect(',');
    const GaussianRational c2 = gauss();
    if (pos_ != text_.size()) fail("trailing characters");
    return {a1, c1, a2, c2};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("flag point literal '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Unsigned rational; empty when the next token is a bare "i".
  std::optional<Rational> magnitude() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    if (pos_ == start) return std::nullopt;
    return parse_rational(std::string_view(text_).substr(start, pos_ - start));
  }

  bool imaginary_unit() {
    if (peek() == '*') {
      ++pos_;
      if (peek() != 'i') fail("expected 'i' after '*'");
    }
    if (peek() != 'i') return false;
    ++pos_;
    return true;
  }

  GaussianRational gauss() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = text_[pos_++] == '-';
    auto first = magnitude();
    if (imaginary_unit()) {
      const Rational im = first.value_or(Rational(1));
      return {0, neg ? Rational(-im) : im};
    }
    if (!first) fail("expected a number");
    const Rational re = neg ? Rational(-*first) : *first;
    if (peek() != '+' && peek() != '-') return {re, 0};
    const bool im_neg = text_[pos_++] == '-';
    auto second = magnitude();
    if (!imaginary_unit()) fail("expected imaginary part ending in 'i'");
    const Rational im = second.value_or(Rational(1));
    return {re, im_neg ? Rational(-im) : im};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("matrix entries must be integers or rational strings");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

}  // namespace

FlagPoint parse_flag_point(std::string_view literal) { return LiteralParser(literal).point(); }

InvolutionSpec parse_involution(const std::string& tag, std::size_t rank) {
  if (tag == "negation") return InvolutionSpec::negation(rank);
  if (tag == "identity") return InvolutionSpec::identity(rank);
  if (tag == "swap") return InvolutionSpec::swap();
  json j;
  try {
    j = json::parse(tag);
  } catch (const json::parse_error&) {
    throw ParseError("unknown involution '" + tag + "' (expected negation, identity, swap or a matrix literal)");
  }
  if (!j.is_array() || j.empty()) throw ParseError("involution matrix literal must be a nonempty array of rows");
  RatMatrix m(j.size(), j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("involution matrix must be square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = json_rational(j[i][k]);
  }
  return InvolutionSpec(LinearInvolution(std::move(m)), "matrix");
}

void write_samples_csv(std::ostream& os, const SampleSet& s) {
  os << kSampleCsvHeader << '\n';
  os << std::setprecision(17);
  for (const auto& smp : s.samples) {
    for (const auto& z : smp.point.z) os << z.real() << ',' << z.imag() << ',';
    os << smp.phi[0] << ',' << smp.phi[1] << ',' << smp.phi[2] << ',' << norm(smp.phi) << '\n';
  }
}

std::vector<R3Vector> read_samples_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSampleCsvHeader) throw ParseError("sample CSV: missing or wrong header");
  std::vector<R3Vector> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        cols.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("sample CSV: bad number '" + cell + "'");
      }
    }
    if (cols.size() != 12) throw ParseError("sample CSV: expected 12 columns");
    out.push_back({cols[8], cols[9], cols[10]});
  }
  return out;
}

std::string render_polytopes_svg(const std::vector<LabeledPolytope>& rows) {
  double lo = 0, hi = 1;
  bool any = false;
  for (const auto& r : rows) {
    if (r.polytope.dim() != 1) throw std::invalid_argument("render_polytopes_svg: only 1-D polytopes");
    for (const auto& v : r.polytope.vertices()) {
      const double x = v[0].convert_to<double>();
      lo = any ? std::min(lo, x) : x;
      hi = any ? std::max(hi, x) : x;
      any = true;
    }
  }
  lo = std::min(lo, 0.0) - 0.5;
  hi += 0.5;
  const double width = 640, left = 140, right = 20, row_h = 40;
  const double height = row_h * static_cast<double>(rows.size() + 1) + 20;
  auto sx = [&](double x) { return left + (x - lo) / (hi - lo) * (width - left - right); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double axis_y = height - row_h;
  os << "<line x1=\"" << sx(lo) << "\" y1=\"" << axis_y << "\" x2=\"" << sx(hi) << "\" y2=\"" << axis_y
     << "\" stroke=\"black\"/>\n";
  for (long t = static_cast<long>(std::ceil(lo)); t <= static_cast<long>(std::floor(hi)); ++t) {
    os << "<line x1=\"" << sx(t) << "\" y1=\"" << axis_y - 4 << "\" x2=\"" << sx(t) << "\" y2=\"" << axis_y + 4
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << sx(t) << "\" y=\"" << axis_y + 18 << "\" font-size=\"12\" text-anchor=\"middle\">" << t
       << "</text>\n";
  }
  os << "<text x=\"" << sx(hi) << "\" y=\"" << axis_y - 8 << "\" font-size=\"12\" text-anchor=\"end\">alpha</text>\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = row_h * static_cast<double>(i + 1);
    os << "<text x=\"8\" y=\"" << y + 4 << "\" font-size=\"12\">" << rows[i].label << "</text>\n";
    const auto& verts = rows[i].polytope.vertices();
    if (verts.empty()) {
      os << "<text x=\"" << left << "\" y=\"" << y + 4 << "\" font-size=\"12\" fill=\"gray\">(empty)</text>\n";
    } else if (verts.size() == 1) {
      os << "<circle cx=\"" << sx(verts[0][0].convert_to<double>()) << "\" cy=\"" << y
         << "\" r=\"4\" fill=\"steelblue\"/>\n";
    } else {
      os << "<line x1=\"" << sx(verts[0][0].convert_to<double>()) << "\" y1=\"" << y << "\" x2=\""
         << sx(verts[1][0].convert_to<double>()) << "\" y2=\"" << y
         << "\" stroke=\"steelblue\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_samples_svg(const std::vector<R3Vector>& phis) {
  double radius = 1;
  for (const auto& p : phis) radius = std::max(radius, std::max(std::abs(p[0]), std::abs(p[2])));
  radius *= 1.1;
  const double size = 480, half = size / 2;
  auto sx = [&](double x) { return half + x / radius * (half - 10); };
  auto sy = [&](double z) { return half - z / radius * (half - 10); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << half << "\" x2=\"" << size << "\" y2=\"" << half << "\" stroke=\"lightgray\"/>\n";
  os << "<line x1=\"" << half << "\" y1=\"0\" x2=\"" << half << "\" y2=\"" << size << "\" stroke=\"lightgray\"/>\n";
  os << "<line x1=\"" << half << "\" y1=\"" << half << "\" x2=\"" << half
     << "\" y2=\"10\" stroke=\"darkred\" stroke-width=\"2\"/>\n";
  os << "<text x=\"" << half + 6 << "\" y=\"20\" font-size=\"12\" fill=\"darkred\">t*+</text>\n";
  os << "<g fill=\"steelblue\" fill-opacity=\"0.4\">\n";
  for (const auto& p : phis) os << "<circle cx=\"" << fmt(sx(p[0])) << "\" cy=\"" << fmt(sy(p[2])) << "\" r=\"1.2\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace mplab
