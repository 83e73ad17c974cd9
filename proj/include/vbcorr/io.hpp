#pragma once

// Parsing of angle / complex / vector arguments and locale-independent
// CSV and JSON emission of flat record tables.

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vbcorr/linalg.hpp"

namespace vbcorr {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

/// Parses the whole of `s` as a double; std::from_chars ignores the locale.
inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses an angle given in radians ("0.39") or as a multiple of pi:
/// "pi", "-pi/4", "5pi/6", "8.69pi/6", "3*pi/8", "π/2".
inline double parse_angle(std::string_view text) {
  std::string s(detail::trim(text));
  if (const auto pos = s.find("π"); pos != std::string::npos) s.replace(pos, std::string("π").size(), "pi");
  const auto pos = s.find("pi");
  if (pos == std::string::npos) {
    if (const auto v = detail::parse_double(s); v && std::isfinite(*v)) return *v;
    throw InvalidInput("cannot parse angle '" + std::string(text) + "'");
  }
  std::string_view coef = detail::trim(std::string_view(s).substr(0, pos));
  std::string_view rest = detail::trim(std::string_view(s).substr(pos + 2));
  if (!coef.empty() && coef.back() == '*') coef = detail::trim(coef.substr(0, coef.size() - 1));
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty() && coef != "+") {
    const auto v = detail::parse_double(coef);
    if (!v) throw InvalidInput("cannot parse angle '" + std::string(text) + "'");
    c = *v;
  }
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw InvalidInput("cannot parse angle '" + std::string(text) + "'");
    const auto v = detail::parse_double(rest.substr(1));
    if (!v || *v == 0.0) throw InvalidInput("cannot parse angle '" + std::string(text) + "'");
    denom = *v;
  }
  const double angle = c * kPi / denom;
  if (!std::isfinite(angle)) throw InvalidInput("angle is not finite: '" + std::string(text) + "'");
  return angle;
}

/// Parses "1", "-0.5", "2i", "-i", "1+2i", "0.5-0.25i".
inline Complex parse_complex(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto fail = [&]() -> Complex { throw InvalidInput("cannot parse complex number '" + std::string(text) + "'"); };
  if (s.empty()) return fail();
  if (s.back() != 'i') {
    const auto v = detail::parse_double(s);
    return v ? Complex(*v, 0.0) : fail();
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) -> std::optional<double> {
    t = detail::trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return detail::parse_double(t);
  };
  if (split == std::string_view::npos) {
    const auto im = imag_part(body);
    return im ? Complex(0.0, *im) : fail();
  }
  const auto re = detail::parse_double(body.substr(0, split));
  const auto im = imag_part(body.substr(split));
  return re && im ? Complex(*re, *im) : fail();
}

/// Parses "x,y,z".
inline Vec3 parse_vec3(std::string_view text) {
  Vec3 v;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', start) : text.size();
    if (end == std::string_view::npos) throw InvalidInput("expected three comma-separated components in '" + std::string(text) + "'");
    const auto c = detail::parse_double(text.substr(start, end - start));
    if (!c || !std::isfinite(*c)) throw InvalidInput("cannot parse component in '" + std::string(text) + "'");
    v(i) = *c;
    start = end + 1;
  }
  return v;
}

/// Shortest round-trip decimal representation, independent of the locale.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// `steps` evenly spaced values from lo to hi inclusive; steps == 1 requires lo == hi.
inline std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidInput("grid needs at least one step");
  if (!(lo <= hi)) throw InvalidInput("grid range must be ordered (min <= max)");
  if (steps == 1) {
    if (lo != hi) throw InvalidInput("a single-step grid needs min == max");
    return {lo};
  }
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  v.back() = hi;
  return v;
}

// ---------------------------------------------------------------------------
// Tables

using Cell = std::variant<std::monostate, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

inline std::string to_csv(const Table& t) {
  std::string out;
  auto emit_row = [&](const auto& cells, auto&& fmt) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += fmt(cells[i]);
    }
    out += '\n';
  };
  emit_row(t.columns, [](const std::string& s) { return s; });
  for (const auto& row : t.rows) {
    emit_row(row, [](const Cell& c) -> std::string {
      if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
      if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
      if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
      return "";
    });
  }
  return out;
}

inline std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const Cell& c = row[i];
      auto& slot = obj[t.columns[i]];
      if (std::holds_alternative<double>(c)) {
        const double v = std::get<double>(c);
        slot = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
      } else if (std::holds_alternative<bool>(c)) {
        slot = std::get<bool>(c);
      } else if (std::holds_alternative<std::string>(c)) {
        slot = std::get<std::string>(c);
      } else {
        slot = nullptr;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

inline std::string render(const Table& t, OutputFormat f) { return f == OutputFormat::csv ? to_csv(t) : to_json(t); }

/// Writes bytes verbatim (binary mode keeps LF line endings).
inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace vbcorr
