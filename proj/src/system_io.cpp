// SPDX-License-Identifier: Apache-2.0
#include "affsemi/system_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace affsemi {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message);
}

bool starts_with_key(std::string_view line, std::string_view key) {
  line = trim(line);
  return line.substr(0, key.size()) == key && line.size() > key.size() && trim(line.substr(key.size())).front() == ':';
}

std::string_view after_colon(std::string_view line) { return line.substr(line.find(':') + 1); }

std::vector<std::uint64_t> parse_radicands(std::string_view list, std::size_t line_no, std::size_t base_column) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view item = trim(list.substr(pos, comma - pos));
    const std::size_t column = base_column + pos + 1;
    if (item.empty()) {
      if (out.empty() && trim(list).empty()) break;
      fail(line_no, column, "empty radicand");
    }
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || end != item.data() + item.size()) fail(line_no, column, "expected a positive integer");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SystemFile parse_system_file(std::string_view text) {
  std::optional<std::string> name;
  Basis basis;
  std::vector<AffineMap> maps;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    if (starts_with_key(line, "name")) {
      if (!maps.empty()) fail(line_no, 1, "name must precede the maps");
      name = std::string(trim(after_colon(line)));
      continue;
    }
    if (starts_with_key(line, "basis")) {
      if (!maps.empty()) fail(line_no, 1, "basis must precede the maps");
      const std::size_t colon = line.find(':');
      const auto radicands = parse_radicands(line.substr(colon + 1), line_no, colon + 1);
      try {
        basis = Basis(std::span<const std::uint64_t>(radicands));
      } catch (const Error& e) {
        throw Error(ErrorCode::BasisError, "line " + std::to_string(line_no) + ": " + e.message());
      }
      continue;
    }

    const std::size_t semi = line.find(';');
    if (semi == std::string_view::npos) fail(line_no, 1, "expected 'slope ; intercept'");
    try {
      Scalar slope = parse_scalar(line.substr(0, semi), basis, 0);
      Scalar intercept = parse_scalar(line.substr(semi + 1), basis, semi + 1);
      maps.emplace_back(std::move(slope), std::move(intercept));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", " + e.message());
      }
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  if (maps.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": no maps given");
  return SystemFile{std::move(name), MapSystem(basis, std::move(maps))};
}

std::string print_system(const MapSystem& sys, const std::optional<std::string>& name) {
  std::string out;
  if (name) out += "name: " + *name + "\n";
  const auto rad = sys.basis().radicands();
  if (rad.size() > 1) {
    out += "basis: ";
    for (std::size_t k = 1; k < rad.size(); ++k) {
      if (k > 1) out += ", ";
      out += std::to_string(rad[k]);
    }
    out += "\n";
  }
  for (const auto& f : sys.maps()) out += to_string(f.slope()) + " ; " + to_string(f.intercept()) + "\n";
  return out;
}

}  // namespace affsemi
