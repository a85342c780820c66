#include "physkit/linalg.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "physkit/errors.hpp"

namespace physkit {

std::string format_real(double value) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

static std::string format_triple(double x, double y, double z) {
  std::string out = format_real(x);
  out += ',';
  out += format_real(y);
  out += ',';
  out += format_real(z);
  return out;
}

std::string to_string(const Vec3& v) { return format_triple(v.x, v.y, v.z); }

std::string to_string(const Position& p) { return format_triple(p.x, p.y, p.z); }

static std::array<double, 3> parse_triple(std::string_view text) {
  std::array<double, 3> out{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t next = text.find(',', pos);
    if ((i < 2) != (next != std::string_view::npos)) {
      throw ContractError("expected three comma-separated numbers, got '" +
                          std::string(text) + "'");
    }
    std::string_view field = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), out[i]);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() ||
        !std::isfinite(out[i])) {
      throw ContractError("invalid number '" + std::string(field) + "' in '" +
                          std::string(text) + "'");
    }
    pos = next + 1;
  }
  return out;
}

Vec3 parse_vec3(std::string_view text) {
  auto [x, y, z] = parse_triple(text);
  return {x, y, z};
}

Position parse_position(std::string_view text) {
  auto [x, y, z] = parse_triple(text);
  return cart(x, y, z);
}

}  // namespace physkit
