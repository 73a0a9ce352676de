#include "rif/degree.hpp"

#include <cctype>

namespace rif {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Degree Degree::parse(std::string_view text) {
  auto fail = [&]() -> Degree {
    throw ValidationError("degree '" + std::string(text) +
                          "': expected a decimal in [0,1] with at most 4 "
                          "fractional digits");
  };

  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 4 || !all_digits(frac)) return fail();
  }
  if (whole.size() != 1 || !all_digits(whole)) return fail();

  std::int32_t ticks = 0;
  for (char c : whole) ticks = ticks * 10 + (c - '0');
  ticks *= kScale;

  std::int32_t scale = kScale / 10;
  for (char c : frac) {
    ticks += (c - '0') * scale;
    scale /= 10;
  }

  if (ticks > kScale) return fail();
  return Degree(ticks);
}

Degree Degree::from_ticks(std::int32_t ticks) {
  if (ticks < 0 || ticks > kScale) {
    throw ValidationError("degree ticks " + std::to_string(ticks) +
                          " outside [0, " + std::to_string(kScale) + "]");
  }
  return Degree(ticks);
}

std::string Degree::str() const {
  std::string out = std::to_string(ticks_ / kScale);
  std::int32_t frac = ticks_ % kScale;
  if (frac == 0) return out;

  char digits[5];
  for (int i = 3; i >= 0; --i) {
    digits[i] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  int len = 4;
  while (len > 0 && digits[len - 1] == '0') --len;
  out += '.';
  out.append(digits, static_cast<std::size_t>(len));
  return out;
}

}  // namespace rif
