#include "mckay/ade.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace mckay {

AdeLabel AdeLabel::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty ADE label");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed ADE label '" + std::string(text) + "'");
  }
  AdeLabel label;
  label.rank = n;
  switch (f) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
      label.family = AdeFamily::A;
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
      label.family = AdeFamily::D;
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E_n requires 6 <= n <= 8");
      label.family = AdeFamily::E;
      break;
    default:
      throw std::invalid_argument("unknown ADE family in '" + std::string(text) + "'");
  }
  return label;
}

std::string AdeLabel::to_string() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

std::size_t AdeLabel::group_order() const {
  switch (family) {
    case AdeFamily::A:
      return static_cast<std::size_t>(rank) + 1;
    case AdeFamily::D:
      return 4 * static_cast<std::size_t>(rank - 2);
    case AdeFamily::E:
      return rank == 6 ? 24 : rank == 7 ? 48 : 120;
  }
  return 0;
}

int AdeLabel::cartan_determinant() const {
  switch (family) {
    case AdeFamily::A:
      return rank + 1;
    case AdeFamily::D:
      return 4;
    case AdeFamily::E:
      return 9 - rank;
  }
  return 0;
}

std::vector<AdeLabel> standard_ade_corpus() {
  std::vector<AdeLabel> out;
  for (int n = 1; n <= 10; ++n) out.push_back({AdeFamily::A, n});
  for (int n = 4; n <= 10; ++n) out.push_back({AdeFamily::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({AdeFamily::E, n});
  return out;
}

}  // namespace mckay
