#include "kncrystal/letter.hpp"

#include <charconv>

#include "kncrystal/error.hpp"

namespace kn {

namespace {
constexpr const char* kMacron = "̄";
}

Letter Letter::from_code(int code) {
  if (code == 0) throw InvalidArgument("letter code must be nonzero");
  return Letter(code);
}

Letter Letter::from_rank(int rank, int m) {
  if (m < 1 || rank < 1 || rank > 2 * m)
    throw InvalidArgument("letter rank " + std::to_string(rank) + " outside 1.." +
                          std::to_string(2 * m));
  return rank <= m ? unbarred(rank) : barred(2 * m + 1 - rank);
}

std::string Letter::to_string() const { return std::to_string(code_); }

std::string Letter::pretty() const {
  std::string s = std::to_string(index());
  if (is_barred()) s += kMacron;
  return s;
}

std::vector<Letter> alphabet(int m) {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(m));
  for (int r = 1; r <= 2 * m; ++r) out.push_back(Letter::from_rank(r, m));
  return out;
}

Letter parse_letter(const std::string& text) {
  std::string body = text;
  bool barred = false;
  const std::string macron = kMacron;
  if (body.size() > macron.size() &&
      body.compare(body.size() - macron.size(), macron.size(), macron) == 0) {
    body.resize(body.size() - macron.size());
    barred = true;
  }
  int code = 0;
  const char* first = body.data();
  const char* last = first + body.size();
  auto [ptr, ec] = std::from_chars(first, last, code);
  if (ec != std::errc() || ptr != last || code == 0 || (barred && code < 0))
    throw InvalidArgument("not a letter: \"" + text + "\"");
  return Letter::from_code(barred ? -code : code);
}

}  // namespace kn
