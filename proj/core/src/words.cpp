#include "thickmix/words.hpp"

#include "thickmix/error.hpp"
#include "thickmix/numeric.hpp"

#include <algorithm>

namespace thickmix::words {

Block::Block(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(Errc::invalid_argument, "empty block");
  if (!std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == '0' || c == '1'; }))
    throw Error(Errc::invalid_argument, "block letters must be 0 or 1: '" + letters_ + "'");
}

namespace {

void check_depth(unsigned n, unsigned cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "depth must be >= 1");
  if (n > cap)
    throw Error(Errc::depth_exceeds_cap,
                "depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

Block chacon_block(unsigned n, unsigned cap) {
  check_depth(n, cap);
  std::string b = "0010";
  for (unsigned i = 1; i < n; ++i) {
    std::string next;
    next.reserve(3 * b.size() + 1);
    next += b;
    next += b;
    next += '1';
    next += b;
    b = std::move(next);
  }
  return Block(std::move(b));
}

Block substitute(const Block& w) {
  std::string out;
  out.reserve(4 * w.size());
  for (char c : w.letters()) {
    if (c == '0')
      out += "0010";
    else
      out += '1';
  }
  return Block(std::move(out));
}

std::int64_t block_length(unsigned n) {
  if (n < 1) throw Error(Errc::invalid_argument, "depth must be >= 1");
  return chacon_length_i64(n);
}

char Window::at(std::int64_t pos) const {
  if (!contains(pos))
    throw Error(Errc::unreachable_range, "position " + std::to_string(pos) + " outside window");
  return letters_[static_cast<std::size_t>(pos - start_)];
}

std::string_view Window::slice(std::int64_t from, std::int64_t to) const {
  if (from > to || from < start_ || to > end())
    throw Error(Errc::unreachable_range, "slice outside window");
  return std::string_view(letters_).substr(static_cast<std::size_t>(from - start_),
                                           static_cast<std::size_t>(to - from));
}

Window window(unsigned depth, unsigned cap) {
  Block b = chacon_block(depth, cap);
  std::string letters = b.letters() + b.letters();
  return Window(depth, -static_cast<std::int64_t>(b.size()), std::move(letters));
}

std::vector<std::int64_t> occurrences(const Block& pattern, const Window& w) {
  std::vector<std::int64_t> out;
  const std::string_view text(w.letters());
  const std::string_view pat(pattern.letters());
  for (std::size_t at = text.find(pat); at != std::string_view::npos; at = text.find(pat, at + 1))
    out.push_back(w.start() + static_cast<std::int64_t>(at));
  return out;
}

}  // namespace thickmix::words
