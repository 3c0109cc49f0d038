#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thickmix::words {

/// Largest depth built by default; B_12 has 797161 letters.
inline constexpr unsigned kDefaultDepthCap = 12;

/// A nonempty finite word over {0,1}.
class Block {
 public:
  explicit Block(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::string letters_;
};

/// Central window of the Chacon point: B_K B_K laid out on positions
/// -l_K .. l_K - 1, so position 0 starts the second copy.
class Window {
 public:
  unsigned depth() const noexcept { return depth_; }
  std::int64_t start() const noexcept { return start_; }
  /// One past the last position.
  std::int64_t end() const noexcept { return start_ + static_cast<std::int64_t>(letters_.size()); }
  const std::string& letters() const noexcept { return letters_; }

  bool contains(std::int64_t pos) const noexcept { return pos >= start_ && pos < end(); }
  char at(std::int64_t pos) const;

  /// Letters on positions [from, to), which must lie in the window.
  std::string_view slice(std::int64_t from, std::int64_t to) const;

 private:
  friend Window window(unsigned, unsigned);
  Window(unsigned depth, std::int64_t start, std::string letters)
      : depth_(depth), start_(start), letters_(std::move(letters)) {}

  unsigned depth_;
  std::int64_t start_;
  std::string letters_;
};

/// B_n from B_1 = 0010 and B_{n+1} = B_n B_n 1 B_n.
Block chacon_block(unsigned n, unsigned cap = kDefaultDepthCap);

/// Applies 0 -> 0010, 1 -> 1.
Block substitute(const Block& w);

/// (3^{n+1} - 1) / 2; throws if it does not fit in 64 bits.
std::int64_t block_length(unsigned n);

Window window(unsigned depth, unsigned cap = kDefaultDepthCap);

/// Every position p with the pattern fully inside the window starting at p,
/// ascending. Patterns running off either edge are not reported.
std::vector<std::int64_t> occurrences(const Block& pattern, const Window& w);

}  // namespace thickmix::words
