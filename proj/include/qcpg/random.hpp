#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qcpg {

// Subsystem streams derived from the single run seed.
enum class RngStream : std::uint64_t {
  kSplit = 1,
  kSubsample = 2,
  kNoisyGenerator = 3,
  kSynthetic = 4,
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_string(std::string_view s);

// Counter-based generator: the n-th draw is mix64(key + n * golden), so a
// stream can be re-created anywhere from (seed, stream, extra keys). Draws do
// not depend on the standard library's distribution implementations.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, RngStream stream, std::uint64_t subkey = 0);

  std::uint64_t next();
  double uniform();                          // [0, 1)
  std::uint64_t below(std::uint64_t bound);  // [0, bound), unbiased
  double normal();                           // standard normal

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qcpg
