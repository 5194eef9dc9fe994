#ifndef MONODROMY_HASH_HPP
#define MONODROMY_HASH_HPP

#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>

namespace monodromy
{

// 64-bit FNV-1a, incremental.
class Fnv1a
{
public:
  Fnv1a &bytes(void const *data, std::size_t n)
  {
    auto const *p = static_cast<unsigned char const *>(data);
    for (std::size_t i = 0; i < n; ++i) {
      _h ^= p[i];
      _h *= 0x100000001b3ULL;
    }
    return *this;
  }

  Fnv1a &str(std::string_view s)
  { return bytes(s.data(), s.size()).bytes("\0", 1); }

  Fnv1a &i64(std::int64_t x)
  {
    // fixed little-endian layout so digests agree across hosts
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
      b[i] = static_cast<unsigned char>(static_cast<std::uint64_t>(x) >> (8 * i));
    return bytes(b, 8);
  }

  Fnv1a &i64s(std::span<std::int64_t const> xs)
  {
    i64(static_cast<std::int64_t>(xs.size()));
    for (auto x : xs)
      i64(x);
    return *this;
  }

  std::uint64_t value() const { return _h; }

private:
  std::uint64_t _h = 0xcbf29ce484222325ULL;
};

inline std::string hex64(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

} // namespace monodromy

#endif // MONODROMY_HASH_HPP
