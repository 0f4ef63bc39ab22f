#pragma once

// A link abstracted to its splitting profile: the splitting genus ν of every
// sublink. Sublinks are bitmasks over the 1-based component labels.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linkhom::links {

using Sublink = std::uint32_t;

inline constexpr int kMaxComponents = 16;

inline constexpr Sublink component(int i) { return Sublink{1} << (i - 1); }
inline constexpr Sublink full_sublink(int n) { return n >= 32 ? ~Sublink{0} : (Sublink{1} << n) - 1; }
int size_of(Sublink s);
/// "{1,2}", "{}" for the empty link
std::string to_string(Sublink s);
/// "1,2", "empty" or "full"; throws PreconditionError on bad labels.
Sublink parse_sublink(std::string_view text, int n);

enum class Preset { Hopf, Trivial, Brunnian };
std::optional<Preset> parse_preset(std::string_view name);
std::string_view preset_name(Preset p);

class LinkProfile {
 public:
  /// nu[s] for every sublink s < 2^n. Throws PreconditionError unless
  /// ν(∅) = -1, ν(knot) = 0 and 0 <= ν(T) <= |T| - 1 otherwise.
  LinkProfile(int n, std::vector<int> nu);

  int components() const noexcept { return n_; }
  Sublink full() const noexcept { return full_sublink(n_); }
  int nu(Sublink s) const { return nu_.at(s); }
  /// ν of L with the components in `removed` deleted.
  int nu_deleting(Sublink removed) const { return nu(full() & ~removed); }
  const std::vector<int>& values() const noexcept { return nu_; }

  friend bool operator==(const LinkProfile&, const LinkProfile&) = default;

 private:
  int n_;
  std::vector<int> nu_;
};

/// Describes why (n, nu) violates the profile invariants, or nothing.
std::optional<std::string> profile_violation(int n, const std::vector<int>& nu);

LinkProfile preset_profile(Preset kind, int n);

/// Line-based format:
///   components <n>
///   preset <hopf|trivial|brunnian>     (optional)
///   nu <subset> <integer>              (overrides the preset)
/// '#' starts a comment. Without a preset every sublink with two or more
/// components needs a line; ν of the empty link and of knots is implied.
/// Throws FormatError carrying the offending line number.
LinkProfile parse_profile(std::istream& in);
LinkProfile load_profile(const std::string& path);

}  // namespace linkhom::links
