#include "linkhom/profile.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom::links {

int size_of(Sublink s) { return std::popcount(s); }

std::string to_string(Sublink s) {
  std::string out = "{";
  for (int i = 1; i <= 32; ++i) {
    if (s & component(i)) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i);
    }
  }
  return out + "}";
}

Sublink parse_sublink(std::string_view text, int n) {
  if (text == "empty") return 0;
  if (text == "full") return full_sublink(n);
  Sublink s = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw PreconditionError("bad component label '" + std::string(item) + "' in '" + std::string(text) + "'");
    }
    if (v < 1 || v > n) {
      throw PreconditionError("component " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (s & component(v)) throw PreconditionError("component " + std::to_string(v) + " listed twice");
    s |= component(v);
    pos = comma + 1;
  }
  return s;
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "hopf") return Preset::Hopf;
  if (name == "trivial") return Preset::Trivial;
  if (name == "brunnian") return Preset::Brunnian;
  return std::nullopt;
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::Hopf: return "hopf";
    case Preset::Trivial: return "trivial";
    case Preset::Brunnian: return "brunnian";
  }
  return "?";
}

std::optional<std::string> profile_violation(int n, const std::vector<int>& nu) {
  if (n < 1 || n > kMaxComponents) return "component count must be in 1.." + std::to_string(kMaxComponents);
  if (nu.size() != (std::size_t{1} << n)) return "expected " + std::to_string(std::size_t{1} << n) + " values";
  if (nu[0] != -1) return "nu(empty) must be -1";
  for (Sublink s = 1; s <= full_sublink(n); ++s) {
    const int k = size_of(s);
    if (k == 1 && nu[s] != 0) return "nu" + to_string(s) + " must be 0 (a knot is nonsplittable)";
    if (nu[s] < 0 || nu[s] > k - 1) {
      return "nu" + to_string(s) + " = " + std::to_string(nu[s]) + " outside 0.." + std::to_string(k - 1);
    }
  }
  return std::nullopt;
}

LinkProfile::LinkProfile(int n, std::vector<int> nu) : n_(n), nu_(std::move(nu)) {
  if (auto why = profile_violation(n_, nu_)) throw PreconditionError("invalid splitting profile: " + *why);
}

LinkProfile preset_profile(Preset kind, int n) {
  if (n < 1 || n > kMaxComponents) {
    throw PreconditionError("component count must be in 1.." + std::to_string(kMaxComponents));
  }
  std::vector<int> nu(std::size_t{1} << n);
  nu[0] = -1;
  for (Sublink s = 1; s <= full_sublink(n); ++s) {
    const int k = size_of(s);
    switch (kind) {
      case Preset::Hopf: nu[s] = 0; break;
      case Preset::Trivial: nu[s] = k - 1; break;
      case Preset::Brunnian: nu[s] = s == full_sublink(n) ? 0 : k - 1; break;
    }
  }
  return LinkProfile(n, std::move(nu));
}

LinkProfile parse_profile(std::istream& in) {
  std::optional<int> n;
  std::optional<Preset> preset;
  std::vector<int> nu;
  std::vector<std::size_t> set_on_line;  // 0 = unset
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "components") {
      int v = 0;
      if (n) throw FormatError(lineno, "duplicate 'components' line");
      if (!(ls >> v)) throw FormatError(lineno, "expected a component count");
      if (v < 1 || v > kMaxComponents) {
        throw FormatError(lineno, "component count must be in 1.." + std::to_string(kMaxComponents));
      }
      n = v;
      nu.assign(std::size_t{1} << v, 0);
      set_on_line.assign(nu.size(), 0);
    } else if (key == "preset") {
      if (!n) throw FormatError(lineno, "'preset' before 'components'");
      if (preset) throw FormatError(lineno, "duplicate 'preset' line");
      std::string name;
      ls >> name;
      preset = parse_preset(name);
      if (!preset) throw FormatError(lineno, "unknown preset '" + name + "' (hopf, trivial, brunnian)");
      const LinkProfile seeded = preset_profile(*preset, *n);
      for (Sublink s = 0; s < nu.size(); ++s) {
        if (set_on_line[s] == 0) nu[s] = seeded.nu(s);
      }
    } else if (key == "nu") {
      if (!n) throw FormatError(lineno, "'nu' before 'components'");
      std::string subset;
      int value = 0;
      if (!(ls >> subset >> value)) throw FormatError(lineno, "expected 'nu <subset> <integer>'");
      Sublink s = 0;
      try {
        s = parse_sublink(subset, *n);
      } catch (const PreconditionError& e) {
        throw FormatError(lineno, e.what());
      }
      if (set_on_line[s] != 0) {
        throw FormatError(lineno, "duplicate entry for " + to_string(s) + " (first on line " +
                                      std::to_string(set_on_line[s]) + ")");
      }
      const int k = size_of(s);
      if (s == 0 && value != -1) throw FormatError(lineno, "nu(empty) must be -1");
      if (k == 1 && value != 0) throw FormatError(lineno, "nu" + to_string(s) + " must be 0 (a knot is nonsplittable)");
      if (k >= 1 && (value < 0 || value > k - 1)) {
        throw FormatError(lineno, "nu" + to_string(s) + " = " + std::to_string(value) + " outside 0.." +
                                      std::to_string(k - 1));
      }
      nu[s] = value;
      set_on_line[s] = lineno;
    } else {
      throw FormatError(lineno, "unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw FormatError(lineno, "unexpected trailing text '" + extra + "'");
  }

  if (!n) throw FormatError(lineno + 1, "missing 'components' line");
  nu[0] = -1;
  if (!preset) {
    std::string missing;
    int count = 0;
    for (Sublink s = 1; s < nu.size(); ++s) {
      if (size_of(s) == 1) continue;  // forced to 0
      if (set_on_line[s] == 0) {
        if (count < 8) missing += (count ? " " : "") + to_string(s);
        ++count;
      }
    }
    if (count > 0) {
      throw FormatError(lineno + 1, std::to_string(count) + " sublink(s) without a value and no preset: " + missing +
                                        (count > 8 ? " ..." : ""));
    }
  }
  return LinkProfile(*n, std::move(nu));
}

LinkProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile '" + path + "'");
  return parse_profile(in);
}

}  // namespace linkhom::links
