// linkhom: command-line front end. Results go to stdout, diagnostics to
// stderr. Exit codes: 0 ok, 2 bad input, 3 precondition (eta on a
// non-cycle), 4 unrealizable profile.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "linkhom/classify.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/groups.hpp"
#include "linkhom/hatf.hpp"
#include "linkhom/hilton.hpp"
#include "linkhom/magnus.hpp"
#include "linkhom/profile.hpp"
#include "linkhom/word_parser.hpp"

namespace {

using namespace linkhom;

constexpr int kInputError = 2;
constexpr int kPrecondition = 3;
constexpr int kUnrealizable = 4;

struct ExitWith {
  int code;
  std::string message;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = std::string_view(text).substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ExitWith{kInputError, std::string("malformed ") + what + " '" + text + "'"};
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

hatf::HatFElement element(int degree, const std::string& text) {
  if (degree < 0) throw ExitWith{kInputError, "degree must be >= 0"};
  return hatf::HatFElement(degree, parse_word(text));
}

std::string hatf_line(const hatf::HatFElement& e) { return hatf::to_string(e); }

struct Options {
  // shared
  std::string table_path;
  std::string profile_path;
  int trunc = 4;
  bool verbose = false;
  bool expanded = false;
  bool printed = false;
  bool reduced = false;
  int degree = -1;
  std::vector<std::string> args;
  std::string L0 = "empty";
  std::string sub = "full";
};

groups::HomotopyTable load_table(const Options& o) {
  groups::HomotopyTable t;
  if (!o.table_path.empty()) t.load_file(o.table_path);
  return t;
}

links::LinkProfile load_profile(const Options& o) {
  if (o.profile_path.empty()) throw ExitWith{kInputError, "--profile is required"};
  return links::load_profile(o.profile_path);
}

int arg_int(const std::string& s, const char* what) {
  const auto v = parse_int_list(s, what);
  if (v.size() != 1) throw ExitWith{kInputError, std::string("expected a single integer for ") + what};
  return v[0];
}

void need_args(const Options& o, std::size_t n, const char* usage) {
  if (o.args.size() != n) throw ExitWith{kInputError, std::string("usage: ") + usage};
}

int run_word(const std::string& action, const Options& o) {
  if (action == "reduce" || action == "parse") {
    need_args(o, 1, "word reduce|parse <expr>");
    std::cout << print_word(parse_word(o.args[0])) << '\n';
  } else {
    need_args(o, 2, "word commutate <a> <b>");
    std::cout << print_word(commutator(parse_word(o.args[0]), parse_word(o.args[1]))) << '\n';
  }
  return 0;
}

int run_hatf(const std::string& action, const Options& o) {
  if (action == "face" || action == "degen") {
    need_args(o, 2, "hatf face|degen --degree n <i> <expr>");
    const auto e = element(o.degree, o.args[1]);
    const int i = arg_int(o.args[0], "index");
    std::cout << hatf_line(action == "face" ? hatf::face(i, e) : hatf::degeneracy(i, e)) << '\n';
  } else if (action == "cycle") {
    need_args(o, 1, "hatf cycle --degree n <expr>");
    std::cout << (hatf::is_cycle(element(o.degree, o.args[0])) ? "true" : "false") << '\n';
  } else if (action == "eta") {
    need_args(o, 1, "hatf eta --degree n <expr>");
    const auto z = element(o.degree, o.args[0]);
    if (o.degree < 1 || !hatf::is_cycle(z)) throw ExitWith{kPrecondition, "eta needs a cycle of degree >= 1"};
    std::cout << hatf_line(hatf::eta_word(z)) << '\n';
  } else if (action == "tower") {
    need_args(o, 1, "hatf tower <k>");
    const int k = arg_int(o.args[0], "k");
    if (k < 1) throw ExitWith{kInputError, "tower needs k >= 1"};
    if (o.expanded) {
      std::cout << hatf_line(hatf::eta_tower(k)) << '\n';
    } else {
      std::cout << "degree=" << k << "; word=" << hatf::eta_tower_expression(k).to_string() << '\n';
    }
  } else {
    need_args(o, 1, "hatf meridian <k>");
    const auto m = hatf::meridian_word(arg_int(o.args[0], "k"));
    std::cout << "link=" << m.link_size << "; word=" << m.bracket_form << '\n';
    if (o.expanded) std::cout << print_word(m.word, 'a') << '\n';
  }
  return 0;
}

int run_magnus(const std::string& action, const Options& o) {
  if (o.trunc < 1) throw ExitWith{kInputError, "--trunc must be >= 1"};
  if (action == "expand") {
    need_args(o, 1, "magnus expand <expr> [--trunc k] [--reduced]");
    const Word w = parse_word(o.args[0]);
    if (o.reduced) {
      std::cout << magnus::to_string(magnus::reduced_expand(w, o.trunc).series()) << '\n';
    } else {
      std::cout << magnus::to_string(magnus::magnus_expand(w, o.trunc)) << '\n';
    }
  } else if (action == "gamma") {
    need_args(o, 1, "magnus gamma <expr> [--trunc k]");
    std::cout << magnus::gamma_class_lower_bound(parse_word(o.args[0]), o.trunc).to_string() << '\n';
  } else if (action == "mu") {
    need_args(o, 2, "magnus mu <expr> <i1,i2,...>");
    std::vector<GenIndex> idx;
    for (int v : parse_int_list(o.args[1], "index list")) {
      if (v < 1) throw ExitWith{kInputError, "indices must be >= 1"};
      idx.push_back(static_cast<GenIndex>(v));
    }
    std::cout << magnus::mu_coefficient(parse_word(o.args[0]), idx) << '\n';
  } else {
    need_args(o, 1, "magnus verify51 <n>");
    const auto report = magnus::check_milnor_invisibility(arg_int(o.args[0], "n"), o.printed);
    for (const auto& l : report.lines) {
      std::cout << (l.passed ? "PASS " : "FAIL ") << l.subject << ' ' << l.check << ": " << l.detail << '\n';
    }
    return report.all_passed() ? 0 : 1;
  }
  return 0;
}

int run_link(const std::string& action, const Options& o) {
  const auto p = load_profile(o);
  if (action == "chi2") {
    need_args(o, 2, "link chi2 --profile f <i> <j>");
    std::cout << links::chi2(p, arg_int(o.args[0], "i"), arg_int(o.args[1], "j")) << '\n';
  } else if (action == "chi3") {
    need_args(o, 3, "link chi3 --profile f <i> <j> <k>");
    std::cout << links::chi3(p, arg_int(o.args[0], "i"), arg_int(o.args[1], "j"), arg_int(o.args[2], "k")) << '\n';
  } else if (action == "x2") {
    need_args(o, 2, "link x2 --profile f <i> <j>");
    std::cout << groups::to_string(links::classify_X2(p, arg_int(o.args[0], "i"), arg_int(o.args[1], "j"))) << '\n';
  } else if (action == "x3") {
    need_args(o, 3, "link x3 --profile f <i> <j> <k>");
    std::cout << groups::to_string(
                     links::classify_X3(p, arg_int(o.args[0], "i"), arg_int(o.args[1], "j"), arg_int(o.args[2], "k")))
              << '\n';
  } else if (action == "classify") {
    need_args(o, 0, "link classify --profile f [--L0 s] [--sub s]");
    const auto table = load_table(o);
    const auto L0 = links::parse_sublink(o.L0, p.components());
    const auto Lp = links::parse_sublink(o.sub, p.components());
    const auto c = links::classify_A(p, L0, Lp, table);
    std::cout << links::render(c) << '\n';
    if (o.verbose) {
      std::cout << "rule: " << c.rule << '\n';
      for (const auto& n : c.notes) std::cout << "note: " << n << '\n';
    }
  } else {
    need_args(o, 0, "link check --profile f");
    const auto findings = links::check_profile(p);
    bool bad = false;
    for (const auto& f : findings) {
      std::cout << (f.unrealizable ? "unrealizable: " : "warning: ") << f.message << '\n';
      bad = bad || f.unrealizable;
    }
    if (findings.empty()) std::cout << "ok (checked constraints hold; not a realizability claim)\n";
    return bad ? kUnrealizable : 0;
  }
  return 0;
}

int run_spheres(const std::string& action, const Options& o) {
  const auto table = load_table(o);
  if (action == "pi") {
    need_args(o, 2, "spheres pi <n> <m>");
    const int n = arg_int(o.args[0], "n");
    const int m = arg_int(o.args[1], "m");
    if (n < 1 || m < 1) throw ExitWith{kInputError, "n and m must be >= 1"};
    if (auto e = table.lookup(n, m)) {
      std::cout << groups::render(e->group) << '\n';
      if (!e->builtin) std::cout << "source: " << e->provenance << '\n';
    } else {
      std::cout << groups::render(groups::PiOfSphere{n, m}, true) << '\n';
    }
  } else {
    need_args(o, 2, "spheres wedge <n> <d1,d2,...>");
    const int n = arg_int(o.args[0], "n");
    const auto dims = parse_int_list(o.args[1], "dims");
    if (n < 2) throw ExitWith{kInputError, "n must be >= 2"};
    for (int d : dims) {
      if (d < 2) throw ExitWith{kInputError, "sphere dimensions must be >= 2"};
    }
    const auto g = hilton::hilton_pi(n, dims, table);
    std::cout << groups::render(g, true) << '\n';
    if (o.verbose) {
      for (const auto& t : hilton::hilton_terms(n, dims, table)) {
        std::string w;
        for (int l : t.word) w += static_cast<char>('a' + l);
        std::cout << "term " << w << ": pi_" << n << "(S^" << t.sphere_dim << ") = " << groups::render(t.group, true)
                  << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkhom: free-group words, the simplicial group F-hat, Magnus expansions and link classification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--table", o.table_path, "extra homotopy table (lines '<n> <m> <group> | <provenance>')");

  std::vector<std::pair<std::string, CLI::App*>> groups_of;

  auto add_group = [&](const std::string& name, const std::string& help, std::vector<std::string> actions) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    for (const auto& a : actions) {
      auto* s = g->add_subcommand(a);
      // positionals are taken raw: CLI11 would split "[a, b]" as a list
      s->allow_extras();
      s->add_option("--degree", o.degree);
      s->add_option("--trunc", o.trunc);
      s->add_option("--profile", o.profile_path);
      s->add_option("--table", o.table_path);
      s->add_option("--L0", o.L0);
      s->add_option("--sub", o.sub);
      s->add_flag("--verbose,-v", o.verbose);
      s->add_flag("--expanded", o.expanded);
      s->add_flag("--printed", o.printed);
      s->add_flag("--reduced", o.reduced);
    }
    groups_of.emplace_back(name, g);
  };
  add_group("word", "free-group words", {"reduce", "parse", "commutate"});
  add_group("hatf", "the simplicial group F-hat", {"face", "degen", "cycle", "eta", "tower", "meridian"});
  add_group("magnus", "Magnus expansion", {"expand", "gamma", "mu", "verify51"});
  add_group("link", "splitting profiles", {"chi2", "chi3", "x2", "x3", "classify", "check"});
  add_group("spheres", "homotopy of spheres and wedges", {"pi", "wedge"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  std::string group;
  std::string action;
  for (auto& [name, g] : groups_of) {
    if (g->parsed()) {
      group = name;
      auto* sub = g->get_subcommands().front();
      action = sub->get_name();
      o.args = sub->remaining();
    }
  }

  try {
    if (group == "word") return run_word(action, o);
    if (group == "hatf") return run_hatf(action, o);
    if (group == "magnus") return run_magnus(action, o);
    if (group == "link") return run_link(action, o);
    return run_spheres(action, o);
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const UnrealizableProfile& e) {
    std::cerr << "unrealizable profile: " << e.what() << '\n';
    return kUnrealizable;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    // parse, format, range and file errors are all input errors
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
