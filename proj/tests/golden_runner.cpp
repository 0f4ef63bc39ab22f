// Runs one CLI case from golden/cases.txt and compares stdout and the exit
// code. Manifest lines: <name> | <exit code> | <arg> | <arg> ...
// Arguments are passed verbatim, so "" and "[x1, x2]" survive intact.

#include <sys/wait.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, '|')) out.push_back(trim(f));
  return out;
}

// "" in the manifest stands for an empty argument
std::string unquote(const std::string& s) { return s == "\"\"" ? std::string() : s; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: golden_runner <cli> <source dir> <case>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string root = argv[2];
  const std::string name = argv[3];

  std::ifstream manifest(root + "/tests/golden/cases.txt");
  std::vector<std::string> fields;
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_fields(line);
    if (!f.empty() && f[0] == name) fields = f;
  }
  if (fields.size() < 2) {
    std::cerr << "no case '" << name << "'\n";
    return 2;
  }
  const int want_code = std::stoi(fields[1]);

  std::vector<std::string> args{cli};
  for (std::size_t i = 2; i < fields.size(); ++i) args.push_back(unquote(fields[i]));

  int fd[2];
  if (pipe(fd) != 0) return 2;
  const pid_t pid = fork();
  if (pid == 0) {
    dup2(fd[1], STDOUT_FILENO);
    close(fd[0]);
    close(fd[1]);
    if (chdir(root.c_str()) != 0) _exit(127);
    std::vector<char*> cargs;
    for (auto& a : args) cargs.push_back(a.data());
    cargs.push_back(nullptr);
    execv(cli.c_str(), cargs.data());
    _exit(127);
  }
  close(fd[1]);
  std::string got;
  char buf[4096];
  for (ssize_t n; (n = read(fd[0], buf, sizeof buf)) > 0;) got.append(buf, static_cast<std::size_t>(n));
  close(fd[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream in(root + "/tests/golden/" + name + ".out");
  std::stringstream want;
  want << in.rdbuf();

  bool ok = true;
  if (code != want_code) {
    std::cout << "exit code " << code << ", expected " << want_code << '\n';
    ok = false;
  }
  if (got != want.str()) {
    std::cout << "stdout differs\n--- expected\n" << want.str() << "--- got\n" << got;
    ok = false;
  }
  std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
  return ok ? 0 : 1;
}
