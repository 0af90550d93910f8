// Copyright 2026  The artamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <thread>

#include "artamp/enhance.hpp"
#include "artamp/error.hpp"
#include "artamp/wav_io.hpp"

namespace artamp {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "artamp-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr)
      throw Error(ErrorCode::kIo, "cannot create temporary directory");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

void ReplaceAll(std::string* s, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s->find(from, pos)) != std::string::npos) {
    s->replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

std::string WithStderr(const std::string& msg, const std::string& err) {
  return err.empty() ? msg : msg + "; stderr: " + err;
}

}  // namespace

Waveform RunExternal(const std::string& command_template, const Waveform& y,
                     double timeout_s) {
  if (command_template.find("{in}") == std::string::npos ||
      command_template.find("{out}") == std::string::npos)
    throw Error(ErrorCode::kInvalidArgument,
                "external command template must contain {in} and {out}");

  TempDir dir;
  const fs::path in_path = dir.path() / "in.wav";
  const fs::path out_path = dir.path() / "out.wav";
  const fs::path err_path = dir.path() / "stderr.txt";
  WriteWav(y, in_path, WavEncoding::kFloat32);

  std::string command = command_template;
  ReplaceAll(&command, "{in}", ShellQuote(in_path.string()));
  ReplaceAll(&command, "{out}", ShellQuote(out_path.string()));
  const std::string err_file = err_path.string();

  const pid_t pid = fork();
  if (pid < 0) throw Error(ErrorCode::kProcessFailure, "fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    const int fd = open(err_file.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd >= 0) {
      dup2(fd, STDERR_FILENO);
      close(fd);
    }
    const int devnull = open("/dev/null", O_RDWR);
    if (devnull >= 0) {
      dup2(devnull, STDIN_FILENO);
      dup2(devnull, STDOUT_FILENO);
      close(devnull);
    }
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_s);
  int status = 0;
  for (;;) {
    const pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0) throw Error(ErrorCode::kProcessFailure, "waitpid failed");
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      throw Error(ErrorCode::kTimeout,
                  WithStderr("external enhancer timed out after " +
                                 std::to_string(timeout_s) + " s",
                             ReadText(err_path)));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }

  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const std::string how =
        WIFEXITED(status) ? "exited with status " +
                                std::to_string(WEXITSTATUS(status))
                          : "terminated by signal " +
                                std::to_string(WTERMSIG(status));
    throw Error(ErrorCode::kProcessFailure,
                WithStderr("external enhancer " + how, ReadText(err_path)));
  }

  try {
    Waveform out = ReadWav(out_path);
    if (out.sample_rate() != y.sample_rate())
      throw Error(ErrorCode::kMalformedOutput,
                  "sample rate changed from " + std::to_string(y.sample_rate()) +
                      " to " + std::to_string(out.sample_rate()));
    return FitLength(out, y.size());
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedOutput,
                WithStderr(std::string("external enhancer output unusable: ") +
                               e.what(),
                           ReadText(err_path)));
  }
}

}  // namespace artamp
