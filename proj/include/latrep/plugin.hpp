#pragma once

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "latrep/errors.hpp"
#include "latrep/lazy.hpp"

namespace latrep {

// Bare-oracle lattice backed by the JSON-lines plugin protocol.  One request
// per line: {"op": "leq"|"meet"|"join"|"upper_covers"|"lower_covers",
// "args": [element...]}, answered by {"result": ...}.  Elements are opaque
// JSON values; the oracle must be a pure function of its arguments, which the
// client-side cache relies on.
//
// Two transports: a subprocess pipe, or a static file of precomputed
// {"op", "args", "result"} lines.
class PluginLattice {
 public:
  using element_type = nlohmann::json;

  static PluginLattice subprocess(const std::string& command) {
    PluginLattice p;
    p.proc_ = std::make_shared<Process>(command);
    return p;
  }

  static PluginLattice table(const std::string& path) {
    PluginLattice p;
    p.table_ = std::make_shared<std::map<std::string, nlohmann::json>>();
    std::ifstream in(path);
    if (!in) throw PluginError("cannot open plugin table " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json row = nlohmann::json::parse(line);
      (*p.table_)[key(row.at("op").get<std::string>(), row.at("args"))] = row.at("result");
    }
    return p;
  }

  bool leq(const element_type& x, const element_type& y) const {
    return query("leq", {x, y}).get<bool>();
  }
  element_type meet(const element_type& x, const element_type& y) const {
    return query("meet", {x, y});
  }
  element_type join(const element_type& x, const element_type& y) const {
    return query("join", {x, y});
  }
  std::vector<element_type> lower_covers(const element_type& x) const {
    return covers("lower_covers", x);
  }
  std::vector<element_type> upper_covers(const element_type& x) const {
    return covers("upper_covers", x);
  }
  std::vector<element_type> upper_covers_within(const element_type& x, const element_type& hi) const {
    std::vector<element_type> out;
    for (element_type& y : upper_covers(x))
      if (leq(y, hi)) out.push_back(std::move(y));
    return out;
  }
  std::string name() const { return "plugin"; }

 private:
  struct Process {
    explicit Process(const std::string& command) {
      int to_child[2], from_child[2];
      if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw PluginError("cannot create plugin pipes");
      pid = fork();
      if (pid < 0) throw PluginError("cannot fork plugin process");
      if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
      }
      close(to_child[0]);
      close(from_child[1]);
      out = fdopen(to_child[1], "w");
      in = fdopen(from_child[0], "r");
      if (!out || !in) throw PluginError("cannot wrap plugin pipes");
    }
    ~Process() {
      if (out) fclose(out);
      if (in) fclose(in);
      if (pid > 0) waitpid(pid, nullptr, 0);
    }
    nlohmann::json round_trip(const std::string& line) {
      fputs(line.c_str(), out);
      fputc('\n', out);
      fflush(out);
      char* buf = nullptr;
      size_t cap = 0;
      ssize_t len = getline(&buf, &cap, in);
      if (len < 0) {
        free(buf);
        throw PluginError("plugin closed its output stream");
      }
      std::string resp(buf, static_cast<std::size_t>(len));
      free(buf);
      return nlohmann::json::parse(resp);
    }
    pid_t pid = -1;
    FILE* out = nullptr;
    FILE* in = nullptr;
  };

  static std::string key(const std::string& op, const nlohmann::json& args) {
    return op + "\x1f" + args.dump();
  }

  nlohmann::json query(const std::string& op, nlohmann::json args) const {
    std::string k = key(op, args);
    auto hit = cache_->find(k);
    if (hit != cache_->end()) return hit->second;
    nlohmann::json result;
    if (table_) {
      auto it = table_->find(k);
      if (it == table_->end())
        throw PluginError("plugin table has no entry for " + op + " " + args.dump());
      result = it->second;
    } else if (proc_) {
      nlohmann::json req{{"op", op}, {"args", args}};
      nlohmann::json resp = proc_->round_trip(req.dump());
      if (!resp.contains("result")) throw PluginError("plugin response lacks \"result\"");
      result = resp.at("result");
    } else {
      throw PluginError("plugin lattice has no transport");
    }
    (*cache_)[k] = result;
    return result;
  }

  std::vector<element_type> covers(const std::string& op, const element_type& x) const {
    nlohmann::json r = query(op, nlohmann::json::array({x}));
    if (!r.is_array()) throw PluginError("plugin " + op + " result must be an array");
    std::vector<element_type> out(r.begin(), r.end());
    std::sort(out.begin(), out.end(),
              [](const element_type& a, const element_type& b) { return a.dump() < b.dump(); });
    return out;
  }

  std::shared_ptr<Process> proc_;
  std::shared_ptr<std::map<std::string, nlohmann::json>> table_;
  std::shared_ptr<std::map<std::string, nlohmann::json>> cache_ =
      std::make_shared<std::map<std::string, nlohmann::json>>();
};

// Opaque JSON elements order deterministically by their serialized form.
template <>
inline bool elem_less<nlohmann::json>(const nlohmann::json& a, const nlohmann::json& b) {
  return a.dump() < b.dump();
}

}  // namespace latrep
