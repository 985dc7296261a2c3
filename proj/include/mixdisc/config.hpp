#pragma once

// Flat "key = value" configuration files; '#' starts a comment.

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "mixdisc/errors.hpp"

namespace mixdisc {

/// Configuration problem; key() names the offending key (empty for syntax errors).
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what) : Error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class Config {
 public:
  static Config parse(std::istream& is) {
    Config cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string t = trim(line);
      if (t.empty()) continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ConfigError("", "config line " + std::to_string(line_no) + ": expected key = value");
      const std::string key = trim(t.substr(0, eq));
      const std::string value = trim(t.substr(eq + 1));
      if (key.empty()) throw ConfigError("", "config line " + std::to_string(line_no) + ": empty key");
      if (cfg.values_.count(key)) throw ConfigError(key, "config key '" + key + "' given twice");
      cfg.values_[key] = value;
    }
    return cfg;
  }

  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    return parse(in);
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(key, "missing required config key '" + key + "'");
    used_.insert(key);
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const { return has(key) ? get(key) : fallback; }

  template <class T>
  T get_number(const std::string& key) const {
    const std::string s = get(key);
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ConfigError(key, "config key '" + key + "': cannot parse '" + s + "' as a number");
    }
    return v;
  }
  template <class T>
  T get_number(const std::string& key, T fallback) const {
    return has(key) ? get_number<T>(key) : fallback;
  }

  /// Comma list "a,b,c" or inclusive range "lo:hi".
  std::vector<long long> get_int_list(const std::string& key) const {
    const std::string s = get(key);
    std::vector<long long> out;
    auto parse_one = [&](const std::string& tok) {
      const std::string t = trim(tok);
      long long v = 0;
      const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(key, "config key '" + key + "': bad integer '" + t + "'");
      }
      return v;
    };
    if (const auto colon = s.find(':'); colon != std::string::npos) {
      const long long lo = parse_one(s.substr(0, colon));
      const long long hi = parse_one(s.substr(colon + 1));
      if (hi < lo) throw ConfigError(key, "config key '" + key + "': empty range");
      for (long long v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_one(tok));
    if (out.empty()) throw ConfigError(key, "config key '" + key + "': empty list");
    return out;
  }

  /// Keys present in the file that no getter has read.
  std::vector<std::string> unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) out.push_back(k);
    }
    return out;
  }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::map<std::string, std::string> values_;
  mutable std::set<std::string> used_;
};

}  // namespace mixdisc
