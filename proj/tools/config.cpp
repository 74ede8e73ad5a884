// Copyright 2026 The specshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace specshare::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream os;
  os << name << ":" << line << ": " << what;
  throw config_error(os.str());
}

double parse_double(const std::string& token, const std::string& name, int line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(name, line, "expected a number, got '" + token + "'");
  }
  return value;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

experiments::ExperimentConfig parse_config(std::istream& in, const std::string& name) {
  experiments::ExperimentConfig config;
  const std::set<std::string> db_keys = {"p", "e0", "sigma2"};
  std::set<std::string> seen;
  std::set<std::string> required = {"p", "eta", "e0", "lambda_p", "lambda_s"};

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (const auto hash = text.find('#'); hash != std::string::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;

    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(name, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) fail(name, line, "empty key");
    if (value.empty()) fail(name, line, "empty value for key '" + key + "'");
    if (!seen.insert(key).second) fail(name, line, "duplicate key '" + key + "'");
    required.erase(key);

    auto tokens = split_ws(value);
    bool db = false;
    if (tokens.size() >= 2 && tokens.back() == "dB") {
      db = true;
      tokens.pop_back();
    } else if (tokens.size() == 1 && tokens[0].size() > 2 &&
               tokens[0].substr(tokens[0].size() - 2) == "dB") {
      db = true;
      tokens[0] = tokens[0].substr(0, tokens[0].size() - 2);
    }
    if (db && db_keys.count(key) == 0) {
      fail(name, line, "key '" + key + "' does not accept a dB value");
    }

    auto scalar = [&]() {
      if (tokens.size() != 1) fail(name, line, "key '" + key + "' expects one value");
      const double v = parse_double(tokens[0], name, line);
      return db ? db_to_linear(v) : v;
    };

    if (key == "p") config.params.p = scalar();
    else if (key == "sigma2") config.params.sigma2 = scalar();
    else if (key == "eta") config.params.eta = scalar();
    else if (key == "e0") config.params.e0 = scalar();
    else if (key == "lambda_p") config.params.lambda_p = scalar();
    else if (key == "lambda_s") config.params.lambda_s = scalar();
    else if (key == "antennas") config.params.antennas = static_cast<int>(scalar());
    else if (key == "d_pt_pr") config.topology.d_pt_pr = scalar();
    else if (key == "d_pt_st") config.topology.d_pt_st = scalar();
    else if (key == "d_st_pr") config.topology.d_st_pr = scalar();
    else if (key == "d_st_sr") config.topology.d_st_sr = scalar();
    else if (key == "d_pt_sr") config.topology.d_pt_sr = scalar();
    else if (key == "phi") config.topology.phi = scalar();
    else if (key == "loss_coeff") config.topology.loss_coeff = scalar();
    else if (key == "realizations") config.realizations = static_cast<int>(scalar());
    else if (key == "seed") config.base_seed = static_cast<std::uint64_t>(scalar());
    else if (key == "grid_step") config.grid_step = scalar();
    else if (key == "sweep") {
      if (tokens.size() < 2) {
        fail(name, line, "sweep expects a parameter name and at least one value");
      }
      config.sweep_parameter = tokens[0];
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        config.sweep_values.push_back(parse_double(tokens[i], name, line));
      }
    } else {
      fail(name, line, "unknown key '" + key + "'");
    }
  }

  if (!required.empty()) {
    fail(name, line, "missing required key '" + *required.begin() + "'");
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    fail(name, line, e.what());
  }
  return config;
}

experiments::ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path + ": cannot open configuration file");
  return parse_config(in, path);
}

channel::ChannelRealization parse_channel_file(std::istream& in, const std::string& name) {
  std::map<std::string, std::vector<std::complex<double>>> links;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (const auto hash = text.find('#'); hash != std::string::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    auto tokens = split_ws(text);
    const std::string key = tokens[0];
    if (key != "h_p" && key != "h_ps" && key != "h_s" && key != "g_p" && key != "g_s") {
      fail(name, line, "unknown link '" + key + "'");
    }
    if (links.count(key) != 0) fail(name, line, "duplicate link '" + key + "'");
    if (tokens.size() < 3 || (tokens.size() - 1) % 2 != 0) {
      fail(name, line, "link '" + key + "' expects re/im pairs");
    }
    std::vector<std::complex<double>> entries;
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
      entries.emplace_back(parse_double(tokens[i], name, line),
                           parse_double(tokens[i + 1], name, line));
    }
    const bool is_scalar = key == "h_p" || key == "h_ps";
    if (is_scalar && entries.size() != 1) {
      fail(name, line, "link '" + key + "' expects exactly one re/im pair");
    }
    if (!is_scalar && entries.size() < 2) {
      fail(name, line, "link '" + key + "' needs at least 2 antenna entries");
    }
    links[key] = std::move(entries);
  }
  for (const char* key : {"h_p", "h_ps", "h_s", "g_p", "g_s"}) {
    if (links.count(key) == 0) fail(name, line, std::string("missing link '") + key + "'");
  }
  const auto& h_s = links["h_s"];
  const auto& g_p = links["g_p"];
  const auto& g_s = links["g_s"];
  if (h_s.size() != g_p.size() || h_s.size() != g_s.size()) {
    fail(name, line, "h_s, g_p, g_s must have the same antenna count");
  }
  channel::ChannelRealization ch;
  ch.h_p = links["h_p"][0];
  ch.h_ps = links["h_ps"][0];
  const auto n = static_cast<Eigen::Index>(h_s.size());
  ch.h_s.resize(n);
  ch.g_p.resize(n);
  ch.g_s.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    ch.h_s(i) = h_s[static_cast<std::size_t>(i)];
    ch.g_p(i) = g_p[static_cast<std::size_t>(i)];
    ch.g_s(i) = g_s[static_cast<std::size_t>(i)];
  }
  return ch;
}

channel::ChannelRealization load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path + ": cannot open channel file");
  return parse_channel_file(in, path);
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace specshare::cli
