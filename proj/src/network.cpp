// Copyright 2026 The proxbp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proxbp/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "proxbp/errors.hpp"
#include "text_io.hpp"

namespace proxbp {

Network::Network(int node_count, std::vector<Link> links)
    : node_count_(node_count), links_(std::move(links)) {
  if (node_count_ <= 0) throw ValidationError("node count must be positive");
  incoming_.assign(node_count_, {});
  outgoing_.assign(node_count_, {});
  for (int l = 0; l < link_count(); ++l) {
    const Link& lk = links_[l];
    if (lk.tail < 0 || lk.tail >= node_count_ || lk.head < 0 ||
        lk.head >= node_count_) {
      throw ValidationError("link " + std::to_string(l) +
                            " references a node outside the network");
    }
    if (lk.tail == lk.head) {
      throw ValidationError("link " + std::to_string(l) + " is a self-loop");
    }
    if (!(lk.capacity > 0.0) || !std::isfinite(lk.capacity)) {
      throw ValidationError("link " + std::to_string(l) +
                            " has nonpositive capacity");
    }
    outgoing_[lk.tail].push_back(l);
    incoming_[lk.head].push_back(l);
  }
}

int Network::degree(int n) const {
  return static_cast<int>(incoming_[n].size() + outgoing_[n].size());
}

double Network::out_capacity(int n) const {
  double sum = 0.0;
  for (int l : outgoing_[n]) sum += links_[l].capacity;
  return sum;
}

Utility::Utility(UtilityKind kind, double weight)
    : kind_(kind), weight_(weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ValidationError("utility weight must be positive");
  }
}

Utility Utility::weighted_log(double weight) {
  return Utility(UtilityKind::kWeightedLog, weight);
}

Utility Utility::weighted_log1p(double weight) {
  return Utility(UtilityKind::kWeightedLog1p, weight);
}

bool Utility::in_domain(double x) const {
  return open_domain() ? x > 0.0 : x >= 0.0;
}

double Utility::value(double x) const {
  if (!in_domain(x)) {
    throw DomainError("utility evaluated outside its domain at x = " +
                      std::to_string(x));
  }
  return kind_ == UtilityKind::kWeightedLog ? weight_ * std::log(x)
                                             : weight_ * std::log1p(x);
}

double Utility::derivative(double x) const {
  if (!in_domain(x)) {
    throw DomainError("utility derivative outside its domain at x = " +
                      std::to_string(x));
  }
  return kind_ == UtilityKind::kWeightedLog ? weight_ / x
                                             : weight_ / (1.0 + x);
}

std::string_view utility_kind_name(UtilityKind kind) {
  return kind == UtilityKind::kWeightedLog ? "wlog" : "wlog1p";
}

Scenario::Scenario(Network network, std::vector<Session> sessions,
                   std::vector<std::vector<bool>> allowed)
    : network_(std::move(network)),
      sessions_(std::move(sessions)),
      allowed_(std::move(allowed)) {
  const int n_nodes = network_.node_count();
  std::set<int> ids;
  for (const Session& s : sessions_) {
    if (s.src < 0 || s.src >= n_nodes || s.dst < 0 || s.dst >= n_nodes) {
      throw ValidationError("session " + std::to_string(s.id) +
                            " references a node outside the network");
    }
    if (s.src == s.dst) {
      throw ValidationError("session " + std::to_string(s.id) +
                            " has src == dst");
    }
    if (!ids.insert(s.id).second) {
      throw ValidationError("duplicate session id " + std::to_string(s.id));
    }
  }
  const auto n_links = static_cast<size_t>(network_.link_count());
  if (allowed_.empty()) {
    allowed_.assign(n_links, std::vector<bool>(sessions_.size(), true));
  }
  if (allowed_.size() != n_links) {
    throw ValidationError("allowed-set table does not match the link count");
  }
  for (const auto& row : allowed_) {
    if (row.size() != sessions_.size()) {
      throw ValidationError(
          "allowed-set table does not match the session count");
    }
  }
}

std::vector<int> Scenario::allowed_sessions(int l) const {
  std::vector<int> out;
  for (int f = 0; f < session_count(); ++f) {
    if (allowed_[l][f]) out.push_back(f);
  }
  return out;
}

bool Scenario::allows_all(int l) const {
  return std::all_of(allowed_[l].begin(), allowed_[l].end(),
                     [](bool b) { return b; });
}

int Scenario::session_index(int id) const {
  for (int f = 0; f < session_count(); ++f) {
    if (sessions_[f].id == id) return f;
  }
  return -1;
}

DecisionVector DecisionVector::zeros(const Scenario& scenario) {
  DecisionVector y;
  y.session_count = scenario.session_count();
  y.x.assign(scenario.session_count(), 0.0);
  y.mu.assign(static_cast<size_t>(scenario.link_count()) *
                  scenario.session_count(),
              0.0);
  return y;
}

NodeField NodeField::zeros(const Scenario& scenario) {
  NodeField field;
  field.node_count = scenario.node_count();
  field.values.assign(static_cast<size_t>(scenario.session_count()) *
                          scenario.node_count(),
                      0.0);
  return field;
}

double set_violation(const Scenario& scenario, const DecisionVector& y) {
  const Network& net = scenario.network();
  double worst = 0.0;
  for (int f = 0; f < scenario.session_count(); ++f) {
    const Utility& u = scenario.session(f).utility;
    if (!u.in_domain(y.x[f])) {
      worst = std::max(worst, u.open_domain() ? std::abs(y.x[f]) + 1.0
                                              : -y.x[f]);
    }
  }
  for (int l = 0; l < net.link_count(); ++l) {
    double load = 0.0;
    for (int f = 0; f < scenario.session_count(); ++f) {
      const double r = y.rate(l, f);
      if (!scenario.allowed(l, f)) worst = std::max(worst, std::abs(r));
      worst = std::max(worst, -r);
      load += r;
    }
    worst = std::max(worst, load - net.link(l).capacity);
  }
  return worst;
}

double flow_residual(const Scenario& scenario, int f, int n,
                     const DecisionVector& y) {
  const Session& s = scenario.session(f);
  if (n == s.dst) {
    throw ContractError("flow residual is undefined at the destination");
  }
  const Network& net = scenario.network();
  double g = n == s.src ? y.x[f] : 0.0;
  for (int l : net.incoming(n)) g += y.rate(l, f);
  for (int l : net.outgoing(n)) g -= y.rate(l, f);
  return g;
}

NodeField flow_residuals(const Scenario& scenario, const DecisionVector& y) {
  NodeField g = NodeField::zeros(scenario);
  for (int f = 0; f < scenario.session_count(); ++f) {
    const int dst = scenario.session(f).dst;
    for (int n = 0; n < scenario.node_count(); ++n) {
      if (n != dst) g.at(f, n) = flow_residual(scenario, f, n, y);
    }
  }
  return g;
}

std::vector<double> local_vector(const Scenario& scenario, int f, int n,
                                 const DecisionVector& y) {
  const Network& net = scenario.network();
  std::vector<double> v;
  v.reserve(net.degree(n) + 1);
  if (n == scenario.session(f).src) v.push_back(y.x[f]);
  for (int l : net.incoming(n)) v.push_back(y.rate(l, f));
  for (int l : net.outgoing(n)) v.push_back(y.rate(l, f));
  return v;
}

double total_utility(const Scenario& scenario, std::span<const double> x) {
  double sum = 0.0;
  for (int f = 0; f < scenario.session_count(); ++f) {
    sum += scenario.session(f).utility.value(x[f]);
  }
  return sum;
}

namespace {

using detail::format_real;
using detail::parse_int;
using detail::parse_real;
using detail::tokenize;

constexpr int kNoSession = std::numeric_limits<int>::min();

}  // namespace

Scenario parse_scenario(std::string_view text) {
  int node_count = -1;
  std::vector<Link> links;
  std::vector<Session> sessions;
  std::vector<std::pair<int, int>> allows;  // (link, session id)
  std::vector<int> allow_lines;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view kw = tok[0];
    if (kw == "nodes") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: nodes <N>");
      if (node_count >= 0) throw ParseError(line_no, "duplicate nodes line");
      node_count = parse_int(tok[1], line_no);
    } else if (kw == "link") {
      if (tok.size() != 4) {
        throw ParseError(line_no, "usage: link <tail> <head> <capacity>");
      }
      links.push_back({parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                       parse_real(tok[3], line_no)});
    } else if (kw == "session") {
      if (tok.size() != 6) {
        throw ParseError(line_no,
                         "usage: session <id> <src> <dst> <kind> <weight>");
      }
      const double w = parse_real(tok[5], line_no);
      Session s;
      s.id = parse_int(tok[1], line_no);
      s.src = parse_int(tok[2], line_no);
      s.dst = parse_int(tok[3], line_no);
      if (tok[4] == "wlog") {
        s.utility = Utility::weighted_log(w);
      } else if (tok[4] == "wlog1p") {
        s.utility = Utility::weighted_log1p(w);
      } else {
        throw ParseError(line_no, "unknown utility kind '" +
                                      std::string(tok[4]) + "'");
      }
      sessions.push_back(s);
    } else if (kw == "allow") {
      if (tok.size() != 3) {
        throw ParseError(line_no, "usage: allow <link_index> <session_id>");
      }
      // "none" marks S_l as empty.
      allows.emplace_back(parse_int(tok[1], line_no),
                          tok[2] == "none" ? kNoSession
                                           : parse_int(tok[2], line_no));
      allow_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (node_count < 0) throw ParseError(0, "missing nodes line");

  Network net(node_count, std::move(links));
  std::vector<std::vector<bool>> allowed(
      net.link_count(), std::vector<bool>(sessions.size(), true));
  std::vector<bool> restricted(net.link_count(), false);
  for (size_t i = 0; i < allows.size(); ++i) {
    const auto [l, id] = allows[i];
    if (l < 0 || l >= net.link_count()) {
      throw ValidationError("allow on line " + std::to_string(allow_lines[i]) +
                            " references unknown link " + std::to_string(l));
    }
    if (!restricted[l]) {
      restricted[l] = true;
      std::fill(allowed[l].begin(), allowed[l].end(), false);
    }
    if (id == kNoSession) continue;
    int f = -1;
    for (size_t k = 0; k < sessions.size(); ++k) {
      if (sessions[k].id == id) f = static_cast<int>(k);
    }
    if (f < 0) {
      throw ValidationError("allow on line " + std::to_string(allow_lines[i]) +
                            " references unknown session " +
                            std::to_string(id));
    }
    allowed[l][f] = true;
  }
  return Scenario(std::move(net), std::move(sessions), std::move(allowed));
}

std::string serialize_scenario(const Scenario& scenario) {
  std::ostringstream out;
  const Network& net = scenario.network();
  out << "nodes " << net.node_count() << "\n";
  for (const Link& l : net.links()) {
    out << "link " << l.tail << " " << l.head << " " << format_real(l.capacity)
        << "\n";
  }
  for (const Session& s : scenario.sessions()) {
    out << "session " << s.id << " " << s.src << " " << s.dst << " "
        << utility_kind_name(s.utility.kind()) << " "
        << format_real(s.utility.weight()) << "\n";
  }
  for (int l = 0; l < net.link_count(); ++l) {
    if (scenario.allows_all(l)) continue;
    const auto sessions = scenario.allowed_sessions(l);
    if (sessions.empty()) out << "allow " << l << " none\n";
    for (int f : sessions) {
      out << "allow " << l << " " << scenario.session(f).id << "\n";
    }
  }
  return out.str();
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(detail::read_file(path, "scenario"));
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  detail::write_file(path, serialize_scenario(scenario), "scenario");
}

MultipathExpansion multipath_expand(
    const Scenario& base,
    const std::vector<std::vector<std::vector<int>>>& paths) {
  const Network& net = base.network();
  if (paths.size() != static_cast<size_t>(base.session_count())) {
    throw ValidationError("need one path list per session");
  }
  MultipathExpansion out;
  std::vector<Session> subs;
  std::vector<std::vector<int>> used_links;
  for (int f = 0; f < base.session_count(); ++f) {
    const Session& s = base.session(f);
    for (size_t j = 0; j < paths[f].size(); ++j) {
      const auto& path = paths[f][j];
      if (path.empty()) {
        throw ValidationError("empty path for session " + std::to_string(s.id));
      }
      int at = s.src;
      for (int l : path) {
        if (l < 0 || l >= net.link_count() || net.link(l).tail != at) {
          throw ValidationError("path " + std::to_string(j) + " of session " +
                                std::to_string(s.id) + " is disconnected");
        }
        at = net.link(l).head;
      }
      if (at != s.dst) {
        throw ValidationError("path " + std::to_string(j) + " of session " +
                              std::to_string(s.id) +
                              " does not end at the destination");
      }
      Session sub = s;
      sub.id = static_cast<int>(subs.size());
      subs.push_back(sub);
      used_links.push_back(path);
      out.parent.push_back(f);
      out.path_index.push_back(static_cast<int>(j));
    }
  }
  std::vector<std::vector<bool>> allowed(
      net.link_count(), std::vector<bool>(subs.size(), false));
  for (size_t k = 0; k < subs.size(); ++k) {
    for (int l : used_links[k]) allowed[l][k] = true;
  }
  out.scenario = Scenario(net, std::move(subs), std::move(allowed));
  return out;
}

}  // namespace proxbp
