#include "fg/traintrack.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace fg {

int Track::branch_index(const std::string& name) const {
  auto it = branch_idx_.find(name);
  return it == branch_idx_.end() ? -1 : it->second;
}

int Track::switch_index(const std::string& name) const {
  auto it = switch_idx_.find(name);
  return it == switch_idx_.end() ? -1 : it->second;
}

std::pair<int, Slot> Track::attachment(int branch, int end) const {
  return attach_[2 * branch + end];
}

const std::vector<Face>& Track::faces() const {
  if (!validated_) throw std::logic_error("track not validated");
  return faces_;
}

std::pair<int, int> Track::cusp_of_switch(int s) const {
  if (!validated_) throw std::logic_error("track not validated");
  return cusp_of_switch_[s];
}

void Track::index_names() {
  branch_idx_.clear();
  switch_idx_.clear();
  for (int i = 0; i < branch_count(); ++i) branch_idx_[branch_names_[i]] = i;
  for (int i = 0; i < switch_count(); ++i) switch_idx_[switches_[i].name] = i;
  attach_.assign(2 * branch_count(), {-1, Slot::out});
  for (int s = 0; s < switch_count(); ++s)
    for (int k = 0; k < 3; ++k) {
      EndRef e = switches_[s].slot[k];
      attach_[2 * e.branch + e.end] = {s, static_cast<Slot>(k)};
    }
}

Track Track::from_parts(std::string name, std::vector<std::string> branch_names,
                        std::vector<Switch> switches) {
  Track t;
  t.name_ = std::move(name);
  t.branch_names_ = std::move(branch_names);
  t.switches_ = std::move(switches);
  std::vector<int> uses(2 * t.branch_count(), 0);
  for (const auto& sw : t.switches_)
    for (int k = 0; k < 3; ++k) {
      const EndRef& e = sw.slot[k];
      if (e.branch < 0 || e.branch >= t.branch_count() || (e.end != 0 && e.end != 1))
        throw std::invalid_argument("switch slot references an unknown branch end");
      ++uses[2 * e.branch + e.end];
    }
  for (int i = 0; i < 2 * t.branch_count(); ++i) {
    if (uses[i] == 0)
      throw ValidationError("unattached end " + t.branch_names_[i / 2] + "." +
                            std::to_string(i % 2));
    if (uses[i] > 1)
      throw ValidationError("branch end " + t.branch_names_[i / 2] + "." +
                            std::to_string(i % 2) + " used in more than one slot");
  }
  t.index_names();
  return t;
}

namespace {

EndRef parse_end(const std::string& tok, const std::map<std::string, int>& branches,
                 int line) {
  auto dot = tok.rfind('.');
  if (dot == std::string::npos) throw ParseError(line, "expected <branch>.<0|1>: " + tok);
  std::string bname = tok.substr(0, dot), e = tok.substr(dot + 1);
  auto it = branches.find(bname);
  if (it == branches.end()) throw ParseError(line, "unknown branch " + bname);
  if (e != "0" && e != "1") throw ParseError(line, "branch end must be 0 or 1: " + tok);
  return {it->second, e == "1" ? 1 : 0};
}

}  // namespace

Track parse_track(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::string name;
  std::vector<std::string> branch_names;
  std::map<std::string, int> branch_idx;
  std::vector<Switch> switches;
  std::map<std::string, int> switch_idx;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!have_header) {
      if (kw != "traintrack") throw ParseError(lineno, "expected 'traintrack <name>'");
      if (!(ls >> name)) throw ParseError(lineno, "missing track name");
      have_header = true;
      continue;
    }
    if (kw == "branch") {
      std::string b;
      if (!(ls >> b)) throw ParseError(lineno, "missing branch name");
      if (branch_idx.count(b)) throw ParseError(lineno, "duplicate branch " + b);
      branch_idx[b] = static_cast<int>(branch_names.size());
      branch_names.push_back(b);
    } else if (kw == "switch") {
      std::string s;
      if (!(ls >> s)) throw ParseError(lineno, "missing switch name");
      if (switch_idx.count(s)) throw ParseError(lineno, "duplicate switch " + s);
      Switch sw;
      sw.name = s;
      bool got[3] = {false, false, false};
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected slot=end: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        int slot;
        if (key == "out") slot = 0;
        else if (key == "left") slot = 1;
        else if (key == "right") slot = 2;
        else throw ParseError(lineno, "unknown slot " + key);
        if (got[slot]) throw ParseError(lineno, "duplicate slot " + key);
        sw.slot[slot] = parse_end(val, branch_idx, lineno);
        got[slot] = true;
      }
      if (!got[0] || !got[1] || !got[2])
        throw ParseError(lineno, "switch " + s + " needs out, left and right");
      switch_idx[s] = static_cast<int>(switches.size());
      switches.push_back(sw);
    } else {
      throw ParseError(lineno, "unknown keyword " + kw);
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'traintrack' header");
  return Track::from_parts(name, std::move(branch_names), std::move(switches));
}

Track parse_track_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_track(ss.str());
}

std::string to_text(const Track& track) {
  std::ostringstream os;
  os << "traintrack " << track.name() << "\n";
  for (int b = 0; b < track.branch_count(); ++b)
    os << "branch " << track.branch_name(b) << "\n";
  const char* slot_names[3] = {"out", "left", "right"};
  for (int s = 0; s < track.switch_count(); ++s) {
    const Switch& sw = track.switch_at(s);
    os << "switch " << sw.name;
    for (int k = 0; k < 3; ++k)
      os << " " << slot_names[k] << "=" << track.branch_name(sw.slot[k].branch) << "."
         << sw.slot[k].end;
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(Track& track) {
  int V = track.switch_count(), E = track.branch_count();
  if (2 * E != 3 * V)
    throw ValidationError("trivalence violated: 2E != 3V");

  // Connectedness over switches through branches.
  {
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int b = 0; b < E; ++b) {
      int s0 = track.attachment(b, 0).first, s1 = track.attachment(b, 1).first;
      parent[find(s0)] = find(s1);
    }
    for (int s = 0; s < V; ++s)
      if (find(s) != find(0)) throw ValidationError("track is disconnected");
  }

  // Boundary walk: from an arrival end h, pass the sector to the
  // counterclockwise-next slot (a cusp when leaving the left slot) and run
  // along that branch to its other end.
  auto next_end = [&](int h) {
    auto [s, slot] = track.attachment(h / 2, h % 2);
    Slot nslot = static_cast<Slot>((static_cast<int>(slot) + 1) % 3);
    EndRef e2 = track.switch_at(s).slot[static_cast<int>(nslot)];
    return 2 * e2.branch + (e2.end ^ 1);
  };

  std::vector<Face> faces;
  std::vector<char> seen(2 * E, 0);
  for (int h0 = 0; h0 < 2 * E; ++h0) {
    if (seen[h0]) continue;
    Face face;
    int h = h0;
    while (!seen[h]) {
      seen[h] = 1;
      face.ends.push_back(h);
      auto [s, slot] = track.attachment(h / 2, h % 2);
      if (slot == Slot::left) face.cusp_switches.push_back(s);
      h = next_end(h);
    }
    faces.push_back(std::move(face));
  }

  std::vector<std::pair<int, int>> cusp_of_switch(V, {-1, -1});
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    Face& face = faces[f];
    if (face.cusp_switches.size() != 3) {
      std::string sws;
      for (int s : face.cusp_switches) sws += " " + track.switch_at(s).name;
      throw ValidationError("face with " + std::to_string(face.cusp_switches.size()) +
                            " cusps (switches:" + sws + ")");
    }
    for (int k = 0; k < 3; ++k) {
      int s = face.cusp_switches[k];
      if (cusp_of_switch[s].first != -1)
        throw ValidationError("switch " + track.switch_at(s).name + " has two cusps");
      cusp_of_switch[s] = {f, k};
    }
    face.base = 0;
    for (int k = 1; k < 3; ++k)
      if (track.switch_at(face.cusp_switches[k]).name <
          track.switch_at(face.cusp_switches[face.base]).name)
        face.base = k;
  }
  for (int s = 0; s < V; ++s)
    if (cusp_of_switch[s].first == -1)
      throw ValidationError("switch " + track.switch_at(s).name + " has no cusp");

  int F = static_cast<int>(faces.size());
  int chi = V - E + F;
  if (2 * chi != -F)
    throw ValidationError("chi = V - E + F = " + std::to_string(chi) +
                          " does not equal -F/2");
  if (chi >= 0 || chi % 2 != 0) throw ValidationError("chi must be negative and even");

  track.faces_ = std::move(faces);
  track.cusp_of_switch_ = std::move(cusp_of_switch);
  track.validated_ = true;
  return ValidationReport{V, E, F, chi, (2 - chi) / 2};
}

// ---- Coordinates -------------------------------------------------------

namespace {

int theta_size(int n) { return (n - 1) * (n - 2) / 2; }

// Lexicographic position of (a, b, n-a-b) among the triples of positive
// integers summing to n.
int theta_index(int n, int a, int b) {
  int idx = 0;
  for (int ap = 1; ap < a; ++ap) idx += n - ap - 1;
  return idx + (b - 1);
}

void check_level(int n, int a) {
  if (a < 1 || a > n - 1) throw std::invalid_argument("dot level out of range");
}

}  // namespace

int dot_count(const Track& track, int n) {
  return track.branch_count() * (n - 1) +
         static_cast<int>(track.faces().size()) * theta_size(n);
}

std::vector<Dot> dots(const Track& track, int n) {
  std::vector<Dot> out;
  out.reserve(dot_count(track, n));
  for (int b = 0; b < track.branch_count(); ++b)
    for (int a = 1; a <= n - 1; ++a) {
      Dot d;
      d.kind = Dot::Kind::sigma;
      d.branch = b;
      d.a = a;
      out.push_back(d);
    }
  for (int f = 0; f < static_cast<int>(track.faces().size()); ++f)
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b) {
        Dot d;
        d.kind = Dot::Kind::tau;
        d.face = f;
        d.ta = a;
        d.tb = b;
        d.tc = n - a - b;
        out.push_back(d);
      }
  return out;
}

int dot_index(const Track& track, int n, const Dot& dot) {
  if (dot.kind == Dot::Kind::sigma) return dot.branch * (n - 1) + (dot.a - 1);
  return track.branch_count() * (n - 1) + dot.face * theta_size(n) +
         theta_index(n, dot.ta, dot.tb);
}

std::string describe_dot(const Track& track, const Dot& dot) {
  if (dot.kind == Dot::Kind::sigma)
    return "sigma " + track.branch_name(dot.branch) + " " + std::to_string(dot.a);
  const Face& face = track.faces()[dot.face];
  return "tau U(" + track.switch_at(face.cusp_switches[face.base]).name + ") " +
         std::to_string(dot.ta) + " " + std::to_string(dot.tb) + " " +
         std::to_string(dot.tc);
}

Dot sigma_dot(const Track& track, int n, int branch, Orient orient, int a) {
  check_level(n, a);
  (void)track;
  Dot d;
  d.kind = Dot::Kind::sigma;
  d.branch = branch;
  d.a = orient == Orient::forward ? a : n - a;
  return d;
}

Orient orient_toward(const Track& track, int branch, int s, Slot slot) {
  for (int e = 0; e < 2; ++e) {
    auto [sw, sl] = track.attachment(branch, e);
    if (sw == s && sl == slot) return e == 1 ? Orient::forward : Orient::reversed;
  }
  throw std::invalid_argument("branch not attached at the given slot");
}

Dot tau_dot(const Track& track, int n, int face, int corner_switch, int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1 || a + b + c != n)
    throw std::invalid_argument("triple must be positive and sum to n");
  const Face& fc = track.faces()[face];
  int pos = -1;
  for (int k = 0; k < 3; ++k)
    if (fc.cusp_switches[k] == corner_switch) pos = k;
  if (pos < 0) throw std::invalid_argument("corner is not a cusp of the face");
  int k = ((pos - fc.base) % 3 + 3) % 3;
  for (int i = 0; i < k; ++i) {
    int t = c;
    c = b;
    b = a;
    a = t;
  }
  Dot d;
  d.kind = Dot::Kind::tau;
  d.face = face;
  d.ta = a;
  d.tb = b;
  d.tc = c;
  return d;
}

ZMat switch_relation_matrix(const Track& track, int n) {
  int V = track.switch_count();
  ZMat rel(V * (n - 1), dot_count(track, n));
  for (int s = 0; s < V; ++s) {
    const Switch& sw = track.switch_at(s);
    for (int a = 1; a <= n - 1; ++a) {
      int row = s * (n - 1) + (a - 1);
      auto add = [&](const Dot& d, int coeff) {
        rel(row, dot_index(track, n, d)) += coeff;
      };
      // out is oriented away from the switch, left/right toward it.
      EndRef out = sw.slot[0];
      Orient away = out.end == 0 ? Orient::forward : Orient::reversed;
      add(sigma_dot(track, n, out.branch, away, a), 1);
      for (int k = 1; k <= 2; ++k) {
        EndRef in = sw.slot[k];
        Orient toward = in.end == 1 ? Orient::forward : Orient::reversed;
        add(sigma_dot(track, n, in.branch, toward, a), -1);
      }
      auto [face, pos] = track.cusp_of_switch(s);
      (void)pos;
      for (int bp = 1; a + bp <= n - 1; ++bp)
        add(tau_dot(track, n, face, s, a, bp, n - a - bp), 1);
    }
  }
  return rel;
}

}  // namespace fg
