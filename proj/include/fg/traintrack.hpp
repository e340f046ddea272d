#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fg/matrix.hpp"

namespace fg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class Slot { out = 0, left = 1, right = 2 };

struct EndRef {
  int branch = -1;
  int end = -1;  // 0 or 1
  bool operator==(const EndRef&) const = default;
};

struct Switch {
  std::string name;
  EndRef slot[3];  // indexed by Slot; cyclic order out -> left -> right is the
                   // counterclockwise order of the three branch ends around
                   // the switch in the oriented surface
};

// A complementary region: a boundary walk of the ribbon neighborhood.  Walks
// are traced with the region on the left, so cusps appear in counterclockwise
// order around the region.
struct Face {
  std::vector<int> ends;           // arrival branch-ends in walk order
  std::vector<int> cusp_switches;  // counterclockwise
  int base = 0;                    // position of the base corner in cusp_switches
};

struct ValidationReport {
  int vertices = 0, branches = 0, faces = 0, chi = 0, genus = 0;
};

class Track {
 public:
  const std::string& name() const { return name_; }
  int branch_count() const { return static_cast<int>(branch_names_.size()); }
  int switch_count() const { return static_cast<int>(switches_.size()); }
  const std::string& branch_name(int b) const { return branch_names_[b]; }
  const Switch& switch_at(int s) const { return switches_[s]; }
  int branch_index(const std::string& name) const;  // -1 if unknown
  int switch_index(const std::string& name) const;

  // (switch, slot) holding the given branch end; ends are 2*branch + e.
  std::pair<int, Slot> attachment(int branch, int end) const;

  bool validated() const { return validated_; }
  const std::vector<Face>& faces() const;
  // The unique face with a cusp at switch s, and the cusp's position in it.
  std::pair<int, int> cusp_of_switch(int s) const;

  static Track from_parts(std::string name, std::vector<std::string> branch_names,
                          std::vector<Switch> switches);

  friend Track parse_track(const std::string& text);
  friend ValidationReport validate(Track& track);

 private:
  void index_names();

  std::string name_;
  std::vector<std::string> branch_names_;
  std::vector<Switch> switches_;
  std::map<std::string, int> branch_idx_, switch_idx_;
  std::vector<std::pair<int, Slot>> attach_;  // by end id
  bool validated_ = false;
  std::vector<Face> faces_;
  std::vector<std::pair<int, int>> cusp_of_switch_;
};

Track parse_track(const std::string& text);
Track parse_track_file(const std::string& path);
std::string to_text(const Track& track);

// Face tracing plus the counting assertions: trivalence, three cusps per
// face, one cusp per switch, chi = V - E + F = -F/2 < 0, integer genus,
// connectedness.  Populates the face cache on success.
ValidationReport validate(Track& track);

// ---- Coordinates -------------------------------------------------------

struct Dot {
  enum class Kind { sigma, tau };
  Kind kind;
  int branch = -1, a = 0;               // sigma: level under the .0 -> .1 orientation
  int face = -1, ta = 0, tb = 0, tc = 0;  // tau: triple as read at the base corner
  bool operator==(const Dot&) const = default;
};

enum class Orient { forward, reversed };  // forward = .0 -> .1

// Deterministic ordering of all dots: branch dots by (branch, a), then face
// dots by (face, lexicographic (ta, tb)).
std::vector<Dot> dots(const Track& track, int n);
int dot_count(const Track& track, int n);
int dot_index(const Track& track, int n, const Dot& dot);
std::string describe_dot(const Track& track, const Dot& dot);

// Canonical dot of the a-th position along the given orientation; reversing
// the orientation sends level a to n - a.
Dot sigma_dot(const Track& track, int n, int branch, Orient orient, int a);

// Orientation of `branch` that points toward its end attached at (s, slot).
Orient orient_toward(const Track& track, int branch, int s, Slot slot);

// Canonical dot for the triple (a, b, c) read at the given cusp corner;
// moving k corners counterclockwise from the base rotates (a,b,c) -> (c,a,b)
// k times.
Dot tau_dot(const Track& track, int n, int face, int corner_switch, int a, int b, int c);

// V(n-1) x D integer matrix whose kernel is the constraint subspace: per
// switch s and level a, the row of
//   sigma_out(a) - sigma_left(a) - sigma_right(a) + sum_{b'+c'=n-a} tau^{a b' c'}(U_s at s).
ZMat switch_relation_matrix(const Track& track, int n);

}  // namespace fg
