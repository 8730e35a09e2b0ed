#pragma once

// Diagrammatical weights: sequences of n "up" and m "down" labels on the
// vertices 0..m+n-1.  They index the simple, cell and projective modules of
// the arc algebra, and realize the minimal coset representatives with the
// order reversed relative to length (the zero weight is the maximum).

#include <cstdint>
#include <string>
#include <vector>

namespace arcext {

enum class Label : uint8_t { Down = 0, Up = 1 };  // Down = 'v', Up = '^'

struct Weight {
  std::vector<Label> labels;

  int size() const { return static_cast<int>(labels.size()); }
  Label at(int i) const { return labels[static_cast<size_t>(i)]; }
  bool up(int i) const { return at(i) == Label::Up; }
  bool down(int i) const { return at(i) == Label::Down; }
  int num_up() const;
  int num_down() const;

  bool operator==(const Weight& o) const { return labels == o.labels; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return labels < o.labels; }

  std::string str() const;  // e.g. "^^vvv"
  static Weight parse(const std::string& s);
};

// All C(m+n, n) weights with m downs and n ups, lexicographic (Down < Up).
std::vector<Weight> enumerate_weights(int m, int n);

// The zero weight: all ups at positions 0..n-1.
Weight zero_weight(int m, int n);

// l(x) for the coset representative x with weight la = la0.x: the number of
// (down, up) inversions, i.e. sum over up-vertices of downs strictly left.
int weight_length(const Weight& la);

// la <= mu iff every up-count prefix of la is dominated by that of mu.
bool bruhat_leq(const Weight& la, const Weight& mu);

// l_i(la, mu): prefix down-count of la minus prefix down-count of mu, up to
// and including vertex i.
int relative_length(int i, const Weight& la, const Weight& mu);

}  // namespace arcext
