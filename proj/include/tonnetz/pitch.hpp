#pragma once

// Pitch classes mod 12 (0 = A), intervals, note-name parsing with enharmonic
// equivalence, pitch-class multisets, and chord-quality classification.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tonnetz {

inline constexpr int kPitchClasses = 12;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A residue class mod 12 identifying a note up to octave; 0 is A.
struct PitchClass {
  int value = 0;  // invariant: 0..11

  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int v) : value(((v % 12) + 12) % 12) {}

  friend constexpr bool operator==(PitchClass, PitchClass) = default;
  friend constexpr auto operator<=>(PitchClass a, PitchClass b) {
    return a.value <=> b.value;
  }
};

/// A transposition step in semitones, reduced mod 12. Composition is the
/// group law of Z/12Z; 0 is the identity.
struct Interval {
  int semitones = 0;  // invariant: 0..11

  constexpr Interval() = default;
  constexpr explicit Interval(int s) : semitones(((s % 12) + 12) % 12) {}

  friend constexpr bool operator==(Interval, Interval) = default;
  friend constexpr auto operator<=>(Interval a, Interval b) {
    return a.semitones <=> b.semitones;
  }
  friend constexpr Interval operator+(Interval a, Interval b) {
    return Interval(a.semitones + b.semitones);
  }
  constexpr Interval inverse() const { return Interval(-semitones); }
};

constexpr PitchClass operator+(PitchClass p, Interval k) {
  return PitchClass(p.value + k.semitones);
}
constexpr PitchClass operator-(PitchClass p, Interval k) {
  return PitchClass(p.value - k.semitones);
}
/// Directed interval from a to b.
constexpr Interval operator-(PitchClass b, PitchClass a) {
  return Interval(b.value - a.value);
}

namespace detail {
// Letter bases anchored at A = 0.
constexpr int letter_base(char c) {
  switch (c) {
    case 'A': return 0;
    case 'B': return 2;
    case 'C': return 3;
    case 'D': return 5;
    case 'E': return 7;
    case 'F': return 8;
    case 'G': return 10;
    default: return -1;
  }
}
}  // namespace detail

/// Parse a note name: letter A-G followed by accidentals. Sharps may be
/// written '#', 's' or U+266F; flats 'b', 'f' or U+266D; mixed freely
/// ("Ebb", "E♭♭" and "Ebf" all name the same class). Throws ParseError on
/// anything else, quoting the offending token.
inline PitchClass parse_note(std::string_view name) {
  std::string_view token = name;
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
    token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
    token.remove_suffix(1);
  if (token.empty())
    throw ParseError("empty note name in \"" + std::string(name) + "\"");

  const int base = detail::letter_base(token[0]);
  if (base < 0)
    throw ParseError("bad note letter in \"" + std::string(token) + "\"");

  int shift = 0;
  std::size_t i = 1;
  while (i < token.size()) {
    const unsigned char c = static_cast<unsigned char>(token[i]);
    if (c == '#' || c == 's') {
      ++shift;
      ++i;
    } else if (c == 'b' || c == 'f') {
      --shift;
      ++i;
    } else if (c == 0xE2) {
      // UTF-8 music accidentals: U+266D (flat) = E2 99 AD, U+266F (sharp) = E2 99 AF
      if (i + 2 >= token.size())
        throw ParseError("truncated accidental in \"" + std::string(token) + "\"");
      const unsigned char c1 = static_cast<unsigned char>(token[i + 1]);
      const unsigned char c2 = static_cast<unsigned char>(token[i + 2]);
      if (c1 == 0x99 && c2 == 0xAD)
        --shift;
      else if (c1 == 0x99 && c2 == 0xAF)
        ++shift;
      else
        throw ParseError("bad accidental in \"" + std::string(token) + "\"");
      i += 3;
    } else {
      throw ParseError("bad accidental '" + std::string(1, token[i]) + "' in \"" +
                       std::string(token) + "\"");
    }
  }
  return PitchClass(base + shift);
}

inline std::optional<PitchClass> try_parse_note(std::string_view name) {
  try {
    return parse_note(name);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

/// Canonical spelling, flats preferred. ASCII by default, Unicode accidentals
/// on request.
inline std::string print_note(PitchClass p, bool unicode = false) {
  static constexpr std::array<const char*, 12> kAscii = {
      "A", "Bb", "B", "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab"};
  static constexpr std::array<const char*, 12> kUnicode = {
      "A", "B♭", "B", "C", "D♭", "D", "E♭", "E", "F", "G♭", "G", "A♭"};
  return unicode ? kUnicode[p.value] : kAscii[p.value];
}

/// Finite multiset over the 12 pitch classes. Equality is
/// multiplicity-sensitive: {A,A} != {A}.
class PitchMultiset {
 public:
  PitchMultiset() { counts_.fill(0); }
  PitchMultiset(std::initializer_list<PitchClass> notes) : PitchMultiset() {
    for (PitchClass p : notes) add(p);
  }

  static PitchMultiset of_values(std::initializer_list<int> values) {
    PitchMultiset m;
    for (int v : values) m.add(PitchClass(v));
    return m;
  }

  void add(PitchClass p, int times = 1) { counts_[p.value] += times; }

  int count(PitchClass p) const { return counts_[p.value]; }
  bool contains(PitchClass p) const { return counts_[p.value] > 0; }

  /// Total size |C| counted with multiplicity.
  int order() const {
    int n = 0;
    for (int c : counts_) n += c;
    return n;
  }

  /// Underlying set [C], ascending.
  std::vector<PitchClass> support() const {
    std::vector<PitchClass> s;
    for (int v = 0; v < kPitchClasses; ++v)
      if (counts_[v] > 0) s.push_back(PitchClass(v));
    return s;
  }

  int support_size() const {
    int n = 0;
    for (int c : counts_) n += c > 0;
    return n;
  }

  /// All elements with multiplicity, ascending.
  std::vector<PitchClass> expand() const {
    std::vector<PitchClass> out;
    for (int v = 0; v < kPitchClasses; ++v)
      for (int i = 0; i < counts_[v]; ++i) out.push_back(PitchClass(v));
    return out;
  }

  PitchMultiset transposed(Interval k) const {
    PitchMultiset out;
    for (int v = 0; v < kPitchClasses; ++v)
      if (counts_[v] > 0) out.counts_[PitchClass(v + k.semitones).value] = counts_[v];
    return out;
  }

  friend bool operator==(const PitchMultiset&, const PitchMultiset&) = default;
  friend auto operator<=>(const PitchMultiset& a, const PitchMultiset& b) {
    return a.counts_ <=> b.counts_;
  }

  std::string str(bool unicode = false) const {
    std::string out = "{";
    bool first = true;
    for (PitchClass p : expand()) {
      if (!first) out += ",";
      out += print_note(p, unicode);
      first = false;
    }
    return out + "}";
  }

 private:
  std::array<int, kPitchClasses> counts_;
};

/// Pointwise transposition; multiplicities preserved.
inline PitchMultiset transpose(const PitchMultiset& m, Interval k) {
  return m.transposed(k);
}

/// Classification of a multiset's support into the chord vocabulary used
/// throughout: triads, the two symmetric chords, major ninths, whole-tone
/// triples and unisons.
struct ChordQuality {
  enum class Tag {
    Major,
    Minor,
    Diminished,
    Augmented,
    DiminishedSeventh,
    MajorNinth,
    WholeToneTriple,
    Unison,
    Other
  };

  Tag tag = Tag::Other;
  PitchClass root{};  // for Unison, the pitch itself; meaningless for Other

  friend bool operator==(const ChordQuality&, const ChordQuality&) = default;
  friend auto operator<=>(const ChordQuality& a, const ChordQuality& b) {
    if (a.tag != b.tag) return static_cast<int>(a.tag) <=> static_cast<int>(b.tag);
    return a.root <=> b.root;
  }

  bool has_root() const { return tag != Tag::Other; }

  /// The same quality transposed by k. Roots of the symmetric chords are
  /// re-canonicalized to the least residue.
  ChordQuality shifted(Interval k) const {
    ChordQuality q = *this;
    if (!has_root()) return q;
    q.root = root + k;
    if (tag == Tag::Augmented) {
      int r = q.root.value;
      r = std::min({r, (r + 4) % 12, (r + 8) % 12});
      q.root = PitchClass(r);
    } else if (tag == Tag::DiminishedSeventh) {
      int r = q.root.value;
      r = std::min({r, (r + 3) % 12, (r + 6) % 12, (r + 9) % 12});
      q.root = PitchClass(r);
    }
    return q;
  }

  std::string str(bool unicode = false) const {
    switch (tag) {
      case Tag::Major: return print_note(root, unicode) + " major";
      case Tag::Minor: return print_note(root, unicode) + " minor";
      case Tag::Diminished: return print_note(root, unicode) + " diminished";
      case Tag::Augmented: return print_note(root, unicode) + " augmented";
      case Tag::DiminishedSeventh: return print_note(root, unicode) + " dim7";
      case Tag::MajorNinth: return print_note(root, unicode) + " maj9";
      case Tag::WholeToneTriple: return print_note(root, unicode) + " whole-tone";
      case Tag::Unison: return print_note(root, unicode) + " unison";
      case Tag::Other: return "other";
    }
    return "other";
  }
};

namespace detail {

inline bool support_matches(const std::vector<PitchClass>& support, int root,
                            std::initializer_list<int> pattern) {
  if (support.size() != pattern.size()) return false;
  std::array<bool, 12> want{};
  for (int step : pattern) want[PitchClass(root + step).value] = true;
  for (PitchClass p : support)
    if (!want[p.value]) return false;
  return true;
}

/// Least root whose pattern reproduces the support, or -1.
inline int find_root(const std::vector<PitchClass>& support,
                     std::initializer_list<int> pattern) {
  for (int r = 0; r < kPitchClasses; ++r)
    if (support_matches(support, r, pattern)) return r;
  return -1;
}

}  // namespace detail

/// Classify a chord by its support (multiplicities are ignored; a constant
/// face {N,N,N} is a Unison). The patterns are tried in a fixed order and
/// are mutually exclusive on supports.
inline ChordQuality classify(const PitchMultiset& chord) {
  using Tag = ChordQuality::Tag;
  const std::vector<PitchClass> s = chord.support();
  struct Pattern {
    Tag tag;
    std::initializer_list<int> steps;
  };
  static const Pattern kPatterns[] = {
      {Tag::Major, {0, 4, 7}},
      {Tag::Minor, {0, 3, 7}},
      {Tag::Diminished, {0, 3, 6}},
      {Tag::Augmented, {0, 4, 8}},
      {Tag::DiminishedSeventh, {0, 3, 6, 9}},
      {Tag::MajorNinth, {0, 2, 4, 7, 11}},
      {Tag::WholeToneTriple, {0, 2, 4}},
  };
  for (const Pattern& p : kPatterns) {
    // find_root scans residues upward, so symmetric chords come out with the
    // least representative as root.
    const int r = detail::find_root(s, p.steps);
    if (r >= 0) return ChordQuality{p.tag, PitchClass(r)};
  }
  if (s.size() == 1) return ChordQuality{Tag::Unison, s[0]};
  return ChordQuality{Tag::Other, PitchClass(0)};
}

}  // namespace tonnetz
