#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vinpos/permutation.hpp"

namespace vinpos {

/*
  The type of a dashed pattern of length k: k-1 bits, bit i set when a dash
  sits between pattern entries i and i+1. A clear bit forces the two matched
  text entries to be adjacent.
*/
class AdjacencyVector {
 public:
  AdjacencyVector() = default;
  explicit AdjacencyVector(std::vector<std::uint8_t> bits);
  AdjacencyVector(std::initializer_list<int> bits);

  static AdjacencyVector filled(std::size_t length, bool dash);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  /// 0-based: bit i sits between pattern entries i+1 and i+2 (1-based).
  bool dash(std::size_t i) const noexcept { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// "1,0,1,0"; empty string for the empty vector.
  std::string str() const;
  static AdjacencyVector parse(std::string_view text);

  friend bool operator==(const AdjacencyVector&, const AdjacencyVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// A permutation with dashes between some adjacent entries, e.g. 5-13-42.
class DashedPermutation {
 public:
  DashedPermutation(Permutation base, AdjacencyVector dashes);

  /// Compact digits with dashes, e.g. "5-13-42" (n <= 9).
  static DashedPermutation parse(std::string_view text);

  const Permutation& base() const noexcept { return base_; }
  const AdjacencyVector& dashes() const noexcept { return dashes_; }
  std::size_t size() const noexcept { return base_.size(); }
  std::string str() const;

  friend bool operator==(const DashedPermutation&, const DashedPermutation&) = default;

 private:
  Permutation base_;
  AdjacencyVector dashes_;
};

/// Lower-triangular matrix given row by row. Row k has k entries and gives
/// the type of patterns of length k+1; rows not listed are filled uniformly.
struct ExplicitRows {
  std::map<std::size_t, AdjacencyVector> rows;
  bool default_fill = false;
};

/// Matrix with constant columns, described by its column vector a. Entries
/// beyond the prefix are 0.
struct ConstantColumns {
  std::vector<std::uint8_t> prefix;
};

enum class Preset { Classical, Consecutive, QuasiConsecutive };

/*
  Rule assigning a type vector to every pattern length (the matrix A of the
  order). Text form:

    quasi | classical | consecutive
    a=1,0,0                           constant columns
    rows=0,1,0;0,0,0,0:fill=0         explicit rows, keyed by their length

  fingerprint() is canonical: equivalent constant-column prefixes collapse to
  the same string and the presets are recognised in that form.
*/
class VincularScheme {
 public:
  using Variant = std::variant<ExplicitRows, ConstantColumns, Preset>;

  VincularScheme(Variant v);  // NOLINT(google-explicit-constructor)

  static VincularScheme classical() { return VincularScheme(Preset::Classical); }
  static VincularScheme consecutive() { return VincularScheme(Preset::Consecutive); }
  static VincularScheme quasi_consecutive() {
    return VincularScheme(Preset::QuasiConsecutive);
  }
  /// a = (1,...,1,0,0,...) with `ones` leading ones.
  static VincularScheme prefix_ones(std::size_t ones);

  static VincularScheme parse(std::string_view text);

  /// Type of patterns of length k; empty when k == 1.
  AdjacencyVector type_vector(std::size_t k) const;

  const Variant& variant() const noexcept { return v_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }
  bool is_quasi_consecutive() const noexcept { return fingerprint_ == "quasi"; }

  friend bool operator==(const VincularScheme& a, const VincularScheme& b) {
    return a.fingerprint_ == b.fingerprint_;
  }

 private:
  Variant v_;
  std::string fingerprint_;
};

/// Matched text positions, 1-based and strictly increasing.
struct Occurrence {
  std::vector<std::size_t> positions;

  bool contiguous() const noexcept;
  bool involves(std::size_t pos) const noexcept;
  std::string str() const;  // "(1,4,5)"

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

AdjacencyVector type_vector(const VincularScheme& scheme, std::size_t k);

/// All occurrences in lexicographic position order. Throws
/// std::invalid_argument when the pattern is longer than the text.
std::vector<Occurrence> occurrences(const DashedPermutation& pattern,
                                    const Permutation& text);
std::vector<Occurrence> occurrences(const Permutation& pattern,
                                    const Permutation& text,
                                    const VincularScheme& scheme);

bool contains(const DashedPermutation& pattern, const Permutation& text);
bool contains(const Permutation& pattern, const Permutation& text,
              const VincularScheme& scheme);

/// Number of occurrences; 0 when the pattern is longer than the text.
std::size_t count_occurrences(const Permutation& pattern,
                              const Permutation& text,
                              const VincularScheme& scheme);

/// Permutations of length |text|-1 occurring in text under the scheme,
/// sorted and duplicate free. Empty for |text| == 1.
std::vector<Permutation> covered_by(const Permutation& text,
                                    const VincularScheme& scheme);

}  // namespace vinpos
