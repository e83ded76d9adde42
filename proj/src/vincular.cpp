#include "vinpos/vincular.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vinpos {

namespace {

std::uint8_t parse_bit(std::string_view field, std::string_view whole) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw std::invalid_argument("expected 0 or 1 in '" + std::string(whole) + "'");
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
  std::vector<std::uint8_t> bits;
  if (text.empty()) return bits;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    bits.push_back(parse_bit(text.substr(start, end - start), text));
    if (end == text.size()) break;
    start = end + 1;
  }
  return bits;
}

std::string join_bits(const std::vector<std::uint8_t>& bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i > 0) out += ',';
    out += bits[i] ? '1' : '0';
  }
  return out;
}

struct FingerprintVisitor {
  std::string operator()(Preset p) const {
    switch (p) {
      case Preset::Classical:
        return "classical";
      case Preset::Consecutive:
        return "consecutive";
      case Preset::QuasiConsecutive:
        return "quasi";
    }
    return {};
  }

  std::string operator()(const ConstantColumns& c) const {
    std::vector<std::uint8_t> a = c.prefix;
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return "consecutive";
    if (a.size() == 1) return "quasi";
    return "a=" + join_bits(a);
  }

  std::string operator()(const ExplicitRows& r) const {
    std::string rows;
    for (const auto& [k, row] : r.rows) {
      if (row == AdjacencyVector::filled(k, r.default_fill)) continue;
      if (!rows.empty()) rows += ';';
      rows += row.str();
    }
    if (rows.empty()) return r.default_fill ? "classical" : "consecutive";
    return "rows=" + rows + ":fill=" + (r.default_fill ? "1" : "0");
  }
};

/*
  Backtracking over text positions. A clear adjacency bit pins the next
  position to the successor of the previous one, so runs of zeros are matched
  as contiguous blocks. `visit` returns false to stop the search.
*/
template <class Visit>
void search(std::span<const int> pat, const AdjacencyVector& type,
            std::span<const int> text, Visit&& visit) {
  const std::size_t k = pat.size();
  const std::size_t n = text.size();
  std::vector<std::size_t> pos(k);
  bool stop = false;

  auto consistent = [&](std::size_t j, std::size_t i) {
    for (std::size_t l = 0; l < j; ++l) {
      if ((text[pos[l]] < text[i]) != (pat[l] < pat[j])) return false;
    }
    return true;
  };

  auto place = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      if (!visit(pos)) stop = true;
      return;
    }
    std::size_t lo = j == 0 ? 0 : pos[j - 1] + 1;
    std::size_t hi = n - (k - j);  // inclusive
    if (j > 0 && !type.dash(j - 1)) hi = std::min(hi, lo);
    for (std::size_t i = lo; i <= hi && !stop; ++i) {
      if (!consistent(j, i)) continue;
      pos[j] = i;
      self(self, j + 1);
    }
  };
  place(place, 0);
}

void require_fits(std::size_t pattern, std::size_t text) {
  if (pattern > text) {
    throw std::invalid_argument("pattern longer than text");
  }
}

}  // namespace

AdjacencyVector::AdjacencyVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("adjacency bits must be 0 or 1");
  }
}

AdjacencyVector::AdjacencyVector(std::initializer_list<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("adjacency bits must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

AdjacencyVector AdjacencyVector::filled(std::size_t length, bool dash) {
  return AdjacencyVector(std::vector<std::uint8_t>(length, dash ? 1 : 0));
}

std::string AdjacencyVector::str() const { return join_bits(bits_); }

AdjacencyVector AdjacencyVector::parse(std::string_view text) {
  return AdjacencyVector(parse_bits(text));
}

DashedPermutation::DashedPermutation(Permutation base, AdjacencyVector dashes)
    : base_(std::move(base)), dashes_(std::move(dashes)) {
  if (dashes_.size() + 1 != base_.size()) {
    throw std::invalid_argument("dash vector must have length |pattern|-1");
  }
}

DashedPermutation DashedPermutation::parse(std::string_view text) {
  std::string digits;
  std::vector<std::uint8_t> bits;
  bool pending_dash = false;
  for (char c : text) {
    if (c == '-') {
      if (digits.empty() || pending_dash) {
        throw std::invalid_argument("misplaced dash in '" + std::string(text) + "'");
      }
      pending_dash = true;
      continue;
    }
    if (!digits.empty()) bits.push_back(pending_dash ? 1 : 0);
    pending_dash = false;
    digits += c;
  }
  if (pending_dash) {
    throw std::invalid_argument("trailing dash in '" + std::string(text) + "'");
  }
  return DashedPermutation(Permutation::parse(digits), AdjacencyVector(std::move(bits)));
}

std::string DashedPermutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (i > 0) out += dashes_.dash(i - 1) ? "-" : (base_.size() > 9 ? "," : "");
    out += std::to_string(base_[i]);
  }
  return out;
}

VincularScheme::VincularScheme(Variant v)
    : v_(std::move(v)), fingerprint_(std::visit(FingerprintVisitor{}, v_)) {
  if (const auto* rows = std::get_if<ExplicitRows>(&v_)) {
    for (const auto& [k, row] : rows->rows) {
      if (k == 0 || row.size() != k) {
        throw std::invalid_argument("row " + std::to_string(k) +
                                    " must have exactly " + std::to_string(k) +
                                    " entries");
      }
    }
  }
  if (const auto* cols = std::get_if<ConstantColumns>(&v_)) {
    for (auto b : cols->prefix) {
      if (b > 1) throw std::invalid_argument("column values must be 0 or 1");
    }
  }
}

VincularScheme VincularScheme::prefix_ones(std::size_t ones) {
  return VincularScheme(ConstantColumns{std::vector<std::uint8_t>(ones, 1)});
}

VincularScheme VincularScheme::parse(std::string_view text) {
  if (text == "quasi" || text == "quasi_consecutive" || text == "quasi-consecutive") {
    return quasi_consecutive();
  }
  if (text == "classical") return classical();
  if (text == "consecutive") return consecutive();
  if (text.starts_with("a=")) {
    return VincularScheme(ConstantColumns{parse_bits(text.substr(2))});
  }
  if (text.starts_with("rows=")) {
    std::string_view body = text.substr(5);
    ExplicitRows rows;
    if (auto colon = body.rfind(':'); colon != std::string_view::npos) {
      std::string_view fill = body.substr(colon + 1);
      if (fill == "fill=0") {
        rows.default_fill = false;
      } else if (fill == "fill=1") {
        rows.default_fill = true;
      } else {
        throw std::invalid_argument("bad fill in scheme '" + std::string(text) + "'");
      }
      body = body.substr(0, colon);
    }
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t end = body.find(';', start);
      if (end == std::string_view::npos) end = body.size();
      AdjacencyVector row = AdjacencyVector::parse(body.substr(start, end - start));
      if (row.empty()) {
        throw std::invalid_argument("empty row in scheme '" + std::string(text) + "'");
      }
      if (!rows.rows.emplace(row.size(), row).second) {
        throw std::invalid_argument("row of length " + std::to_string(row.size()) +
                                    " given twice");
      }
      start = end + 1;
    }
    return VincularScheme(std::move(rows));
  }
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

AdjacencyVector VincularScheme::type_vector(std::size_t k) const {
  if (k <= 1) return {};
  const std::size_t len = k - 1;
  struct Visitor {
    std::size_t len;
    AdjacencyVector operator()(Preset p) const {
      return AdjacencyVector::filled(len, p == Preset::Classical);
    }
    AdjacencyVector operator()(const ConstantColumns& c) const {
      std::vector<std::uint8_t> bits(len, 0);
      for (std::size_t i = 0; i < len && i < c.prefix.size(); ++i) bits[i] = c.prefix[i];
      return AdjacencyVector(std::move(bits));
    }
    AdjacencyVector operator()(const ExplicitRows& r) const {
      if (auto it = r.rows.find(len); it != r.rows.end()) return it->second;
      return AdjacencyVector::filled(len, r.default_fill);
    }
  };
  if (std::holds_alternative<Preset>(v_) &&
      std::get<Preset>(v_) == Preset::QuasiConsecutive) {
    auto bits = std::vector<std::uint8_t>(len, 0);
    bits[0] = 1;
    return AdjacencyVector(std::move(bits));
  }
  return std::visit(Visitor{len}, v_);
}

bool Occurrence::contiguous() const noexcept {
  for (std::size_t i = 1; i < positions.size(); ++i) {
    if (positions[i] != positions[i - 1] + 1) return false;
  }
  return true;
}

bool Occurrence::involves(std::size_t pos) const noexcept {
  return std::binary_search(positions.begin(), positions.end(), pos);
}

std::string Occurrence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + ")";
}

AdjacencyVector type_vector(const VincularScheme& scheme, std::size_t k) {
  return scheme.type_vector(k);
}

std::vector<Occurrence> occurrences(const DashedPermutation& pattern,
                                    const Permutation& text) {
  require_fits(pattern.size(), text.size());
  std::vector<Occurrence> out;
  search(pattern.base().values(), pattern.dashes(), text.values(),
         [&](const std::vector<std::size_t>& pos) {
           Occurrence occ;
           occ.positions.reserve(pos.size());
           for (auto p : pos) occ.positions.push_back(p + 1);
           out.push_back(std::move(occ));
           return true;
         });
  return out;
}

std::vector<Occurrence> occurrences(const Permutation& pattern,
                                    const Permutation& text,
                                    const VincularScheme& scheme) {
  return occurrences(DashedPermutation(pattern, scheme.type_vector(pattern.size())),
                     text);
}

bool contains(const DashedPermutation& pattern, const Permutation& text) {
  if (pattern.size() > text.size()) return false;
  bool found = false;
  search(pattern.base().values(), pattern.dashes(), text.values(),
         [&](const std::vector<std::size_t>&) {
           found = true;
           return false;
         });
  return found;
}

bool contains(const Permutation& pattern, const Permutation& text,
              const VincularScheme& scheme) {
  if (pattern.size() > text.size()) return false;
  return contains(DashedPermutation(pattern, scheme.type_vector(pattern.size())),
                  text);
}

std::size_t count_occurrences(const Permutation& pattern,
                              const Permutation& text,
                              const VincularScheme& scheme) {
  if (pattern.size() > text.size()) return 0;
  std::size_t count = 0;
  search(pattern.values(), scheme.type_vector(pattern.size()), text.values(),
         [&](const std::vector<std::size_t>&) {
           ++count;
           return true;
         });
  return count;
}

std::vector<Permutation> covered_by(const Permutation& text,
                                    const VincularScheme& scheme) {
  std::vector<Permutation> out;
  if (text.size() < 2) return out;
  // Every pattern of length n-1 is the text minus one entry.
  std::vector<Permutation> candidates;
  for (std::size_t pos = 1; pos <= text.size(); ++pos) {
    candidates.push_back(remove_entry(text, pos));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto& c : candidates) {
    if (contains(c, text, scheme)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vinpos
