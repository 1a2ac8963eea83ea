#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galorb/rational.hpp"

namespace galorb {

/// Indecomposable summand kinds. Cotypes rank before types in the canonical order.
enum class SummandKind : int {
  COTYPE_NABLA2_Y1 = 0,
  COTYPE_NONAFFINE_EPS,
  COTYPE_AFFINE_NABLA3,
  COTYPE_AFFINE_NABLA2,
  COTYPE_ZERO,
  TYPE_DELTA2_MINUS_0,
  TYPE_DELTA0_RP,
  TYPE_DELTA0_IP,
  TYPE_DELTA0_SIGN0,
};

inline constexpr SummandKind kAllKinds[] = {
    SummandKind::COTYPE_NABLA2_Y1,    SummandKind::COTYPE_NONAFFINE_EPS, SummandKind::COTYPE_AFFINE_NABLA3,
    SummandKind::COTYPE_AFFINE_NABLA2, SummandKind::COTYPE_ZERO,          SummandKind::TYPE_DELTA2_MINUS_0,
    SummandKind::TYPE_DELTA0_RP,      SummandKind::TYPE_DELTA0_IP,       SummandKind::TYPE_DELTA0_SIGN0,
};

inline const char* kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::COTYPE_NABLA2_Y1: return "COTYPE_NABLA2_Y1";
    case SummandKind::COTYPE_NONAFFINE_EPS: return "COTYPE_NONAFFINE_EPS";
    case SummandKind::COTYPE_AFFINE_NABLA3: return "COTYPE_AFFINE_NABLA3";
    case SummandKind::COTYPE_AFFINE_NABLA2: return "COTYPE_AFFINE_NABLA2";
    case SummandKind::COTYPE_ZERO: return "COTYPE_ZERO";
    case SummandKind::TYPE_DELTA2_MINUS_0: return "TYPE_DELTA2_MINUS_0";
    case SummandKind::TYPE_DELTA0_RP: return "TYPE_DELTA0_RP";
    case SummandKind::TYPE_DELTA0_IP: return "TYPE_DELTA0_IP";
    case SummandKind::TYPE_DELTA0_SIGN0: return "TYPE_DELTA0_SIGN0";
  }
  return "?";
}

inline std::optional<SummandKind> kind_from_name(const std::string& s) {
  for (auto k : kAllKinds)
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

inline bool is_cotype(SummandKind k) { return static_cast<int>(k) <= static_cast<int>(SummandKind::COTYPE_ZERO); }

/// One indecomposable piece. Atlas rows leave `moduli` empty (symbolic).
struct Summand {
  SummandKind kind = SummandKind::COTYPE_ZERO;
  int dim = 0;
  int index = 0;
  std::map<std::string, Rational> moduli;

  friend bool operator==(const Summand&, const Summand&) = default;
  friend auto operator<=>(const Summand& a, const Summand& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.moduli <=> b.moduli;
  }
};

/// Catalog row: an indecomposable (co)type with its dimension/index bookkeeping.
struct CatalogEntry {
  SummandKind kind;
  int dim;
  int index;
  int moduli_arity;
  std::vector<std::string> moduli_names;
  std::string label;  ///< typeset name
  std::string token;  ///< short ASCII name used in data files
};

/// The built-in catalog: the indecomposable types and cotypes available at index ≤ 1.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {SummandKind::COTYPE_AFFINE_NABLA3, 3, 1, 1, {"mu"}, "∇₃⁺(0),μ≠0", "N3+"},
      {SummandKind::COTYPE_AFFINE_NABLA2, 2, 1, 0, {}, "∇₂(0,0)", "N2"},
      {SummandKind::COTYPE_NABLA2_Y1, 2, 0, 1, {"y1"}, "∇₂^y(0),y≠0", "N2y"},
      {SummandKind::COTYPE_NONAFFINE_EPS, 1, 0, 1, {"alpha_sq"}, "∇₀⁺(0)", "N0+"},
      {SummandKind::COTYPE_NONAFFINE_EPS, 1, 1, 1, {"alpha_sq"}, "∇₀⁻(0)", "N0-"},
      {SummandKind::COTYPE_ZERO, 0, 0, 0, {}, "0", "0"},
      {SummandKind::TYPE_DELTA2_MINUS_0, 3, 1, 0, {}, "Δ₂⁻(0)", "D2-"},
      {SummandKind::TYPE_DELTA0_RP, 2, 1, 1, {"zeta_sq"}, "Δ₀(ζ,RP)", "RP"},
      {SummandKind::TYPE_DELTA0_IP, 2, 0, 1, {"beta_sq"}, "Δ₀(iβ,IP)", "IP"},
      {SummandKind::TYPE_DELTA0_SIGN0, 1, 1, 0, {}, "Δ₀⁻(0)", "D0-"},
      {SummandKind::TYPE_DELTA0_SIGN0, 1, 0, 0, {}, "Δ₀⁺(0)", "D0+"},
  };
  return entries;
}

inline const CatalogEntry* find_entry(SummandKind kind, int index) {
  for (const auto& e : catalog())
    if (e.kind == kind && e.index == index) return &e;
  return nullptr;
}

inline const CatalogEntry* find_entry(const std::string& token) {
  for (const auto& e : catalog())
    if (e.token == token) return &e;
  return nullptr;
}

inline std::string summand_label(const Summand& s) {
  const CatalogEntry* e = find_entry(s.kind, s.index);
  return e ? e->label : std::string(kind_name(s.kind));
}

/// Symbolic summand for a catalog entry.
inline Summand symbolic(const CatalogEntry& e) { return {e.kind, e.dim, e.index, {}}; }

/// Ordered multiset of summands with exactly one cotype.
struct Decomposition {
  std::vector<Summand> summands;

  void canonicalize() { std::sort(summands.begin(), summands.end()); }

  Decomposition canonical() const {
    Decomposition d = *this;
    d.canonicalize();
    return d;
  }

  int total_dim() const {
    int s = 0;
    for (const auto& x : summands) s += x.dim;
    return s;
  }

  int total_index() const {
    int s = 0;
    for (const auto& x : summands) s += x.index;
    return s;
  }

  std::size_t cotype_count() const {
    return static_cast<std::size_t>(
        std::count_if(summands.begin(), summands.end(), [](const Summand& s) { return is_cotype(s.kind); }));
  }

  /// Same decomposition ignoring moduli values.
  Decomposition symbolic() const {
    Decomposition d = *this;
    for (auto& s : d.summands) s.moduli.clear();
    d.canonicalize();
    return d;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) { return a.summands <=> b.summands; }
};

}  // namespace galorb
