#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "galorb/cotype.hpp"

namespace galorb {

struct AtlasRow {
  Decomposition decomposition;  ///< symbolic (no moduli values)
  bool in_paper = false;
  std::optional<int> paper_row;

  friend bool operator==(const AtlasRow&, const AtlasRow&) = default;
};

/// All decompositions with a given total dimension and index.
struct OrbitAtlas {
  int total_dim = 0;
  int total_index = 0;
  std::vector<AtlasRow> rows;

  friend bool operator==(const OrbitAtlas&, const OrbitAtlas&) = default;
};

/**
 * Every multiset {one cotype} ∪ {types} drawn from `entries` whose dimensions
 * and indices add up to the totals. The zero cotype is used only for the
 * empty total.
 */
inline OrbitAtlas enumerate(int total_dim, int total_index, const std::vector<CatalogEntry>& entries = catalog()) {
  if (total_dim < 0 || total_index < 0) fail(ErrorCode::InvalidArgument, "enumerate: totals must be nonnegative");
  OrbitAtlas atlas{total_dim, total_index, {}};
  std::vector<const CatalogEntry*> cotypes, types;
  for (const auto& e : entries) (is_cotype(e.kind) ? cotypes : types).push_back(&e);

  std::vector<Decomposition> found;
  std::vector<Summand> stack;
  std::function<void(std::size_t, int, int)> extend = [&](std::size_t from, int dim_left, int index_left) {
    if (dim_left == 0 && index_left == 0) {
      found.push_back(Decomposition{stack}.canonical());
      return;
    }
    for (std::size_t i = from; i < types.size(); ++i) {
      const CatalogEntry& t = *types[i];
      if (t.dim > dim_left || t.index > index_left) continue;
      stack.push_back(symbolic(t));
      extend(i, dim_left - t.dim, index_left - t.index);
      stack.pop_back();
    }
  };
  for (const CatalogEntry* c : cotypes) {
    if (c->kind == SummandKind::COTYPE_ZERO) {
      if (total_dim == 0 && total_index == 0) found.push_back(Decomposition{{symbolic(*c)}});
      continue;
    }
    if (c->dim > total_dim || c->index > total_index) continue;
    stack = {symbolic(*c)};
    extend(0, total_dim - c->dim, total_index - c->index);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& d : found) atlas.rows.push_back({d, false, std::nullopt});
  return atlas;
}

/// One row of the orbit table for Gal_3, as summand tokens (see CatalogEntry::token).
struct TranscribedRow {
  int number;
  std::vector<std::string> tokens;
};

/// Line-by-line transcription of the published Gal_3 orbit table (dimension 5, index 1).
inline const std::vector<TranscribedRow>& gal3_table_rows() {
  static const std::vector<TranscribedRow> rows = {
      {1, {"N3+", "IP"}},
      {2, {"N3+", "D0+", "D0+"}},
      {3, {"N2y", "D2-"}},
      {4, {"N2y", "RP", "D0+"}},
      {5, {"N2y", "IP", "D0-"}},
      {6, {"N2", "IP", "D0+"}},
      {7, {"N2", "D0+", "D0+", "D0+"}},
      {8, {"N2y", "D0-", "D0+", "D0+"}},
      {9, {"N0-", "IP", "D0+", "D0+"}},
      {10, {"N0-", "D0+", "D0+", "D0+", "D0+"}},
      {11, {"N0+", "D2-", "D0+"}},
      {12, {"N0+", "RP", "IP"}},
      {13, {"N0+", "RP", "D0+", "D0+"}},
      {14, {"N0+", "IP", "D0-", "D0+"}},
      {15, {"N0+", "D0-", "D0+", "D0+", "D0+"}},
  };
  return rows;
}

inline Decomposition decomposition_from_tokens(const std::vector<std::string>& tokens) {
  Decomposition d;
  for (const auto& tok : tokens) {
    const CatalogEntry* e = find_entry(tok);
    if (!e) fail(ErrorCode::Parse, "unknown summand token '" + tok + "'");
    d.summands.push_back(symbolic(*e));
  }
  d.canonicalize();
  return d;
}

/// The transcription as an atlas (rows in table order, all marked in_paper).
inline OrbitAtlas gal3_table() {
  OrbitAtlas a{5, 1, {}};
  for (const auto& r : gal3_table_rows()) a.rows.push_back({decomposition_from_tokens(r.tokens), true, r.number});
  return a;
}

/// Marks rows of `atlas` that occur in `reference` with their reference row numbers.
inline void annotate(OrbitAtlas& atlas, const OrbitAtlas& reference) {
  if (atlas.total_dim != reference.total_dim || atlas.total_index != reference.total_index) return;
  for (auto& row : atlas.rows)
    for (const auto& ref : reference.rows)
      if (ref.decomposition.symbolic() == row.decomposition.symbolic()) {
        row.in_paper = true;
        row.paper_row = ref.paper_row;
      }
}

struct AtlasDiff {
  std::vector<Decomposition> missing;  ///< expected but not enumerated
  std::vector<Decomposition> extra;    ///< enumerated but not expected

  bool empty() const { return missing.empty() && extra.empty(); }
};

inline AtlasDiff atlas_diff(const OrbitAtlas& atlas, const std::vector<Decomposition>& expected) {
  std::vector<Decomposition> have, want;
  for (const auto& r : atlas.rows) have.push_back(r.decomposition.symbolic());
  for (const auto& d : expected) want.push_back(d.symbolic());
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  AtlasDiff diff;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(diff.missing));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(diff.extra));
  return diff;
}

inline std::vector<Decomposition> rows_of(const OrbitAtlas& a) {
  std::vector<Decomposition> out;
  for (const auto& r : a.rows) out.push_back(r.decomposition);
  return out;
}

namespace detail {

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

inline std::string join_ints(const std::vector<Summand>& ss, int Summand::*field) {
  std::string out;
  for (std::size_t i = 0; i < ss.size(); ++i) out += (i ? "+" : "") + std::to_string(ss[i].*field);
  return out;
}

}  // namespace detail

/// Columns of one table line: summand sum, dimension sum, index sum.
struct TableCells {
  std::string summands, dims, indices;
  friend bool operator==(const TableCells&, const TableCells&) = default;
};

inline TableCells table_cells(const Decomposition& d) {
  TableCells c;
  Decomposition s = d.canonical();
  for (std::size_t i = 0; i < s.summands.size(); ++i) c.summands += (i ? " + " : "") + summand_label(s.summands[i]);
  c.dims = detail::join_ints(s.summands, &Summand::dim);
  c.indices = detail::join_ints(s.summands, &Summand::index);
  return c;
}

/**
 * Aligned text table, one line per atlas row. Rows matched to the reference
 * table come first in its order; `#` is the row number in the atlas.
 */
inline std::string render_table(const OrbitAtlas& atlas) {
  std::vector<TableCells> cells;
  std::size_t w0 = 0, w1 = std::string("dimension").size(), w2 = std::string("index").size();
  for (const auto& r : atlas.rows) {
    cells.push_back(table_cells(r.decomposition));
    w0 = std::max(w0, detail::display_width(cells.back().summands));
    w1 = std::max(w1, cells.back().dims.size());
    w2 = std::max(w2, cells.back().indices.size());
  }
  w0 = std::max(w0, std::string("cotype + types").size());
  std::ostringstream os;
  os << "  # " << detail::pad("cotype + types", w0) << "  " << detail::pad("dimension", w1) << "  "
     << detail::pad("index", w2) << "  table\n";
  std::vector<std::size_t> order(atlas.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &ra = atlas.rows[a].paper_row, &rb = atlas.rows[b].paper_row;
    if (ra && rb) return *ra < *rb;
    return ra.has_value() && !rb.has_value();
  });
  for (std::size_t i : order) {
    const auto& r = atlas.rows[i];
    std::string num = std::to_string(i + 1);
    os << std::string(3 - std::min<std::size_t>(3, num.size()), ' ') << num << " " << detail::pad(cells[i].summands, w0)
       << "  " << detail::pad(cells[i].dims, w1) << "  " << detail::pad(cells[i].indices, w2) << "  "
       << (r.paper_row ? std::to_string(*r.paper_row) : std::string("NOT-IN-PAPER")) << "\n";
  }
  return os.str();
}

/// Moduli for one summand, keyed by name.
using Moduli = std::map<std::string, Rational>;

struct Representative {
  SpecialTuple tuple;
  AlgebraElement element;  ///< (Y, y*) as an element of o(V∨, K∨)
  Decomposition requested;  ///< the decomposition with moduli filled in
};

namespace detail {

inline Rational rational_root(const Rational& sq, const std::string& name) {
  bool ok = false;
  Rational r = sqrt_exact(sq, ok);
  if (!ok)
    fail(ErrorCode::NotRealizable, "modulus " + name + " = " + sq.str() + " is not the square of a rational");
  return r;
}

inline const Rational& modulus(const Summand& s, const std::string& name) {
  auto it = s.moduli.find(name);
  if (it == s.moduli.end())
    fail(ErrorCode::InvalidArgument, std::string("missing modulus '") + name + "' for " + summand_label(s));
  return it->second;
}

inline void check_moduli(const Summand& s, bool has_delta2) {
  auto positive = [&](const std::string& name) {
    if (modulus(s, name).sign() <= 0)
      fail(ErrorCode::InvalidArgument, "modulus " + name + " must be positive for " + summand_label(s));
  };
  std::vector<std::string> allowed;
  switch (s.kind) {
    case SummandKind::COTYPE_NABLA2_Y1:
      if (modulus(s, "y1").is_zero()) fail(ErrorCode::InvalidArgument, "modulus y1 must be nonzero");
      allowed = {"y1"};
      break;
    case SummandKind::COTYPE_NONAFFINE_EPS:
      positive("alpha_sq");
      allowed = {"alpha_sq", "eps"};
      if (auto it = s.moduli.find("eps"); it != s.moduli.end() && it->second != Rational(s.index == 0 ? 1 : -1))
        fail(ErrorCode::InvalidArgument, "modulus eps disagrees with the cotype sign");
      if (has_delta2) {
        positive("mu");
        allowed.push_back("mu");
      }
      break;
    case SummandKind::COTYPE_AFFINE_NABLA3:
      positive("mu");
      allowed = {"mu"};
      break;
    case SummandKind::TYPE_DELTA0_RP:
      positive("zeta_sq");
      allowed = {"zeta_sq"};
      break;
    case SummandKind::TYPE_DELTA0_IP:
      positive("beta_sq");
      allowed = {"beta_sq"};
      break;
    default:
      break;
  }
  for (const auto& [k, v] : s.moduli)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      fail(ErrorCode::InvalidArgument, "unexpected modulus '" + k + "' for " + summand_label(s));
}

}  // namespace detail

/**
 * Explicit tuple in the standard space (K̃ = I_n, n = total dimension − 2)
 * whose summands are placed on coordinate blocks.
 *
 * The hyperbolic pair {e1, e_{n+2}} hosts the cotype (∇₂ families, ∇₃⁺) or,
 * for ∇₀⁺, one index-1 type; all remaining types occupy coordinates of the
 * positive definite middle block.
 */
inline Representative representative(const Decomposition& d) {
  Decomposition req = d.canonical();
  if (req.cotype_count() != 1) fail(ErrorCode::InvalidArgument, "representative: need exactly one cotype summand");
  int total = req.total_dim();
  if (total < 2) fail(ErrorCode::InvalidArgument, "representative: no ambient space of dimension " + std::to_string(total));
  for (const auto& s : req.summands) {
    const CatalogEntry* e = find_entry(s.kind, s.index);
    if (!e || e->dim != s.dim) fail(ErrorCode::InvalidArgument, "representative: summand not in the catalog");
  }
  bool has_delta2 = std::any_of(req.summands.begin(), req.summands.end(),
                                [](const Summand& s) { return s.kind == SummandKind::TYPE_DELTA2_MINUS_0; });
  for (const auto& s : req.summands) detail::check_moduli(s, has_delta2);

  std::size_t n = static_cast<std::size_t>(total - 2);
  InnerProductSpace sp = standard_space(n);
  const std::size_t last = n + 1;
  Mat Y(n + 2, n + 2), y(n + 2, 1);
  Mat e1 = Mat::unit(n + 2, 0), e = Mat::unit(n + 2, last);
  std::size_t next_mid = 1;
  auto take_mid = [&]() -> Mat {
    if (next_mid > n) fail(ErrorCode::IndexMismatch, "representative: not enough positive directions for the summands");
    return Mat::unit(n + 2, next_mid++);
  };
  bool hyperbolic_free = true;

  const Summand& cot = req.summands.front();
  switch (cot.kind) {
    case SummandKind::COTYPE_NABLA2_Y1:
      y = cot.moduli.at("y1") * e1;
      hyperbolic_free = false;
      break;
    case SummandKind::COTYPE_AFFINE_NABLA2:
      y = e;
      hyperbolic_free = false;
      break;
    case SummandKind::COTYPE_AFFINE_NABLA3: {
      Rational m = detail::rational_root(cot.moduli.at("mu"), "mu");
      y = e;
      Y += lift(sp, m * take_mid(), e1);
      hyperbolic_free = false;
      break;
    }
    case SummandKind::COTYPE_NONAFFINE_EPS:
      if (cot.index == 1)
        fail(ErrorCode::NotRealizable,
             "representative: the negative nonaffine cotype needs a negative vector orthogonal to e_{n+2}, "
             "but the tilde form is positive definite");
      y = detail::rational_root(cot.moduli.at("alpha_sq"), "alpha_sq") * take_mid();
      break;
    default:
      fail(ErrorCode::NotRealizable,
           "representative: the zero cotype has no representative in positive dimension "
           "(y = 0 is equivalent to y = e_{n+2})");
  }

  int spare_positive = 0;
  for (std::size_t i = 1; i < req.summands.size(); ++i) {
    const Summand& s = req.summands[i];
    switch (s.kind) {
      case SummandKind::TYPE_DELTA2_MINUS_0: {
        if (!hyperbolic_free)
          fail(ErrorCode::IndexMismatch, "representative: no free hyperbolic plane for " + summand_label(s));
        Rational m = detail::rational_root(cot.moduli.at("mu"), "mu");
        Y += lift(sp, m * take_mid(), e1);
        hyperbolic_free = false;
        break;
      }
      case SummandKind::TYPE_DELTA0_RP: {
        if (!hyperbolic_free)
          fail(ErrorCode::IndexMismatch, "representative: no free hyperbolic plane for " + summand_label(s));
        Y += detail::rational_root(s.moduli.at("zeta_sq"), "zeta_sq") * lift(sp, e1, e);
        hyperbolic_free = false;
        break;
      }
      case SummandKind::TYPE_DELTA0_IP: {
        Rational b = detail::rational_root(s.moduli.at("beta_sq"), "beta_sq");
        Mat u = take_mid(), w = take_mid();
        Y += b * (w * u.transpose() - u * w.transpose());
        break;
      }
      case SummandKind::TYPE_DELTA0_SIGN0:
        if (s.index == 1) {
          if (!hyperbolic_free)
            fail(ErrorCode::IndexMismatch, "representative: no free hyperbolic plane for " + summand_label(s));
          hyperbolic_free = false;
          --spare_positive;  // the plane also absorbs one positive line
        } else {
          ++spare_positive;
        }
        break;
      default:
        fail(ErrorCode::InvalidArgument, "representative: unexpected summand " + summand_label(s));
    }
  }
  if (spare_positive < 0)
    fail(ErrorCode::IndexMismatch, "representative: a negative line needs a positive partner line");
  for (int i = 0; i < spare_positive; ++i) take_mid();
  if (hyperbolic_free)
    fail(ErrorCode::IndexMismatch, "representative: the hyperbolic plane is not used by any summand");
  if (next_mid != n + 1) fail(ErrorCode::IndexMismatch, "representative: summands do not fill the space");

  SpecialTuple t = make_tuple(sp, Y, y);
  return {t, make_algebra(sp, Y, y), req};
}

/// Symbolic decomposition plus per-summand moduli (aligned with the canonical summand order).
inline Representative representative(const Decomposition& d, const std::vector<Moduli>& moduli) {
  Decomposition c = d.canonical();
  if (moduli.size() != c.summands.size())
    fail(ErrorCode::InvalidArgument, "representative: expected " + std::to_string(c.summands.size()) +
                                         " moduli objects, got " + std::to_string(moduli.size()));
  for (std::size_t i = 0; i < moduli.size(); ++i) c.summands[i].moduli = moduli[i];
  return representative(c);
}

/**
 * Sample moduli for a symbolic row: y1 and β² alternate through {1, −2} and
 * {1, 4}; α² = ζ² = μ = 1.
 */
inline std::vector<Moduli> sample_moduli(const Decomposition& d, int variant = 0) {
  Decomposition c = d.canonical();
  bool has_delta2 = std::any_of(c.summands.begin(), c.summands.end(),
                                [](const Summand& s) { return s.kind == SummandKind::TYPE_DELTA2_MINUS_0; });
  std::vector<Moduli> out;
  int ip = 0;
  for (const auto& s : c.summands) {
    Moduli m;
    switch (s.kind) {
      case SummandKind::COTYPE_NABLA2_Y1: m["y1"] = variant % 2 == 0 ? Rational(1) : Rational(-2); break;
      case SummandKind::COTYPE_NONAFFINE_EPS:
        m["alpha_sq"] = 1;
        m["eps"] = s.index == 0 ? 1 : -1;
        if (has_delta2) m["mu"] = 1;
        break;
      case SummandKind::COTYPE_AFFINE_NABLA3: m["mu"] = 1; break;
      case SummandKind::TYPE_DELTA0_RP: m["zeta_sq"] = 1; break;
      case SummandKind::TYPE_DELTA0_IP: m["beta_sq"] = (ip++ + variant) % 2 == 0 ? Rational(1) : Rational(4); break;
      default: break;
    }
    out.push_back(m);
  }
  return out;
}

/// Decomposition with the given moduli attached (canonical order).
inline Decomposition with_moduli(const Decomposition& d, const std::vector<Moduli>& moduli) {
  Decomposition c = d.canonical();
  for (std::size_t i = 0; i < c.summands.size() && i < moduli.size(); ++i) c.summands[i].moduli = moduli[i];
  c.canonicalize();
  return c;
}

}  // namespace galorb
