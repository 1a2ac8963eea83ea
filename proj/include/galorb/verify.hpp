#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galorb/catalog.hpp"
#include "galorb/random.hpp"

namespace galorb {

// ---- tuple generators ------------------------------------------------------

/// The four families of special tuples: y1 ≠ 0, y = 0, affine, nonaffine.
enum class TupleCase { Parameter, Zero, Affine, Nonaffine };

inline const char* case_name(TupleCase c) {
  switch (c) {
    case TupleCase::Parameter: return "parameter";
    case TupleCase::Zero: return "zero";
    case TupleCase::Affine: return "affine";
    case TupleCase::Nonaffine: return "nonaffine";
  }
  return "?";
}

inline constexpr TupleCase kAllCases[] = {TupleCase::Parameter, TupleCase::Zero, TupleCase::Affine,
                                          TupleCase::Nonaffine};

/**
 * Random tuple of the requested family in a space with K̃ = I_n, restricted to
 * the classifiable region (for nonaffine tuples K̃(Y e_{n+2}, y) = 0).
 */
inline SpecialTuple random_tuple(Rng& rng, const InnerProductSpace& s, TupleCase c) {
  const std::size_t d = s.dim, n = s.n();
  Mat Y = rng.skew(s.gram);
  Mat y = rng.vector(d);
  Mat e1 = Mat::unit(d, 0), e = Mat::unit(d, d - 1);
  auto coupling = [&]() { return Mat(Y * e).block(1, 0, n, 1); };
  switch (c) {
    case TupleCase::Parameter:
      if (y[0].is_zero()) y[0] = rng.nonzero();
      break;
    case TupleCase::Zero:
      y = Mat(d, 1);
      if (rng.integer(0, 3) == 0) Y -= lift(s, detail::embed_middle(s, coupling()), e1);
      break;
    case TupleCase::Affine:
      y = Mat(d, 1);
      y[d - 1] = rng.nonzero();
      if (rng.integer(0, 3) == 0) Y -= lift(s, detail::embed_middle(s, coupling()), e1);
      break;
    case TupleCase::Nonaffine: {
      y[0] = 0;
      if (detail::middle(s, y).is_zero()) y[1] = rng.nonzero();
      Mat yt = detail::middle(s, y);
      if (rng.integer(0, 3) == 0) {
        Y -= lift(s, detail::embed_middle(s, coupling()), e1);
      } else {
        Rational t = detail::tilde_form(s, coupling(), yt) / detail::tilde_form(s, yt, yt);
        Y -= t * lift(s, detail::embed_middle(s, yt), e1);
      }
      break;
    }
  }
  return make_tuple(s, Y, y);
}

inline EquivalenceWitness random_witness(Rng& rng, const InnerProductSpace& s) {
  GroupElement g = random_stabilizer_group(rng, s);
  return {g.P, g.p, rng.vector(s.dim), rng.rational()};
}

/// Random standardized case-1 tuple y = y1 e1.
inline SpecialTuple random_standard_case1(Rng& rng, const InnerProductSpace& s, const Rational& y1) {
  Mat y = y1 * Mat::unit(s.dim, 0);
  return make_tuple(s, rng.skew(s.gram), y);
}

/// Equivalence with P = diag(1, P̃, 1) plus random p, v gauges; keeps y = y1 e1 fixed.
inline EquivalenceWitness case1_witness(Rng& rng, const InnerProductSpace& s, const Mat& pt) {
  Mat p = rng.vector(s.dim);
  p[0] = 0;
  return {stabilizer_orthogonal(s, pt, Mat(s.n(), 1)), p, rng.vector(s.dim), Rational()};
}

/**
 * Decides whether t2 = apply_equivalence(t1, w) for some witness with P = diag(1, P̃, 1),
 * P̃ from `sample`, by solving the (affine-linear) equations for p and v exactly.
 * Returns the witness found, if any.
 */
inline std::optional<EquivalenceWitness> search_case1_equivalence(const SpecialTuple& t1, const SpecialTuple& t2,
                                                                  const std::vector<Mat>& sample) {
  const auto& s = t1.space;
  const std::size_t d = s.dim;
  if (!(t1.y == t2.y)) return std::nullopt;
  Mat e = Mat::unit(d, d - 1);
  // unknowns: p_2..p_d (p_1 = 0), then v_1..v_d
  const std::size_t nu = (d - 1) + d;
  for (const Mat& pt : sample) {
    Mat P = stabilizer_orthogonal(s, pt, Mat(s.n(), 1));
    Mat Pinv = inverse(P);
    auto F = [&](const Mat& p, const Mat& v) { return P * (t1.Y + lift(s, p, t1.y)) * Pinv - lift(s, v, e) - t2.Y; };
    auto unpack = [&](const Mat& u, Mat& p, Mat& v) {
      p = Mat(d, 1);
      v = Mat(d, 1);
      for (std::size_t i = 1; i < d; ++i) p[i] = u[i - 1];
      for (std::size_t i = 0; i < d; ++i) v[i] = u[d - 1 + i];
    };
    Mat f0 = F(Mat(d, 1), Mat(d, 1));
    Mat A(d * d, nu), b(d * d, 1);
    for (std::size_t k = 0; k < nu; ++k) {
      Mat p, v;
      unpack(Mat::unit(nu, k), p, v);
      Mat fk = F(p, v) - f0;
      for (std::size_t r = 0; r < d * d; ++r) A(r, k) = fk(r / d, r % d);
    }
    for (std::size_t r = 0; r < d * d; ++r) b[r] = -f0(r / d, r % d);
    auto u = solve(A, b);
    if (!u || !(A * *u == b)) continue;
    Mat p, v;
    unpack(*u, p, v);
    EquivalenceWitness w{P, p, v, Rational()};
    if (apply_equivalence(t1, w) == t2) return w;
  }
  return std::nullopt;
}

// ---- suites ----------------------------------------------------------------

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

/// A randomized check: returns a failure description, or nullopt on success.
using Check = std::function<std::optional<std::string>(Rng&, const InnerProductSpace&)>;

namespace detail {

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

inline std::string str(const Mat& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

inline std::string str(const Decomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    out += (i ? " + " : "") + summand_label(s);
    if (!s.moduli.empty()) {
      out += "{";
      bool first = true;
      for (const auto& [k, v] : s.moduli) {
        out += (first ? "" : ",") + k + "=" + v.str();
        first = false;
      }
      out += "}";
    }
  }
  return out;
}

inline std::string str(const SpecialTuple& t) { return "Y=" + str(t.Y) + " y=" + str(t.y); }

/// Runs a check, turning library exceptions into failures.
inline std::optional<std::string> guarded(const Check& c, Rng& rng, const InnerProductSpace& s) {
  try {
    return c(rng, s);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace detail

/**
 * Runs each named check `trials` times for n = 1 and n = 3. A failing trial is
 * replayed with the same seed and smaller entry bounds, and the smallest
 * failing replay is reported.
 */
inline void run_checks(SuiteResult& r, std::uint64_t seed, int trials,
                       const std::vector<std::pair<std::string, Check>>& checks, std::vector<std::size_t> ns = {1, 3}) {
  for (const auto& [cname, check] : checks)
    for (std::size_t n : ns) {
      InnerProductSpace s = standard_space(n);
      int failed_here = 0;
      for (int i = 0; i < trials; ++i) {
        std::uint64_t ts = detail::mix(seed ^ detail::name_hash(cname) ^ (n << 32) ^ static_cast<std::uint64_t>(i));
        Rng rng(ts);
        ++r.checks;
        auto f = detail::guarded(check, rng, s);
        if (!f) continue;
        long scale = 3;
        for (long sc : {2L, 1L}) {
          Rng small(ts, sc);
          if (auto g = detail::guarded(check, small, s)) {
            f = g;
            scale = sc;
          }
        }
        if (++failed_here <= 3)
          r.failures.push_back(cname + " [n=" + std::to_string(n) + ", trial " + std::to_string(i) +
                               ", seed " + std::to_string(ts) + ", scale " + std::to_string(scale) + "]: " + *f);
      }
      if (failed_here > 3)
        r.failures.push_back(cname + " [n=" + std::to_string(n) + "]: " + std::to_string(failed_here - 3) +
                             " further failing trials");
    }
}

inline std::optional<std::string> expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

/// Facts A-C, signature invariance, witt_map contract.
inline SuiteResult suite_facts(std::uint64_t seed, int trials) {
  SuiteResult r{"facts"};
  run_checks(r, seed, trials, {
      {"fact_a_lift_skew", [](Rng& g, const InnerProductSpace& s) {
         Mat u = g.vector(s.dim), v = g.vector(s.dim);
         Mat l = lift(s, u, v);
         return expect(l == -lift(s, v, u) && is_skew_adjoint(s, l) && lift(s, u, u).is_zero(),
                       "u=" + detail::str(u) + " v=" + detail::str(v));
       }},
      {"fact_b_conjugation", [](Rng& g, const InnerProductSpace& s) {
         Mat P = g.orthogonal(s.gram), u = g.vector(s.dim), v = g.vector(s.dim);
         return expect(P * lift(s, u, v) * inverse(P) == lift(s, P * u, P * v),
                       "P=" + detail::str(P) + " u=" + detail::str(u) + " v=" + detail::str(v));
       }},
      {"fact_c_trace", [](Rng& g, const InnerProductSpace& s) {
         Mat X = g.skew(s.gram), v = g.vector(s.dim), w = g.vector(s.dim);
         return expect(Rational(2) * (star(s, w) * X * v)(0, 0) == (lift(s, v, w) * X).trace(),
                       "X=" + detail::str(X) + " v=" + detail::str(v) + " w=" + detail::str(w));
       }},
      {"sylvester_signature", [](Rng& g, const InnerProductSpace& s) {
         Mat A = g.invertible(s.dim);
         return expect(signature_of(A.transpose() * s.gram * A) == signature(s), "A=" + detail::str(A));
       }},
      {"witt_map_contract", [](Rng& g, const InnerProductSpace& s) {
         std::size_t d = s.dim;
         Mat y(d, 1);
         switch (g.integer(0, 3)) {
           case 0: y[d - 1] = g.nonzero(); break;
           case 1: y[0] = g.nonzero(); break;
           default: {
             Mat yt = g.vector(s.n());
             y.set_block(1, 0, yt);
             y[d - 1] = g.nonzero();
             y[0] = -(yt.transpose() * yt)(0, 0) / (Rational(2) * y[d - 1]);
           }
         }
         Mat P = witt_map(s, y);
         return expect(is_orthogonal(s, P) && P * y == Mat::unit(d, d - 1), "y=" + detail::str(y));
       }},
  });
  return r;
}

/// Claims 1-2 and the bracket: embeddings are homomorphisms, pairing is nondegenerate.
inline SuiteResult suite_claims(std::uint64_t seed, int trials) {
  SuiteResult r{"claims"};
  run_checks(r, seed, trials, {
      {"claim1_group_embedding", [](Rng& g, const InnerProductSpace& s) {
         GroupElement a = random_group(g, s), b = random_group(g, s);
         InnerProductSpace ext = build_chain(s.n(), gram_tilde_of(s)).extended;
         bool ok = embed_group(compose(a, b)) == embed_group(a) * embed_group(b) &&
                   embed_group(inverse(a)) == inverse(embed_group(a)) && is_orthogonal(ext, embed_group(a));
         return expect(ok, "P=" + detail::str(a.P) + " p=" + detail::str(a.p));
       }},
      {"eq2_bracket", [](Rng& g, const InnerProductSpace& s) {
         AlgebraElement a = random_algebra(g, s), b = random_algebra(g, s);
         InnerProductSpace ext = build_chain(s.n(), gram_tilde_of(s)).extended;
         AlgebraElement c = bracket(a, b);
         bool ok = c.X == a.X * b.X - b.X * a.X && c.x == a.X * b.x - b.X * a.x &&
                   is_skew_adjoint(ext, embed_algebra(a));
         return expect(ok, "X=" + detail::str(a.X) + " Xbar=" + detail::str(b.X));
       }},
      {"pairing_symmetric", [](Rng& g, const InnerProductSpace& s) {
         AlgebraElement a = random_algebra(g, s), b = random_algebra(g, s);
         return expect(pairing(a, b) == pairing(b, a), "X=" + detail::str(a.X) + " Xbar=" + detail::str(b.X));
       }},
  });
  for (std::size_t n : {1, 3}) {
    InnerProductSpace s = standard_space(n);
    auto basis = algebra_basis(s);
    Mat g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pairing(basis[i], basis[j]);
    ++r.checks;
    if (determinant(g).is_zero()) r.failures.push_back("claim2_nondegenerate [n=" + std::to_string(n) + "]");
  }
  return r;
}

/// Eq. 4/5 and Lemma 3: ad, twisted ad, adjointness.
inline SuiteResult suite_adjoint(std::uint64_t seed, int trials) {
  SuiteResult r{"adjoint"};
  run_checks(r, seed, trials, {
      {"eq4_ad_is_conjugation", [](Rng& g, const InnerProductSpace& s) {
         GroupElement h = random_group(g, s);
         AlgebraElement a = random_algebra(g, s);
         Mat E = embed_group(h);
         return expect(embed_algebra(ad(h, a)) == E * embed_algebra(a) * inverse(E), "P=" + detail::str(h.P));
       }},
      {"ad_action", [](Rng& g, const InnerProductSpace& s) {
         GroupElement h = random_group(g, s), k = random_group(g, s);
         AlgebraElement a = random_algebra(g, s);
         return expect(ad(compose(h, k), a) == ad(h, ad(k, a)) &&
                           twisted_ad(compose(h, k), a) == twisted_ad(h, twisted_ad(k, a)),
                       "P=" + detail::str(h.P) + " Q=" + detail::str(k.P));
       }},
      {"ad_bracket", [](Rng& g, const InnerProductSpace& s) {
         GroupElement h = random_group(g, s);
         AlgebraElement a = random_algebra(g, s), b = random_algebra(g, s);
         return expect(ad(h, bracket(a, b)) == bracket(ad(h, a), ad(h, b)), "P=" + detail::str(h.P));
       }},
      {"lemma3_adjointness", [](Rng& g, const InnerProductSpace& s) {
         GroupElement h = random_group(g, s);
         AlgebraElement a = random_algebra(g, s), b = random_stabilizer_algebra(g, s);
         AlgebraElement t = twisted_ad(h, a);
         bool ok = pairing(t, b) == pairing(a, ad(inverse(h), b)) && t.x == h.P * a.x;
         return expect(ok, "P=" + detail::str(h.P) + " p=" + detail::str(h.p) + " X=" + detail::str(a.X));
       }},
  });
  return r;
}

/// Gal_n matrix forms of the stabilizer.
inline SuiteResult suite_gal(std::uint64_t seed, int trials) {
  SuiteResult r{"gal"};
  run_checks(r, seed, trials, {
      {"gal_group_homomorphism", [](Rng& g, const InnerProductSpace& s) {
         GroupElement a = random_stabilizer_group(g, s), b = random_stabilizer_group(g, s);
         return expect(gal_matrix(compose(a, b)) == gal_matrix(a) * gal_matrix(b) &&
                           gal_matrix(inverse(a)) == inverse(gal_matrix(a)),
                       "P=" + detail::str(a.P) + " Q=" + detail::str(b.P));
       }},
      {"gal_algebra_homomorphism", [](Rng& g, const InnerProductSpace& s) {
         AlgebraElement a = random_stabilizer_algebra(g, s), b = random_stabilizer_algebra(g, s);
         Mat A = gal_algebra_matrix(a), B = gal_algebra_matrix(b);
         return expect(gal_algebra_matrix(bracket(a, b)) == A * B - B * A, "X=" + detail::str(a.X));
       }},
  });
  return r;
}

/// Dimension of o(Ṽ, K̃) for K̃ = I_n.
inline std::size_t dim_o(std::size_t n) { return n * (n - 1) / 2; }

/// Kernel of the pairing against the stabilizer subalgebra, as algebra elements.
inline std::vector<AlgebraElement> stabilizer_annihilator(const InnerProductSpace& s) {
  auto full = algebra_basis(s);
  auto stab = stabilizer_basis(s);
  Mat m(stab.size(), full.size());
  for (std::size_t j = 0; j < stab.size(); ++j)
    for (std::size_t i = 0; i < full.size(); ++i) m(j, i) = pairing(full[i], stab[j]);
  Mat ker = nullspace(m);
  std::vector<AlgebraElement> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    AlgebraElement a = algebra_zero(s);
    for (std::size_t i = 0; i < full.size(); ++i) {
      a.X += ker(i, k) * full[i].X;
      a.x += ker(i, k) * full[i].x;
    }
    out.push_back(a);
  }
  return out;
}

/// Whether a = (L_{v, e_{n+2}}, v0 e_{n+2}) for some v, v0.
inline bool has_annihilator_shape(const AlgebraElement& a) {
  const auto& s = a.space;
  Mat e = Mat::unit(s.dim, s.dim - 1);
  Mat v = a.X * Mat::unit(s.dim, 0);
  return a.X == lift(s, v, e) && a.x == a.x[s.dim - 1] * e;
}

/// Dimension formulas and the annihilator of the stabilizer.
inline SuiteResult suite_dims(std::uint64_t, int) {
  SuiteResult r{"dims"};
  for (std::size_t n : {1, 2, 3}) {
    InnerProductSpace s = standard_space(n);
    std::size_t a = algebra_basis(s).size(), b = stabilizer_basis(s).size();
    r.checks += 2;
    if (a != 3 * n + 3 + dim_o(n))
      r.failures.push_back("algebra dimension n=" + std::to_string(n) + ": got " + std::to_string(a));
    if (b != 1 + 2 * n + dim_o(n))
      r.failures.push_back("stabilizer dimension n=" + std::to_string(n) + ": got " + std::to_string(b));
  }
  for (std::size_t n : {1, 3}) {
    InnerProductSpace s = standard_space(n);
    auto ann = stabilizer_annihilator(s);
    ++r.checks;
    if (ann.size() != n + 2)
      r.failures.push_back("annihilator dimension n=" + std::to_string(n) + ": got " + std::to_string(ann.size()));
    for (const auto& a : ann) {
      ++r.checks;
      if (!has_annihilator_shape(a))
        r.failures.push_back("annihilator element not of the form (L_{v,e}, v0 e), n=" + std::to_string(n));
    }
  }
  return r;
}

/// classify, y1 and yᵀKy are unchanged by equivalences, in all four families.
inline SuiteResult suite_invariance(std::uint64_t seed, int trials) {
  SuiteResult r{"invariance"};
  std::vector<std::pair<std::string, Check>> checks;
  for (TupleCase c : kAllCases)
    checks.push_back({std::string("invariance_") + case_name(c), [c](Rng& g, const InnerProductSpace& s) {
                        SpecialTuple t = random_tuple(g, s, c);
                        SpecialTuple u = apply_equivalence(t, random_witness(g, s));
                        Decomposition a = classify(t), b = classify(u);
                        bool ok = a == b && parameter(t) == parameter(u);
                        if (parameter(t).is_zero()) ok = ok && form(s, t.y, t.y) == form(s, u.y, u.y);
                        return expect(ok, "t: " + detail::str(t) + " -> " + detail::str(a) + "; image -> " +
                                              detail::str(b));
                      }});
  run_checks(r, seed, trials, checks);
  return r;
}

struct Prop6Report {
  int pairs = 0, in_sample = 0, hidden = 0, independent = 0;
  int soundness_violations = 0, in_sample_disagreements = 0, hidden_misses = 0, hidden_found = 0;
  std::vector<std::string> details;
};

/**
 * Standardized case-1 pairs at n = 3. Pairs are built by an equivalence with
 * P̃ from the sample, by one with P̃ outside it, or independently.
 */
inline Prop6Report run_prop6(std::uint64_t seed, int pairs, int sample_size = 24) {
  Prop6Report rep;
  InnerProductSpace s = standard_space(3);
  Rng rng(detail::mix(seed ^ detail::name_hash("prop6")));
  std::vector<Mat> sample{Mat::identity(3)};
  while (static_cast<int>(sample.size()) < sample_size) sample.push_back(rng.orthogonal(Mat::identity(3)));
  for (int k = 0; k < pairs; ++k) {
    Rational y1 = rng.nonzero();
    SpecialTuple t1 = random_standard_case1(rng, s, y1);
    SpecialTuple t2;
    int kind = k % 3;
    if (kind == 0) {
      const Mat& pt = sample[static_cast<std::size_t>(rng.integer(0, sample_size - 1))];
      t2 = apply_equivalence(t1, case1_witness(rng, s, pt));
      ++rep.in_sample;
    } else if (kind == 1) {
      t2 = apply_equivalence(t1, case1_witness(rng, s, rng.orthogonal(Mat::identity(3))));
      ++rep.hidden;
    } else {
      t2 = random_standard_case1(rng, s, rng.coin() ? y1 : rng.nonzero());
      ++rep.independent;
    }
    ++rep.pairs;
    bool by_class = classify(t1) == classify(t2);
    bool by_search = search_case1_equivalence(t1, t2, sample).has_value();
    std::string tag = "pair " + std::to_string(k) + " (" + (kind == 0 ? "in-sample" : kind == 1 ? "hidden" : "independent") + ")";
    if (by_search && !by_class) {
      ++rep.soundness_violations;
      rep.details.push_back(tag + ": witness found but decompositions differ");
    }
    if (kind == 0 && !(by_search && by_class)) {
      ++rep.in_sample_disagreements;
      rep.details.push_back(tag + ": expected both verdicts to be 'equivalent'");
    }
    if (kind == 1) {
      if (!by_class) {
        ++rep.in_sample_disagreements;
        rep.details.push_back(tag + ": equivalent by construction but decompositions differ");
      }
      (by_search ? rep.hidden_found : rep.hidden_misses)++;
    }
    if (kind == 2 && by_class != by_search) {
      if (by_class) ++rep.hidden_misses;
      rep.details.push_back(tag + ": verdicts differ (classify " + (by_class ? "equal" : "distinct") + ", search " +
                            (by_search ? "found" : "none") + ")");
    }
  }
  return rep;
}

inline SuiteResult suite_prop6(std::uint64_t seed, int trials) {
  SuiteResult r{"prop6"};
  Prop6Report rep = run_prop6(seed, trials < 3 ? 3 : trials);
  r.checks = rep.pairs;
  if (rep.soundness_violations || rep.in_sample_disagreements)
    for (const auto& d : rep.details) r.failures.push_back(d);
  r.notes.push_back(std::to_string(rep.pairs) + " pairs; completeness sample: " + std::to_string(rep.hidden_found) +
                    " of " + std::to_string(rep.hidden) + " hidden equivalences recovered by the sampled search");
  return r;
}

/// Outcome of round-tripping one atlas row through representative() and classify().
struct RoundTrip {
  Decomposition requested;
  std::optional<Decomposition> classified;
  std::string error;  ///< set when no representative was built
  bool ok = false;
};

inline std::vector<RoundTrip> round_trip_atlas(const OrbitAtlas& atlas, int variant) {
  std::vector<RoundTrip> out;
  for (const auto& row : atlas.rows) {
    RoundTrip rt;
    auto moduli = sample_moduli(row.decomposition, variant);
    rt.requested = with_moduli(row.decomposition, moduli);
    try {
      Representative rep = representative(row.decomposition, moduli);
      rt.classified = classify(rep.tuple);
      rt.ok = *rt.classified == rt.requested;
    } catch (const Error& e) {
      rt.error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    out.push_back(rt);
  }
  return out;
}

/// Row numbers (1-based) whose representative is blocked on an underived affine construction.
inline std::vector<int> pending_affine_rows() { return {}; }

inline SuiteResult suite_roundtrip(std::uint64_t, int) {
  SuiteResult r{"roundtrip"};
  for (auto [dim, index] : {std::pair{5, 1}, std::pair{3, 1}}) {
    OrbitAtlas atlas = enumerate(dim, index);
    annotate(atlas, gal3_table());
    for (int variant : {0, 1}) {
      auto rts = round_trip_atlas(atlas, variant);
      for (std::size_t i = 0; i < rts.size(); ++i) {
        ++r.checks;
        if (rts[i].ok) continue;
        const auto& row = atlas.rows[i];
        std::string tag = "(" + std::to_string(dim) + "," + std::to_string(index) + ") row " + std::to_string(i + 1) +
                          (row.paper_row ? " [table row " + std::to_string(*row.paper_row) + "]" : "") + " " +
                          detail::str(rts[i].requested);
        if (variant == 1 && !rts[i].error.empty()) continue;  // same obstruction as variant 0
        r.failures.push_back(tag + (rts[i].classified ? " classifies as " + detail::str(*rts[i].classified)
                                                       : " has no representative: " + rts[i].error));
      }
    }
  }
  r.notes.push_back("rows pending an affine representative: none");
  return r;
}

inline SuiteResult suite_atlas(std::uint64_t, int) {
  SuiteResult r{"atlas"};
  OrbitAtlas atlas = enumerate(5, 1);
  AtlasDiff diff = atlas_diff(atlas, rows_of(gal3_table()));
  Decomposition expected_extra = decomposition_from_tokens({"N0-", "IP", "IP"});
  r.checks = 3;
  if (atlas.rows.size() != 16) r.failures.push_back("expected 16 rows, got " + std::to_string(atlas.rows.size()));
  for (const auto& m : diff.missing) r.failures.push_back("missing table row: " + detail::str(m));
  if (!(diff.extra.size() == 1 && diff.extra[0] == expected_extra))
    for (const auto& x : diff.extra) r.failures.push_back("unexpected extra row: " + detail::str(x));
  r.notes.push_back("missing: " + std::to_string(diff.missing.size()) + " rows");
  for (const auto& x : diff.extra) r.notes.push_back("extra (NOT-IN-PAPER): " + detail::str(x));
  return r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

inline const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"facts", suite_facts},         {"claims", suite_claims}, {"adjoint", suite_adjoint},
      {"gal", suite_gal},             {"dims", suite_dims},     {"invariance", suite_invariance},
      {"prop6", suite_prop6},         {"roundtrip", suite_roundtrip}, {"atlas", suite_atlas},
  };
  return all;
}

inline SuiteFn find_suite(const std::string& name) {
  for (const auto& [n, f] : suites())
    if (n == name) return f;
  return nullptr;
}

}  // namespace galorb
