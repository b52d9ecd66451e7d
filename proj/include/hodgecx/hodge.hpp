#pragma once

#include <hodgecx/constructions.hpp>
#include <hodgecx/spectral.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgecx {

struct OpposednessFailure {
  int n = 0;  // weight
  int p = 0;  // F index
  int q = 0;  // Fbar index
  std::string detail;
};

// Deligne's n-opposedness on each weight-graded piece: for every n and p,
// F^p Gr_n + Fbar^{n-p+1} Gr_n is a direct sum equal to Gr_n; equivalently
// the bigraded pieces Gr_F^p Gr_Fbar^q Gr^W_n vanish unless p + q = n.
template <class K>
std::optional<OpposednessFailure> opposedness_failure(const FilteredSpace<K>& h) {
  if (h.dim == 0) return std::nullopt;
  auto bigraded_dim = [](const FiltChain<K>& f, const FiltChain<K>& fb, int p, int q,
                         int ambient) {
    if (ambient == 0) return 0;
    Subspace<K> a = f.at(p).intersect(fb.at(q)).sum(fb.at(q + 1));
    Subspace<K> b = f.at(p + 1).intersect(fb.at(q)).sum(fb.at(q + 1));
    return a.dim() - b.dim();
  };
  for (int wk = -h.w.zero_from(); wk <= -h.w.full_until() + 1; ++wk) {
    // Increasing weight wk corresponds to decreasing index -wk.
    SubQuotient<K> gr(h.w.at(-wk), h.w.at(-wk + 1));
    if (gr.dim() == 0) continue;
    FiltChain<K> fg = FiltChain<K>::build(gr.dim(), h.f.full_until(), h.f.zero_from(),
                                          [&](int p) { return gr.project_subspace(h.f.at(p)); });
    FiltChain<K> fbg =
        FiltChain<K>::build(gr.dim(), h.fbar.full_until(), h.fbar.zero_from(),
                            [&](int p) { return gr.project_subspace(h.fbar.at(p)); });
    for (int p = fg.full_until(); p <= fg.zero_from(); ++p) {
      Subspace<K> a = fg.at(p);
      Subspace<K> b = fbg.at(wk - p + 1);
      bool direct = a.intersect(b).is_zero() && a.dim() + b.dim() == gr.dim();
      if (!direct) {
        // Locate an off-diagonal bigraded piece as the witness.
        for (int pp = fg.full_until(); pp <= fg.zero_from(); ++pp)
          for (int qq = fbg.full_until(); qq <= fbg.zero_from(); ++qq) {
            if (pp + qq == wk) continue;
            if (bigraded_dim(fg, fbg, pp, qq, gr.dim()) != 0)
              return OpposednessFailure{wk, pp, qq, "nonzero bigraded piece off the diagonal"};
          }
        return OpposednessFailure{wk, p, wk - p + 1, "F^p and conjugate complement not direct"};
      }
    }
  }
  return std::nullopt;
}

template <class K>
bool is_opposed(const FilteredSpace<K>& h) {
  return !opposedness_failure(h).has_value();
}

template <class K>
bool is_pure(const FilteredSpace<K>& h, int n) {
  return h.w.at(-n).is_full() && h.w.at(-n + 1).is_zero();
}

// A filtered space whose three filtrations are opposed.
template <class K>
class CHodgeStructure {
 public:
  static std::optional<CHodgeStructure> validated(FilteredSpace<K> data) {
    if (!data.structural_problems().empty()) return std::nullopt;
    if (opposedness_failure(data)) return std::nullopt;
    return CHodgeStructure(std::move(data));
  }
  static CHodgeStructure require(FilteredSpace<K> data) {
    auto v = validated(std::move(data));
    if (!v) throw std::invalid_argument("CHodgeStructure: filtrations are not opposed");
    return *v;
  }

  const FilteredSpace<K>& data() const { return data_; }
  int dim() const { return data_.dim; }
  bool pure_of(int n) const { return is_pure(data_, n); }

  // Weights with nonzero graded piece, increasing.
  std::vector<int> weights() const {
    std::vector<int> out;
    for (int wk = -data_.w.zero_from(); wk <= -data_.w.full_until() + 1; ++wk) {
      if (data_.w.at(-wk).dim() - data_.w.at(-wk + 1).dim() > 0) out.push_back(wk);
    }
    return out;
  }

  friend bool operator==(const CHodgeStructure& a, const CHodgeStructure& b) {
    return a.data_ == b.data_;
  }

 private:
  explicit CHodgeStructure(FilteredSpace<K> data) : data_(std::move(data)) {}
  FilteredSpace<K> data_;
};

// Does m preserve all three filtrations of the given spaces?
template <class K>
bool preserves_filtrations(const Matrix<K>& m, const FilteredSpace<K>& src,
                           const FilteredSpace<K>& dst) {
  const FiltChain<K>* a[3] = {&src.f, &src.fbar, &src.w};
  const FiltChain<K>* b[3] = {&dst.f, &dst.fbar, &dst.w};
  for (int t = 0; t < 3; ++t)
    for (const auto& j : a[t]->jumps())
      if (!b[t]->at(j.first).contains(j.second.image_under(m))) return false;
  return true;
}

// Is m strict for all three filtrations: m(F^p) = im(m) meet F^p?
template <class K>
bool is_strict_morphism(const Matrix<K>& m, const FilteredSpace<K>& src,
                        const FilteredSpace<K>& dst) {
  const FiltChain<K>* a[3] = {&src.f, &src.fbar, &src.w};
  const FiltChain<K>* b[3] = {&dst.f, &dst.fbar, &dst.w};
  for (int t = 0; t < 3; ++t)
    if (!strict_map_check(m, *a[t], *b[t]).strict) return false;
  return true;
}

template <class K>
FilteredSpace<K> restrict_to_subquotient(const FilteredSpace<K>& h, const SubQuotient<K>& sq) {
  FilteredSpace<K> out;
  out.dim = sq.dim();
  auto ind = [&](const FiltChain<K>& ch) {
    if (sq.dim() == 0) return FiltChain<K>(0);
    return FiltChain<K>::build(sq.dim(), ch.full_until(), ch.zero_from(),
                               [&](int p) { return sq.project_subspace(ch.at(p)); });
  };
  out.f = ind(h.f);
  out.fbar = ind(h.fbar);
  out.w = ind(h.w);
  return out;
}

// Validated morphism of Hodge structures with kernel, image and cokernel
// carrying the induced structures; strictness is verified, not assumed.
template <class K>
struct HodgeMorphism {
  Matrix<K> map;
  CHodgeStructure<K> src, dst;
  CHodgeStructure<K> kernel, image, cokernel;
  bool strict = false;
};

template <class K>
HodgeMorphism<K> hs_morphism(const Matrix<K>& m, const CHodgeStructure<K>& src,
                             const CHodgeStructure<K>& dst) {
  if (m.cols() != src.dim() || m.rows() != dst.dim())
    throw std::invalid_argument("hs_morphism: shape mismatch");
  if (!preserves_filtrations(m, src.data(), dst.data()))
    throw std::invalid_argument("hs_morphism: filtrations not preserved");
  Subspace<K> ker = Subspace<K>::span(src.dim(), kernel_basis(m));
  Subspace<K> im = Subspace<K>::full(src.dim()).image_under(m);
  SubQuotient<K> ker_sq(ker, Subspace<K>::zero(src.dim()));
  SubQuotient<K> im_sq(im, Subspace<K>::zero(dst.dim()));
  SubQuotient<K> coker_sq(Subspace<K>::full(dst.dim()), im);
  HodgeMorphism<K> out{m,
                       src,
                       dst,
                       CHodgeStructure<K>::require(restrict_to_subquotient(src.data(), ker_sq)),
                       CHodgeStructure<K>::require(restrict_to_subquotient(dst.data(), im_sq)),
                       CHodgeStructure<K>::require(restrict_to_subquotient(dst.data(), coker_sq)),
                       false};
  out.strict = is_strict_morphism(m, src.data(), dst.data());
  return out;
}

// Dimension of the space of filtration-preserving maps src -> dst.
template <class K>
int hom_space_dim(const FilteredSpace<K>& src, const FilteredSpace<K>& dst) {
  // Unknowns: entries of m. Conditions: for each filtration jump (p, S) of
  // the source and each equation row e of dst-F^p: e . (m v) = 0 for v in S.
  int vars = src.dim * dst.dim;
  std::vector<std::vector<K>> rows;
  const FiltChain<K>* a[3] = {&src.f, &src.fbar, &src.w};
  const FiltChain<K>* b[3] = {&dst.f, &dst.fbar, &dst.w};
  for (int t = 0; t < 3; ++t) {
    for (const auto& j : a[t]->jumps()) {
      Matrix<K> eq = b[t]->at(j.first).equations();
      for (int vi = 0; vi < j.second.dim(); ++vi) {
        std::vector<K> v = j.second.basis().row(vi);
        for (int e = 0; e < eq.rows(); ++e) {
          std::vector<K> row(static_cast<size_t>(vars), K(0));
          for (int r = 0; r < dst.dim; ++r)
            for (int c = 0; c < src.dim; ++c)
              row[static_cast<size_t>(r * src.dim + c)] = eq.at(e, r) * v[static_cast<size_t>(c)];
          rows.push_back(std::move(row));
        }
      }
    }
  }
  if (rows.empty()) return vars;
  return vars - rank(Matrix<K>::from_rows(rows));
}

struct HodgeValidationReport {
  bool valid = true;
  std::string axiom;   // HC1 | HC2 | HC3 | structure
  int i = 0;           // cohomological degree (HC3) or complex degree (HC2)
  int p = 0;           // weight-graded index
  std::string detail;
  std::vector<std::string> witness;  // vector entries as strings
};

template <class K>
HodgeValidationReport validate_hodge_complex_report(const TriFilteredComplex<K>& a) {
  HodgeValidationReport rep;
  // HC1: bounded support with finite-dimensional entries is structural here;
  // re-check the structural invariants for interface uniformity.
  auto problems = a.structural_problems();
  if (!problems.empty()) {
    rep.valid = false;
    rep.axiom = "HC1";
    rep.detail = problems.front();
    return rep;
  }
  int w_lo = a.w.min_index(), w_hi = a.w.max_index();
  for (int p = w_lo; p <= w_hi; ++p) {
    auto gr = graded_piece(a, Which::W, p);
    if (gr.gr.cx.is_zero_complex()) continue;
    // HC2: strictness of both induced filtrations on Gr_W^p.
    for (const Filtration<K>* filt : {&gr.gr.f, &gr.gr.fbar}) {
      auto sr = strictness_check(gr.gr.cx, *filt);
      if (!sr.strict) {
        rep.valid = false;
        rep.axiom = "HC2";
        rep.i = sr.witness->degree;
        rep.p = p;
        rep.detail = filt == &gr.gr.f ? "induced F not strict" : "induced Fbar not strict";
        for (const K& x : sr.witness->vec) rep.witness.push_back(ScalarIO<K>::write(x));
        return rep;
      }
    }
  }
  for (int p = w_lo; p <= w_hi; ++p) {
    auto gr = graded_piece(a, Which::W, p);
    if (gr.gr.cx.is_zero_complex()) continue;
    // HC3: H^i(Gr_W^p) with the image filtrations is pure of weight i - p.
    auto h = cohomology_with_final_filtrations(gr.gr);
    for (int i = gr.gr.cx.lo(); i <= gr.gr.cx.hi(); ++i) {
      if (h.dim(i) == 0) continue;
      FilteredSpace<K> cand;
      cand.dim = h.dim(i);
      cand.f = h.space(i).f;
      cand.fbar = h.space(i).fbar;
      cand.w = FiltChain<K>::trivial(cand.dim, p - i);  // pure of weight i - p
      if (auto fail = opposedness_failure(cand)) {
        rep.valid = false;
        rep.axiom = "HC3";
        rep.i = i;
        rep.p = p;
        rep.detail = "H^" + std::to_string(i) + "(Gr_W^" + std::to_string(p) +
                     ") not pure of weight " + std::to_string(i - p) + " at (n,p,q)=(" +
                     std::to_string(fail->n) + "," + std::to_string(fail->p) + "," +
                     std::to_string(fail->q) + ")";
        return rep;
      }
    }
  }
  return rep;
}

// A trifiltered complex together with its validation outcome.
template <class K>
class CHodgeComplex {
 public:
  explicit CHodgeComplex(TriFilteredComplex<K> data)
      : data_(std::move(data)), report_(validate_hodge_complex_report(data_)) {}

  const TriFilteredComplex<K>& data() const { return data_; }
  const HodgeValidationReport& report() const { return report_; }
  bool valid() const { return report_.valid; }
  void ensure_valid() const {
    if (!report_.valid)
      throw std::invalid_argument("CHodgeComplex: " + report_.axiom + " fails: " + report_.detail);
  }

 private:
  TriFilteredComplex<K> data_;
  HodgeValidationReport report_;
};

template <class K>
struct Theorem1Result {
  int lo = 0;
  std::vector<CHodgeStructure<K>> structures;  // per degree lo..
  FilteredCohomology<K> cohomology;            // realizations inside the complex
  int w_page = 1;
  int f_page = 1;
  int fbar_page = 1;
  bool e2_entries_pure = true;
  bool d2_vanishes = true;

  bool has(int n) const { return n >= lo && n < lo + static_cast<int>(structures.size()); }
  const CHodgeStructure<K>& at(int n) const {
    return structures.at(static_cast<size_t>(n - lo));
  }
  // Zero structure outside the support.
  FilteredSpace<K> space(int n) const {
    if (has(n)) return at(n).data();
    return FilteredSpace<K>{};
  }
  int hi() const { return lo + static_cast<int>(structures.size()) - 1; }
};

// Cohomology of a validated Hodge complex with its C-Hodge structures and
// the degeneration certificates.
template <class K>
Theorem1Result<K> theorem1(const CHodgeComplex<K>& a) {
  a.ensure_valid();
  const TriFilteredComplex<K>& t = a.data();
  Theorem1Result<K> out;
  out.lo = t.cx.lo();
  out.cohomology = cohomology_with_final_filtrations(t);
  for (int n = t.cx.lo(); n <= t.cx.hi(); ++n)
    out.structures.push_back(CHodgeStructure<K>::require(out.cohomology.space(n)));

  SpectralSequence<K> ssw(t.cx, t.w);
  out.w_page = ssw.degeneration_page();
  if (out.w_page > 2) throw std::logic_error("theorem1: W spectral sequence past E_2");
  out.f_page = SpectralSequence<K>(t.cx, t.f).degeneration_page();
  out.fbar_page = SpectralSequence<K>(t.cx, t.fbar).degeneration_page();
  if (out.f_page != 1 || out.fbar_page != 1)
    throw std::logic_error("theorem1: F spectral sequence past E_1");

  // E_2 entries are pure of weight q; hence d_2 = 0. Checked independently.
  auto dir_f = direct_filtration(ssw, t.f, 2);
  auto dir_fb = direct_filtration(ssw, t.fbar, 2);
  for (int p = ssw.p_lo(); p <= ssw.p_hi(); ++p)
    for (int n = t.cx.lo(); n <= t.cx.hi(); ++n) {
      int q = n - p;
      int d = ssw.dim_entry(2, p, q);
      if (d == 0) continue;
      FilteredSpace<K> cand;
      cand.dim = d;
      cand.f = dir_f.chain(p, q);
      cand.fbar = dir_fb.chain(p, q);
      cand.w = FiltChain<K>::trivial(d, -q);
      if (!is_opposed(cand) || !is_pure(cand, q)) out.e2_entries_pure = false;
      if (!ssw.differential(2, p, q).is_zero()) out.d2_vanishes = false;
    }
  return out;
}

struct GrfCertificate {
  int index = 0;
  int page = 1;
  bool holds = false;  // page <= 2
};

// The W spectral sequence on Gr_F^i degenerates at E_2.
template <class K>
GrfCertificate prop_grf_degeneration(const CHodgeComplex<K>& a, int i) {
  a.ensure_valid();
  auto gr = graded_piece(a.data(), Which::F, i);
  GrfCertificate cert;
  cert.index = i;
  if (gr.gr.cx.is_zero_complex()) {
    cert.page = 1;
    cert.holds = true;
    return cert;
  }
  cert.page = SpectralSequence<K>(gr.gr.cx, gr.gr.w).degeneration_page();
  cert.holds = cert.page <= 2;
  return cert;
}

template <class K>
struct ConeLes {
  Theorem1Result<K> a, b, c;
  // Per degree n in the window: H^n(B) -> H^n(Cone) -> H^{n+1}(A) -> H^{n+1}(B).
  int lo = 0;
  std::vector<Matrix<K>> u, v, delta;
  bool exact = false;
  bool morphisms_ok = false;
  bool strict_ok = false;
};

// Long exact sequence of the cone of a morphism of valid Hodge complexes, as
// a sequence of C-Hodge structures. The translate shift and the degree shift
// in the weight filtration cancel, so no twist appears anywhere.
template <class K>
ConeLes<K> cone_les(const TriMap<K>& f) {
  CHodgeComplex<K> ca(f.src());
  CHodgeComplex<K> cb(f.dst());
  auto cn = cone(f);
  CHodgeComplex<K> cc(cn.cone);
  ca.ensure_valid();
  cb.ensure_valid();
  cc.ensure_valid();
  ConeLes<K> out;
  out.a = theorem1(ca);
  out.b = theorem1(cb);
  out.c = theorem1(cc);
  Complex<K> a1 = translate(f.src(), 1).cx;
  Cohomology<K> hb(f.dst().cx), hc(cn.cone.cx), ha1(a1);
  int lo = cn.cone.cx.lo() - 1, hi = cn.cone.cx.hi() + 1;
  out.lo = lo;
  auto deltas = connecting_maps(cn.from_target, cn.to_shift, hb, ha1, lo, hi);
  out.exact = true;
  out.morphisms_ok = true;
  out.strict_ok = true;
  std::vector<Matrix<K>> run;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> un = hb.at(n).induced_map(cn.from_target.at(n), hc.at(n));
    Matrix<K> vn = hc.at(n).induced_map(cn.to_shift.at(n), ha1.at(n));
    Matrix<K> dn = deltas[static_cast<size_t>(n - lo)];
    out.u.push_back(un);
    out.v.push_back(vn);
    out.delta.push_back(dn);
    run.push_back(un);
    run.push_back(vn);
    run.push_back(dn);
    // H^n(A[1]) carries exactly the structure of H^{n+1}(A).
    FilteredSpace<K> sa1 = out.a.space(n + 1);
    FilteredSpace<K> sb = out.b.space(n);
    FilteredSpace<K> sb1 = out.b.space(n + 1);
    FilteredSpace<K> sc = out.c.space(n);
    if (!preserves_filtrations(un, sb, sc) || !preserves_filtrations(vn, sc, sa1) ||
        !preserves_filtrations(dn, sa1, sb1))
      out.morphisms_ok = false;
    if (!is_strict_morphism(un, sb, sc) || !is_strict_morphism(vn, sc, sa1) ||
        !is_strict_morphism(dn, sa1, sb1))
      out.strict_ok = false;
  }
  out.exact = is_exact_sequence(run);
  return out;
}

// Gr_F Gr_W (f) and Gr_Fbar Gr_W (f) are quasi-isomorphisms in every bidegree.
template <class K>
bool acyclic_resolution_check(const TriMap<K>& f) {
  const TriFilteredComplex<K>& a = f.src();
  const TriFilteredComplex<K>& b = f.dst();
  int w_lo = std::min(a.w.min_index(), b.w.min_index());
  int w_hi = std::max(a.w.max_index(), b.w.max_index());
  for (int k = w_lo; k <= w_hi; ++k) {
    auto ga = graded_piece(a, Which::W, k);
    auto gb = graded_piece(b, Which::W, k);
    auto fr = [&](int n) -> const SubQuotient<K>& {
      static const SubQuotient<K> empty;
      if (n < a.cx.lo() || n > a.cx.hi()) return empty;
      return ga.realize[static_cast<size_t>(n - a.cx.lo())];
    };
    auto to = [&](int n) -> const SubQuotient<K>& {
      static const SubQuotient<K> empty;
      if (n < b.cx.lo() || n > b.cx.hi()) return empty;
      return gb.realize[static_cast<size_t>(n - b.cx.lo())];
    };
    auto gmap = ComplexMap<K>::build(ga.gr.cx, gb.gr.cx, [&](int n) {
      if (fr(n).dim() == 0) return Matrix<K>::zero(to(n).dim(), 0);
      return fr(n).induced_map(f.at(n), to(n));
    });
    for (auto which : {Which::F, Which::Fbar}) {
      const Filtration<K>& fa = which == Which::F ? ga.gr.f : ga.gr.fbar;
      const Filtration<K>& fb = which == Which::F ? gb.gr.f : gb.gr.fbar;
      int f_lo = std::min(fa.min_index(), fb.min_index());
      int f_hi = std::max(fa.max_index(), fb.max_index());
      for (int i = f_lo; i <= f_hi; ++i) {
        auto gga = graded_piece(ga.gr, which, i);
        auto ggb = graded_piece(gb.gr, which, i);
        auto ffr = [&](int n) -> const SubQuotient<K>& {
          static const SubQuotient<K> empty;
          if (n < ga.gr.cx.lo() || n > ga.gr.cx.hi()) return empty;
          return gga.realize[static_cast<size_t>(n - ga.gr.cx.lo())];
        };
        auto tto = [&](int n) -> const SubQuotient<K>& {
          static const SubQuotient<K> empty;
          if (n < gb.gr.cx.lo() || n > gb.gr.cx.hi()) return empty;
          return ggb.realize[static_cast<size_t>(n - gb.gr.cx.lo())];
        };
        auto ggmap = ComplexMap<K>::build(gga.gr.cx, ggb.gr.cx, [&](int n) {
          if (ffr(n).dim() == 0) return Matrix<K>::zero(tto(n).dim(), 0);
          return ffr(n).induced_map(gmap.at(n), tto(n));
        });
        if (!is_quasi_iso(ggmap)) return false;
      }
    }
  }
  return true;
}

// Rational structures live over the Gaussian rationals: a rational form is a
// basis whose rational span is stable under the induced conjugation; W must
// be defined over the form and Fbar must be the conjugate of F.
struct RationalStructureData {
  Matrix<GaussRational> basis;                       // rows = basis of the form
  std::vector<std::vector<GaussRational>> lattice;   // optional generators
};

struct RationalStructureReport {
  bool ok = true;
  std::string problem;
  int index = 0;                                     // filtration index involved
  std::vector<std::string> witness;
};

class Conjugation {
 public:
  explicit Conjugation(const Matrix<GaussRational>& basis_rows) {
    bt_ = basis_rows.transpose();
    auto inv = inverse(bt_);
    if (!inv) throw std::invalid_argument("Conjugation: basis is not invertible");
    bt_inv_ = *inv;
  }

  std::vector<GaussRational> operator()(const std::vector<GaussRational>& v) const {
    std::vector<GaussRational> c = bt_inv_.apply(v);
    for (auto& x : c) x = conjugate(x);
    return bt_.apply(c);
  }

  Subspace<GaussRational> map(const Subspace<GaussRational>& s) const {
    std::vector<std::vector<GaussRational>> gens;
    for (int i = 0; i < s.dim(); ++i) gens.push_back((*this)(s.basis().row(i)));
    return Subspace<GaussRational>::span_vectors(s.ambient(), gens);
  }

  // Coordinates in the rational form; rational iff all imaginary parts vanish.
  std::vector<GaussRational> coords(const std::vector<GaussRational>& v) const {
    return bt_inv_.apply(v);
  }

 private:
  Matrix<GaussRational> bt_, bt_inv_;
};

inline RationalStructureReport check_rational_structure(
    const FilteredSpace<GaussRational>& h, const RationalStructureData& rs) {
  RationalStructureReport rep;
  if (rs.basis.rows() != h.dim || rs.basis.cols() != h.dim) {
    rep.ok = false;
    rep.problem = "basis shape mismatch";
    return rep;
  }
  std::optional<Conjugation> sigma;
  try {
    sigma.emplace(rs.basis);
  } catch (const std::exception&) {
    rep.ok = false;
    rep.problem = "basis not invertible";
    return rep;
  }
  // W rational: every W step is conjugation-stable (equivalently spanned by
  // its intersection with the rational form).
  for (const auto& j : h.w.jumps()) {
    Subspace<GaussRational> image = sigma->map(j.second);
    if (!(image == j.second)) {
      rep.ok = false;
      rep.problem = "W is not defined over the rational form";
      rep.index = j.first;
      for (int t = 0; t < j.second.dim(); ++t) {
        std::vector<GaussRational> v = j.second.basis().row(t);
        if (!j.second.contains((*sigma)(v))) {
          for (const auto& x : v) rep.witness.push_back(to_string(x));
          break;
        }
      }
      return rep;
    }
  }
  // Fbar is the conjugate of F.
  int lo = std::min(h.f.full_until(), h.fbar.full_until());
  int hi = std::max(h.f.zero_from(), h.fbar.zero_from());
  for (int p = lo; p <= hi; ++p) {
    if (!(sigma->map(h.f.at(p)) == h.fbar.at(p))) {
      rep.ok = false;
      rep.problem = "Fbar is not the conjugate of F";
      rep.index = p;
      return rep;
    }
  }
  // Optional lattice: generators lie in the rational form and span it.
  if (!rs.lattice.empty()) {
    std::vector<std::vector<Rational>> rational_coords;
    for (size_t t = 0; t < rs.lattice.size(); ++t) {
      auto c = sigma->coords(rs.lattice[t]);
      std::vector<Rational> row;
      for (const auto& x : c) {
        if (!(x.im == 0)) {
          rep.ok = false;
          rep.problem = "lattice generator outside the rational form";
          rep.index = static_cast<int>(t);
          return rep;
        }
        row.push_back(x.re);
      }
      rational_coords.push_back(std::move(row));
    }
    if (rank(Matrix<Rational>::from_rows(rational_coords)) != h.dim) {
      rep.ok = false;
      rep.problem = "lattice does not span the rational form";
      return rep;
    }
  }
  return rep;
}

struct MixedHodgeOutcome {
  Theorem1Result<GaussRational> structures;
  std::vector<RationalStructureReport> reports;  // per degree
  bool ok = true;
};

// Theorem 1 output bundled with per-degree rational structures, verified.
inline MixedHodgeOutcome mixed_hodge_structure(
    const CHodgeComplex<GaussRational>& a,
    const std::vector<RationalStructureData>& per_degree) {
  MixedHodgeOutcome out{theorem1(a), {}, true};
  if (static_cast<int>(per_degree.size()) != static_cast<int>(out.structures.structures.size()))
    throw std::invalid_argument("mixed_hodge_structure: one rational structure per degree");
  for (size_t t = 0; t < per_degree.size(); ++t) {
    out.reports.push_back(check_rational_structure(
        out.structures.structures[t].data(), per_degree[t]));
    if (!out.reports.back().ok) out.ok = false;
  }
  return out;
}

}  // namespace hodgecx
