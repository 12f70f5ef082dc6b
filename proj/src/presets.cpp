#include "smashhc/presets.hpp"

#include <algorithm>
#include <sstream>

namespace smashhc::presets {

namespace {

AlgebraPtr power_basis_algebra(const std::string& name, unsigned n,
                               const std::string& gen) {
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (unsigned i = 1; i < n; ++i)
    labels[i] = i == 1 ? gen : gen + "^" + std::to_string(i);
  std::vector<SparseVec> mult(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      mult[static_cast<std::size_t>(i) * n + j] = sparse_unit((i + j) % n);
  return std::make_shared<FinDimAlgebra>(name, std::move(labels),
                                         sparse_unit(0), std::move(mult));
}

Scalar q_int(const Scalar& q, unsigned m) {
  Scalar acc(0);
  Scalar p(1);
  for (unsigned t = 0; t < m; ++t) {
    acc += p;
    p *= q;
  }
  return acc;
}

void validate_hopf(const HopfAlgebra& h) {
  CheckReport rep = h.check();
  if (!rep.all_pass())
    throw AxiomViolation(h.alg()->name() + " fails Hopf axioms:\n" +
                         rep.summary());
}

// multiplication in H (x) H (componentwise, no braiding)
SparseVec mul2(const AlgebraPtr& alg, const SparseVec& x, const SparseVec& y) {
  Index d = alg->dim();
  SparseVec out;
  for (const auto& ex : x)
    for (const auto& ey : y) {
      Index x1 = ex.row / d, x2 = ex.row % d;
      Index y1 = ey.row / d, y2 = ey.row % d;
      const SparseVec& p1 = alg->mult(x1, y1);
      const SparseVec& p2 = alg->mult(x2, y2);
      for (const auto& e1 : p1)
        for (const auto& e2 : p2)
          sparse_axpy(out, ex.val * ey.val * e1.val * e2.val,
                      sparse_unit(e1.row * d + e2.row));
    }
  return out;
}

}  // namespace

AlgebraPtr dual_numbers() {
  std::vector<SparseVec> mult(4);
  mult[0] = sparse_unit(0);
  mult[1] = sparse_unit(1);
  mult[2] = sparse_unit(1);
  mult[3] = {};
  return std::make_shared<FinDimAlgebra>("D", std::vector<std::string>{"1", "s"},
                                         sparse_unit(0), std::move(mult));
}

AlgebraPtr cyclic_group_algebra(unsigned n) {
  if (n == 0) throw UnknownPreset("cyclic_group(0)");
  return power_basis_algebra("K" + std::to_string(n), n, "g");
}

AlgebraPtr truncated_poly_algebra(unsigned n) {
  if (n == 0) throw UnknownPreset("truncated_poly(0)");
  return power_basis_algebra("A" + std::to_string(n), n, "x");
}

namespace {

HopfAlgebra group_like_hopf(const AlgebraPtr& alg, unsigned n) {
  TensorSpace sh({alg});
  SparseMatrix cop(sh.dim32() * sh.dim32(), sh.dim32());
  for (Index i = 0; i < n; ++i) cop.set_col(i, sparse_unit(i * n + i));
  SparseMatrix cu(1, n);
  for (Index i = 0; i < n; ++i) cu.set(0, i, Scalar(1));
  SparseMatrix s(n, n);
  for (Index i = 0; i < n; ++i) s.set_col(i, sparse_unit((n - i) % n));
  return HopfAlgebra(alg, TensorMap(sh, TensorSpace({alg, alg}), std::move(cop)),
                     TensorMap(sh, TensorSpace(), std::move(cu)), std::move(s));
}

}  // namespace

HopfAlgebra cyclic_group_hopf(unsigned n) {
  return group_like_hopf(cyclic_group_algebra(n), n);
}

HopfAlgebra taft(unsigned n) {
  if (n < 2) throw UnknownPreset("taft(" + std::to_string(n) + ")");
  Scalar q = Scalar::zeta(n);
  if (!q_int(q, n).is_zero())
    throw UnsupportedField("taft(" + std::to_string(n) +
                           "): (N)_q != 0 at the chosen root of unity");
  Index dim = n * n;
  // basis g^i d^j at flat index i*n + j; d g = q g d
  std::vector<std::string> labels(dim);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::string l;
      if (i == 1)
        l = "g";
      else if (i > 1)
        l = "g^" + std::to_string(i);
      if (j >= 1) {
        if (!l.empty()) l += " ";
        l += (j == 1 ? "d" : "d^" + std::to_string(j));
      }
      labels[i * n + j] = l.empty() ? "1" : l;
    }
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
          SparseVec out;
          if (j + l < n) {
            Scalar c(1);
            for (unsigned t = 0; t < j * k; ++t) c *= q;
            out = sparse_unit(((i + k) % n) * n + (j + l), c);
          }
          mult[static_cast<std::size_t>(i * n + j) * dim + (k * n + l)] =
              std::move(out);
        }
  auto alg = std::make_shared<FinDimAlgebra>("Dbar" + std::to_string(n),
                                             std::move(labels), sparse_unit(0),
                                             std::move(mult));
  TensorSpace sh({alg});
  // coproduct by multiplying out Delta(g)^i Delta(d)^j in H (x) H
  SparseVec cop_g = sparse_unit(static_cast<Index>(n) * dim + n);  // g (x) g
  SparseVec cop_d;  // d (x) 1 + g (x) d
  cop_d.push_back({static_cast<Index>(1) * dim + 0, Scalar(1)});
  cop_d.push_back({static_cast<Index>(n) * dim + 1, Scalar(1)});
  std::sort(cop_d.begin(), cop_d.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  SparseMatrix cop(sh.dim32() * sh.dim32(), sh.dim32());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      SparseVec acc = sparse_unit(0);  // 1 (x) 1
      for (unsigned t = 0; t < i; ++t) acc = mul2(alg, acc, cop_g);
      for (unsigned t = 0; t < j; ++t) acc = mul2(alg, acc, cop_d);
      cop.set_col(i * n + j, std::move(acc));
    }
  SparseMatrix cu(1, dim);
  for (unsigned i = 0; i < n; ++i) cu.set(0, i * n + 0, Scalar(1));
  // antipode: S(g) = g^{n-1}, S(d) = -g^{n-1} d; antihomomorphism
  SparseMatrix anti(dim, dim);
  SparseVec s_g = sparse_unit((n - 1) * n + 0);
  SparseVec s_d = sparse_unit((n - 1) * n + 1, Scalar(-1));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      SparseVec acc = sparse_unit(0);
      for (unsigned t = 0; t < j; ++t) acc = alg->multiply(acc, s_d);
      for (unsigned t = 0; t < i; ++t) acc = alg->multiply(acc, s_g);
      anti.set_col(i * n + j, std::move(acc));
    }
  return HopfAlgebra(alg, TensorMap(sh, TensorSpace({alg, alg}), std::move(cop)),
                     TensorMap(sh, TensorSpace(), std::move(cu)),
                     std::move(anti));
}

HopfAlgebra sweedler() { return taft(2); }

MatchedPair trivial_matched_pair(const HopfAlgebra& b, const HopfAlgebra& h) {
  TensorSpace sb({b.alg()}), sh({h.alg()});
  TensorMap act_left = embed_operator(h.counit(), TensorSpace(), sb);
  TensorMap act_right = embed_operator(b.counit(), sh, TensorSpace());
  return MatchedPair{b, h, std::move(act_left), std::move(act_right),
                     "trivial(" + b.alg()->name() + "," + h.alg()->name() + ")"};
}

MatchedPair bismash_z2_z2_pair() {
  return trivial_matched_pair(cyclic_group_hopf(2), cyclic_group_hopf(2));
}

DoubleCrossproduct drinfeld_double_sweedler() {
  MatchedPair pair = drinfeld_double_pair(sweedler(), "D(H4) pair");
  return build_double_crossproduct(pair);
}

SmashAlgebra tensor_flip(const AlgebraPtr& a, const AlgebraPtr& b) {
  return build_smash(RMap::make_flip(a, b));
}

TensorMap module_algebra_5_2_action(unsigned n) {
  HopfAlgebra h = taft(n);
  AlgebraPtr a = truncated_poly_algebra(n);
  Scalar q = Scalar::zeta(n);
  // single-generator action matrices on A
  SparseMatrix mat_g(n, n), mat_d(n, n);
  for (unsigned m = 0; m < n; ++m) {
    Scalar qm(1);
    for (unsigned t = 0; t < m; ++t) qm *= q;
    mat_g.set_col(m, sparse_unit(m, qm));
    if (m >= 1) mat_d.set_col(m, sparse_unit(m - 1, q_int(q, m)));
  }
  TensorSpace src({h.alg(), a});
  SparseMatrix act(n, src.dim32());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      SparseMatrix op = mat_g.pow(i) * mat_d.pow(j);
      for (unsigned m = 0; m < n; ++m)
        act.set_col((i * n + j) * n + m, op.col(m));
    }
  return TensorMap(src, TensorSpace({a}), std::move(act));
}

SmashAlgebra module_algebra_5_2(unsigned n) {
  HopfAlgebra h = taft(n);
  RMap r = crossed_product_rmap(h, module_algebra_5_2_action(n));
  return build_smash(r);
}

SmashAlgebra pareigis_surrogate(unsigned m) {
  if (m == 0) throw UnknownPreset("pareigis_surrogate(0)");
  unsigned n = 2 * m;
  auto t_alg = power_basis_algebra("T" + std::to_string(n), n, "t");
  HopfAlgebra b = group_like_hopf(t_alg, n);
  AlgebraPtr d = dual_numbers();
  // t.s = -s
  SparseMatrix neg(2, 2);
  neg.set_col(0, sparse_unit(0));
  neg.set_col(1, sparse_unit(1, Scalar(-1)));
  TensorSpace src({t_alg, d});
  SparseMatrix act(2, src.dim32());
  for (unsigned r = 0; r < n; ++r) {
    SparseMatrix op = neg.pow(r);
    for (unsigned e = 0; e < 2; ++e) act.set_col(r * 2 + e, op.col(e));
  }
  TensorMap action(src, TensorSpace({d}), std::move(act));
  return build_smash(crossed_product_rmap(b, action));
}

Preset get_preset(const std::string& name) {
  std::string base = name;
  std::vector<std::string> args;
  auto lp = name.find('(');
  if (lp != std::string::npos) {
    if (name.back() != ')')
      throw UnknownPreset("malformed preset name '" + name + "'");
    base = name.substr(0, lp);
    std::string inner = name.substr(lp + 1, name.size() - lp - 2);
    std::string cur;
    for (char c : inner) {
      if (c == ',') {
        args.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) args.push_back(cur);
  }
  auto uarg = [&](std::size_t i) -> unsigned {
    if (i >= args.size())
      throw UnknownPreset("preset '" + base + "' needs an argument");
    try {
      int v = std::stoi(args[i]);
      if (v <= 0) throw std::invalid_argument("nonpositive");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UnknownPreset("bad argument '" + args[i] + "' for " + base);
    }
  };
  auto named_algebra = [&](const std::string& a) -> AlgebraPtr {
    if (a == "D") return dual_numbers();
    if (a.size() >= 2 && a[0] == 'K') {
      int v = std::stoi(a.substr(1));
      if (v >= 1) return cyclic_group_algebra(static_cast<unsigned>(v));
    }
    throw UnknownPreset("unknown algebra '" + a + "' (use K<n> or D)");
  };

  Preset p;
  p.name = name;
  if (base == "dual_numbers") {
    p.plain = dual_numbers();
    p.plain->check();
  } else if (base == "cyclic_group") {
    p.plain = cyclic_group_algebra(uarg(0));
    p.plain->check();
  } else if (base == "sweedler") {
    p.hopf = sweedler();
    validate_hopf(*p.hopf);
  } else if (base == "taft") {
    p.hopf = taft(uarg(0));
    validate_hopf(*p.hopf);
  } else if (base == "module_algebra_5_2") {
    p.smash = module_algebra_5_2(uarg(0));
    p.a_separable = true;  // A = k[x]/(x^N - 1), a group algebra over char 0
  } else if (base == "pareigis_surrogate") {
    p.smash = pareigis_surrogate(uarg(0));
    p.b_separable = true;  // B = k[Z/2M]
  } else if (base == "tensor_flip") {
    AlgebraPtr a = named_algebra(args.size() > 0 ? args[0] : "K2");
    AlgebraPtr b = named_algebra(args.size() > 1 ? args[1] : "K2");
    p.smash = tensor_flip(a, b);
    p.a_separable = a->name()[0] == 'K';
    p.b_separable = b->name()[0] == 'K';
  } else if (base == "bismash") {
    p.pair = bismash_z2_z2_pair();
    CheckReport rep = check_matched_pair(*p.pair);
    rep.merge(check_inverse_antipode_identities(*p.pair));
    if (!rep.all_pass()) throw AxiomViolation(rep.summary());
    auto dx = std::make_shared<DoubleCrossproduct>(
        build_double_crossproduct(*p.pair));
    validate_hopf(dx->hopf);
    p.double_xp = dx;
    p.smash = build_smash(dx->r_map);
    p.a_separable = p.b_separable = true;
  } else if (base == "drinfeld_double_sweedler") {
    auto dx =
        std::make_shared<DoubleCrossproduct>(drinfeld_double_sweedler());
    validate_hopf(dx->hopf);
    p.pair = dx->source;
    p.double_xp = dx;
    p.smash = build_smash(dx->r_map);
  } else {
    throw UnknownPreset("unknown preset '" + name + "'");
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"dual_numbers",
          "cyclic_group(N)",
          "sweedler",
          "taft(N)",
          "module_algebra_5_2(N)",
          "pareigis_surrogate(M)",
          "tensor_flip(X,Y)",
          "bismash",
          "drinfeld_double_sweedler"};
}

HomologyTable dual_numbers_resolution_homology(const SparseMatrix& left_s,
                                               const SparseMatrix& right_s,
                                               std::size_t q_max) {
  Index dim = left_s.rows();
  if (left_s.cols() != dim || right_s.rows() != dim || right_s.cols() != dim)
    throw DimensionMismatch("bimodule action matrices must be square");
  if (!(left_s * left_s).is_zero() || !(right_s * right_s).is_zero() ||
      !(left_s * right_s == right_s * left_s))
    throw WrongAlgebra(
        "not a dual-numbers bimodule: s-actions must square to zero and "
        "commute");
  SparseMatrix mubar = right_s - left_s;
  SparseMatrix nubar = right_s + left_s;
  ChainComplex cc;
  cc.name = "dual-numbers small resolution";
  cc.dims.assign(q_max + 2, dim);
  cc.d.resize(q_max + 2);
  for (std::size_t n = 1; n <= q_max + 1; ++n)
    cc.d[n] = (n % 2 == 1) ? mubar : nubar;
  HomologyTable full = homology_dims(cc, /*complete=*/true);
  HomologyTable t;
  t.name = "H(D-resolution)";
  t.dims.assign(full.dims.begin(), full.dims.begin() + q_max + 1);
  t.flagged.assign(q_max + 1, false);
  return t;
}

}  // namespace smashhc::presets
