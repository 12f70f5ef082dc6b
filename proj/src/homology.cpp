#include "smashhc/homology.hpp"

#include <sstream>

#include "smashhc/parallel.hpp"

namespace smashhc {

void ChainComplex::validate() const {
  if (dims.empty() || d.size() != dims.size())
    throw NotAComplex(name + ": malformed complex");
  for (std::size_t n = 1; n <= top(); ++n) {
    if (d[n].cols() != dims[n] || d[n].rows() != dims[n - 1])
      throw NotAComplex(name + ": differential shape mismatch at degree " +
                        std::to_string(n));
    if (n >= 2 && !(d[n - 1] * d[n]).is_zero())
      throw NotAComplex(name + ": d d != 0 at degree " + std::to_string(n));
  }
}

bool HomologyTable::agrees_on_unflagged(const HomologyTable& o) const {
  std::size_t n = std::min(dims.size(), o.dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (flagged[i] || o.flagged[i]) continue;
    if (dims[i] != o.dims[i]) return false;
  }
  return true;
}

std::string HomologyTable::str() const {
  std::ostringstream out;
  out << name << ": [";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out << ", ";
    out << dims[i];
    if (flagged[i]) out << "?";
  }
  out << "]";
  return out.str();
}

HomologyTable homology_dims(const ChainComplex& cc, bool complete) {
  cc.validate();
  std::size_t K = cc.top();
  HomologyTable table;
  table.name = "H(" + cc.name + ")";
  table.dims.resize(K + 1);
  table.flagged.assign(K + 1, false);
  std::vector<Index> kerdim(K + 1), rk(K + 1, 0);
  parallel_for(K + 1, [&](std::size_t n) {
    if (n == 0) {
      kerdim[0] = cc.dims[0];
    } else {
      rk[n] = rank(cc.d[n]);
      kerdim[n] = cc.dims[n] - rk[n];
    }
  });
  for (std::size_t n = 0; n <= K; ++n) {
    Index img = (n + 1 <= K) ? rk[n + 1] : 0;
    table.dims[n] = kerdim[n] - img;
  }
  if (!complete) {
    if (K >= 1) table.flagged[K - 1] = true;
    table.flagged[K] = true;
  }
  return table;
}

CoefficientW parse_coefficient_w(const std::string& name) {
  if (name == "hochschild" || name == "hh") return CoefficientW::hochschild;
  if (name == "cyclic" || name == "hc") return CoefficientW::cyclic;
  if (name == "negative" || name == "periodic")
    throw Unsupported(
        "W = k[u] (negative) and W = k[u,u^-1] (periodic) give "
        "infinite-dimensional graded pieces of C boxtimes W; only the "
        "Hochschild and cyclic coefficient modules are computable here");
  throw InputError("unknown coefficient module '" + name + "'");
}

std::string coefficient_w_name(CoefficientW w) {
  return w == CoefficientW::hochschild ? "hochschild" : "cyclic";
}

ChainComplex boxtimes_complex(const MixedComplex& mc, CoefficientW w) {
  ChainComplex cc;
  cc.name = mc.name + " boxtimes " + coefficient_w_name(w);
  std::size_t K = mc.bound;
  cc.dims.resize(K + 1);
  cc.d.resize(K + 1);
  if (w == CoefficientW::hochschild) {
    for (std::size_t n = 0; n <= K; ++n) cc.dims[n] = mc.dims[n];
    for (std::size_t n = 1; n <= K; ++n) cc.d[n] = mc.small[n];
    return cc;
  }
  // degree n: components M_{n-2j} u^{-j}, j ascending; offsets in that order
  auto offsets = [&](std::size_t n) {
    std::vector<Index> off;
    Index total = 0;
    for (std::size_t j = 0; 2 * j <= n; ++j) {
      off.push_back(total);
      total += mc.dims[n - 2 * j];
    }
    off.push_back(total);
    return off;
  };
  for (std::size_t n = 0; n <= K; ++n) cc.dims[n] = offsets(n).back();
  for (std::size_t n = 1; n <= K; ++n) {
    auto src_off = offsets(n);
    auto dst_off = offsets(n - 1);
    SparseMatrix d(cc.dims[n - 1], cc.dims[n]);
    for (std::size_t j = 0; 2 * j <= n; ++j) {
      std::size_t lvl = n - 2 * j;
      // b part: component j of degree n-1 (level n-1-2j), when it exists
      if (lvl >= 1) {
        const SparseMatrix& bm = mc.small[lvl];
        for (Index c = 0; c < bm.cols(); ++c) {
          for (const auto& e : bm.col(c))
            d.set(dst_off[j] + e.row, src_off[j] + c,
                  d.get(dst_off[j] + e.row, src_off[j] + c) + e.val);
        }
      }
      // u B part: component j-1 of degree n-1 (level n+1-2j)
      if (j >= 1) {
        const SparseMatrix& Bm = mc.big[lvl];
        for (Index c = 0; c < Bm.cols(); ++c)
          for (const auto& e : Bm.col(c))
            d.set(dst_off[j - 1] + e.row, src_off[j] + c,
                  d.get(dst_off[j - 1] + e.row, src_off[j] + c) + e.val);
      }
    }
    cc.d[n] = std::move(d);
  }
  return cc;
}

HomologyTable cyclic_homology(const MixedComplex& mc, CoefficientW w) {
  CheckReport rep = mc.check();
  if (!rep.all_pass())
    throw NotMixed("mixed complex identities fail:\n" + rep.summary());
  HomologyTable t = homology_dims(boxtimes_complex(mc, w));
  t.name = (w == CoefficientW::hochschild ? "HH(" : "HC(") + mc.name + ")";
  return t;
}

HomologyTable hochschild_dims(const ParacyclicModule& pm) {
  ChainComplex cc;
  cc.name = "b-complex of " + pm.name();
  cc.dims.resize(pm.bound() + 1);
  cc.d.resize(pm.bound() + 1);
  for (std::size_t n = 0; n <= pm.bound(); ++n) cc.dims[n] = pm.dim(n);
  for (std::size_t n = 1; n <= pm.bound(); ++n) cc.d[n] = pm.b_matrix(n);
  HomologyTable t = homology_dims(cc);
  t.name = "HH(" + pm.name() + ")";
  return t;
}

HomologyTable connes_lambda_dims(const ParacyclicModule& cm) {
  cm.ensure_cyclic();
  std::size_t L = cm.bound();
  std::vector<Subquotient> quotients;
  quotients.reserve(L + 1);
  for (std::size_t n = 0; n <= L; ++n) {
    // 1 - (-1)^n t
    SparseMatrix op = SparseMatrix::identity(cm.dim(n)) -
                      cm.t(n).scaled(Scalar(n % 2 == 0 ? 1 : -1));
    quotients.push_back(Subquotient::full_mod(cm.dim(n), image_basis(op)));
  }
  ChainComplex cc;
  cc.name = "lambda-quotient of " + cm.name();
  cc.dims.resize(L + 1);
  cc.d.resize(L + 1);
  for (std::size_t n = 0; n <= L; ++n) cc.dims[n] = quotients[n].dim();
  for (std::size_t n = 1; n <= L; ++n)
    cc.d[n] = induced_map(cm.b_matrix(n), quotients[n], quotients[n - 1]);
  HomologyTable t = homology_dims(cc);
  t.name = "HC_lambda(" + cm.name() + ")";
  return t;
}

CheckReport sbi_consistency(const HomologyTable& hh, const HomologyTable& hc) {
  CheckReport rep("SBI dimension consistency");
  std::size_t K = std::min(hh.top(), hc.top());
  auto ok = [&](std::size_t n) {
    return n <= K && !hh.flagged[n] && !hc.flagged[n];
  };
  if (ok(0)) {
    if (hc.dims[0] == hh.dims[0])
      rep.record_pass("HC_0 = HH_0", "degree 0");
    else
      rep.record_fail("HC_0 = HH_0", "degree 0",
                      {0, "", std::to_string(hc.dims[0]),
                       std::to_string(hh.dims[0])});
  }
  for (std::size_t n = 1; n <= K; ++n) {
    if (!ok(n)) continue;
    Index bound_up = hh.dims[n] + (n >= 2 && ok(n - 2) ? hc.dims[n - 2] : 0);
    bool pass1 = n >= 2 && !ok(n - 2) ? true : hc.dims[n] <= bound_up;
    if (pass1)
      rep.record_pass("dim HC_n <= dim HH_n + dim HC_{n-2}",
                      "degree " + std::to_string(n));
    else
      rep.record_fail("dim HC_n <= dim HH_n + dim HC_{n-2}",
                      "degree " + std::to_string(n),
                      {n, "", std::to_string(hc.dims[n]),
                       std::to_string(bound_up)});
    if (n >= 2 && ok(n - 2) && ok(n - 1)) {
      bool pass2 = hc.dims[n - 2] <= hc.dims[n] + hh.dims[n - 1];
      if (pass2)
        rep.record_pass("dim HC_{n-2} <= dim HC_n + dim HH_{n-1}",
                        "degree " + std::to_string(n));
      else
        rep.record_fail("dim HC_{n-2} <= dim HC_n + dim HH_{n-1}",
                        "degree " + std::to_string(n),
                        {n, "", std::to_string(hc.dims[n - 2]),
                         std::to_string(hc.dims[n] + hh.dims[n - 1])});
    }
  }
  return rep;
}

}  // namespace smashhc
