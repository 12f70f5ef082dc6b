#include "smashhc/json_io.hpp"

#include <sstream>

namespace smashhc {

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_value().str();
  Json j;
  j["order"] = s.field_order();
  Json coeffs = Json::array();
  for (const Rat& c : s.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer())
    return Scalar(Rat(static_cast<long long>(j.get<long long>())));
  if (j.is_string()) {
    auto r = Rat::parse(j.get<std::string>());
    if (!r) throw InputError("bad rational literal '" + j.get<std::string>() + "'");
    return Scalar(*r);
  }
  if (j.is_object()) {
    if (!j.contains("order") || !j.contains("coeffs"))
      throw InputError("cyclotomic scalar needs fields 'order' and 'coeffs'");
    unsigned order = j.at("order").get<unsigned>();
    auto field = CyclotomicField::get(order);
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_number_integer()) {
        coeffs.emplace_back(static_cast<long long>(c.get<long long>()));
        continue;
      }
      auto r = Rat::parse(c.get<std::string>());
      if (!r) throw InputError("bad rational literal in cyclotomic coeffs");
      coeffs.push_back(*r);
    }
    if (coeffs.size() != field->degree())
      throw InputError("cyclotomic coeffs must have length phi(order) = " +
                       std::to_string(field->degree()));
    return Scalar(field, std::move(coeffs));
  }
  throw InputError("scalar must be a string, integer, or cyclotomic object");
}

Json matrix_to_json(const SparseMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (Index c = 0; c < m.cols(); ++c)
    for (const auto& e : m.col(c)) {
      Json ent;
      ent["r"] = e.row;
      ent["c"] = c;
      ent["v"] = scalar_to_json(e.val);
      entries.push_back(std::move(ent));
    }
  j["entries"] = std::move(entries);
  return j;
}

SparseMatrix matrix_from_json(const nlohmann::json& j) {
  for (const char* k : {"rows", "cols", "entries"})
    if (!j.contains(k))
      throw InputError(std::string("matrix needs field '") + k + "'");
  Index rows = j.at("rows").get<Index>();
  Index cols = j.at("cols").get<Index>();
  std::vector<std::tuple<Index, Index, Scalar>> trips;
  for (const auto& e : j.at("entries")) {
    if (!e.contains("r") || !e.contains("c") || !e.contains("v"))
      throw InputError("matrix entry needs fields 'r', 'c', 'v'");
    trips.emplace_back(e.at("r").get<Index>(), e.at("c").get<Index>(),
                       scalar_from_json(e.at("v")));
  }
  try {
    return SparseMatrix::from_triplets(rows, cols, trips);
  } catch (const DimensionMismatch& err) {
    throw InputError(std::string("matrix entries out of bounds: ") + err.what());
  }
}

Json algebra_to_json(const FinDimAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  Json basis = Json::array();
  for (Index i = 0; i < a.dim(); ++i) basis.push_back(a.label(i));
  j["basis"] = std::move(basis);
  Json unit = Json::array();
  {
    std::vector<Scalar> dense(a.dim(), Scalar(0));
    for (const auto& e : a.unit()) dense[e.row] = e.val;
    for (const auto& v : dense) unit.push_back(scalar_to_json(v));
  }
  j["unit"] = std::move(unit);
  Json mult = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k) {
      const SparseVec& prod = a.mult(i, k);
      if (prod.empty()) continue;
      Json cell;
      cell["i"] = i;
      cell["j"] = k;
      Json out = Json::array();
      for (const auto& e : prod) {
        Json term;
        term["k"] = e.row;
        term["c"] = scalar_to_json(e.val);
        out.push_back(std::move(term));
      }
      cell["out"] = std::move(out);
      mult.push_back(std::move(cell));
    }
  j["mult"] = std::move(mult);
  return j;
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  for (const char* k : {"name", "dim", "basis", "unit", "mult"})
    if (!j.contains(k))
      throw InputError(std::string("algebra descriptor needs field '") + k + "'");
  Index dim = j.at("dim").get<Index>();
  std::vector<std::string> labels;
  for (const auto& b : j.at("basis")) labels.push_back(b.get<std::string>());
  if (labels.size() != dim)
    throw InputError("field 'basis' must list exactly 'dim' labels");
  if (j.at("unit").size() != dim)
    throw InputError("field 'unit' must have length 'dim'");
  SparseVec unit;
  for (Index i = 0; i < dim; ++i) {
    Scalar v = scalar_from_json(j.at("unit").at(i));
    if (!v.is_zero()) unit.push_back({i, std::move(v)});
  }
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (const auto& cell : j.at("mult")) {
    for (const char* k : {"i", "j", "out"})
      if (!cell.contains(k))
        throw InputError(std::string("mult record needs field '") + k + "'");
    Index i = cell.at("i").get<Index>();
    Index jj = cell.at("j").get<Index>();
    if (i >= dim || jj >= dim)
      throw InputError("mult record indices out of range");
    SparseVec out;
    for (const auto& term : cell.at("out")) {
      Index k = term.at("k").get<Index>();
      if (k >= dim) throw InputError("mult output index out of range");
      Scalar c = scalar_from_json(term.at("c"));
      if (!c.is_zero()) out.push_back({k, std::move(c)});
    }
    std::sort(out.begin(), out.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    mult[static_cast<std::size_t>(i) * dim + jj] = std::move(out);
  }
  auto alg = std::make_shared<FinDimAlgebra>(j.at("name").get<std::string>(),
                                             std::move(labels), std::move(unit),
                                             std::move(mult));
  try {
    alg->check();
  } catch (const AxiomViolation& e) {
    throw InputError(std::string("algebra fails validation: ") + e.what());
  }
  return alg;
}

Json hopf_to_json(const HopfAlgebra& h) {
  Json j = algebra_to_json(*h.alg());
  j["coproduct"] = matrix_to_json(h.coproduct().mat);
  j["counit"] = matrix_to_json(h.counit().mat);
  j["antipode"] = matrix_to_json(h.antipode());
  return j;
}

HopfAlgebra hopf_from_json(const nlohmann::json& j) {
  AlgebraPtr alg = algebra_from_json(j);
  for (const char* k : {"coproduct", "counit", "antipode"})
    if (!j.contains(k))
      throw InputError(std::string("Hopf descriptor needs field '") + k + "'");
  TensorSpace sh({alg});
  HopfAlgebra h(alg,
                TensorMap(sh, TensorSpace({alg, alg}),
                          matrix_from_json(j.at("coproduct"))),
                TensorMap(sh, TensorSpace(), matrix_from_json(j.at("counit"))),
                matrix_from_json(j.at("antipode")));
  CheckReport rep = h.check();
  if (!rep.all_pass())
    throw InputError("Hopf descriptor fails validation:\n" + rep.summary());
  return h;
}

Json report_to_json(const CheckReport& rep) {
  Json j;
  j["subject"] = rep.subject();
  j["pass"] = rep.all_pass();
  j["checked"] = rep.items().size();
  j["failures"] = rep.failure_count();
  Json items = Json::array();
  for (const auto& it : rep.items()) {
    Json entry;
    entry["identity"] = it.identity;
    if (!it.location.empty()) entry["location"] = it.location;
    entry["pass"] = it.pass;
    if (it.witness) {
      Json w;
      w["basis_index"] = it.witness->basis_index;
      w["basis"] = it.witness->basis_label;
      w["lhs"] = it.witness->lhs;
      w["rhs"] = it.witness->rhs;
      entry["witness"] = std::move(w);
    }
    items.push_back(std::move(entry));
  }
  j["items"] = std::move(items);
  return j;
}

std::string report_to_csv(const CheckReport& rep) {
  std::ostringstream out;
  out << "identity,location,pass,witness_basis,witness_lhs,witness_rhs\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += "\"";
      q += c;
    }
    return q + "\"";
  };
  for (const auto& it : rep.items()) {
    out << quote(it.identity) << "," << quote(it.location) << ","
        << (it.pass ? "1" : "0") << ",";
    if (it.witness)
      out << quote(it.witness->basis_label) << "," << quote(it.witness->lhs)
          << "," << quote(it.witness->rhs);
    else
      out << ",,";
    out << "\n";
  }
  return out.str();
}

Json table_to_json(const HomologyTable& t) {
  Json j;
  j["name"] = t.name;
  Json rows = Json::array();
  for (std::size_t n = 0; n < t.dims.size(); ++n) {
    Json r;
    r["n"] = n;
    r["dim"] = t.dims[n];
    r["flagged"] = static_cast<bool>(t.flagged[n]);
    rows.push_back(std::move(r));
  }
  j["degrees"] = std::move(rows);
  return j;
}

std::string table_to_csv(const HomologyTable& t) {
  std::ostringstream out;
  out << "n,dim,flagged\n";
  for (std::size_t n = 0; n < t.dims.size(); ++n)
    out << n << "," << t.dims[n] << "," << (t.flagged[n] ? "1" : "0") << "\n";
  return out.str();
}

Json spectral_to_json(const SpectralSequence& ss) {
  Json j;
  j["max_page"] = ss.max_page();
  Json pages = Json::array();
  const FilteredComplex& fc = ss.complex();
  for (int r = 0; r <= ss.max_page(); ++r) {
    Json page;
    page["page"] = r;
    Json entries = Json::array();
    Json dranks = Json::array();
    for (std::size_t n = 0; n <= fc.top(); ++n) {
      for (int p = 0; p <= fc.max_weight(n); ++p) {
        int q = static_cast<int>(n) - p;
        Index d = ss.dim(r, p, q);
        if (d == 0 && ss.dr_rank(r, p, q) == 0) continue;
        Json e;
        e["p"] = p;
        e["q"] = q;
        e["dim"] = d;
        e["flagged"] = ss.degree_flagged(n);
        entries.push_back(std::move(e));
        if (ss.dr_rank(r, p, q) > 0) {
          Json dr;
          dr["p"] = p;
          dr["q"] = q;
          dr["rank"] = ss.dr_rank(r, p, q);
          dranks.push_back(std::move(dr));
        }
      }
    }
    page["entries"] = std::move(entries);
    page["differential_ranks"] = std::move(dranks);
    pages.push_back(std::move(page));
  }
  j["pages"] = std::move(pages);
  Json einf = Json::array();
  for (std::size_t n = 0; n <= fc.top(); ++n)
    for (int p = 0; p <= fc.max_weight(n); ++p) {
      Index d = ss.einf_dim(p, static_cast<int>(n) - p);
      if (d == 0) continue;
      Json e;
      e["p"] = p;
      e["q"] = static_cast<int>(n) - p;
      e["dim"] = d;
      e["stable_page"] = ss.stable_page(p, static_cast<int>(n) - p);
      e["flagged"] = ss.degree_flagged(n);
      einf.push_back(std::move(e));
    }
  j["e_infinity"] = std::move(einf);
  return j;
}

std::string spectral_to_csv(const SpectralSequence& ss) {
  std::ostringstream out;
  out << "page,p,q,dim,flagged\n";
  const FilteredComplex& fc = ss.complex();
  for (int r = 0; r <= ss.max_page(); ++r)
    for (std::size_t n = 0; n <= fc.top(); ++n)
      for (int p = 0; p <= fc.max_weight(n); ++p) {
        int q = static_cast<int>(n) - p;
        Index d = ss.dim(r, p, q);
        if (d == 0) continue;
        out << r << "," << p << "," << q << "," << d << ","
            << (ss.degree_flagged(n) ? "1" : "0") << "\n";
      }
  return out.str();
}

}  // namespace smashhc
