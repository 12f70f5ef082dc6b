#include "smashhc/report.hpp"

#include <sstream>

#include "smashhc/parallel.hpp"

namespace smashhc {

bool CheckReport::all_pass() const {
  for (const auto& it : items_)
    if (!it.pass) return false;
  return true;
}

std::size_t CheckReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& it : items_)
    if (!it.pass) ++n;
  return n;
}

void CheckReport::record_pass(const std::string& identity,
                              const std::string& location) {
  items_.push_back({identity, location, true, std::nullopt});
}

void CheckReport::record_fail(const std::string& identity,
                              const std::string& location, Witness w) {
  items_.push_back({identity, location, false, std::move(w)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& it : other.items_) items_.push_back(it);
}

void CheckReport::check_equal(const std::string& identity,
                              const std::string& location, const TensorMap& lhs,
                              const TensorMap& rhs) {
  const TensorSpace src = lhs.source;
  check_equal(identity, location, lhs.mat, rhs.mat,
              [src](std::size_t i) { return src.label(i); });
}

void CheckReport::check_equal(
    const std::string& identity, const std::string& location,
    const SparseMatrix& lhs, const SparseMatrix& rhs,
    const std::function<std::string(std::size_t)>& labeler) {
  auto bad = SparseMatrix::first_differing_col(lhs, rhs);
  if (!bad && lhs.rows() == rhs.rows()) {
    record_pass(identity, location);
    return;
  }
  Witness w;
  if (bad) {
    w.basis_index = *bad;
    w.basis_label = labeler ? labeler(*bad) : ("e" + std::to_string(*bad));
    w.lhs = *bad < lhs.cols() ? sparse_str(lhs.col(*bad)) : "<missing>";
    w.rhs = *bad < rhs.cols() ? sparse_str(rhs.col(*bad)) : "<missing>";
  } else {
    w.basis_label = "<shape>";
    w.lhs = std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols());
    w.rhs = std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  record_fail(identity, location, std::move(w));
}

void CheckReport::check_equal_streamed(
    const std::string& identity, const std::string& location, Index dim,
    const std::function<SparseVec(Index)>& lhs,
    const std::function<SparseVec(Index)>& rhs,
    const std::function<std::string(std::size_t)>& labeler) {
  // Parallel scan; the reported witness is the lowest failing column.
  std::atomic<Index> first_bad{dim};
  parallel_for(dim, [&](std::size_t j) {
    Index jj = static_cast<Index>(j);
    if (jj >= first_bad.load()) return;
    if (!sparse_equal(lhs(jj), rhs(jj))) {
      Index cur = first_bad.load();
      while (jj < cur && !first_bad.compare_exchange_weak(cur, jj)) {
      }
    }
  });
  Index bad = first_bad.load();
  if (bad >= dim) {
    record_pass(identity, location);
    return;
  }
  Witness w;
  w.basis_index = bad;
  w.basis_label = labeler ? labeler(bad) : ("e" + std::to_string(bad));
  w.lhs = sparse_str(lhs(bad));
  w.rhs = sparse_str(rhs(bad));
  record_fail(identity, location, std::move(w));
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << subject_ << ": " << (items_.size() - failure_count()) << "/"
      << items_.size() << " identities hold";
  if (!all_pass()) {
    for (const auto& it : items_) {
      if (it.pass) continue;
      out << "\n  FAIL " << it.identity;
      if (!it.location.empty()) out << " @ " << it.location;
      if (it.witness) {
        out << "\n    on " << it.witness->basis_label << "\n    lhs = "
            << it.witness->lhs << "\n    rhs = " << it.witness->rhs;
      }
    }
  }
  return out.str();
}

}  // namespace smashhc
