// Pass/fail reports for axiom suites. Every failed matrix identity carries a
// witness: the first basis column where the two sides differ, with both
// evaluated sides rendered verbatim.

#ifndef SMASHHC_REPORT_HPP
#define SMASHHC_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smashhc/algebra.hpp"

namespace smashhc {

struct Witness {
  std::size_t basis_index = 0;
  std::string basis_label;
  std::string lhs;
  std::string rhs;
};

struct CheckItem {
  std::string identity;
  std::string location;  // e.g. "level 2" or "(p,q)=(1,3)"
  bool pass = true;
  std::optional<Witness> witness;
};

class CheckReport {
 public:
  CheckReport() : subject_("checks") {}
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckItem>& items() const { return items_; }
  bool all_pass() const;
  std::size_t failure_count() const;

  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void record_pass(const std::string& identity, const std::string& location);
  void record_fail(const std::string& identity, const std::string& location,
                   Witness w);
  void merge(const CheckReport& other);

  // Compare two maps as matrices; on mismatch record the first differing
  // basis column. Labels come from the source space when available.
  void check_equal(const std::string& identity, const std::string& location,
                   const TensorMap& lhs, const TensorMap& rhs);
  void check_equal(const std::string& identity, const std::string& location,
                   const SparseMatrix& lhs, const SparseMatrix& rhs,
                   const std::function<std::string(std::size_t)>& labeler = {});

  // Streaming variant: evaluates both sides column by column (for operators
  // too large to materialize as products).
  void check_equal_streamed(
      const std::string& identity, const std::string& location, Index dim,
      const std::function<SparseVec(Index)>& lhs,
      const std::function<SparseVec(Index)>& rhs,
      const std::function<std::string(std::size_t)>& labeler = {});

  std::string summary() const;

 private:
  std::string subject_;
  std::vector<CheckItem> items_;
};

}  // namespace smashhc

#endif
