#pragma once

#include <string>
#include <vector>

#include "symshuffle/partition.hpp"
#include "symshuffle/permutation.hpp"

namespace symshuffle {

/// Young tableau in English notation: row 0 on top.  Entries are plain
/// integers; the ordering they are checked against depends on the caller.
class Tableau {
 public:
  using Row = std::vector<int>;

  Tableau() = default;
  explicit Tableau(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }
  std::vector<Row>& rows() { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int size() const;
  Partition shape() const;
  int at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  // Rows weakly increase, columns strictly increase (usual integer order).
  bool is_semistandard() const;
  // Semistandard with content exactly 1..n once each.
  bool is_standard() const;
  // {i : i+1 sits in a strictly lower row than i}; requires a standard tableau.
  DescentSet descent_set() const;
  // Row index of value v in a standard tableau.
  int row_of(int value) const;

  // "1 2 3 / 4 5"
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Row> rows_;
};

// Every standard Young tableau of shape lambda.
std::vector<Tableau> enumerate_syt(const Partition& lambda);

// f_lambda by the hook-length formula.
Integer hook_length_count(const Partition& lambda);

// Every semistandard tableau of shape lambda with entries in 1..max_entry.
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int max_entry);

// Number of standard tableaux of shape lambda whose descent set is D.
Integer beta(const Partition& lambda, const DescentSet& descents);

// Semistandard tableaux of shape lambda and content mu (mu a composition,
// zero entries allowed).  Throws std::invalid_argument when |lambda| != |mu|.
Integer kostka(const Partition& lambda, const std::vector<int>& content);

// Standard tableaux of skew shape lambda/(r); zero when (r) does not fit.
Integer skew_count(const Partition& lambda, int r);

// Irreducible character chi^lambda evaluated on cycle type mu
// (Murnaghan-Nakayama rule).  Throws std::invalid_argument on size mismatch.
Integer mn_character(const Partition& lambda, const Partition& mu);

}  // namespace symshuffle
