#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccbl/formula.hpp"
#include "ccbl/sequent.hpp"

namespace ccbl {

enum class ModalClass { Tautology, ContextualTruth, Contradiction };

const char* to_string(ModalClass c);

/// Oracle enumeration bound: 2^20 rows.
inline constexpr std::size_t kMaxOracleVariables = 20;

struct TooManyVariables : std::runtime_error {
  TooManyVariables(std::size_t count, std::size_t limit)
      : std::runtime_error("too many variables for enumeration: " + std::to_string(count) +
                           " > " + std::to_string(limit)) {}
};

struct RowCount {
  std::uint64_t rows = 0;
  std::uint64_t true_rows = 0;
};

/// Counts satisfying rows of the full truth table. Rows are evaluated 64 at a
/// time on bit-sliced lanes, with blocks split across OpenMP threads.
RowCount count_true_rows(const Formula& f);

/// Row-by-row enumeration through evaluate(). Reference for count_true_rows.
RowCount count_true_rows_reference(const Formula& f);

ModalClass class_of(const RowCount& count);

ModalClass truth_table_class(const Formula& f);
ModalClass truth_table_class_reference(const Formula& f);

/// True iff f and g agree on every assignment over their joint vocabulary.
bool equivalent(const Formula& f, const Formula& g);

/// A clause holds under a partial assignment when one of its literals is
/// assigned and true.
bool clause_satisfied(const Clause& c, const Assignment& a);

/// DPLL with unit propagation. The returned assignment may be partial: it
/// binds only the variables the search had to decide, and satisfies every
/// clause. Throws TooManyVariables above `max_variables` distinct variables.
std::optional<Assignment> sat(const std::vector<Clause>& clauses,
                              std::size_t max_variables = kMaxOracleVariables);

/// Exhaustive enumeration; returns the first satisfying total assignment in
/// binary counting order.
std::optional<Assignment> sat_exhaustive(const std::vector<Clause>& clauses);

struct SchemaCheck {
  std::string name;
  std::string formula;
  std::uint64_t rows = 0;
  bool tautology = false;
};

/// Instantiates the A1 and A2 equivalences, the TND forms, the Lukasiewicz
/// axioms and the vocabulary identities over fresh variables and checks each
/// is a truth-table tautology.
std::vector<SchemaCheck> check_schemas();

}  // namespace ccbl
