#pragma once

// Published factorization tables, transcribed once and shared by unit and acceptance tests.

#include <algorithm>
#include <string>
#include <vector>

#include "hurwitz/factorize.hpp"

namespace tables {

using hurwitz::Factorization;
using hurwitz::Permutation;
using hurwitz::Transposition;

struct Row {
  std::string gamma;  // empty for unsigned tables
  std::vector<Transposition> taus;
};

// Monotone factorizations of (0,(1^3),(1^3)).
inline const std::vector<Row> kMonotoneOnes = {
    {"", {{1, 2}, {1, 3}, {2, 3}, {1, 3}}}, {"", {{1, 2}, {1, 2}, {1, 3}, {1, 3}}},
    {"", {{1, 2}, {2, 3}, {1, 3}, {2, 3}}}, {"", {{1, 2}, {1, 2}, {2, 3}, {2, 3}}},
    {"", {{1, 3}, {2, 3}, {2, 3}, {1, 3}}}, {"", {{1, 3}, {1, 3}, {2, 3}, {2, 3}}},
    {"", {{2, 3}, {1, 3}, {1, 3}, {2, 3}}}, {"", {{2, 3}, {2, 3}, {1, 3}, {1, 3}}},
};

// Real monotone factorizations of (0,(1^3),(1^3)) with signs +++-.
inline const std::vector<Row> kRealMonotonePPPM = {
    {"()", {{1, 2}, {1, 2}, {1, 3}, {1, 3}}},  {"()", {{1, 2}, {1, 2}, {2, 3}, {2, 3}}},
    {"(13)", {{1, 3}, {2, 3}, {2, 3}, {1, 3}}}, {"()", {{1, 3}, {1, 3}, {2, 3}, {2, 3}}},
    {"(23)", {{2, 3}, {1, 3}, {1, 3}, {2, 3}}}, {"()", {{2, 3}, {2, 3}, {1, 3}, {1, 3}}},
};

// Real monotone factorizations of (0,(1^3),(1^3)) with signs +-++.
inline const std::vector<Row> kRealMonotonePMPP = {
    {"(12)", {{1, 2}, {1, 2}, {1, 3}, {1, 3}}},
    {"(12)", {{1, 2}, {1, 2}, {2, 3}, {2, 3}}},
    {"(13)", {{1, 3}, {1, 3}, {2, 3}, {2, 3}}},
    {"(23)", {{2, 3}, {2, 3}, {1, 3}, {1, 3}}},
};

// Real factorizations of (0,(1,3),(2,2)) with signs ++ and sigma1 = (1)(234).
inline const std::vector<Row> kRealFixedStartA = {
    {"(24)", {{3, 4}, {1, 3}}},
    {"(34)", {{2, 3}, {1, 2}}},
    {"(23)", {{2, 4}, {1, 4}}},
};

// Real monotone factorizations of (0,(1,3),(2,2)) with signs ++ and sigma1 = (4)(132).
inline const std::vector<Row> kRealMonotoneFixedStartB = {
    {"(13)", {{1, 2}, {2, 4}}},
    {"(12)", {{2, 3}, {3, 4}}},
    {"(23)", {{1, 3}, {1, 4}}},
};

inline Permutation gamma_of(const Row& row, int d) {
  return row.gamma == "()" ? Permutation::identity(d) : Permutation::parse(row.gamma, d);
}

// Sorted (gamma, taus) keys; sigma1 and sigma2 are fixed by the caller's query.
inline std::vector<std::pair<std::string, std::vector<Transposition>>> keys(const std::vector<Row>& rows, int d) {
  std::vector<std::pair<std::string, std::vector<Transposition>>> out;
  for (const auto& row : rows) {
    out.emplace_back(row.gamma.empty() ? std::string() : gamma_of(row, d).str(), row.taus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<std::string, std::vector<Transposition>>> keys(const std::vector<Factorization>& fs) {
  std::vector<std::pair<std::string, std::vector<Transposition>>> out;
  for (const auto& f : fs) out.emplace_back(f.gamma ? f.gamma->str() : std::string(), f.taus);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tables
