#ifndef SU3_APPENDIX_HPP
#define SU3_APPENDIX_HPP

#include <span>
#include <string>
#include <vector>

#include "su3/cartan.hpp"

namespace su3 {

/// Complex operator coefficients: Λ_i = Σ_j M(i,j) ∂_j for fields,
/// ω^l = Σ_k M(l,k) dx^k for forms. Coordinates in factor order.
using OperatorMatrix = Eigen::Matrix<Complex, 8, 8>;

/// Published closed forms, transcribed term by term (typos included).
struct AppendixTables {
  OperatorMatrix left_fields;
  OperatorMatrix right_fields;
  OperatorMatrix left_forms;
  OperatorMatrix right_forms;
  /// The worked ∂γ example: (∂_γ D) D† = i Σ_k v_k λ_k, rows λ1..λ8.
  AlgebraVector dgamma_example;
};

AppendixTables appendix_tables(const EulerAngles& p);

/// The exact constructions in the same layout: i·A, -i·b, and b(:, γ).
AppendixTables exact_tables(const EulerAngles& p);

inline constexpr std::array<const char*, 5> kAppendixTableNames = {
    "left_fields", "right_fields", "left_forms", "right_forms", "dgamma_example"};

struct Discrepancy {
  std::string table;
  int row = 0;  // 1-based λ / ω index
  int col = 0;  // 1-based ∂ / dx index
  double max_deviation = 0.0;

  std::string key() const;
};

struct AuditReport {
  double tol = 1e-10;
  int points = 0;
  std::vector<Discrepancy> entries;
  /// Per table, number of rows in which every entry agrees.
  std::array<int, 5> agreeing_rows{};

  std::vector<std::string> keys() const;
};

/// Compares appendix_tables against exact_tables at every point; an entry is
/// catalogued when its deviation exceeds tol at any point.
AuditReport audit_appendix(std::span<const EulerAngles> points, double tol = 1e-10);

struct ClosedForms {
  AppendixTables tables;
  AuditReport report;
};

ClosedForms appendix_closed_forms(const EulerAngles& p, double tol = 1e-10);

/// Deterministic interior audit points (β, b, θ kept away from the strata).
std::vector<EulerAngles> audit_points(std::uint64_t seed, int count);

}  // namespace su3

#endif
