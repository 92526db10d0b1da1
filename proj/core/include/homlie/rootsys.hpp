#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homlie/errors.hpp"

namespace homlie::roots {

enum class SimpleType { A, B, C, D, E, F, G };

/// Parses "A".."G" or a combined label like "E8"; the rank, when present in
/// the label, must match the rank argument where both are given.
SimpleType parse_type(const std::string& label);
std::string type_name(SimpleType t, int rank);

/// Admissible ranks: A l>=1, B l>=2, C l>=3, D l>=4 (the l=3 overlap with A3
/// is rejected), E 6..8, F 4, G 2.
void validate_rank(SimpleType t, int rank);

/// Bourbaki-convention Cartan matrix; entry (i, j) is <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(SimpleType t, int rank);

/// All roots as integer coordinate vectors over the simple roots (Bourbaki
/// numbering), generated from the simple roots by the root-string closure
/// and closed under negation.
struct RootSystem {
  SimpleType type;
  int rank;
  std::vector<std::vector<int>> roots;  // positives then negatives

  std::size_t count() const { return roots.size(); }
  std::vector<std::vector<int>> positive_roots() const;
  /// dim g = rank + number of roots.
  std::size_t lie_dimension() const { return static_cast<std::size_t>(rank) + roots.size(); }
};

RootSystem enumerate_roots(SimpleType t, int rank);

/// Integer-coefficient Laurent polynomial in one variable.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c);
  static LaurentPoly monomial(long long coeff, int exponent);
  /// c*(x^e + x^-e), the symmetric pair the trace formulas are built from.
  static LaurentPoly symmetric_pair(long long coeff, int exponent);

  void add_term(int exponent, long long coeff);
  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long coeff(int exponent) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly&) const = default;

  /// Value at 1 (sum of coefficients).
  long long eval_at_one() const;
  /// Invariance under x -> 1/x.
  bool is_symmetric() const;

  /// Deterministic display, ascending exponents: "4 + 2*c^-1 + 2*c" style.
  std::string str(const std::string& var = "c") const;

 private:
  std::map<int, long long> c_;  // exponent -> coefficient, no zeros stored
};

/// l + sum over all roots of c^{m_i(beta)}; the ground truth for Thm-style
/// trace identities.
LaurentPoly trace_enumerated(SimpleType t, int rank, int i);

/// Literal transcription of the published closed-form trace for the
/// diagonal automorphism at node i, including any typos as printed.
LaurentPoly trace_closed_form(SimpleType t, int rank, int i);

struct TraceCheck {
  int i;
  LaurentPoly enumerated;
  LaurentPoly closed_form;
  bool match;
  LaurentPoly difference;  // closed_form - enumerated
};

/// Compares enumeration against the closed forms for every admissible i;
/// enumeration is authoritative and mismatches carry the exact difference.
std::vector<TraceCheck> verify_traces(SimpleType t, int rank);

}  // namespace homlie::roots
