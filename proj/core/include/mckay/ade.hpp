#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

enum class AdeFamily : char { A = 'A', D = 'D', E = 'E' };

/// A simply-laced Dynkin type such as A4, D6 or E8.  The same label names
/// the finite subgroup of SL2(C) (A_n: cyclic of order n+1, D_n: binary
/// dihedral of order 4(n-2), E6/E7/E8: binary tetrahedral/octahedral/
/// icosahedral) and the Dynkin diagram of its McKay graph.
struct AdeLabel {
  AdeFamily family = AdeFamily::A;
  int rank = 1;

  /// Parses "A3", "D_5", "e8" ...; throws std::invalid_argument on
  /// malformed or out-of-range labels (D_n needs n >= 4, E needs 6..8).
  static AdeLabel parse(std::string_view text);

  std::string to_string() const;

  /// Order of the corresponding finite subgroup of SL2(C).
  std::size_t group_order() const;

  /// Determinant of the finite Cartan matrix.
  int cartan_determinant() const;

  friend auto operator<=>(const AdeLabel&, const AdeLabel&) = default;
};

/// A1..A10, D4..D10, E6, E7, E8.
std::vector<AdeLabel> standard_ade_corpus();

}  // namespace mckay
