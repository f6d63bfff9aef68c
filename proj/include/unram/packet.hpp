#pragma once

#include <string>
#include <vector>

#include "unram/rgroup.hpp"

namespace unram {

/// Element of Q/Z, kept as numerator/denominator with 0 <= numerator < denominator.
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& r);
  QmodZ(long num, long den) : QmodZ(Rational(num, den)) {}

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational value() const { return Rational(num_, den_); }
  bool is_zero() const { return num_ == 0; }

  QmodZ operator+(const QmodZ& o) const { return QmodZ(value() + o.value()); }
  QmodZ operator-(const QmodZ& o) const { return QmodZ(value() - o.value()); }
  QmodZ operator-() const { return QmodZ(-value()); }
  QmodZ operator*(const Integer& k) const { return QmodZ(value() * k); }
  bool operator==(const QmodZ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QmodZ& o) const { return !(*this == o); }
  bool operator<(const QmodZ& o) const { return value() < o.value(); }
  std::string str() const;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

struct PairingTable {
  std::vector<HyperspecialVertex> rows;
  std::vector<OmegaElement> columns;
  std::vector<std::vector<QmodZ>> entries;
};

/// (omega, r) = <omega, iota(r)> mod Z with iota(r) the fundamental coweight of the image vertex.
QmodZ pairing(const Alcove& a, const HyperspecialVertex& v, const OmegaElement& r);
PairingTable pairing_table(const Alcove& a, const std::vector<HyperspecialVertex>& vertices,
                           const std::vector<OmegaElement>& omega);

struct ZetaData {
  std::vector<std::vector<QmodZ>> characters;  // per hyperspecial vertex, values on the R-group
  std::size_t distinct = 0;
  bool surjective = false;
  bool homomorphism = false;  // additivity in both arguments
};
ZetaData zeta(const Alcove& a, const std::vector<HyperspecialVertex>& vertices, const RGroupData& rg);

/// Base case: alpha-check(x) mod Z when alpha(omega) = 1, otherwise 0.
QmodZ keys_base(const Alcove& a, const RatVector& x, const HyperspecialVertex& v, std::size_t simple_index);

struct CocycleCoefficient {
  RatVector point;
  std::size_t vertex = 0;
  WeylElement element;
  std::vector<std::size_t> word_used;
  Rational exact;  // sum before reduction mod Z
  QmodZ value;
};

/// Evaluates along the given word, peeling letters from the right.
CocycleCoefficient cocycle(const Alcove& a, const RatVector& x, const HyperspecialVertex& v,
                           const std::vector<std::size_t>& word);
/// Uses the descent reduced word of w.
CocycleCoefficient cocycle(const Alcove& a, const RatVector& x, const HyperspecialVertex& v, const IntMatrix& w);

struct TheoremRecord {
  std::size_t vertex = 0;        // node of the hyperspecial vertex
  std::size_t element = 0;       // vertex image of the Omega element
  std::vector<std::size_t> word;
  QmodZ cocycle_value;
  QmodZ pairing_value;
  bool pass = false;
};

struct TheoremReport {
  AlcovePoint point;
  std::vector<TheoremRecord> records;
  bool passed = true;
};

TheoremReport verify_main_theorem(const Alcove& a, const std::vector<HyperspecialVertex>& vertices,
                                  const RGroupData& rg);

struct PacketRow {
  std::size_t vertex = 0;
  std::vector<QmodZ> character;
  std::size_t fiber = 0;
};

struct PacketTable {
  AlcovePoint point;
  std::vector<std::size_t> r_group;  // vertex images of the R-group elements
  std::vector<PacketRow> rows;
  std::vector<std::vector<std::size_t>> fibers;  // nodes grouped by character
};

PacketTable packet_table(const Alcove& a, const std::vector<HyperspecialVertex>& vertices, const RGroupData& rg);

/// torsion(Y/ZE) computed from coinvariants, against coker of the fixed cocharacters into
/// the fixed coweight lattice.
struct LatticeLemma {
  FiniteAbelianGroup torsion_quotient;
  FiniteAbelianGroup cokernel;
  bool agrees = false;
};
LatticeLemma lattice_lemma(const BasedRootDatum& d);

}  // namespace unram
