#pragma once

#include "turan/enumerate.hpp"
#include "turan/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace turan {

struct SdpModel;

struct CertificateBlock {
  FlagType type;
  int flag_size = 0;
  RationalMatrix q;

  friend bool operator==(const CertificateBlock&, const CertificateBlock&) = default;
};

/// Claimed bound u with SOS blocks and slack coefficients. Slacks are indexed
/// by position in the canonical-key-sorted list of admissible graphs on m
/// vertices; omitted slacks are taken to be the exact residual.
struct Certificate {
  Rational bound;
  std::string family_key;
  int m = 0;
  std::vector<CertificateBlock> blocks;
  std::map<std::size_t, Rational> slacks;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Exact positive semidefiniteness test by rational LDL^T with diagonal
/// pivoting. Throws std::invalid_argument for a non-symmetric matrix.
bool psd_check(const RationalMatrix& q);

struct Verdict {
  enum class Kind { Verified, NotPsd, NegativeSlack, BadCoefficient };

  Kind kind = Kind::Verified;
  std::string reason;
  int block = -1;   // offending block for NotPsd
  int graph = -1;   // offending admissible graph otherwise
  std::vector<Rational> residuals;  // u - obj(G) - sum <Q, P(G)> per graph

  bool verified() const { return kind == Kind::Verified; }
};

/// Checks u - obj(G) - sum_sigma <Q_sigma, P_sigma(G)> >= 0 for every
/// admissible G, every block PSD, and 0 <= c_G <= residual for supplied c_G.
/// Throws std::invalid_argument on dimension mismatches or an unparseable
/// family key.
Verdict verify(const Certificate& cert);

/// Certificate with no blocks: u = max obj(G) and c_G = u - obj(G).
Certificate lp_certificate(const SdpModel& model);

// Text form:
//   bound p/q
//   family <key>
//   m <int>
//   type <hex key> dim <d> [flags <m'>]   then d(d+1)/2 upper-triangle values
//   slack <index> p/q
void write_certificate(std::ostream& out, const Certificate& cert);
Certificate read_certificate(std::istream& in);
Certificate read_certificate_file(const std::string& path);

}  // namespace turan
