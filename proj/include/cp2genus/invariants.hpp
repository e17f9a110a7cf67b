#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "cp2genus/knot.hpp"
#include "cp2genus/signature.hpp"

namespace cp2 {

enum class TauProvenance { TorusFormula, MirrorRule, Additivity, Override, Unknown };

std::string to_string(TauProvenance p);

/// tau with the rule that produced it. Unknown carries no value.
struct TauValue {
  std::optional<long> value;
  TauProvenance provenance = TauProvenance::Unknown;
  std::string citation;  // set for Override

  bool known() const { return value.has_value(); }
  static TauValue unknown() { return {}; }
};

/// Literature overrides for tau, keyed by canonical printed expression.
class TauOverrides {
 public:
  /// Seeded with the negative-clasped double of the left-handed trefoil.
  static const TauOverrides& standard();
  static TauOverrides empty() { return TauOverrides{}; }

  void add(const std::string& expr, long value, const std::string& citation);
  std::optional<std::pair<long, std::string>> lookup(const KnotPtr& k) const;

 private:
  std::map<std::string, std::pair<long, std::string>> entries_;
};

/// Rule-based tau: torus formula, mirror negation, additivity, overrides.
TauValue tau(const KnotPtr& k,
             const TauOverrides& overrides = TauOverrides::standard());

struct G4Interval {
  long lower = 0;
  long upper = 0;
};

/// Invariant bundle consumed by the bound engines. Copies share the
/// sigma_p cache; sigma_p computation is thread-safe and idempotent.
class InvariantRecord {
 public:
  static InvariantRecord of(const KnotPtr& k, SignatureOptions opts = {},
                            const TauOverrides& overrides = TauOverrides::standard());

  /// Record with prescribed invariants; sigma_p falls back to
  /// `sigma_default` outside the explicit map. Used by the degree-search
  /// oracle tests and the proposition-style acceptance checks.
  static InvariantRecord synthetic(std::optional<long> tau_value, long sigma,
                                   std::map<long, long> sigma_p_values = {},
                                   long sigma_default = 0);

  const LaurentPoly& alexander() const { return alexander_; }
  long signature() const { return signature_; }
  int arf() const { return arf_; }
  const TauValue& tau() const { return tau_; }
  G4Interval g4() const { return g4_; }

  /// Levine-Tristram signature at e^{pi i (p-1)/p}; cached per odd prime.
  /// Throws SingularAtOmega when the Alexander polynomial vanishes there.
  long sigma_p(long p) const;

  /// Upper bound for |sigma_omega| over the whole circle; used to certify
  /// the termination radius of the degree search.
  long sigma_sup_bound() const { return sigma_sup_; }

  std::map<long, long> sigma_p_snapshot() const;

 private:
  LaurentPoly alexander_{1};
  long signature_ = 0;
  int arf_ = 0;
  TauValue tau_;
  G4Interval g4_;
  long sigma_sup_ = 0;

  struct Cache {
    std::mutex mu;
    std::map<long, long> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  std::function<long(long)> provider_;  // odd prime -> sigma_p
};

/// g4 bounds: lower from |tau| and |sigma|/2, upper from the torus-knot
/// genus formula, additivity, the genus-1 double surface, and the Seifert
/// surface itself.
G4Interval g4_interval(const KnotPtr& k, SignatureOptions opts = {},
                       const TauOverrides& overrides = TauOverrides::standard());

/// Constructive upper bound alone (torus genus formula, additivity, the
/// doubles' genus-1 surface, generic Seifert genus); cheaper than the full
/// interval when no signature is needed.
long g4_upper_bound(const KnotPtr& k);

/// Convenience wrappers over the Seifert-matrix pipeline.
LaurentPoly alexander(const KnotPtr& k);
long sigma_p(const KnotPtr& k, long p, SignatureOptions opts = {});
int arf(const KnotPtr& k);

}  // namespace cp2
