#include "cp2genus/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "cp2genus/errors.hpp"

namespace cp2 {

std::string to_string(TauProvenance p) {
  switch (p) {
    case TauProvenance::TorusFormula: return "TorusFormula";
    case TauProvenance::MirrorRule: return "MirrorRule";
    case TauProvenance::Additivity: return "Additivity";
    case TauProvenance::Override: return "Override";
    case TauProvenance::Unknown: return "Unknown";
  }
  throw InternalError("unhandled TauProvenance");
}

void TauOverrides::add(const std::string& expr, long value,
                       const std::string& citation) {
  entries_[print_knot(parse_knot(expr))] = {value, citation};
}

std::optional<std::pair<long, std::string>> TauOverrides::lookup(
    const KnotPtr& k) const {
  auto it = entries_.find(print_knot(k));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const TauOverrides& TauOverrides::standard() {
  static const TauOverrides instance = [] {
    TauOverrides t;
    t.add("Wh-(-T(3,2))", -1, "Hedden, Theorem 1.5");
    return t;
  }();
  return instance;
}

TauValue tau(const KnotPtr& k, const TauOverrides& overrides) {
  if (auto hit = overrides.lookup(k))
    return TauValue{hit->first, TauProvenance::Override, hit->second};
  switch (k->kind) {
    case KnotKind::Unknot:
      return TauValue{0, TauProvenance::TorusFormula, {}};
    case KnotKind::Torus:
      return TauValue{static_cast<long>(k->p - 1) * (k->q - 1) / 2,
                      TauProvenance::TorusFormula, {}};
    case KnotKind::Mirror: {
      TauValue inner = tau(k->parts[0], overrides);
      if (!inner.known()) return TauValue::unknown();
      return TauValue{-*inner.value, TauProvenance::MirrorRule, inner.citation};
    }
    case KnotKind::Sum: {
      long total = 0;
      std::string citation;
      for (const KnotPtr& part : k->parts) {
        TauValue t = tau(part, overrides);
        if (!t.known()) return TauValue::unknown();  // Unknown is absorbing
        total += *t.value;
        if (!t.citation.empty() && citation.find(t.citation) == std::string::npos)
          citation += (citation.empty() ? "" : "; ") + t.citation;
      }
      return TauValue{total, TauProvenance::Additivity, citation};
    }
    case KnotKind::Braid:
    case KnotKind::WhiteheadDouble:
    case KnotKind::SeifertGiven:
      return TauValue::unknown();
  }
  throw InternalError("unhandled knot kind in tau");
}

namespace {

long g4_upper_rec(const KnotPtr& k) {
  switch (k->kind) {
    case KnotKind::Unknot:
      return 0;
    case KnotKind::Torus:
      return static_cast<long>(k->p - 1) * (k->q - 1) / 2;
    case KnotKind::Mirror:
      return g4_upper_rec(k->parts[0]);
    case KnotKind::Sum: {
      long total = 0;
      for (const KnotPtr& part : k->parts) total += g4_upper_rec(part);
      return total;
    }
    case KnotKind::WhiteheadDouble:
      return 1;  // the double's standard genus-1 surface, pushed into B^4
    case KnotKind::Braid:
    case KnotKind::SeifertGiven:
      return seifert_matrix(k).genus();
  }
  throw InternalError("unhandled knot kind in g4 upper bound");
}

}  // namespace

long g4_upper_bound(const KnotPtr& k) { return g4_upper_rec(k); }

G4Interval g4_interval(const KnotPtr& k, SignatureOptions opts,
                       const TauOverrides& overrides) {
  const SeifertMatrix v = seifert_matrix(k);
  long lower = std::abs(ordinary_signature(v, opts)) / 2;
  TauValue t = tau(k, overrides);
  if (t.known()) lower = std::max(lower, std::abs(*t.value));
  long upper = g4_upper_rec(k);
  if (lower > upper)
    throw InternalError("g4 lower bound exceeds the constructive upper bound");
  return G4Interval{lower, upper};
}

InvariantRecord InvariantRecord::of(const KnotPtr& k, SignatureOptions opts,
                                    const TauOverrides& overrides) {
  InvariantRecord r;
  const SeifertMatrix v = seifert_matrix(k);
  r.alexander_ = alexander_from_seifert(v);
  r.signature_ = lt_signature(v, r.alexander_, omega_minus_one(), opts);
  r.arf_ = arf_from_alexander(r.alexander_);
  r.tau_ = cp2::tau(k, overrides);
  long lower = std::abs(r.signature_) / 2;
  if (r.tau_.known()) lower = std::max(lower, std::abs(*r.tau_.value));
  r.g4_ = G4Interval{lower, g4_upper_rec(k)};
  if (r.g4_.lower > r.g4_.upper)
    throw InternalError("g4 lower bound exceeds the constructive upper bound");
  // |sigma_omega| never exceeds the rank of the form
  r.sigma_sup_ = v.size();
  r.provider_ = [v, delta = r.alexander_, opts](long p) {
    return static_cast<long>(lt_signature(v, delta, omega_sigma_p(p), opts));
  };
  return r;
}

InvariantRecord InvariantRecord::synthetic(std::optional<long> tau_value,
                                           long sigma,
                                           std::map<long, long> sigma_p_values,
                                           long sigma_default) {
  InvariantRecord r;
  r.signature_ = sigma;
  if (tau_value)
    r.tau_ = TauValue{*tau_value, TauProvenance::Override, "synthetic record"};
  long lower = std::abs(sigma) / 2;
  if (tau_value) lower = std::max(lower, std::abs(*tau_value));
  r.g4_ = G4Interval{lower, std::max(lower, std::abs(sigma_default))};
  r.sigma_sup_ = std::max(std::abs(sigma), std::abs(sigma_default));
  for (const auto& [p, s] : sigma_p_values)
    r.sigma_sup_ = std::max(r.sigma_sup_, std::abs(s));
  r.provider_ = [values = std::move(sigma_p_values), sigma_default](long p) {
    auto it = values.find(p);
    return it == values.end() ? sigma_default : it->second;
  };
  return r;
}

long InvariantRecord::sigma_p(long p) const {
  if (p < 3 || p % 2 == 0) throw InternalError("sigma_p needs an odd prime");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(p);
    if (it != cache_->values.end()) return it->second;
  }
  long value = provider_(p);  // may throw SingularAtOmega; nothing cached then
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->values.emplace(p, value).first->second;
}

std::map<long, long> InvariantRecord::sigma_p_snapshot() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->values;
}

LaurentPoly alexander(const KnotPtr& k) {
  return alexander_from_seifert(seifert_matrix(k));
}

long sigma_p(const KnotPtr& k, long p, SignatureOptions opts) {
  return lt_signature(seifert_matrix(k), omega_sigma_p(p), opts);
}

int arf(const KnotPtr& k) { return arf_from_alexander(alexander(k)); }

}  // namespace cp2
