#pragma once

namespace thindiff {

// The four problems the toolkit steps. Limit kinds evolve a rectangle field
// coupled to a segment field; eps kinds evolve the rectangle against the
// rescaled thin box. Source kinds exchange through a volume term on the
// rectangle, boundary kinds through one row of nodes.
enum class ModelKind { LimitSource, LimitBoundary, EpsSource, EpsBoundary };

inline bool is_limit(ModelKind k) {
  return k == ModelKind::LimitSource || k == ModelKind::LimitBoundary;
}
inline bool is_eps(ModelKind k) { return !is_limit(k); }
inline bool is_source(ModelKind k) {
  return k == ModelKind::LimitSource || k == ModelKind::EpsSource;
}
inline bool is_boundary(ModelKind k) { return !is_source(k); }

// The limit problem an eps problem collapses to.
inline ModelKind limit_of(ModelKind k) {
  return is_source(k) ? ModelKind::LimitSource : ModelKind::LimitBoundary;
}

}  // namespace thindiff
