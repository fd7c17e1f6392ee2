#pragma once

#include <optional>
#include <string>

#include "cocycle_search.hpp"
#include "faces_flags.hpp"

namespace hdx {

struct WellConnectedReport {
  bool well_connected = true;
  std::optional<Face> witness;  ///< first r whose faces complex of the link fails
  std::string reason;
  int ell_max = 0;  ///< simple connectivity verified only up to this ℓ
  std::size_t faces_checked = 0;
};

/// F^{d1}(X_r) for r ∈ X^{≤d1} (r = ∅ gives F^{d1}X); empty when the link has no d1-faces.
inline std::optional<ComplexPtr> link_faces_complex(const ComplexPtr& X, int d1, const Face& r) {
  if (r.empty()) return faces_complex(X, d1).complex;
  if (X->dim() - static_cast<int>(r.size()) < d1) return std::nullopt;
  return faces_subcomplex_of_link(X, d1, r).standalone.complex;
}

/// For every r ∈ X^{≤d1}: F^{d1}(X_r) connected; for vertices additionally every cocycle with ℓ ≤ ℓ_max trivial.
inline WellConnectedReport well_connected_check(const ComplexPtr& X, int d1, int ell_max, std::uint64_t budget = 10'000'000) {
  require(d1 >= 0 && d1 <= X->dim(), ErrorKind::BadParams, "well-connectedness needs 0 <= d1 <= d");
  WellConnectedReport rep;
  rep.ell_max = ell_max;
  for (int i = -1; i <= d1; ++i) {
    for (const Face& r : X->faces(i)) {
      ++rep.faces_checked;
      auto F = link_faces_complex(X, d1, r);
      if (!F || !(*F)->is_connected()) {
        rep.well_connected = false;
        rep.witness = r;
        rep.reason = F ? "faces complex of the link is disconnected" : "link has no faces of the required level";
        return rep;
      }
      if (i == 0 && !is_simply_connected(*F, ell_max, budget).simply_connected) {
        rep.well_connected = false;
        rep.witness = r;
        rep.reason = "faces complex of the vertex link has a nontrivial cover";
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace hdx
