#include "degloci/certificate.hpp"

#include <algorithm>

namespace degloci {

std::string kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::Smooth:
      return "SmoothLeaf";
    case CertKind::NormalToric:
      return "NormalToricLeaf";
    case CertKind::FormMatch:
      return "FormMatchNode";
    case CertKind::Elkik:
      return "ElkikNode";
    case CertKind::ChartCover:
      return "ChartCoverNode";
    case CertKind::Unknown:
      return "UnknownLeaf";
  }
  return "?";
}

bool Certificate::complete() const {
  if (kind == CertKind::Unknown) return false;
  return std::all_of(children.begin(), children.end(), [](const Certificate& c) { return c.complete(); });
}

int Certificate::count(CertKind k) const {
  int n = kind == k ? 1 : 0;
  for (const auto& c : children) n += c.count(k);
  return n;
}

int Certificate::max_toric_degree() const {
  int best = -1;
  if (kind == CertKind::NormalToric) {
    if (const auto* w = std::get_if<ToricWitness>(&witness)) best = w->match.M.total_degree();
  }
  for (const auto& c : children) best = std::max(best, c.max_toric_degree());
  return best;
}

Certificate unknown_leaf(Ideal subject, std::string reason) {
  return Certificate{CertKind::Unknown, std::move(subject), "no catalog route", UnknownWitness{std::move(reason)}, {}};
}

}  // namespace degloci
