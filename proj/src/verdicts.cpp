#include "crdyn/verdicts.hpp"

namespace crdyn {

std::string to_string(CertificateTag tag) {
  switch (tag) {
    case CertificateTag::common_image:
      return "common-image";
    case CertificateTag::full_image:
      return "full-image";
    case CertificateTag::eventual_hausdorff:
      return "eventual-hausdorff";
    case CertificateTag::eventual_equal:
      return "eventual-equal";
    case CertificateTag::trivial_fiber:
      return "trivial-fiber";
  }
  return "unknown";
}

std::string to_string(PropertyTag tag) {
  switch (tag) {
    case PropertyTag::SP:
      return "SP";
    case PropertyTag::HSP:
      return "HSP";
    case PropertyTag::ISP:
      return "ISP";
    case PropertyTag::HISP:
      return "HISP";
  }
  return "unknown";
}

std::optional<PropertyTag> parse_property_tag(const std::string& text) {
  for (auto t : {PropertyTag::SP, PropertyTag::HSP, PropertyTag::ISP, PropertyTag::HISP}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

namespace {

IntervalUnion fiber_domains(const BoxRelation& f, const std::vector<std::size_t>& fiber) {
  std::vector<Interval> parts;
  for (std::size_t i : fiber) parts.push_back(f.boxes()[i].domain);
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace

CertificateSearch<BoxRelation> certify_trivial_fiber(const BoxRelation& f) {
  // {x : (x, x0) in F} is the union of the domains of the boxes whose range
  // holds x0, which only changes at range endpoints.
  std::vector<Interval> ranges;
  for (const auto& b : f.boxes()) ranges.push_back(b.range);
  const auto decomposition = decompose_by_membership(f.ambient(), ranges);
  for (const auto& cell : decomposition.cells) {
    if (fiber_domains(f, cell.pattern) != f.full_set()) continue;
    Certificate<BoxRelation> cert;
    cert.tag = CertificateTag::trivial_fiber;
    cert.x0 = cell.lo_closed ? cell.lo : cell.sample();
    cert.fiber = cell.pattern;
    return cert;
  }
  return NotFound{"no point x0 has X x {x0} inside F"};
}

CertificateSearch<FiniteRelation> certify_trivial_fiber(const FiniteRelation& f) {
  for (std::size_t y = 0; y < f.size(); ++y) {
    bool column = true;
    for (std::size_t x = 0; x < f.size() && column; ++x) column = f.related(x, y);
    if (!column) continue;
    Certificate<FiniteRelation> cert;
    cert.tag = CertificateTag::trivial_fiber;
    cert.x0 = y;
    return cert;
  }
  return NotFound{"no column of the relation is full"};
}

bool recheck_trivial_fiber(const BoxRelation& f, const Certificate<BoxRelation>& cert) {
  if (!cert.x0) return false;
  for (std::size_t i : cert.fiber) {
    if (i >= f.boxes().size() || !f.boxes()[i].range.contains(*cert.x0)) return false;
  }
  return fiber_domains(f, cert.fiber) == f.full_set();
}

bool recheck_trivial_fiber(const FiniteRelation& f, const Certificate<FiniteRelation>& cert) {
  if (!cert.x0 || *cert.x0 >= f.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!f.related(x, *cert.x0)) return false;
  }
  return true;
}

}  // namespace crdyn
