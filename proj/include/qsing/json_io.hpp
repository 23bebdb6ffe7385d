#pragma once

#include <json.hpp>

#include "qsing/singularity.hpp"

namespace qsing {

using Json = nlohmann::json;

// Rationals travel as strings ("3", "-7/2") so no precision is lost.
Json encode(const Rational& q);
Json encode(const std::vector<Rational>& v);
Json encode(const DimVector& d);
Json encode(const Quiver& q);
Json encode(const Classification& c);
Json encode(const RepClass& x);
Json encode(const ComponentReport& c);
Json encode(const ReducednessReport& r);
Json encode(const BracketTerm& t);
Json encode(const BFunctionFamily& f);
Json encode(const Affine& a);
Json encode(const BoundCertificate& b);
Json encode(const InfeasibilityCertificate& c);
Json encode(const Exclusion& e);
Json encode(const CaseNode& n);
Json encode(const CaseCertificate& c);
Json encode(const ParamInterval& p);
Json encode(const Membership& m);
Json encode(const Verdict& v);

template <class T>
T decode(const Json& j);

template <> Rational decode<Rational>(const Json& j);
template <> std::vector<Rational> decode<std::vector<Rational>>(const Json& j);
template <> DimVector decode<DimVector>(const Json& j);
template <> Quiver decode<Quiver>(const Json& j);
template <> Classification decode<Classification>(const Json& j);
template <> RepClass decode<RepClass>(const Json& j);
template <> ComponentReport decode<ComponentReport>(const Json& j);
template <> ReducednessReport decode<ReducednessReport>(const Json& j);
template <> BracketTerm decode<BracketTerm>(const Json& j);
template <> BFunctionFamily decode<BFunctionFamily>(const Json& j);
template <> Affine decode<Affine>(const Json& j);
template <> BoundCertificate decode<BoundCertificate>(const Json& j);
template <> InfeasibilityCertificate decode<InfeasibilityCertificate>(const Json& j);
template <> Exclusion decode<Exclusion>(const Json& j);
template <> CaseNode decode<CaseNode>(const Json& j);
template <> CaseCertificate decode<CaseCertificate>(const Json& j);
template <> ParamInterval decode<ParamInterval>(const Json& j);
template <> Membership decode<Membership>(const Json& j);
template <> Verdict decode<Verdict>(const Json& j);

}  // namespace qsing
