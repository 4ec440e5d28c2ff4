// JSON (de)serialization and the report builders behind the CLI subcommands.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "orbicert/certify.hpp"
#include "orbicert/enumerate.hpp"
#include "orbicert/kform.hpp"
#include "orbicert/orbifold.hpp"
#include "orbicert/topology.hpp"

namespace orbicert {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json kform_to_json(const KForm& f);
KForm kform_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json rep_to_json(const FlatRep& r);
FlatRep rep_from_json(const json& j);

json cert_report_to_json(const CertReport& c);
json token_tuple_to_json(const TokenTuple& t);

// Subcommand payloads.  Each returns {"ok": bool, ...}; the CLI exit code is
// 0 iff ok.
json selftest_report();
json census_report();
json catalog_report(const OrbitCatalog& cat);
std::string catalog_csv(const OrbitCatalog& cat);
json appendix_report_to_json(const AppendixReport& rep, int n);
json nogo_report_to_json(const NogoReport& rep);
json noncommutative_report();
json gluing_check_to_json(const GluingCheck& chk, const PontryaginData& p);
json index_report(const IndexInputs& in);
json decompose_report(const ALEBundleSpec& spec);

}  // namespace orbicert
