#pragma once

#include <json.hpp>

#include "permfact/altmaps.hpp"
#include "permfact/enumerate.hpp"
#include "permfact/factorization.hpp"
#include "permfact/group_algebra.hpp"
#include "permfact/series.hpp"

namespace permfact {

using Json = nlohmann::ordered_json;

// Permutations serialize as nested cycle arrays, e.g. [[1,4,2],[3,6]];
// the ambient size n travels separately.
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(int n, const Json& cycles);

Json cycle_factorization_to_json(const CycleFactorization& f);
CycleFactorization cycle_factorization_from_json(const Json& j);
Json general_factorization_to_json(const GeneralFactorization& f);
GeneralFactorization general_factorization_from_json(const Json& j);

Json signature_to_json(const Signature& b);
Signature signature_from_json(const Json& j);

// Exact numbers: integers small enough for doubles stay JSON numbers,
// everything else becomes a decimal or "p/q" string.
Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);

Json map_stats_to_json(const MapStats& st);
Json connections_report_to_json(const ConnectionsReport& r);
Json identity_report_to_json(const IdentityReport& r);
Json jm_report_to_json(const JMReport& r);
Json bijection_report_to_json(const BijectionReport& r);
Json appendix_report_to_json(const AppendixReport& r);
Json kcycle_report_to_json(const KCycleReport& r);
Json series_table_to_json(const SeriesBuildResult& r);

}  // namespace permfact
