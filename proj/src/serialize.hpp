#pragma once

#include <string>

#include <json.hpp>

#include "labels.hpp"
#include "matgroups.hpp"
#include "radical.hpp"
#include "symplectic.hpp"

namespace wl {

using json = nlohmann::ordered_json;

json to_json(const RootOfUnity& r);
json to_json(const Partition& p);
json to_json(const CoreTower& t);
json to_json(const SemisimpleLabel& s);

// One record per Brauer label: s, mu, the omega image (lambda, K), kappa pair,
// deg K, hook-sum defect, and the O_{ell'} orbit id.
json label_record(const GlobalContext& ctx, const IBrLabel& x, int orbit_id);

json count_record(const GlobalContext& ctx, unsigned n, GroupKind kind, const CountResult& r,
                  std::optional<i64> oracle);

json shape_to_json(const BasicShape& s);
json radical_record(const GlobalContext& ctx, const RadicalShape& shape);

json claim_record(const ClaimResult& c);

json class_table_record(const GlobalContext& ctx, unsigned n, const std::string& group,
                        const FiniteMatrixGroup& G, i64 ell);

// Generator matrices of one symplectic-type family as coefficient arrays,
// prefixed by the field data.
json generators_record(const SymplecticTypeGens& G);

std::string tsv_escape(const std::string& s);

}  // namespace wl
