#include "render.hpp"

#include <sstream>

namespace monideal::cli {

json to_json(const Monomial& m) {
  return json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(to_json(g));
  return json{{"dim", ideal.dim()}, {"generators", std::move(gens)}, {"text", to_string(ideal)}};
}

json to_json(const PrimeSupport& p) {
  json out = json::array();
  for (std::size_t i : p.indices()) out.push_back(i + 1);
  return out;
}

json to_json(const std::vector<PrimeSupport>& supports) {
  json out = json::array();
  for (const PrimeSupport& p : supports) out.push_back(to_json(p));
  return out;
}

json to_json(const Decomposition& d) {
  json comps = json::array();
  for (const ParametricIdeal& q : d.components) {
    json indices = json::array();
    for (std::size_t i : q.indices()) indices.push_back(i + 1);
    comps.push_back(json{{"indices", std::move(indices)}, {"exponents", q.exponents()}});
  }
  return json{{"components", std::move(comps)}};
}

json to_json(const PowerReport& r) {
  return json{{"k", r.k},
              {"ordinary", to_json(r.ordinary)},
              {"symbolic", to_json(r.symbolic)},
              {"equal", r.equal},
              {"ass_ordinary", to_json(r.ass_ordinary)},
              {"min_ass_base", to_json(r.min_ass_base)},
              {"ass_condition", r.ass_condition}};
}

json to_json(const NormalityReport& r) {
  return json{{"normal_up_to_K", r.normal},
              {"checked_up_to", r.checked_up_to},
              {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
              {"bounded_certificate", true}};
}

json to_json(const EquivalenceReport& r) {
  json rows = json::array();
  for (const EquivalenceRow& row : r.rows) {
    rows.push_back(json{{"k", row.k},
                        {"equal", row.powers_equal},
                        {"ass_condition", row.ass_condition},
                        {"agrees", row.agrees()},
                        {"closed", row.closed ? json(*row.closed) : json(nullptr)},
                        {"matches_prime_powers",
                         row.matches_prime_powers ? json(*row.matches_prime_powers) : json(nullptr)}});
  }
  return json{{"ideal", to_json(r.ideal)},
              {"rows", std::move(rows)},
              {"equivalence_holds", r.equivalence_holds},
              {"condition_holds", r.condition_holds},
              {"normality_holds", r.normality_holds ? json(*r.normality_holds) : json(nullptr)}};
}

std::string power_table(const std::vector<TableRow>& rows) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "k | equal | ass_condition | normal_at_k\n";
  for (const TableRow& r : rows) {
    os << r.k << " | " << b(r.equal) << " | " << b(r.ass_condition) << " | " << b(r.normal_at_k)
       << '\n';
  }
  return os.str();
}

}  // namespace monideal::cli
