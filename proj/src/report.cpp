#include "cycloseq/report.hpp"

namespace cycloseq {

Json to_json(const LinearComplexityReport& r) {
  Json j;
  j["period"] = r.period;
  j["lc_bm"] = r.lc_bm;
  j["lc_gcd"] = r.lc_gcd;
  j["minimal_polynomial"] = r.minimal_polynomial.to_digits();
  j["methods_agree"] = r.methods_agree;
  j["theorem_holds"] = r.theorem_holds;
  if (r.degenerate_bound) j["degenerate_bound"] = *r.degenerate_bound;
  return j;
}

Json to_json(const DegenerateReport& r) {
  Json j = to_json(r.lc);
  j["bound"] = r.bound;
  j["meets_bound"] = r.meets_bound;
  j["below_full"] = r.below_full;
  j["roots"] = r.roots;
  j["repeated_roots"] = r.repeated_roots;
  j["root_count_consistent"] = r.root_count_consistent;
  return j;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["identities_checked"] = r.identities_checked;
  j["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"lemma", x.lemma}, {"where", x.where}, {"witness", x.witness}});
  }
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const CharSumReport& r) {
  Json j;
  j["cells_checked"] = r.cells_checked;
  j["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"k", x.k}, {"cell", x.cell}, {"expected", x.expected}, {"actual", x.actual}});
  }
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const CaseTableReport& r) {
  Json j;
  j["case"] = r.case_number;
  j["case_constant"] = std::string(1, r.case_constant.digit());
  j["value_at_one"] = std::string(1, r.value_at_one.digit());
  j["values"] = to_digits(r.values);
  j["mapping_valid"] = r.mapping_valid;
  j["nonzero_everywhere"] = r.nonzero_everywhere;
  j["case_table_holds"] = r.case_table_holds();
  j["refined_table_holds"] = r.refined_table_holds();
  j["case_mismatches"] = r.case_mismatches;
  j["refined_mismatches"] = r.refined_mismatches;
  j["outside_base_field"] = r.outside_base_field;
  return j;
}

Json to_json(const BalanceProfile& r) {
  Json j;
  j["symbol_counts"] = r.symbol_counts;
  j["bucket_sizes"] = {{"a", r.bucket_sizes[0]},
                       {"b", r.bucket_sizes[1]},
                       {"c", r.bucket_sizes[2]},
                       {"d", r.bucket_sizes[3]}};
  j["zero_index_symbol"] = std::string(1, r.zero_index_symbol.digit());
  j["middle_index_symbol"] = std::string(1, r.middle_index_symbol.digit());
  return j;
}

Json constants_json(const SystemConstants& sc) {
  Json j;
  j["p"] = sc.p;
  j["q"] = sc.q;
  j["m"] = sc.m;
  j["n"] = sc.n;
  j["g1"] = sc.g1;
  j["g2"] = sc.g2;
  j["g"] = sc.g;
  j["y"] = sc.y;
  j["period"] = sc.period();
  Json table = Json::array();
  for (int i = 1; i <= sc.m; ++i) {
    for (int jj = 1; jj <= sc.n; ++jj) {
      table.push_back({{"i", i}, {"j", jj}, {"e", sc.e(i, jj)}, {"d", sc.d(i, jj)}});
    }
  }
  j["e_d"] = std::move(table);
  return j;
}

Json sequence_metadata(const QuaternarySequence& seq) {
  Json j;
  j["p"] = seq.p;
  j["q"] = seq.q;
  j["m"] = seq.m;
  j["n"] = seq.n;
  j["g"] = seq.g;
  j["y"] = seq.y;
  j["mapping"] = seq.mapping.to_string();
  j["period"] = seq.period();
  return j;
}

Json classes_json(const CyclotomicSystem& system) {
  const auto& sc = system.constants();
  Json j;
  Json classes = Json::array();
  for (const ClassId& id : system.class_ids()) {
    classes.push_back({{"class", to_string(id)},
                       {"modulus", class_modulus(sc, id)},
                       {"cofactor", class_cofactor(sc, id)},
                       {"elements", system.cls(id)}});
  }
  j["classes"] = std::move(classes);
  j["buckets"] = {{"a", system.bucket_members(Bucket::A)},
                  {"b", system.bucket_members(Bucket::B)},
                  {"c", system.bucket_members(Bucket::C)},
                  {"d", system.bucket_members(Bucket::D)}};
  return j;
}

}  // namespace cycloseq
