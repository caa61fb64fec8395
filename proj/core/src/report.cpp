#include "ptol/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ptol {

std::string report_text(TheoremReport const& report, bool include_timing) {
  std::ostringstream out;
  out << "posets up to " << report.max_n << " elements"
      << (report.deduplicated ? " (one per isomorphism class)" : "") << '\n';
  out << std::setw(3) << "n" << std::setw(10) << "posets" << std::setw(12) << "tolerances"
      << std::setw(12) << "pairs" << std::setw(12) << "amicable" << std::setw(12) << "permuting"
      << '\n';
  for (std::size_t n = 1; n < report.by_size.size(); ++n) {
    SizeTally const& t = report.by_size[n];
    out << std::setw(3) << n << std::setw(10) << t.posets << std::setw(12) << t.tolerances
        << std::setw(12) << t.pairs << std::setw(12) << t.amicable_pairs << std::setw(12)
        << t.permuting_pairs << '\n';
  }
  out << "posets checked: " << report.posets_checked << '\n';
  out << "2-uniform tolerances: " << report.tolerances_enumerated << '\n';
  out << "ordered pairs checked: " << report.tolerance_pairs_checked << '\n';
  out << "agreements (amicable == permute): " << report.agreements << '\n';
  out << "counterexamples: " << report.counterexamples.size() << '\n';
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
    Counterexample const& c = report.counterexamples[i];
    out << "--- counterexample " << i + 1 << ": amicable=" << (c.amicable ? "yes" : "no")
        << " permute=" << (c.permute ? "yes" : "no") << '\n';
    out << "amicability: " << c.amicable_detail << '\n';
    out << "permutability: " << c.permute_detail << '\n';
    out << c.poset << "# T\n" << c.t << "# S\n" << c.s;
  }
  if (include_timing) {
    out << "wall time: " << std::fixed << std::setprecision(3) << report.wall_time.count()
        << " s\n";
  }
  return out.str();
}

std::string report_json(TheoremReport const& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["command"] = "verify-theorem";
  doc["max_n"] = report.max_n;
  doc["deduplicated"] = report.deduplicated;
  doc["theorem_holds"] = report.counterexamples.empty();
  doc["posets_checked"] = report.posets_checked;
  doc["tolerances_enumerated"] = report.tolerances_enumerated;
  doc["tolerance_pairs_checked"] = report.tolerance_pairs_checked;
  doc["agreements"] = report.agreements;
  doc["amicable_pairs"] = report.amicable_pairs;
  doc["permuting_pairs"] = report.permuting_pairs;
  doc["by_size"] = nlohmann::ordered_json::array();
  for (std::size_t n = 1; n < report.by_size.size(); ++n) {
    SizeTally const& t = report.by_size[n];
    doc["by_size"].push_back({{"n", n},
                              {"posets", t.posets},
                              {"tolerances", t.tolerances},
                              {"pairs", t.pairs},
                              {"amicable_pairs", t.amicable_pairs},
                              {"permuting_pairs", t.permuting_pairs}});
  }
  doc["counterexamples"] = nlohmann::ordered_json::array();
  for (Counterexample const& c : report.counterexamples) {
    doc["counterexamples"].push_back({{"poset", c.poset},
                                      {"t", c.t},
                                      {"s", c.s},
                                      {"amicable", c.amicable},
                                      {"permute", c.permute},
                                      {"amicable_detail", c.amicable_detail},
                                      {"permute_detail", c.permute_detail}});
  }
  if (include_timing) {
    doc["wall_time_seconds"] = report.wall_time.count();
  }
  return doc.dump(2) + "\n";
}

}  // namespace ptol
