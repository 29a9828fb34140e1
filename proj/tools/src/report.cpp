#include "dgap/cli/report.hpp"

#include <sstream>

#include "dgap/gaps.hpp"

namespace dgap::cli {

Report build_report(const DigitalObject& d, const ReportOptions& opts) {
  Report r;
  r.n = d.ambient();
  r.voxels = d.size();
  const auto c = census(d);
  for (int i = 0; i <= r.n; ++i) r.census.push_back(c.at(i));
  if (r.n >= 2) {
    const auto oracle = count_gaps_oracle(d, r.n - 2);
    r.gaps = GapCounts{r.n - 2, oracle.count, count_gaps_formula(c), count_gaps_brimkov(c)};
    if (opts.hubs) r.hubs = oracle.hubs;
    if (opts.classification) r.classification = classification_histogram(d);
  }
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["voxels"] = r.voxels;
  auto census = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.census.size(); ++i) {
    nlohmann::ordered_json row;
    row["i"] = i;
    row["c"] = r.census[i].total;
    row["c_star"] = r.census[i].free;
    row["c_prime"] = r.census[i].non_free;
    row["beta"] = r.census[i].non_free;
    census.push_back(std::move(row));
  }
  j["census"] = std::move(census);
  if (r.gaps) {
    nlohmann::ordered_json g;
    g["dimension"] = r.gaps->dimension;
    g["oracle"] = r.gaps->oracle;
    g["formula"] = r.gaps->formula;
    g["brimkov"] = r.gaps->brimkov;
    g["agree"] = r.gaps->agree();
    j["gaps"] = std::move(g);
  } else {
    j["gaps"] = nullptr;
  }
  if (r.hubs) {
    auto hubs = nlohmann::ordered_json::array();
    for (const Cell& h : *r.hubs) hubs.push_back(std::vector<std::int64_t>(h.coords().begin(), h.coords().end()));
    j["hubs"] = std::move(hubs);
  }
  if (r.classification) {
    nlohmann::ordered_json h;
    for (HubTag t : kAllHubTags) h[std::string(to_string(t))] = (*r.classification)[static_cast<std::size_t>(t)];
    j["classification"] = std::move(h);
  }
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "n " << r.n << "\nvoxels " << r.voxels << "\n";
  os << "i\tc\tc*\tc'\n";
  for (std::size_t i = 0; i < r.census.size(); ++i) {
    os << i << '\t' << r.census[i].total << '\t' << r.census[i].free << '\t' << r.census[i].non_free << '\n';
  }
  if (r.gaps) {
    os << "g_" << r.gaps->dimension << " oracle " << r.gaps->oracle << " formula " << r.gaps->formula << " brimkov "
       << r.gaps->brimkov << " agree " << (r.gaps->agree() ? "yes" : "NO") << '\n';
  }
  if (r.hubs) {
    for (const Cell& h : *r.hubs) os << "hub " << h.to_string() << '\n';
  }
  if (r.classification) {
    for (HubTag t : kAllHubTags) os << to_string(t) << ' ' << (*r.classification)[static_cast<std::size_t>(t)] << '\n';
  }
  return os.str();
}

}  // namespace dgap::cli
