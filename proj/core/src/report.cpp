#include "nchodge/report.hpp"

#include <iomanip>
#include <sstream>

namespace nchodge {

namespace {

nlohmann::json qvec_json(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

std::string cell(std::size_t v, bool provisional) { return std::to_string(v) + (provisional ? "*" : ""); }

}  // namespace

nlohmann::json to_json(const WedderburnData& w) {
  nlohmann::json j;
  j["radical_dim"] = w.radical.cols();
  j["semisimple_dim"] = w.semisimple.algebra.dim;
  j["center_dim"] = w.center_dim();
  j["center_minpoly"] = w.center_minpoly.to_string();
  j["primitive_element"] = qvec_json(w.primitive_element);
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : w.factors) {
    nlohmann::json x;
    x["dim_q"] = f.dim_q;
    x["center_minpoly"] = f.center_minpoly.to_string();
    x["center_degree"] = f.d;
    x["dim_over_center"] = f.dim_over_center;
    x["matrix_size"] = f.m ? nlohmann::json(*f.m) : nlohmann::json(nullptr);
    x["r1"] = f.r1;
    x["r2"] = f.r2;
    x["idempotent"] = qvec_json(f.idempotent);
    fs.push_back(x);
  }
  j["factors"] = fs;
  return j;
}

nlohmann::json to_json(const RankTable& t) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [n, e] : t) {
    a.push_back({{"degree", n}, {"value", e.value}, {"provisional", e.provisional},
                 {"provenance", to_string(e.provenance)}});
  }
  return a;
}

nlohmann::json to_json(const TriangleReport& r, const WedderburnData& w) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["imax"] = r.imax;
  j["wedderburn"] = to_json(w);
  j["tables"] = {{"k", to_json(r.k)}, {"kprime", to_json(r.kprime)}, {"middle", to_json(r.middle)}};
  if (r.direct_run) j["tables"]["middle_direct"] = to_json(r.middle_direct);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json x{{"degree", row.degree}, {"left", row.left},       {"middle", row.middle},
                     {"right", row.right},   {"pass", row.pass},       {"provisional", row.provisional}};
    if (row.middle_direct) x["middle_direct"] = *row.middle_direct;
    rows.push_back(x);
  }
  nlohmann::json tri;
  tri["per_degree"] = rows;
  tri["delta_rank"] = r.delta_rank ? nlohmann::json(*r.delta_rank) : nlohmann::json(nullptr);
  tri["verdict"] = r.verdict();
  if (r.direct_run) tri["paths_agree"] = r.paths_agree;
  if (r.degree0) {
    tri["sequences"] = {{"degree0", *r.degree0},
                        {"degree1", *r.degree1},
                        {"expected0", *r.expected0},
                        {"expected1", *r.expected1}};
  }
  j["triangle"] = tri;
  j["provenance"] = r.provenance;
  return j;
}

nlohmann::json to_json(const CyclicTables& t) {
  return {{"hh", t.hh.to_json()}, {"hc", t.hc.to_json()}, {"hc_minus", t.hc_minus.to_json()}, {"hp", t.hp.to_json()}};
}

nlohmann::json to_json(const PeriodicityVerdict& v) {
  nlohmann::json u = nlohmann::json::object();
  for (const auto& [n, r] : v.u_ranks) u[std::to_string(n)] = r;
  return {{"status", to_string(v.status)}, {"u_ranks", u}, {"message", v.message}};
}

nlohmann::json to_json(const std::map<int, DimPair>& dims) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [k, d] : dims) {
    a.push_back({{"degree", k}, {"dim", d.raw}, {"fixed", d.fixed ? nlohmann::json(*d.fixed) : nlohmann::json(nullptr)}});
  }
  return a;
}

std::string to_text(const FDAlgebra& a, const WedderburnData& w) {
  std::ostringstream os;
  os << "algebra " << a.name << "  dim " << a.dim << "\n";
  os << "radical dim " << w.radical.cols() << ", semisimple dim " << w.semisimple.algebra.dim << ", center dim "
     << w.center_dim() << "\n";
  os << "center minpoly " << w.center_minpoly.to_string() << "\n";
  os << "factors:\n";
  for (const auto& f : w.factors) {
    os << "  dim " << f.dim_q << "  center " << f.center_minpoly.to_string() << " (degree " << f.d << ", r1 " << f.r1
       << ", r2 " << f.r2 << ")  dim over center " << f.dim_over_center;
    if (f.m) os << "  M_" << *f.m;
    os << "\n";
  }
  return os.str();
}

std::string to_text(const TriangleReport& r) {
  std::ostringstream os;
  os << "triangle for " << r.algebra << " (degrees " << -r.imax << ".." << r.imax << ")\n";
  os << std::setw(6) << "n" << std::setw(8) << "K" << std::setw(8) << "NCD" << std::setw(8) << "K'[-1]";
  if (r.direct_run) os << std::setw(8) << "direct";
  os << "  ok\n";
  for (const auto& row : r.rows) {
    os << std::setw(6) << row.degree << std::setw(8) << row.left << std::setw(8) << cell(row.middle, row.provisional)
       << std::setw(8) << row.right;
    if (r.direct_run) os << std::setw(8) << (row.middle_direct ? std::to_string(*row.middle_direct) : "-");
    os << "  " << (row.pass ? "yes" : "NO") << "\n";
  }
  os << "delta rank (degree 1 -> 0): " << (r.delta_rank ? std::to_string(*r.delta_rank) : "inconsistent") << "\n";
  if (r.degree0) {
    auto show = [&](const std::array<std::size_t, 3>& x) {
      return "(" + std::to_string(x[0]) + ", " + std::to_string(x[1]) + ", " + std::to_string(x[2]) + ")";
    };
    os << "degree 0: " << show(*r.degree0) << " expected " << show(*r.expected0) << "\n";
    os << "degree 1: " << show(*r.degree1) << " expected " << show(*r.expected1) << "\n";
  }
  if (r.direct_run) os << "paths agree: " << (r.paths_agree ? "yes" : "no") << "\n";
  for (const auto& p : r.provenance) os << "  - " << p << "\n";
  os << "verdict: " << r.verdict() << "\n";
  return os.str();
}

std::string to_text(const CyclicTables& t) {
  std::ostringstream os;
  int lo = 0, hi = 0;
  for (const auto* h : {&t.hh, &t.hc, &t.hc_minus, &t.hp}) {
    if (h->dims.empty()) continue;
    lo = std::min(lo, h->dims.begin()->first);
    hi = std::max(hi, h->dims.rbegin()->first);
  }
  os << std::setw(6) << "n" << std::setw(8) << "HH" << std::setw(8) << "HC" << std::setw(8) << "HC-" << std::setw(8)
     << "HP" << "\n";
  auto col = [](const HomologyTable& h, int n) -> std::string {
    auto it = h.dims.find(n);
    if (it == h.dims.end()) return "-";
    return cell(it->second, !h.is_stable(n));
  };
  for (int n = lo; n <= hi; ++n) {
    os << std::setw(6) << n << std::setw(8) << col(t.hh, n) << std::setw(8) << col(t.hc, n) << std::setw(8)
       << col(t.hc_minus, n) << std::setw(8) << col(t.hp, n) << "\n";
  }
  os << "(* = not yet stable at this truncation)\n";
  return os.str();
}

std::string to_text(const std::map<int, DimPair>& dims, const std::string& title) {
  std::ostringstream os;
  os << title << "\n" << std::setw(6) << "k" << std::setw(8) << "dim" << std::setw(8) << "fixed" << "\n";
  for (const auto& [k, d] : dims) {
    os << std::setw(6) << k << std::setw(8) << d.raw << std::setw(8) << (d.fixed ? std::to_string(*d.fixed) : "-")
       << "\n";
  }
  return os.str();
}

}  // namespace nchodge
