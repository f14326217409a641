#include "sdop/json_io.hpp"

#include <stdexcept>

namespace sdop {

using nlohmann::json;

json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Poly poly_from_json(const json& j) {
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(Rat::parse(v.get<std::string>()));
  return Poly(std::move(c));
}

json to_json(const SdElem& e) {
  json terms = json::array();
  for (const auto& [k, F] : e.terms()) {
    terms.push_back({{"k", k},
                     {"f0", to_json(F.f0)},
                     {"f1", to_json(F.f1)},
                     {"fp", to_json(F.fp)},
                     {"fm", to_json(F.fm)}});
  }
  return {{"terms", terms}, {"central", e.central().str()}};
}

SdElem sdelem_from_json(const json& j) {
  SdElem e(Rat::parse(j.value("central", "0")));
  for (const auto& t : j.at("terms")) {
    SuperMat F;
    if (t.contains("f0")) F.f0 = poly_from_json(t["f0"]);
    if (t.contains("f1")) F.f1 = poly_from_json(t["f1"]);
    if (t.contains("fp")) F.fp = poly_from_json(t["fp"]);
    if (t.contains("fm")) F.fm = poly_from_json(t["fm"]);
    e.set_term(t.at("k").get<int>(), e.term(t.at("k").get<int>()) + F);
  }
  return e;
}

json to_json(const WinMat& m) {
  json entries = json::array();
  for (const auto& [ij, c] : m.entries())
    entries.push_back({{"i", idx_str(ij.first)}, {"j", idx_str(ij.second)}, {"v", c.str()}});
  return {{"N", m.window()}, {"entries", entries}, {"central", m.central().str()}};
}

WinMat winmat_from_json(const json& j) {
  WinMat m(j.at("N").get<int>());
  for (const auto& e : j.at("entries"))
    m.add(idx_parse(e.at("i").get<std::string>()), idx_parse(e.at("j").get<std::string>()),
          Rat::parse(e.at("v").get<std::string>()));
  m.central() = Rat::parse(j.value("central", "0"));
  return m;
}

namespace {

const char* species_name(Species s) {
  switch (s) {
    case Species::PsiPlus: return "psi+";
    case Species::PsiMinus: return "psi-";
    case Species::GamPlus: return "gam+";
    default: return "gam-";
  }
}

Species species_parse(const std::string& s) {
  if (s == "psi+") return Species::PsiPlus;
  if (s == "psi-") return Species::PsiMinus;
  if (s == "gam+") return Species::GamPlus;
  if (s == "gam-") return Species::GamMinus;
  throw std::invalid_argument("bad species: " + s);
}

}  // namespace

json to_json(const FockState& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms) {
    json modes = json::array();
    for (const auto& [mode, mult] : m.factors) {
      for (int t = 0; t < mult; ++t)
        modes.push_back({{"sp", species_name(mode.sp)},
                         {"color", mode.color},
                         {"idx", idx_str(mode.idx)}});
    }
    terms.push_back({{"modes", modes}, {"coeff", c.str()}});
  }
  return {{"l", v.colors}, {"cutoff", idx_str(v.twice_cutoff)}, {"terms", terms}};
}

FockState fock_from_json(const json& j) {
  FockState v;
  v.colors = j.at("l").get<int>();
  v.twice_cutoff = idx_parse(j.at("cutoff").get<std::string>());
  for (const auto& t : j.at("terms")) {
    FockState one = FockState::vacuum(v.colors, v.twice_cutoff);
    const auto& modes = t.at("modes");
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
      Mode m{species_parse((*it).at("sp").get<std::string>()),
             (*it).at("color").get<int>(), idx_parse((*it).at("idx").get<std::string>())};
      one = apply_mode(m, one);
    }
    v += Rat::parse(t.at("coeff").get<std::string>()) * one;
  }
  return v;
}

json to_json(const Fps& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.str());
  return {{"order", f.order()}, {"coeffs", arr}};
}

Fps fps_from_json(const json& j) {
  std::vector<Rat> c;
  for (const auto& v : j.at("coeffs")) c.push_back(Rat::parse(v.get<std::string>()));
  return Fps(j.at("order").get<int>(), std::move(c));
}

json to_json(const HwWeight& w) {
  json vals = json::array();
  for (const auto& [t, v] : w.values)
    vals.push_back({{"a", idx_str(t)}, {"v", v.str()}});
  return {{"values", vals}, {"central", w.central.str()}};
}

HwWeight hw_weight_from_json(const json& j) {
  HwWeight w;
  for (const auto& e : j.at("values"))
    w.values[idx_parse(e.at("a").get<std::string>())] = Rat::parse(e.at("v").get<std::string>());
  w.central = Rat::parse(j.value("central", "0"));
  return w;
}

}  // namespace sdop
