#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rooksum/dalg.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/rook.hpp"

namespace rooksum {

/// {"n": n, "terms": [{"perm": "2413", "coeff": "3/2"}, ...]}, terms in lex order.
template <ExactField F>
nlohmann::ordered_json to_json(const AlgebraElement<F>& a) {
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  nlohmann::ordered_json j;
  j["n"] = a.degree();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [r, c] : a.terms()) {
    nlohmann::ordered_json t;
    t["perm"] = G.element(r).to_string();
    t["coeff"] = a.field().to_fraction_string(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

template <ExactField F>
AlgebraElement<F> algebra_element_from_json(const nlohmann::json& j, const F& field) {
  int n = j.at("n").get<int>();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (const auto& t : j.at("terms")) {
    Permutation w = Permutation::parse(t.at("perm").get<std::string>());
    terms.emplace_back(G.rank(w), field.parse(t.at("coeff").get<std::string>()));
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

inline std::string minpol_tsv(const std::vector<MinpolRow>& rows) {
  std::ostringstream os;
  os << "n\ta\tb\tc\tminpol\n";
  for (const auto& r : rows) os << r.n << '\t' << r.a << '\t' << r.b << '\t' << r.c << '\t' << r.formatted() << '\n';
  return os.str();
}

inline nlohmann::ordered_json minpol_json(const std::vector<MinpolRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["minpol"] = r.formatted();
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string minpol_text(const std::vector<MinpolRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(3) << "n" << std::setw(3) << "a" << std::setw(3) << "b" << std::setw(3) << "c"
     << "minimal polynomial\n";
  for (const auto& r : rows) {
    os << std::setw(3) << r.n << std::setw(3) << r.a << std::setw(3) << r.b << std::setw(3) << r.c << r.formatted()
       << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const DeltaStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["dim"] = s.dim;
  j["center_dim"] = s.center_dim;
  j["radical_dim"] = s.radical_dim ? nlohmann::ordered_json(*s.radical_dim) : nlohmann::ordered_json(nullptr);
  j["unity"] = s.unity ? nlohmann::ordered_json(*s.unity) : nlohmann::ordered_json(nullptr);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

inline std::string delta_stats_text(const std::vector<DeltaStats>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(8) << "dim" << std::setw(8) << "center" << std::setw(9)
     << "radical"
     << "unity\n";
  for (const auto& s : rows) {
    os << std::setw(4) << s.n << std::setw(8) << s.dim << std::setw(8) << s.center_dim << std::setw(9)
       << (s.radical_dim ? std::to_string(*s.radical_dim) : "-") << (s.unity ? "yes" : "none");
    if (!s.note.empty()) os << " (" << s.note << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace rooksum
