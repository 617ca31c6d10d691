#pragma once

#include <string>
#include <vector>

#include <cardyfrob/cardyfrob.hpp>
#include <cardyfrob/io.hpp>

namespace fixtures {

using namespace cardyfrob;

inline std::string data_path(const std::string& rel) { return std::string(CARDYFROB_DATA_DIR) + "/" + rel; }

inline SubgroupPair load_pair(const std::string& name) {
  return io::load_pair(io::parse_group_document(io::read_json_file(data_path("groups/" + name + ".json"))));
}

inline CardyFrobeniusAlgebra load_cardy(const std::string& name) { return build_cardy(load_pair(name).nset); }

inline FiniteGroup symmetric(std::size_t n) {
  Permutation cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    swap[i] = static_cast<std::uint32_t>(i);
  }
  std::swap(swap[0], swap[1]);
  return build_group(n, {cycle, swap});
}

inline FiniteGroup alternating5() { return build_group(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}); }

inline Subgroup generated(const FiniteGroup& g, const std::vector<Permutation>& gens) {
  std::vector<Element> elems;
  for (const auto& p : gens) elems.push_back(*g.index_of(p));
  return closure(g, elems);
}

inline SurfaceSpec closed(bool orientable, std::size_t twice_genus, std::vector<std::string> interior = {}) {
  SurfaceSpec s;
  s.orientable = orientable;
  s.twice_genus = twice_genus;
  s.interior = std::move(interior);
  return s;
}

inline SurfaceSpec bordered(std::vector<std::vector<std::string>> boundary, std::vector<std::string> interior = {},
                            bool orientable = true, std::size_t twice_genus = 0) {
  SurfaceSpec s = closed(orientable, twice_genus, std::move(interior));
  s.boundary = std::move(boundary);
  return s;
}

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

} // namespace fixtures
