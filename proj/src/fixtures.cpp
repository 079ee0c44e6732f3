#include "opf/fixtures.hpp"

namespace opf {

const std::vector<ColoringCase>& golden_colorings() {
  static const std::vector<ColoringCase> cases = {
    {"1(2(3(4)))", {}},
    {"1(2(4(3)))", {{4, 3}}},
    {"1(3(2(4)))", {}},
    {"1(3(4(2)))", {{4, 2}}},
    {"1(4(2(3)))", {{4, 2}}},
    {"1(4(3(2)))", {{3, 2}, {4, 3}}},
    {"2(1(3(4)))", {}},
    {"2(1(4(3)))", {{4, 3}}},
    {"2(3(1(4)))", {}},
    {"2(3(4(1)))", {{4, 1}}},
    {"2(4(1(3)))", {{4, 1}}},
    {"2(4(3(1)))", {{3, 1}, {4, 3}}},
    {"3(1(2(4)))", {}},
    {"3(1(4(2)))", {{4, 2}}},
    {"3(2(1(4)))", {}},
    {"3(2(4(1)))", {{4, 1}}},
    {"3(4(1(2)))", {{4, 1}}},
    {"3(4(2(1)))", {{2, 1}, {4, 2}}},
    {"4(1(2(3)))", {{4, 1}}},
    {"4(1(3(2)))", {{3, 2}, {4, 1}}},
    {"4(2(1(3)))", {{4, 2}}},
    {"4(2(3(1)))", {{3, 1}, {4, 2}}},
    {"4(3(1(2)))", {{3, 1}, {4, 3}}},
    {"4(3(2(1)))", {{2, 1}, {3, 2}, {4, 3}}},
    {"1(2(3,4))", {}},
    {"1(3(2,4))", {{3, 2}, {3, 4}}},
    {"1(4(2,3))", {{4, 2}, {4, 3}}},
    {"2(1(3,4))", {}},
    {"2(3(1,4))", {{3, 1}, {3, 4}}},
    {"2(4(1,3))", {{4, 1}, {4, 3}}},
    {"3(1(2,4))", {}},
    {"3(2(1,4))", {{2, 1}, {2, 4}, {3, 2}}},
    {"3(4(1,2))", {{4, 1}, {4, 2}}},
    {"4(1(2,3))", {{4, 1}}},
    {"4(2(1,3))", {{2, 1}, {2, 3}, {4, 2}}},
    {"4(3(1,2))", {{3, 1}, {3, 2}, {4, 3}}},
    {"1(2,3(4))", {}},
    {"1(2,4(3))", {{4, 3}}},
    {"1(2(4),3)", {}},
    {"1(4(2),3)", {{4, 2}}},
    {"1(2(3),4)", {}},
    {"1(3(2),4)", {{1, 3}, {1, 4}, {3, 2}}},
    {"2(1,3(4))", {{2, 1}, {2, 3}}},
    {"2(1,4(3))", {{2, 1}, {2, 4}, {4, 3}}},
    {"2(1(4),3)", {}},
    {"2(4(1),3)", {{4, 1}}},
    {"2(1(3),4)", {}},
    {"2(3(1),4)", {{2, 3}, {2, 4}, {3, 1}}},
    {"3(1,2(4))", {{3, 1}, {3, 2}}},
    {"3(1,4(2))", {{3, 1}, {3, 4}, {4, 2}}},
    {"3(1(4),2)", {{3, 1}, {3, 2}}},
    {"3(4(1),2)", {{3, 2}, {3, 4}, {4, 1}}},
    {"3(1(2),4)", {{3, 1}, {3, 4}}},
    {"3(2(1),4)", {{2, 1}, {3, 2}, {3, 4}}},
    {"4(1,2(3))", {{4, 1}, {4, 2}}},
    {"4(1,3(2))", {{3, 2}, {4, 1}, {4, 3}}},
    {"4(1(3),2)", {{4, 1}, {4, 2}}},
    {"4(3(1),2)", {{3, 1}, {4, 2}, {4, 3}}},
    {"4(1(2),3)", {{4, 1}, {4, 3}}},
    {"4(2(1),3)", {{2, 1}, {4, 2}, {4, 3}}},
    {"1(2,3,4)", {}},
    {"2(1,3,4)", {{2, 1}, {2, 3}, {2, 4}}},
    {"3(1,2,4)", {{3, 1}, {3, 2}, {3, 4}}},
    {"4(1,2,3)", {{4, 1}, {4, 2}, {4, 3}}},
  };
  return cases;
}

const std::vector<DisplayCase>& golden_displays() {
  static const std::vector<DisplayCase> cases = {
      // grafting, letters a,b,c,d read as 1,2,3,4
      {"prelie", "3(1,4) * 2", "3(1(2),4) + 3(1,2,4) + 3(1,4(2))"},
      {"nap", "1(2) * 3(4)", "1(2,3(4))"},
      {"nap-sharp", "2 * 1(3)", "1(2,3) + 2(1(3))"},
      // normalized writing
      {"normalize", "((2*3)*1)", "(1*(2*3))"},
      {"normalize", "((3*1)*2)", "(2*(1*3))"},
      {"enumerate-commag", "3", "((1*2)*3), (1*(2*3)), (2*(1*3))"},
      // Ψ
      {"psi", "(1*2)", "1(2)"},
      {"psi", "((1*2)*3)", "1(2,3)"},
      {"psi", "(1*(2*3))", "1(2(3))"},
      {"psi", "(2*(1*3))", "2(1(3))"},
      // d-statistic
      {"d", "1(2,3)", "1"},
      {"d", "1(2(3))", "2"},
      {"d", "2(1(3))", "2"},
      // Φ̃
      {"phi-tilde", "(1*(2*3))", "1(2(3)) + 1(3(2)) + 2(1,3) + 3(1,2)"},
      {"phi-tilde", "((1*2)*3)", "1(2,3) + 2(1,3) + 3(1(2)) + 3(2(1))"},
      {"phi-tilde", "(2*(1*3))", "1(2,3) + 2(1(3)) + 2(3(1)) + 3(1,2)"},
      // red/black
      {"color", "1(3(2),4)", "1(3(2),4) red=[(1,3),(1,4),(3,2)]"},
      {"color", "1(3,4(2))", "1(4(2),3) red=[(4,2)]"},
      {"color", "4(1(2,3))", "4(1(2,3)) red=[(4,1)]"},
      {"decompose", "4(1(2,3))", "blocks=[[1,2,3],[4]] components=[1(2,3),4] skeleton=4(3)"},
  };
  return cases;
}

std::vector<long long> reference_x_dims() { return {1, 1, 3, 16, 120, 1146, 13258}; }
std::vector<long long> reference_y_dims() { return {1, 3, 18, 168, 2130}; }

json fixtures_json() {
  json out;
  json displays = json::array();
  for (const auto& c : golden_displays()) displays.push_back({{"op", c.op}, {"input", c.input}, {"expected", c.expected}});
  out["displays"] = displays;
  json colorings = json::array();
  for (const auto& c : golden_colorings()) {
    json red = json::array();
    for (const auto& [p, ch] : c.red) red.push_back({p, ch});
    colorings.push_back({{"tree", c.tree}, {"red", red}});
  }
  out["colorings"] = colorings;
  out["x_dims"] = reference_x_dims();
  out["y_dims"] = reference_y_dims();
  return out;
}

}  // namespace opf
