#pragma once

#include <string>
#include <vector>

/// The Gal_3 orbit table as printed: typeset symbols with their dimension and index columns.
namespace reference {

struct PrintedRow {
  int number;
  std::vector<std::string> symbols;
  std::vector<int> dims;
  std::vector<int> indices;
};

inline const std::vector<PrintedRow>& gal3() {
  static const std::vector<PrintedRow> rows = {
      {1, {"nabla3+", "Delta0(IP)"}, {3, 2}, {1, 0}},
      {2, {"nabla3+", "Delta0+", "Delta0+"}, {3, 1, 1}, {1, 0, 0}},
      {3, {"nabla2^y", "Delta2-"}, {2, 3}, {0, 1}},
      {4, {"nabla2^y", "Delta0(RP)", "Delta0+"}, {2, 2, 1}, {0, 1, 0}},
      {5, {"nabla2^y", "Delta0(IP)", "Delta0-"}, {2, 2, 1}, {0, 0, 1}},
      {6, {"nabla2", "Delta0(IP)", "Delta0+"}, {2, 2, 1}, {1, 0, 0}},
      {7, {"nabla2", "Delta0+", "Delta0+", "Delta0+"}, {2, 1, 1, 1}, {1, 0, 0, 0}},
      {8, {"nabla2^y", "Delta0-", "Delta0+", "Delta0+"}, {2, 1, 1, 1}, {0, 1, 0, 0}},
      {9, {"nabla0-", "Delta0(IP)", "Delta0+", "Delta0+"}, {1, 2, 1, 1}, {1, 0, 0, 0}},
      {10, {"nabla0-", "Delta0+", "Delta0+", "Delta0+", "Delta0+"}, {1, 1, 1, 1, 1}, {1, 0, 0, 0, 0}},
      {11, {"nabla0+", "Delta2-", "Delta0+"}, {1, 3, 1}, {0, 1, 0}},
      {12, {"nabla0+", "Delta0(RP)", "Delta0(IP)"}, {1, 2, 2}, {0, 1, 0}},
      {13, {"nabla0+", "Delta0(RP)", "Delta0+", "Delta0+"}, {1, 2, 1, 1}, {0, 1, 0, 0}},
      {14, {"nabla0+", "Delta0(IP)", "Delta0-", "Delta0+"}, {1, 2, 1, 1}, {0, 0, 1, 0}},
      {15, {"nabla0+", "Delta0-", "Delta0+", "Delta0+", "Delta0+"}, {1, 1, 1, 1, 1}, {0, 1, 0, 0, 0}},
  };
  return rows;
}

}  // namespace reference
