#pragma once

#include <string>
#include <vector>

#include "tsc/dataset.hpp"
#include "tsc/error.hpp"

namespace tsc::test {

inline Dataset make_dataset(const std::vector<std::vector<double>>& rows, const std::vector<std::string>& labels,
                            std::vector<std::string> class_labels = {"a", "b"}) {
  std::vector<Case> cases;
  for (std::size_t i = 0; i < rows.size(); ++i) cases.push_back({rows[i], labels[i]});
  return Dataset("Toy", std::move(class_labels), rows.front().size(), std::move(cases));
}

inline std::string data_dir() { return TSC_TEST_DATA_DIR; }

}  // namespace tsc::test

// Asserts that `stmt` throws tsc::Error carrying `expected`.
#define EXPECT_TSC_ERROR(stmt, expected)                                     \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "no exception from " #stmt;                           \
    } catch (const tsc::Error& e) {                                          \
      EXPECT_EQ(e.code(), tsc::ErrorCode::expected) << e.what();             \
    }                                                                        \
  } while (0)
