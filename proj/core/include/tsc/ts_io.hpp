#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "tsc/dataset.hpp"

namespace tsc {

/// Parses the contents of a univariate, equal-length `.ts` file.
///
/// Header directives start with `@` and are matched case-insensitively;
/// unrecognised directives are ignored, as are blank lines and `#` comments.
/// Each data line is `v0,v1,...,vn-1:label`. Both LF and CRLF are accepted.
Dataset parse_ts_file(std::string_view text);

/// Reads and parses `path`; throws DatasetNotFound if it cannot be opened.
Dataset load_ts_file(const std::filesystem::path& path);

/// Serialises a dataset so that parse_ts_file(write_ts_file(d)) == d.
std::string write_ts_file(const Dataset& dataset);

struct ResamplePair {
  Dataset train;
  Dataset test;
  std::size_t resample_id = 0;
  std::uint64_t seed = 0;
};

/// Stratified train/test resample.
///
/// Id 0 returns the original split untouched. Otherwise each class's train and
/// test cases are pooled, shuffled with mt19937_64(splitmix64(seed ^ id)), and
/// the first `original train count` of each class go to train.
ResamplePair stratified_resample(const Dataset& original_train, const Dataset& original_test,
                                 std::size_t resample_id, std::uint64_t seed);

}  // namespace tsc
