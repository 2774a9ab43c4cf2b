#pragma once

// Text formats for triangle corpora and perfect-pyramid lists.
//
//   heronian-corpus v1 n=<n>      then `a b c q` per line, q = 4A
//   perfect-pyramids v1 n=<n>     then `a b c d e f surface volume`

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heronian/generate.hpp"
#include "heronian/pyramid.hpp"

namespace heronian {

struct FormatError : std::runtime_error {
  FormatError(std::size_t line, const std::string& what);
  std::size_t line;  // 1-based
};

struct CorpusFile {
  u64 n = 0;
  Corpus triangles;
};

struct PyramidFile {
  u64 n = 0;
  std::vector<PerfectPyramid> pyramids;
};

void write_corpus(std::ostream& out, u64 n, const Corpus& corpus);
// Checks ordering, canonical form and q against the Heron product.
CorpusFile read_corpus(std::istream& in);

void write_pyramids(std::ostream& out, u64 n, const std::vector<PerfectPyramid>& pyramids);
PyramidFile read_pyramids(std::istream& in);

// Writes to a temporary sibling and renames over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

CorpusFile load_corpus(const std::filesystem::path& path);
void save_corpus(const std::filesystem::path& path, u64 n, const Corpus& corpus);

}  // namespace heronian
