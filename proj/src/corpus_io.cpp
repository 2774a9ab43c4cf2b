#include "heronian/corpus_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace heronian {

namespace {

constexpr std::string_view kCorpusMagic = "heronian-corpus v1 n=";
constexpr std::string_view kPyramidMagic = "perfect-pyramids v1 n=";

u64 parse_number(std::string_view text, std::size_t line) {
  u64 v = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end)
    throw FormatError(line, "not a decimal number: '" + std::string(text) + "'");
  return v;
}

// Splits on single spaces; rejects anything else so files stay byte-exact.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sp = line.find(' ', start);
    out.push_back(line.substr(start, sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

u64 parse_header(std::istream& in, std::string_view magic) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(1, "missing header");
  if (line.rfind(magic, 0) != 0) throw FormatError(1, "expected header '" + std::string(magic) + "<n>'");
  return parse_number(std::string_view(line).substr(magic.size()), 1);
}

}  // namespace

FormatError::FormatError(std::size_t l, const std::string& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}

void write_corpus(std::ostream& out, u64 n, const Corpus& corpus) {
  out << kCorpusMagic << n << '\n';
  for (const auto& h : corpus)
    out << h.tri.a() << ' ' << h.tri.b() << ' ' << h.tri.c() << ' ' << h.quad_area << '\n';
}

CorpusFile read_corpus(std::istream& in) {
  CorpusFile file;
  file.n = parse_header(in, kCorpusMagic);
  std::string line;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    const auto f = fields(line);
    if (f.size() != 4) throw FormatError(number, "expected 'a b c q'");
    const u64 a = parse_number(f[0], number), b = parse_number(f[1], number);
    const u64 c = parse_number(f[2], number), q = parse_number(f[3], number);
    if (!(a >= b && b >= c)) throw FormatError(number, "sides not in descending order");
    if (a > file.n) throw FormatError(number, "diameter exceeds header n");
    const auto h = as_heronian(a, b, c);
    if (!h) throw FormatError(number, "not a Heronian triangle");
    if (h->quad_area != q) throw FormatError(number, "q does not equal 4A");
    if (!file.triangles.empty() && !(file.triangles.back().tri < h->tri))
      throw FormatError(number, "lines not strictly sorted");
    file.triangles.push_back(*h);
  }
  return file;
}

void write_pyramids(std::ostream& out, u64 n, const std::vector<PerfectPyramid>& pyramids) {
  out << kPyramidMagic << n << '\n';
  for (const auto& p : pyramids) {
    for (u64 e : p.tet.edges()) out << e << ' ';
    out << p.surface() << ' ' << p.volume << '\n';
  }
}

PyramidFile read_pyramids(std::istream& in) {
  PyramidFile file;
  file.n = parse_header(in, kPyramidMagic);
  std::string line;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    const auto f = fields(line);
    if (f.size() != 8) throw FormatError(number, "expected 'a b c d e f surface volume'");
    std::array<u64, 6> edges{};
    for (int k = 0; k < 6; ++k) edges[k] = parse_number(f[k], number);
    const Tetrahedron t = Tetrahedron::from_edges(edges);
    const auto p = is_perfect_pyramid(t);
    if (!p) throw FormatError(number, "not a perfect pyramid");
    if (canonical_tetrahedron(t) != t) throw FormatError(number, "edges not in canonical order");
    if (p->surface() != parse_number(f[6], number) || p->volume != parse_number(f[7], number))
      throw FormatError(number, "surface or volume does not match the edges");
    file.pyramids.push_back(*p);
  }
  return file;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CorpusFile load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_corpus(in);
}

void save_corpus(const std::filesystem::path& path, u64 n, const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, n, corpus);
  write_file_atomically(path, out.str());
}

}  // namespace heronian
