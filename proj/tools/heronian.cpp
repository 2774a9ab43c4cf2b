// heronian: command-line front end.
//
// Exit codes: 0 success, 1 verification or consistency failure, 2 usage or
// malformed input, 3 refusal on an incomplete corpus.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "heronian/analysis.hpp"
#include "heronian/corpus_io.hpp"
#include "heronian/geometry.hpp"
#include "heronian/kernels.hpp"
#include "heronian/numtheory.hpp"
#include "heronian/pyramid.hpp"
#include "heronian/run_manifest.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace heronian;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIncomplete = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HERONIAN_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// Runs job(i) for i in `items` on up to worker_count() threads.
template <class Job>
void run_parallel(const std::vector<u64>& items, Job&& job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next++;
      if (k >= items.size()) return;
      try {
        job(items[k]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(worker_count(), items.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string tri_text(const Triangle& t) {
  return "(" + std::to_string(t.a()) + "," + std::to_string(t.b()) + "," + std::to_string(t.c()) + ")";
}

// Corpus from --corpus, or generated with Algorithm III when absent.
CorpusFile corpus_for(const std::string& path, u64 n) {
  if (path.empty()) {
    if (n == 0) throw UsageError("need --corpus or --n");
    return {n, generate_algorithm_iii(n)};
  }
  CorpusFile f = load_corpus(path);
  if (n > f.n)
    throw IncompleteInput("corpus " + path + " is complete to n=" + std::to_string(f.n) +
                          ", below the requested n=" + std::to_string(n));
  return f;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  u64 n = 0;
  std::string algorithm = "iii";
  u64 shards = 1;
  std::optional<u64> shard_index;
  std::string out;
};

fs::path shard_path(const fs::path& out, u64 index, u64 count) {
  fs::path p = out;
  p += ".shard-" + std::to_string(index) + "-of-" + std::to_string(count);
  return p;
}

fs::path manifest_path(const fs::path& out) {
  fs::path p = out;
  p += ".manifest.json";
  return p;
}

int cmd_generate_all(const GenerateArgs& args) {
  if (args.shards != 1 || args.shard_index) throw UsageError("--algorithm all runs unsharded");
  const CrossValidationReport rep = cross_validate(args.n);
  nlohmann::json cv;
  cv["consistent"] = rep.consistent;
  cv["first_difference"] = rep.first_difference;
  for (const auto& r : rep.runs) {
    cv["runs"].push_back({{"algorithm", algorithm_name(r.algorithm)},
                          {"total", r.total},
                          {"primitive", r.primitive},
                          {"seconds", r.seconds}});
    std::cout << "algorithm " << algorithm_name(r.algorithm) << ": " << r.total << " triangles, "
              << r.primitive << " primitive, " << r.seconds << " s\n";
  }
  const fs::path out = args.out;
  save_corpus(out, args.n, rep.reference);
  RunManifest m;
  m.command = "generate";
  m.n = args.n;
  m.algorithm = "all";
  m.corpus_path = out.filename().string();
  m.shards.push_back({0, outer_range(Algorithm::III, args.n), true, m.corpus_path, rep.reference.size()});
  m.complete = rep.consistent;
  m.cross_validation = cv.dump();
  save_manifest(manifest_path(out), m);
  if (!rep.consistent) {
    std::cout << "MISMATCH " << rep.first_difference << "\n";
    return kFailed;
  }
  std::cout << "consistent: " << rep.reference.size() << " triangles\n";
  return kOk;
}

int cmd_generate(const GenerateArgs& args) {
  if (args.n == 0) throw UsageError("--n must be at least 1");
  if (args.algorithm == "all") return cmd_generate_all(args);
  const auto alg = parse_algorithm(args.algorithm);
  if (!alg) throw UsageError("unknown algorithm '" + args.algorithm + "'");
  if (args.shards == 0) throw UsageError("--shards must be at least 1");
  if (args.shard_index && *args.shard_index >= args.shards) throw UsageError("--shard-index out of range");

  const fs::path out = args.out;
  const fs::path mpath = manifest_path(out);
  RunManifest want;
  want.command = "generate";
  want.n = args.n;
  want.algorithm = std::string(algorithm_name(*alg));
  want.corpus_path = out.filename().string();
  const LoopRange full = outer_range(*alg, args.n);
  for (u64 i = 0; i < args.shards; ++i)
    want.shards.push_back({i, shard_range(full, args.shards, i), false,
                           shard_path(out, i, args.shards).filename().string(), 0});

  RunManifest m = want;
  if (auto old = load_manifest(mpath); old && old->compatible_with(want)) {
    m = *old;
    // A shard only counts as done if its file is still there.
    for (auto& s : m.shards)
      if (s.complete && !fs::exists(out.parent_path() / s.path)) s.complete = false;
  }

  std::vector<u64> todo;
  for (const auto& s : m.shards)
    if (!s.complete && (!args.shard_index || s.index == *args.shard_index)) todo.push_back(s.index);

  std::mutex mu;
  run_parallel(todo, [&](u64 i) {
    const LoopRange r = m.shards[i].range;
    const Corpus part = generate(*alg, args.n, r);
    save_corpus(out.parent_path() / m.shards[i].path, args.n, part);
    std::lock_guard lock(mu);
    m.shards[i].complete = true;
    m.shards[i].triangles = part.size();
    save_manifest(mpath, m);
  });

  std::size_t done = 0;
  for (const auto& s : m.shards) done += s.complete;
  if (!m.all_shards_complete()) {
    m.complete = false;
    save_manifest(mpath, m);
    std::cout << done << "/" << m.shards.size() << " shards complete\n";
    return kOk;
  }
  std::vector<Corpus> parts;
  for (const auto& s : m.shards) parts.push_back(load_corpus(out.parent_path() / s.path).triangles);
  const Corpus merged = merge_corpora(std::move(parts));
  save_corpus(out, args.n, merged);
  m.complete = true;
  save_manifest(mpath, m);
  u64 primitive = 0;
  for (const auto& h : merged) primitive += h.primitive();
  std::cout << "n=" << args.n << " algorithm=" << want.algorithm << " triangles=" << merged.size()
            << " primitive=" << primitive << "\n";
  return kOk;
}

// --- pyramids ---------------------------------------------------------------

struct PyramidArgs {
  u64 n = 0;
  std::string corpus;
  std::string out;
  std::string equal;
  std::string index = "hashed";
  std::vector<std::string> classes;
};

void print_group_table(const std::vector<PyramidGroup>& groups) {
  std::cout << "surface volume a b c d e f\n";
  for (const auto& g : groups) {
    for (const auto& p : g.members) {
      std::cout << p.surface() << ' ' << p.volume;
      for (u64 e : p.tet.edges()) std::cout << ' ' << e;
      std::cout << '\n';
    }
    std::cout << '\n';
  }
}

int cmd_pyramids(const PyramidArgs& args) {
  if (args.n == 0) throw UsageError("--n must be at least 1");
  std::optional<EqualKey> key;
  if (!args.equal.empty()) {
    key = parse_equal_key(args.equal);
    if (!key) throw UsageError("--equal takes surface, volume or both");
  }
  for (const auto& c : args.classes) {
    const auto labels = coincidence_labels();
    if (std::find(labels.begin(), labels.end(), c) == labels.end())
      throw UsageError("unknown coincidence class '" + c + "'");
  }
  const CorpusFile corpus = corpus_for(args.corpus, args.n);
  PairIndex index = args.index == "exact" ? PairIndex::exact(corpus.triangles)
                    : args.index == "hashed"
                        ? PairIndex::hashed(corpus.triangles)
                        : throw UsageError("--index takes hashed or exact");
  std::vector<PerfectPyramid> found = search_perfect_pyramids(args.n, corpus.triangles, index);
  if (!args.classes.empty())
    std::erase_if(found, [&](const PerfectPyramid& p) {
      return std::find(args.classes.begin(), args.classes.end(), classify_coincidence(p.tet)) ==
             args.classes.end();
    });

  std::ostringstream text;
  write_pyramids(text, args.n, found);
  if (args.out.empty()) {
    std::cout << text.str();
  } else {
    write_file_atomically(args.out, text.str());
    std::cout << found.size() << " perfect pyramids with diameter <= " << args.n << "\n";
  }
  if (key) print_group_table(minimal_equal_sets(found, *key));
  return kOk;
}

// --- verify-cluster ---------------------------------------------------------

template <std::size_t K>
std::string index_set(const std::array<std::size_t, K>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < K; ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

template <std::size_t K>
void print_list(const char* title, const std::vector<std::array<std::size_t, K>>& items) {
  std::cout << title << ":";
  if (items.empty()) std::cout << " none";
  for (const auto& it : items) std::cout << ' ' << index_set(it);
  std::cout << '\n';
}

int cmd_verify_cluster(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  const LatticePointSet ps = parse_points(in);
  const ClusterReport rep = verify_cluster(ps);
  std::cout << "points: " << ps.size() << "\n";
  std::cout << "distance matrix:\n";
  for (const auto& row : rep.distance_matrix) {
    for (std::size_t j = 0; j < row.size(); ++j)
      std::cout << (j ? " " : "") << (row[j] ? std::to_string(*row[j]) : std::string("-"));
    std::cout << '\n';
  }
  print_list("non-integral pairs", rep.non_integral_pairs);
  print_list("collinear triples", rep.collinear_triples);
  print_list("concyclic quadruples", rep.concyclic_quadruples);
  std::cout << (rep.is_cluster() ? "cluster: yes" : "cluster: no") << "\n";
  return rep.is_cluster() ? kOk : kFailed;
}

// --- tuples, medians, census --------------------------------------------------

int cmd_tuples(const std::string& corpus_path, u64 n, std::size_t count) {
  if (count == 0) throw UsageError("--N must be at least 1");
  const CorpusFile corpus = corpus_for(corpus_path, n);
  std::cout << "N perimeter area quad_area\n";
  TupleGroup last;
  for (std::size_t k = 1; k <= count; ++k) {
    try {
      last = minimal_tuples(corpus.triangles, corpus.n, k);
    } catch (const IncompleteCorpusError& e) {
      throw IncompleteInput(e.what());
    }
    std::cout << k << ' ' << last.perimeter << ' ' << last.area << ' ' << last.quad_area << '\n';
  }
  std::cout << "members:";
  for (const auto& h : last.members) std::cout << ' ' << tri_text(h.tri);
  std::cout << '\n';
  return kOk;
}

int cmd_medians(const std::string& corpus_path, u64 n, bool max_only, bool list) {
  const CorpusFile corpus = corpus_for(corpus_path, n);
  std::array<u64, 4> histogram{};
  int best = 0;
  for (const auto& h : corpus.triangles) {
    const auto rep = rational_medians(h);
    const int c = rep.count();
    ++histogram[c];
    best = std::max(best, c);
    if (list && c >= 2) {
      std::cout << tri_text(h.tri) << " doubled medians:";
      for (const auto& m : rep.doubled) std::cout << ' ' << (m ? std::to_string(*m) : std::string("-"));
      std::cout << '\n';
    }
  }
  if (max_only) {
    std::cout << best << '\n';
    return kOk;
  }
  std::cout << "diameter <= " << corpus.n << ", " << corpus.triangles.size() << " triangles\n";
  for (int c = 0; c <= 3; ++c) std::cout << c << " rational medians: " << histogram[c] << '\n';
  return kOk;
}

int cmd_census(u64 n, bool heronian, bool mod420) {
  if (n > 0) {
    std::cout << "integer triangles with diameter <= " << n << ": " << to_string(count_integer_triangles(n)) << '\n';
    std::cout << "non-equilateral, even perimeter <= " << n << ": "
              << to_string(count_even_perimeter_triangles(n)) << '\n';
  }
  if (heronian) {
    if (n == 0) throw UsageError("--heronian needs --n");
    const CorpusStats st = corpus_stats(generate_algorithm_iii(n));
    std::cout << "heronian triangles: " << st.total << ", primitive: " << st.primitive << '\n';
  }
  if (mod420) {
    const auto& f = nt::mod420_square_table();
    std::cout << "mod-420 admissible triples: " << f.accepted_count() << " of " << f.total_count() << '\n';
  }
  return kOk;
}

int cmd_ap(u64 n) {
  if (n < 6) throw UsageError("--n must be at least 6");
  for (const auto& t : ap_tetrahedra(n)) {
    for (u64 e : t.tet.edges()) std::cout << e << ' ';
    std::cout << "volume=" << t.volume.str() << " heronian_faces=" << t.heronian_faces
              << (t.tet.primitive() ? " primitive" : "") << '\n';
  }
  return kOk;
}

int cmd_simplices(u64 n, const std::string& corpus_path) {
  const CorpusFile corpus = corpus_for(corpus_path, n);
  const auto pyramids = search_perfect_pyramids(n, corpus.triangles, PairIndex::hashed(corpus.triangles));
  const auto found = search_higher_simplices(4, n, pyramids);
  std::cout << pyramids.size() << " perfect pyramids, " << found.size() << " candidate 4-simplices\n";
  for (const auto& s : found) {
    for (u64 e : s.edges) std::cout << e << ' ';
    std::cout << simplex_volume_name(s.status) << " V^2=" << s.volume_squared.str() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heronian triangles, perfect pyramids and related searches"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "enumerate Heronian triangles with diameter <= n");
  g->add_option("--n", gen.n, "diameter bound")->required();
  g->add_option("--algorithm", gen.algorithm, "i, ii, iii or all")->capture_default_str();
  g->add_option("--shards", gen.shards, "number of range shards")->capture_default_str();
  g->add_option("--shard-index", gen.shard_index, "run only this shard");
  g->add_option("--out", gen.out, "corpus file")->required();

  PyramidArgs pyr;
  auto* p = app.add_subcommand("pyramids", "search perfect pyramids with diameter <= n");
  p->add_option("--n", pyr.n, "diameter bound")->required();
  p->add_option("--corpus", pyr.corpus, "triangle corpus (generated when omitted)");
  p->add_option("--out", pyr.out, "pyramid file");
  p->add_option("--equal", pyr.equal, "surface, volume or both");
  p->add_option("--index", pyr.index, "hashed or exact")->capture_default_str();
  p->add_option("--class", pyr.classes, "keep only these coincidence classes");

  std::string points;
  auto* v = app.add_subcommand("verify-cluster", "check a lattice point set");
  v->add_option("points", points, "file with one `x y` per line")->required();

  std::string corpus_path;
  u64 n = 0;
  std::size_t tuple_n = 1;
  auto* t = app.add_subcommand("tuples", "smallest equal perimeter and area N-tuples");
  t->add_option("--N", tuple_n, "tuple size")->required();
  t->add_option("--corpus", corpus_path, "triangle corpus");
  t->add_option("--n", n, "generate a corpus to this diameter instead");

  bool max_count = false, list = false;
  auto* m = app.add_subcommand("medians", "rational medians over a corpus");
  m->add_option("--corpus", corpus_path, "triangle corpus");
  m->add_option("--n", n, "generate a corpus to this diameter instead");
  m->add_flag("--max-count", max_count, "print only the largest count");
  m->add_flag("--list", list, "print triangles with two or more rational medians");

  bool heronian = false, mod420 = false;
  auto* c = app.add_subcommand("census", "triangle and filter counts");
  c->add_option("--n", n, "diameter bound");
  c->add_flag("--heronian", heronian, "also count Heronian triangles");
  c->add_flag("--mod420", mod420, "count admissible residue triples");

  auto* ap = app.add_subcommand("ap-tetrahedra", "tetrahedra with edges in arithmetic progression");
  ap->add_option("--n", n, "diameter bound")->required();

  auto* s = app.add_subcommand("simplices", "4-simplices with perfect facets");
  s->add_option("--n", n, "diameter bound")->required();
  s->add_option("--corpus", corpus_path, "triangle corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*p) return cmd_pyramids(pyr);
    if (*v) return cmd_verify_cluster(points);
    if (*t) return cmd_tuples(corpus_path, n, tuple_n);
    if (*m) return cmd_medians(corpus_path, n, max_count, list);
    if (*c) return cmd_census(n, heronian, mod420);
    if (*ap) return cmd_ap(n);
    if (*s) return cmd_simplices(n, corpus_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PointParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IncompleteInput& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kIncomplete;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
