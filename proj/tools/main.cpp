#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "app.hpp"
#include "common.hpp"
#include "wordramsey/error.hpp"
#include "wordramsey/sequence.hpp"

using namespace wordramsey;
using app::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Bound flags shared by the search commands. Explicit flags win over
// --bounds, which wins over the file named by the environment.
struct BoundFlags {
  std::string file;
  app::Bounds values;
  // One entry per command that accepts bound flags; only one is parsed.
  std::vector<CLI::Option*> m_max, horizon, pool_len, max_len, sample_len, threads;

  void add(CLI::App* cmd) {
    cmd->add_option("--bounds", file, "JSON bounds file (overrides $" + std::string(app::kBoundsEnv) + ")");
    m_max.push_back(cmd->add_option("--m-max", values.m_max, "largest m in witness searches"));
    horizon.push_back(cmd->add_option("--horizon", values.horizon, "sequence prefix length"));
    pool_len.push_back(cmd->add_option("--pool-len", values.pool_len, "longest pool word (or largest pool number)"));
    max_len.push_back(cmd->add_option("--max-len", values.max_len, "word-length budget for existence searches"));
    sample_len.push_back(cmd->add_option("--sample-len", values.sample_len, "sample length for nesting/shift checks"));
    threads.push_back(cmd->add_option("--threads", values.threads, "worker threads (result is thread-independent)"));
  }

  app::Bounds resolve() const {
    app::Bounds b;
    if (const char* env = std::getenv(app::kBoundsEnv); env && *env) app::apply_bounds(b, load_json(env));
    if (!file.empty()) app::apply_bounds(b, load_json(file));
    auto take = [](const std::vector<CLI::Option*>& opts, auto& dst, auto src) {
      for (CLI::Option* o : opts) {
        if (o->count() == 0) continue;
        if (src < 1) throw InputError(o->get_name() + " must be positive");
        dst = src;
      }
    };
    take(m_max, b.m_max, values.m_max);
    take(horizon, b.horizon, values.horizon);
    take(pool_len, b.pool_len, values.pool_len);
    take(max_len, b.max_len, values.max_len);
    take(sample_len, b.sample_len, values.sample_len);
    take(threads, b.threads, values.threads);
    return b;
  }
};

std::vector<std::string> read_homs(const std::string& path) {
  std::vector<std::string> out;
  if (path.empty()) return out;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto c = line.find(';'); c != std::string::npos) line.erase(c);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    out.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return out;
}

int emit(const app::Outcome& out, const std::string& path) {
  const std::string text = out.certificate.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }
  std::cerr << "status: " << out.certificate["status"].get<std::string>() << " (" << out.status << ")\n";
  return out.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Hales-Jewett lines, J-set witnesses and lifted variable-word searches with checkable certificates",
               "wordramsey"};
  cli.require_subcommand(1);
  std::string out_path;
  std::string alphabet = "ab";
  BoundFlags bounds;
  using Builder = std::function<json(const app::Bounds&)>;
  std::map<CLI::App*, std::pair<std::string, Builder>> builders;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->add_option("--out,-o", out_path, "certificate path (default stdout)");
    return cmd;
  };
  auto cmd_name = [](CLI::App* cmd) { return cmd->get_parent()->get_name() + " " + cmd->get_name(); };

  // hj
  CLI::App* hj = cli.add_subcommand("hj", "Hales-Jewett searches");
  hj->require_subcommand(1);
  int k = 2, n = 1, c = 2, length = 1, max = 4;
  std::string colors_file, mode = "backtracking";
  std::uint64_t max_nodes = 0;
  {
    auto* cmd = leaf(hj, "find-line", "least monochromatic line of a coloring");
    cmd->add_option("--k", k, "alphabet size")->required();
    cmd->add_option("--colors", colors_file, "coloring file (word<TAB>color per line)")->required();
    cmd->add_option("--n", n, "variables per line");
    bounds.add(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds&) { return json{{"k", k}, {"n", n}, {"colors", slurp(colors_file)}}; }};
  }
  auto add_line_free_opts = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "alphabet size")->required();
    cmd->add_option("--c", c, "number of colors")->required();
    cmd->add_option("--mode", mode, "backtracking | exhaustive");
    cmd->add_option("--max-nodes", max_nodes, "node budget per subtree (0 = none)");
    bounds.add(cmd);
  };
  {
    auto* cmd = leaf(hj, "line-free", "least coloring of A^N without monochromatic lines");
    add_line_free_opts(cmd);
    cmd->add_option("--N", length, "word length")->required();
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds&) {
        return json{{"k", k}, {"c", c}, {"N", length}, {"mode", mode}, {"max_nodes", max_nodes}};
      }};
  }
  {
    auto* cmd = leaf(hj, "number", "least N forcing a monochromatic line, up to --max");
    add_line_free_opts(cmd);
    cmd->add_option("--max", max, "largest N tried")->required();
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds&) {
        return json{{"k", k}, {"c", c}, {"max", max}, {"mode", mode}, {"max_nodes", max_nodes}};
      }};
  }

  // jset
  CLI::App* jset = cli.add_subcommand("jset", "bounded J-set witness search");
  jset->require_subcommand(1);
  std::string pred_file, seqs_file;
  std::optional<long long> modulus;
  {
    auto* cmd = leaf(jset, "check", "least witness (m, a, t) for the family");
    cmd->add_option("--pred", pred_file, "predicate file")->required();
    cmd->add_option("--seqs", seqs_file, "sequence file")->required();
    cmd->add_option("--alphabet", alphabet, "alphabet letters");
    cmd->add_option("--modulus", modulus, "work in (Z/q, +) for numeric sequences");
    bounds.add(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        json in = {{"alphabet", alphabet}, {"pred", slurp(pred_file)}, {"seqs", slurp(seqs_file)},
                   {"m_max", b.m_max},     {"horizon", b.horizon},      {"pool_len", b.pool_len}};
        if (modulus) in["modulus"] = *modulus;
        return in;
      }};
  }

  // psg
  CLI::App* psg = cli.add_subcommand("psg", "partial semigroup truncations");
  psg->require_subcommand(1);
  std::string config_file;
  int bound = 2;
  std::vector<std::string> elements;
  {
    auto* cmd = leaf(psg, "adequacy", "bounded adequacy check");
    cmd->add_option("--config", config_file, "truncation config (JSON)")->required();
    cmd->add_option("--bound", bound, "largest |H| probed");
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds&) { return json{{"config", load_json(config_file)}, {"bound", bound}}; }};
  }
  {
    auto* cmd = leaf(psg, "sigma", "sigma(H) and phi of each element");
    cmd->add_option("--config", config_file, "truncation config (JSON)")->required();
    cmd->add_option("--element", elements, "element: index list '1,3' (FS/FP) or table name; repeatable")->required();
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds&) {
        json els = json::array();
        for (const auto& e : elements) {
          if (e.empty() || !std::isdigit(static_cast<unsigned char>(e[0]))) {
            els.push_back(e);
            continue;
          }
          json h = json::array();
          std::istringstream s(e);
          std::string part;
          while (std::getline(s, part, ',')) {
            try {
              h.push_back(std::stoi(part));
            } catch (const std::exception&) {
              throw InputError("bad index list '" + e + "'");
            }
          }
          els.push_back(h);
        }
        return json{{"config", load_json(config_file)}, {"elements", els}};
      }};
  }

  // lift
  CLI::App* lift = cli.add_subcommand("lift", "witness lifting and variable-word existence");
  lift->require_subcommand(1);
  std::string homs_file, pattern_file, matrix_file, fs_file, taus_file, structure_file;
  std::vector<long long> xs;
  int kk = 1, len = 4, n17 = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", alphabet, "alphabet letters");
    bounds.add(cmd);
  };
  {
    auto* cmd = leaf(lift, "lemma1", "pull a witness for D back through homomorphisms fixing S_0");
    cmd->add_option("--pred", pred_file, "predicate on S_0")->required();
    cmd->add_option("--seqs", seqs_file, "sequences E in S_n u S_0")->required();
    cmd->add_option("--homs", homs_file, "homomorphisms F, one per line (default: all h_x)");
    cmd->add_option("--n", n, "number of variables");
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        return json{{"alphabet", alphabet}, {"n", n}, {"pred", slurp(pred_file)}, {"seqs", slurp(seqs_file)},
                    {"homs", read_homs(homs_file)}, {"m_max", b.m_max}, {"horizon", b.horizon},
                    {"pool_len", b.pool_len}};
      }};
  }
  {
    auto* cmd = leaf(lift, "thm3", "least n-variable word with every instance in D");
    cmd->add_option("--pred", pred_file, "predicate file")->required();
    cmd->add_option("--n", n, "number of variables")->required();
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        return json{{"alphabet", alphabet}, {"n", n}, {"pred", slurp(pred_file)}, {"max_len", b.max_len}};
      }};
  }
  {
    auto* cmd = leaf(lift, "fs1", "least variable word with instances in D and |w|_v in FS(x)");
    cmd->add_option("--pred", pred_file, "predicate file")->required();
    cmd->add_option("--x", xs, "positive integers x_1 .. x_T")->required()->delimiter(',');
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        return json{{"alphabet", alphabet}, {"pred", slurp(pred_file)}, {"x", xs}, {"max_len", b.max_len}};
      }};
  }
  {
    auto* cmd = leaf(lift, "thm16", "least word whose v_1..v_k pattern is a finite product of y");
    cmd->add_option("--pred", pred_file, "predicate file (default: always true)");
    cmd->add_option("--n", n, "number of variables")->required();
    cmd->add_option("--k", kk, "pattern variables")->required();
    cmd->add_option("--pattern-seq", pattern_file, "sequence file; the first sequence gives y")->required();
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        const Alphabet a(alphabet, kMaxVariables, 1024);
        const auto seqs = parse_sequences(a, slurp(pattern_file));
        if (seqs.empty()) throw InputError(pattern_file + ": no sequence");
        json ys = json::array();
        for (const auto& y : materialize_words(seqs.front(), seqs.front().horizon().value_or(b.horizon)))
          ys.push_back(a.format(y));
        return json{{"alphabet", alphabet}, {"n", n}, {"k", kk},
                    {"pred", pred_file.empty() ? std::string("true") : slurp(pred_file)},
                    {"patterns", ys}, {"max_len", b.max_len}};
      }};
  }
  {
    auto* cmd = leaf(lift, "thm17", "least word with M psi(w) in the product of FS sets");
    cmd->add_option("--matrix", matrix_file, "matrix (JSON rows)")->required();
    cmd->add_option("--fs-prefixes", fs_file, "FS generators per row (JSON array of arrays)")->required();
    cmd->add_option("--pred", pred_file, "predicate file (default: always true)");
    cmd->add_option("--homs", homs_file, "S_0-preserving homomorphisms F (default: all h_x)");
    cmd->add_option("--taus", taus_file, "maps into omega, one per line (default: variable counts)");
    cmd->add_option("--n", n17, "number of variables (default: matrix columns)");
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        const json m = load_json(matrix_file);
        const auto cols = app::detail::load_matrix(m).cols;
        const auto taus = read_homs(taus_file);
        const int vars = n17 > 0 ? n17 : taus.empty() ? static_cast<int>(cols) : 1;
        return json{{"alphabet", alphabet},
                    {"n", vars},
                    {"pred", pred_file.empty() ? std::string("true") : slurp(pred_file)},
                    {"homs", read_homs(homs_file)},
                    {"taus", taus},
                    {"matrix", m},
                    {"fs_prefixes", load_json(fs_file)},
                    {"max_len", b.max_len}};
      }};
  }
  {
    auto* cmd = leaf(lift, "cset", "product sequence for a C-set structure");
    cmd->add_option("--structure", structure_file, "levels and shift map (JSON)")->required();
    cmd->add_option("--len", len, "sequence length L")->required();
    cmd->add_option("--homs", homs_file, "homomorphisms F (default: all h_x)");
    cmd->add_option("--n", n, "number of variables");
    add_common(cmd);
    builders[cmd] = {cmd_name(cmd), [&](const app::Bounds& b) {
        return json{{"alphabet", alphabet},  {"n", n},
                    {"structure", load_json(structure_file)},
                    {"homs", read_homs(homs_file)},
                    {"len", len},            {"max_len", b.max_len},
                    {"sample_len", b.sample_len}};
      }};
  }

  // verify
  std::string cert_file;
  CLI::App* ver = cli.add_subcommand("verify", "replay a certificate through the independent checkers");
  ver->add_option("--cert", cert_file, "certificate file")->required();
  bool quiet = false;
  ver->add_flag("--quiet,-q", quiet, "print only the verdict");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::kInputFailure;
  }

  try {
    if (ver->parsed()) {
      const auto report = app::verify(load_json(cert_file));
      if (!quiet)
        for (const auto& line : report.lines) std::cout << line << "\n";
      std::cout << (report.ok ? "verified" : "REJECTED") << "\n";
      return report.ok ? app::kFound : app::kInputFailure;
    }
    for (const auto& [cmd, entry] : builders) {
      if (!cmd->parsed()) continue;
      const app::Bounds b = bounds.resolve();
      const json input = entry.second(b);
      return emit(app::run(entry.first, input, b.threads), out_path);
    }
    throw InputError("no command given");
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const BoundError& e) {
    std::cerr << "bound error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "malformed document: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return app::kInputFailure;
}
