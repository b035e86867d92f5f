#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "common.hpp"
#include "wordramsey/error.hpp"
#include "wordramsey/hj.hpp"
#include "wordramsey/jset.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/sequence.hpp"
#include "wordramsey/verify.hpp"

namespace wordramsey::app {

void apply_bounds(Bounds& bounds, const json& doc) {
  if (!doc.is_object()) throw InputError("bounds file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 1)
      throw InputError("bound '" + key + "' must be a positive integer");
    const auto v = value.get<std::size_t>();
    if (key == "m_max") bounds.m_max = v;
    else if (key == "horizon") bounds.horizon = v;
    else if (key == "pool_len") bounds.pool_len = v;
    else if (key == "max_len") bounds.max_len = v;
    else if (key == "sample_len") bounds.sample_len = v;
    else if (key == "threads") bounds.threads = static_cast<unsigned>(v);
    else throw InputError("unknown bound '" + key + "'");
  }
}

std::string result_hash(const json& result) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : result.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ParsedColoring parse_coloring(int k, const std::string& text) {
  const Alphabet alphabet = Alphabet::first_letters(k);
  ParsedColoring out;
  std::vector<int> seen_line;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(raw);
    std::string word_text, color_text, extra;
    if (!(fields >> word_text >> color_text) || (fields >> extra))
      throw InputError("expected 'word<TAB>color'", line);
    Word w;
    try {
      w = alphabet.with_max_length(64).parse(word_text);
    } catch (const std::exception& e) {
      throw InputError(e.what(), line);
    }
    if (w.has_variables()) throw InputError("coloring words may not contain variables", line);
    int color = 0;
    try {
      std::size_t used = 0;
      color = std::stoi(color_text, &used);
      if (used != color_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad color '" + color_text + "'", line);
    }
    if (color < 1) throw InputError("colors start at 1", line);
    if (out.length == 0) {
      out.length = static_cast<int>(w.size());
      out.cells.assign(cube_size(k, out.length), 0);
      seen_line.assign(out.cells.size(), 0);
    } else if (static_cast<int>(w.size()) != out.length) {
      throw InputError("word length " + std::to_string(w.size()) + " differs from " + std::to_string(out.length),
                       line);
    }
    std::size_t rank = 0;
    for (Symbol s : w) rank = rank * static_cast<std::size_t>(k) + s;
    if (seen_line[rank]) throw InputError("'" + word_text + "' already colored on line " + std::to_string(seen_line[rank]), line);
    seen_line[rank] = line;
    out.cells[rank] = color;
    out.colors = std::max(out.colors, color);
  }
  if (out.length == 0) throw InputError("coloring file is empty");
  const auto missing = std::find(out.cells.begin(), out.cells.end(), 0);
  if (missing != out.cells.end()) {
    const Coloring probe(k, out.length, 1, std::vector<int>(out.cells.size(), 1));
    throw InputError("no color for '" +
                     alphabet.format(probe.word_at(static_cast<std::size_t>(missing - out.cells.begin()))) + "'");
  }
  return out;
}

std::string format_coloring(int k, int length, const std::vector<int>& cells) {
  const Alphabet alphabet = Alphabet::first_letters(k, 0, 64);
  const Coloring c(k, length, *std::max_element(cells.begin(), cells.end()), cells);
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) out += alphabet.format(c.word_at(r)) + "\t" + std::to_string(cells[r]) + "\n";
  return out;
}

namespace {

using detail::alphabet_of;
using detail::field;
using detail::hom_list;
using detail::witness_json;

struct Result {
  int status = kUnresolved;
  json result;
};

json coloring_json(int k, int length, std::span<const int> cells) {
  const Alphabet alphabet = Alphabet::first_letters(k, 0, 64);
  const Coloring c(k, length, *std::max_element(cells.begin(), cells.end()), {cells.begin(), cells.end()});
  json arr = json::array();
  for (std::size_t r = 0; r < cells.size(); ++r) arr.push_back({{"word", alphabet.format(c.word_at(r))}, {"color", cells[r]}});
  return arr;
}

const char* line_free_status(LineFreeStatus s) {
  switch (s) {
    case LineFreeStatus::kFound: return "found";
    case LineFreeStatus::kNone: return "none";
    case LineFreeStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

LineFreeOptions line_free_options(const json& in, unsigned threads) {
  LineFreeOptions o;
  o.search.threads = threads;
  const std::string mode = in.value("mode", "backtracking");
  if (mode == "exhaustive") o.mode = LineFreeMode::kExhaustive;
  else if (mode != "backtracking") throw InputError("unknown line-free mode '" + mode + "'");
  o.max_nodes = in.value("max_nodes", std::uint64_t{0});
  return o;
}

Result hj_find_line(const json& in, unsigned threads) {
  const int k = field<int>(in, "k");
  const int n = in.value("n", 1);
  const auto pc = parse_coloring(k, field<std::string>(in, "colors"));
  const Coloring coloring(k, pc.length, pc.colors, pc.cells);
  const auto r = find_mono_line(coloring, n, {threads});
  const Alphabet alphabet = Alphabet::first_letters(k, n, 64);
  Result out;
  out.result = {{"N", pc.length}, {"colors", pc.colors}, {"roots_checked", r.roots_checked}, {"found", r.line.has_value()}};
  if (r.line) {
    out.status = kFound;
    json points = json::array(), colors = json::array();
    for (const auto& p : r.line->points) {
      points.push_back(alphabet.format(p));
      colors.push_back(coloring.color(p));
    }
    out.result["root"] = alphabet.format(r.line->root);
    out.result["points"] = points;
    out.result["point_colors"] = colors;
    out.result["color"] = r.line->color;
  }
  return out;
}

json line_free_json(int k, int length, const LineFreeResult& r) {
  json j = {{"N", length}, {"status", line_free_status(r.status)}, {"nodes", r.nodes}, {"checked_lines", r.lines}};
  j["cylinder_ok"] = r.cylinder_ok ? json(*r.cylinder_ok) : json(nullptr);
  j["coloring"] = r.coloring ? coloring_json(k, length, r.coloring->cells()) : json(nullptr);
  return j;
}

Result hj_line_free(const json& in, unsigned threads) {
  const int k = field<int>(in, "k"), c = field<int>(in, "c"), length = field<int>(in, "N");
  const auto r = search_line_free(k, c, length, line_free_options(in, threads));
  return {r.status == LineFreeStatus::kFound ? kFound : kUnresolved, line_free_json(k, length, r)};
}

Result hj_number_cmd(const json& in, unsigned threads) {
  const int k = field<int>(in, "k"), c = field<int>(in, "c"), max = field<int>(in, "max");
  const auto r = hj_number(k, c, max, line_free_options(in, threads));
  json per = json::array();
  for (std::size_t i = 0; i < r.per_length.size(); ++i)
    per.push_back(line_free_json(k, static_cast<int>(i + 1), r.per_length[i]));
  Result out;
  out.status = r.number ? kFound : kUnresolved;
  out.result = {{"number", r.number ? json(*r.number) : json(nullptr)}, {"max_length", r.max_length}, {"per_length", per}};
  return out;
}

// ---------------------------------------------------------------------------

Result jset_check(const json& in, unsigned threads) {
  const auto problem = detail::load_jset(in);
  const JBounds bounds = problem.bounds;
  Result out;
  if (problem.numeric) {
    const auto s = find_witness(problem.target, std::span<const std::vector<std::int64_t>>(problem.numbers),
                                problem.number_pool, bounds, {threads}, problem.semigroup);
    out.result = {{"mode", "numbers"}, {"candidates_checked", s.candidates_checked}};
    out.result["witness"] = s.witness ? witness_json(*s.witness) : json(nullptr);
    json products = json::array();
    if (s.witness)
      for (std::size_t i = 0; i < problem.numbers.size(); ++i) {
        const auto p = verify::alternating_product(problem.numbers[i], *s.witness, problem.semigroup);
        products.push_back({{"sequence", i + 1}, {"product", p}, {"verdict", problem.target(p)}});
      }
    out.result["products"] = products;
    out.status = s.witness ? kFound : kUnresolved;
  } else {
    const auto s = find_witness(problem.target, std::span<const std::vector<Word>>(problem.words), problem.word_pool,
                                bounds, {threads});
    out.result = {{"mode", "words"}, {"candidates_checked", s.candidates_checked}};
    out.result["witness"] = s.witness ? witness_json(problem.alphabet, *s.witness) : json(nullptr);
    json products = json::array();
    if (s.witness)
      for (std::size_t i = 0; i < problem.words.size(); ++i) {
        const auto p = verify::alternating_product(problem.words[i], *s.witness);
        products.push_back(
            {{"sequence", i + 1}, {"product", problem.alphabet.format(p)}, {"verdict", problem.target(p)}});
      }
    out.result["products"] = products;
    out.status = s.witness ? kFound : kUnresolved;
  }
  return out;
}

// ---------------------------------------------------------------------------

json format_ids(const PsgTruncation& t, std::span<const ElementId> ids) {
  json arr = json::array();
  for (auto id : ids) arr.push_back(t.format(id));
  return arr;
}

Result psg_adequacy(const json& in, unsigned) {
  const auto t = detail::load_truncation(field<json>(in, "config"));
  const int bound = field<int>(in, "bound");
  const auto r = is_adequate_truncated(t, bound);
  Result out;
  out.status = r.adequate ? kFound : kUnresolved;
  out.result = {{"adequate", r.adequate},
                {"failing", format_ids(t, r.failing)},
                {"failing_ids", r.failing},
                {"sets_checked", r.sets_checked},
                {"horizon_exhaustion", r.horizon_exhaustion}};
  return out;
}

Result psg_sigma(const json& in, unsigned) {
  const auto t = detail::load_truncation(field<json>(in, "config"));
  const auto hset = detail::load_elements(t, field<json>(in, "elements"));
  const auto s = sigma(t, hset);
  json phis = json::array();
  for (auto g : hset) phis.push_back(format_ids(t, phi(t, g)));
  Result out;
  out.status = s.empty() ? kUnresolved : kFound;
  out.result = {{"elements", format_ids(t, hset)}, {"phi", phis}, {"sigma", format_ids(t, s)}, {"sigma_ids", s}};
  return out;
}

// ---------------------------------------------------------------------------

json instances_json(const Alphabet& alphabet, const std::vector<InstanceRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"x", alphabet.format(Word(r.x))}, {"instance", alphabet.format(r.instance)}, {"verdict", r.in_target}});
  return arr;
}

Result lift_lemma1(const json& in, unsigned threads) {
  const auto problem = detail::load_lemma1(in);
  const auto& alphabet = problem.alphabet;
  const auto r = lemma1_lift(alphabet, problem.sequences, problem.homs, problem.target, problem.pool, problem.bounds,
                             {threads});
  Result out;
  out.status = r.outer && r.verified ? kFound : kUnresolved;
  json lifted = json::array();
  for (const auto& g : r.lifted) {
    json row = json::array();
    for (const auto& w : g) row.push_back(alphabet.format(w));
    lifted.push_back(row);
  }
  json table = json::array();
  for (const auto& row : r.table)
    table.push_back({{"sequence", row.sequence + 1},
                     {"hom", format_hom(alphabet, problem.homs[row.hom])},
                     {"product", alphabet.format(row.product)},
                     {"image", alphabet.format(row.image)},
                     {"verdict", row.in_target}});
  out.result = {{"candidates_checked", r.candidates_checked}, {"lifted", lifted}, {"table", table},
                {"verified", r.verified}};
  out.result["witness"] = r.outer ? witness_json(alphabet, *r.outer) : json(nullptr);
  out.result["inner_witness"] = r.inner ? witness_json(alphabet, *r.inner) : json(nullptr);
  return out;
}

Result lift_thm3(const json& in, unsigned threads) {
  const Alphabet alphabet = alphabet_of(in);
  const int n = field<int>(in, "n");
  const auto target = parse_predicate(alphabet, field<std::string>(in, "pred"));
  const auto r = theorem3_find(alphabet, target, n, field<std::size_t>(in, "max_len"), {threads});
  Result out;
  out.status = r.word ? kFound : kUnresolved;
  out.result = {{"word", r.word ? json(alphabet.format(*r.word)) : json(nullptr)},
                {"words_checked", r.words_checked},
                {"instances", instances_json(alphabet, r.instances)}};
  return out;
}

Result lift_fs1(const json& in, unsigned threads) {
  const Alphabet alphabet = alphabet_of(in);
  const auto target = parse_predicate(alphabet, field<std::string>(in, "pred"));
  const auto x = field<std::vector<std::int64_t>>(in, "x");
  const auto r = fs_constrained_find(alphabet, target, x, field<std::size_t>(in, "max_len"), {threads});
  Result out;
  out.status = r.word ? kFound : kUnresolved;
  out.result = {{"word", r.word ? json(alphabet.format(*r.word)) : json(nullptr)},
                {"words_checked", r.words_checked},
                {"padded", r.padded}};
  if (r.word) {
    out.result["tau"] = r.tau;
    out.result["padded_indices"] = r.padded_indices;
    out.result["indices"] = r.indices;
  }
  out.result["instances"] = instances_json(alphabet, r.instances);
  return out;
}

Result lift_thm16(const json& in, unsigned threads) {
  const Alphabet alphabet = alphabet_of(in);
  const int n = field<int>(in, "n"), k = field<int>(in, "k");
  const auto target = parse_predicate(alphabet, field<std::string>(in, "pred"));
  std::vector<Word> patterns;
  for (const auto& p : field<std::vector<std::string>>(in, "patterns")) patterns.push_back(alphabet.parse(p));
  const auto r = theorem16_find(alphabet, target, n, k, patterns, field<std::size_t>(in, "max_len"), {threads});
  Result out;
  out.status = r.word ? kFound : kUnresolved;
  out.result = {{"word", r.word ? json(alphabet.format(*r.word)) : json(nullptr)}, {"words_checked", r.words_checked}};
  if (r.word) {
    out.result["pattern"] = alphabet.format(r.pattern);
    out.result["fp_indices"] = r.fp_indices;
  }
  out.result["instances"] = instances_json(alphabet, r.instances);
  return out;
}

Result lift_thm17(const json& in, unsigned threads) {
  const auto p = detail::load_thm17(in);
  const auto& alphabet = p.alphabet;
  const auto r = theorem17_find(alphabet, p.target, p.homs, p.matrix, p.taus, p.fs_prefixes, p.n,
                                field<std::size_t>(in, "max_len"), {threads});
  Result out;
  out.status = r.word ? kFound : kUnresolved;
  out.result = {{"word", r.word ? json(alphabet.format(*r.word)) : json(nullptr)}, {"words_checked", r.words_checked}};
  if (r.word) {
    out.result["psi"] = r.psi;
    out.result["image"] = r.image;
    out.result["fs_indices"] = r.fs_indices;
    json images = json::array();
    for (std::size_t i = 0; i < r.hom_images.size(); ++i)
      images.push_back({{"hom", format_hom(alphabet, p.homs[i])},
                        {"image", alphabet.format(r.hom_images[i])},
                        {"verdict", p.target(r.hom_images[i])}});
    out.result["hom_images"] = images;
  }
  return out;
}

Result lift_cset(const json& in, unsigned threads) {
  const auto p = detail::load_cset(in);
  const auto& alphabet = p.alphabet;
  const auto r = cset_sequence(alphabet, p.structure, p.homs, p.n, p.length, p.max_len, p.sample_len, {threads});
  Result out;
  out.status = r.verified ? kFound : kUnresolved;
  json seq = json::array();
  for (const auto& w : r.sequence) seq.push_back(alphabet.format(w));
  json table = json::array();
  for (const auto& row : r.table) {
    json phi = json::array();
    for (auto h : row.homs) phi.push_back(format_hom(alphabet, p.homs[h]));
    table.push_back({{"H", row.indices}, {"phi", phi}, {"product", alphabet.format(row.product)},
                     {"verdict", row.in_first_level}});
  }
  out.result = {{"sequence", seq},
                {"levels", r.levels},
                {"failure", r.failure ? json(*r.failure) : json(nullptr)},
                {"expected_products", r.expected_products},
                {"products", table},
                {"verified", r.verified}};
  return out;
}

using Runner = std::function<Result(const json&, unsigned)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"hj find-line", hj_find_line}, {"hj line-free", hj_line_free}, {"hj number", hj_number_cmd},
      {"jset check", jset_check},     {"psg adequacy", psg_adequacy}, {"psg sigma", psg_sigma},
      {"lift lemma1", lift_lemma1},   {"lift thm3", lift_thm3},       {"lift fs1", lift_fs1},
      {"lift thm16", lift_thm16},     {"lift thm17", lift_thm17},     {"lift cset", lift_cset},
  };
  return table;
}

}  // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> out;
  for (const auto& [name, _] : runners()) out.push_back(name);
  return out;
}

Outcome run(const std::string& subcommand, const json& input, unsigned threads) {
  const auto it = runners().find(subcommand);
  if (it == runners().end()) throw InputError("unknown subcommand '" + subcommand + "'");
  const auto start = std::chrono::steady_clock::now();
  Result r = it->second(input, threads);
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Outcome out;
  out.status = r.status;
  out.certificate = {
      {"schema", kSchema},
      {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
      {"subcommand", subcommand},
      {"input", input},
      {"status", r.status == kFound ? "found" : "exhausted"},
      {"exit_status", r.status},
      {"result", r.result},
      {"wall_clock_ms", elapsed},
      {"determinism",
       {{"order", "canonical-least"}, {"threads", threads}, {"result_hash", result_hash(r.result)}}},
  };
  return out;
}

}  // namespace wordramsey::app
