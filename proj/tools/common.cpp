#include "common.hpp"

#include "wordramsey/sequence.hpp"

namespace wordramsey::app::detail {

namespace {

Predicate predicate_of(const Alphabet& alphabet, const json& in, const char* key = "pred") {
  return parse_predicate(alphabet, field<std::string>(in, key));
}

std::size_t positive(const json& in, const char* key) {
  const auto v = field<long long>(in, key);
  if (v < 1) throw InputError(std::string("'") + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

JBounds bounds_of(const json& in) { return {positive(in, "m_max"), positive(in, "horizon")}; }

}  // namespace

Alphabet alphabet_of(const json& in) {
  // Variables beyond n would only widen the homomorphism checks.
  return Alphabet(in.value("alphabet", std::string("ab")), in.value("n", kMaxVariables), 1024);
}

std::vector<HomSpec> hom_list(const Alphabet& alphabet, const json& in, int n) {
  std::vector<HomSpec> out;
  if (in.contains("homs"))
    for (const auto& text : field<std::vector<std::string>>(in, "homs")) out.push_back(parse_hom(alphabet, text));
  if (!out.empty()) return out;
  for (auto& x : all_assignments(alphabet, n)) out.push_back(SubstitutionHom{std::move(x)});
  return out;
}

json witness_json(const Alphabet& alphabet, const Witness<Word>& w) {
  json a = json::array();
  for (const auto& x : w.a) a.push_back(alphabet.format(x));
  return {{"m", w.m}, {"t", w.t}, {"a", a}};
}

json witness_json(const Witness<std::int64_t>& w) { return {{"m", w.m}, {"t", w.t}, {"a", w.a}}; }

Witness<Word> word_witness(const Alphabet& alphabet, const json& j) {
  Witness<Word> w;
  w.m = field<std::size_t>(j, "m");
  w.t = field<std::vector<std::size_t>>(j, "t");
  for (const auto& s : field<std::vector<std::string>>(j, "a")) w.a.push_back(alphabet.parse(s));
  return w;
}

Witness<std::int64_t> number_witness(const json& j) {
  Witness<std::int64_t> w;
  w.m = field<std::size_t>(j, "m");
  w.t = field<std::vector<std::size_t>>(j, "t");
  w.a = field<std::vector<std::int64_t>>(j, "a");
  return w;
}

JsetProblem load_jset(const json& in) {
  const Alphabet alphabet = alphabet_of(in);
  JsetProblem p{alphabet, predicate_of(alphabet, in), false, {}, {}, {}, {}, {}, bounds_of(in)};
  const auto sequences = parse_sequences(alphabet, field<std::string>(in, "seqs"));
  if (sequences.empty()) throw InputError("sequence file holds no sequences");
  std::size_t numeric = 0;
  for (const auto& f : sequences) {
    if (f.is_index_sequence()) throw InputError("index-set sequences need a truncation; use the psg commands");
    if (std::holds_alternative<std::int64_t>(f.value_at(1))) ++numeric;
  }
  if (numeric != 0 && numeric != sequences.size()) throw InputError("cannot mix numeric and word sequences");
  p.numeric = numeric != 0;
  const std::size_t pool_len = positive(in, "pool_len");
  if (in.contains("modulus") && !in.at("modulus").is_null()) {
    const auto q = field<long long>(in, "modulus");
    if (q < 1) throw InputError("'modulus' must be positive");
    p.semigroup.modulus = q;
  }
  for (const auto& f : sequences) {
    if (p.numeric)
      p.numbers.push_back(materialize_numbers(f, p.bounds.horizon));
    else
      p.words.push_back(materialize_words(f, p.bounds.horizon));
  }
  if (p.numeric)
    p.number_pool = numeric_pool(pool_len);
  else
    p.word_pool = word_pool(alphabet, pool_len);
  return p;
}

PsgTruncation load_truncation(const json& config) {
  const std::string mode = field<std::string>(config, "mode");
  if (mode == "table") {
    const auto names = field<std::vector<std::string>>(config, "names");
    std::vector<std::vector<std::optional<ElementId>>> table;
    for (const auto& row : field<json>(config, "table")) {
      std::vector<std::optional<ElementId>> r;
      for (const auto& e : row) {
        if (e.is_null()) {
          r.emplace_back();
          continue;
        }
        const auto name = e.get<std::string>();
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw InputError("table entry '" + name + "' is not a declared element");
        r.emplace_back(static_cast<ElementId>(it - names.begin()));
      }
      table.push_back(std::move(r));
    }
    return PsgTruncation::from_table(names, std::move(table));
  }
  const json gens = field<json>(config, "generators");
  if (!gens.is_array() || gens.empty()) throw InputError("'generators' must be a nonempty array");
  std::size_t horizon = config.value("horizon", gens.size());
  if (horizon < 1 || horizon > gens.size()) throw InputError("'horizon' exceeds the generator list");
  if (mode == "FP" && gens.front().is_string()) {
    const Alphabet alphabet = alphabet_of(config);
    std::vector<Word> words;
    for (std::size_t i = 0; i < horizon; ++i) words.push_back(alphabet.parse(gens[i].get<std::string>()));
    return PsgTruncation::word_products(alphabet, words);
  }
  std::vector<std::int64_t> numbers;
  for (std::size_t i = 0; i < horizon; ++i) numbers.push_back(gens[i].get<std::int64_t>());
  if (mode == "FS") return PsgTruncation::numeric(numbers, PsgMode::kFiniteSums);
  if (mode == "FP") return PsgTruncation::numeric(numbers, PsgMode::kFiniteProducts);
  throw InputError("unknown truncation mode '" + mode + "' (FS, FP or table)");
}

std::vector<ElementId> load_elements(const PsgTruncation& t, const json& elements) {
  if (!elements.is_array() || elements.empty()) throw InputError("'elements' must be a nonempty array");
  std::vector<ElementId> out;
  for (const auto& e : elements) {
    std::optional<ElementId> id;
    if (e.is_string())
      id = t.find_name(e.get<std::string>());
    else
      id = t.find(e.get<IndexSet>());
    if (!id) throw InputError("element " + e.dump() + " is not in the truncation");
    out.push_back(*id);
  }
  return out;
}

Lemma1Problem load_lemma1(const json& in) {
  const Alphabet alphabet = alphabet_of(in);
  const int n = in.value("n", 1);
  Lemma1Problem p{alphabet, predicate_of(alphabet, in), {}, hom_list(alphabet, in, n), {}, bounds_of(in)};
  for (const auto& f : parse_sequences(alphabet, field<std::string>(in, "seqs")))
    p.sequences.push_back(materialize_words(f, p.bounds.horizon));
  if (p.sequences.empty()) throw InputError("sequence file holds no sequences");
  p.pool = word_pool(alphabet, positive(in, "pool_len"));
  return p;
}

MatrixSpec load_matrix(const json& doc) {
  const json rows = doc.is_array() ? doc : field<json>(doc, "entries");
  if (!rows.is_array() || rows.empty()) throw InputError("matrix needs at least one row");
  MatrixSpec m;
  m.rows = rows.size();
  m.cols = rows.front().size();
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m.cols) throw InputError("matrix rows must have equal length");
    for (const auto& e : row) {
      const auto v = e.get<std::int64_t>();
      if (v < 0) throw InputError("matrix entries must be non-negative");
      m.entries.push_back(v);
    }
  }
  return m;
}

Thm17Problem load_thm17(const json& in) {
  const Alphabet alphabet = alphabet_of(in);
  Thm17Problem p{alphabet, predicate_of(alphabet, in), field<int>(in, "n"), {}, load_matrix(field<json>(in, "matrix")),
                 {}, field<std::vector<std::vector<std::int64_t>>>(in, "fs_prefixes")};
  p.homs = hom_list(alphabet, in, p.n);
  if (in.contains("taus"))
    for (const auto& text : field<std::vector<std::string>>(in, "taus")) p.taus.push_back(parse_hom(alphabet, text));
  return p;
}

CsetProblem load_cset(const json& in) {
  const Alphabet alphabet = alphabet_of(in);
  CsetProblem p{alphabet, {}, {}, field<int>(in, "n"), positive(in, "len"), positive(in, "max_len"),
                positive(in, "sample_len")};
  const json s = field<json>(in, "structure");
  for (const auto& text : field<std::vector<std::string>>(s, "levels"))
    p.structure.levels.push_back(parse_predicate(alphabet, text));
  const json shift = s.value("shift", json::object());
  const json def = shift.value("default", json("same"));
  if (def.is_null() || def == "none") {
    p.structure.default_shift = CSetStructure::DefaultShift::kNone;
  } else if (def == "same") {
    p.structure.default_shift = CSetStructure::DefaultShift::kSame;
  } else if (def.is_number_integer()) {
    p.structure.default_shift = CSetStructure::DefaultShift::kConstant;
    p.structure.default_level = def.get<int>();
  } else {
    throw InputError("shift default must be \"same\", \"none\" or a level");
  }
  for (const auto& e : shift.value("entries", json::array()))
    p.structure.shift_entries[{field<int>(e, "level"), alphabet.parse(field<std::string>(e, "x"))}] =
        field<int>(e, "to");
  p.homs = hom_list(alphabet, in, p.n);
  return p;
}

}  // namespace wordramsey::app::detail
