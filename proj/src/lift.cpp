#include "wordramsey/lift.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

#include "wordramsey/error.hpp"
#include "wordramsey/verify.hpp"

namespace wordramsey {

namespace {

void require_fixing_hom(const Alphabet& alphabet, const HomSpec& h, std::size_t bound, const char* who) {
  if (!is_word_valued(h))
    throw DomainError(std::string(who) + ": '" + format_hom(alphabet, h) + "' is not word-valued");
  if (bound == 0) return;
  const HomReport r = check_hom_properties(alphabet, h, bound);
  if (!r.is_homomorphism)
    throw DomainError(std::string(who) + ": '" + format_hom(alphabet, h) + "' is not a homomorphism");
  if (!r.fixes_s0)
    throw DomainError(std::string(who) + ": '" + format_hom(alphabet, h) + "' does not fix S_0");
}

bool all_instances_in(const Alphabet& alphabet, const Word& w, const std::vector<std::vector<Symbol>>& xs,
                      const Predicate& target) {
  return std::all_of(xs.begin(), xs.end(), [&](const auto& x) { return target(substitute(alphabet, w, x)); });
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundError("integer overflow in M psi");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundError("integer overflow in M psi");
  return r;
}

}  // namespace

SnSearch first_in_sn(const Alphabet& alphabet, int n, std::size_t max_length,
                     const std::function<bool(const Word&)>& accept, const SearchOptions& options) {
  if (n < 1) throw DomainError("n must be >= 1");
  const auto symbols = alphabet.symbols_with_variables(n);
  SnSearch out;
  for (std::size_t len = static_cast<std::size_t>(n); len <= max_length; ++len) {
    // One chunk per leading symbol; counts of fully scanned chunks give a
    // thread-independent words_checked.
    std::vector<std::uint64_t> counts(symbols.size(), 0);
    auto hit = parallel_first<std::pair<Word, std::uint64_t>>(
        symbols.size(), options.threads, [&](std::size_t c) -> std::optional<std::pair<Word, std::uint64_t>> {
          std::optional<std::pair<Word, std::uint64_t>> found;
          std::uint64_t seen = 0;
          std::vector<Symbol> buf(len);
          buf[0] = symbols[c];
          for_each_word(symbols, len - 1, [&](const Word& tail) {
            std::copy(tail.begin(), tail.end(), buf.begin() + 1);
            Word w(buf);
            if (!alphabet.in_sn(w, n)) return true;
            ++seen;
            if (!accept(w)) return true;
            found.emplace(std::move(w), seen);
            return false;
          });
          counts[c] = seen;
          return found;
        });
    if (hit) {
      for (std::size_t c = 0; c < hit->first; ++c) out.words_checked += counts[c];
      out.words_checked += hit->second.second;
      out.word = std::move(hit->second.first);
      return out;
    }
    out.words_checked += std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }
  return out;
}

std::vector<std::vector<Symbol>> all_assignments(const Alphabet& alphabet, int n) {
  std::vector<std::vector<Symbol>> out;
  const auto letters = alphabet.letter_symbols();
  for_each_word(letters, static_cast<std::size_t>(n), [&](const Word& x) {
    out.emplace_back(x.begin(), x.end());
    return true;
  });
  return out;
}

std::vector<InstanceRow> instance_table(const Alphabet& alphabet, const Word& w, int n, const Predicate& target) {
  std::vector<InstanceRow> rows;
  for (auto& x : all_assignments(alphabet, n)) {
    Word inst = substitute(alphabet, w, x);
    const bool ok = target(inst);
    rows.push_back({std::move(x), std::move(inst), ok});
  }
  return rows;
}

// ---------------------------------------------------------------------------

Lemma1Result lemma1_lift(const Alphabet& alphabet, std::span<const std::vector<Word>> sequences,
                         std::span<const HomSpec> homs, const Predicate& target, std::vector<Word> pool,
                         const JBounds& bounds, const SearchOptions& options, std::size_t hom_check_bound) {
  if (sequences.empty()) throw DomainError("lemma1: the family E is empty");
  if (homs.empty()) throw DomainError("lemma1: the family F is empty");
  for (const auto& h : homs) require_fixing_hom(alphabet, h, hom_check_bound, "lemma1");

  Lemma1Result out;
  out.lifted.reserve(sequences.size() * homs.size());
  for (const auto& f : sequences) {
    for (const auto& h : homs) {
      std::vector<Word> g;
      g.reserve(f.size());
      for (const auto& w : f) {
        Word image = apply_word_hom(alphabet, h, w);
        if (!alphabet.in_s0(image))
          throw DomainError("lemma1: '" + format_hom(alphabet, h) + "' maps '" + alphabet.format(w) +
                            "' outside S_0");
        g.push_back(std::move(image));
      }
      out.lifted.push_back(std::move(g));
    }
  }

  auto search = find_witness(target, std::span<const std::vector<Word>>(out.lifted), std::move(pool), bounds, options);
  out.candidates_checked = search.candidates_checked;
  if (!search.witness) return out;
  out.inner = search.witness;
  out.outer = search.witness;

  // Read the tuple back in T and push every product through every nu.
  out.verified = true;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    const Word product = verify::alternating_product(sequences[i], *out.outer);
    for (std::size_t j = 0; j < homs.size(); ++j) {
      Word image = apply_word_hom(alphabet, homs[j], product);
      const bool ok = target(image);
      out.verified = out.verified && ok;
      out.table.push_back({i, j, product, std::move(image), ok});
    }
  }
  return out;
}

Theorem3Result theorem3_direct(const Alphabet& alphabet, const Predicate& target, int n, std::size_t max_length,
                               const SearchOptions& options) {
  const auto xs = all_assignments(alphabet, n);
  auto s = first_in_sn(
      alphabet, n, max_length, [&](const Word& w) { return all_instances_in(alphabet, w, xs, target); }, options);
  Theorem3Result out;
  out.words_checked = s.words_checked;
  out.word = std::move(s.word);
  if (out.word) out.instances = instance_table(alphabet, *out.word, n, target);
  return out;
}

namespace {

std::uint64_t sn_count(const Alphabet& alphabet, int n, std::size_t len) {
  // Inclusion-exclusion over the variables that are missing.
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int j = 0; j <= n; ++j) {
    std::uint64_t term = binom;
    for (std::size_t i = 0; i < len; ++i) term = term * static_cast<std::uint64_t>(alphabet.size() + n - j);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
    binom = binom * static_cast<std::uint64_t>(n - j) / static_cast<std::uint64_t>(j + 1);
  }
  return total;
}

}  // namespace

Theorem3Result theorem3_lifting(const Alphabet& alphabet, const Predicate& target, int n, std::size_t max_length,
                                const SearchOptions& options) {
  if (n < 1) throw DomainError("n must be >= 1");
  const auto xs = all_assignments(alphabet, n);
  std::vector<HomSpec> homs;
  homs.reserve(xs.size());
  for (const auto& x : xs) homs.push_back(SubstitutionHom{x});
  for (const auto& h : homs) require_fixing_hom(alphabet.with_nvars(n), h, kDefaultHomCheckBound, "theorem3");

  const auto symbols = alphabet.symbols_with_variables(n);
  Theorem3Result out;
  for (std::size_t len = static_cast<std::size_t>(n); len <= max_length; ++len) {
    if (sn_count(alphabet, n, len) > kLiftSliceLimit)
      throw BoundError("theorem3: length slice " + std::to_string(len) + " is too large to lift");
    std::vector<Word> f;
    for_each_word(symbols, len, [&](const Word& w) {
      if (alphabet.in_sn(w, n)) f.push_back(w);
      return true;
    });
    const std::vector<std::vector<Word>> e{f};
    // Only the identity theta of S_0 cup {theta} is offered for a, so the
    // witness product is f(t_1) itself.
    auto lift = lemma1_lift(alphabet, e, homs, target, {Word{}}, JBounds{1, f.size()}, options, 0);
    if (!lift.outer) {
      out.words_checked += f.size();
      continue;
    }
    const std::size_t t = lift.outer->t.front();
    Word w = f[t - 1];
    // S_0 exclusion: the witness must carry every variable.
    if (!alphabet.in_sn(w, n) || !lift.verified)
      throw std::logic_error("theorem3: lifted witness failed re-verification");
    out.words_checked += t;
    out.word = std::move(w);
    out.instances = instance_table(alphabet, *out.word, n, target);
    return out;
  }
  return out;
}

Theorem3Result theorem3_find(const Alphabet& alphabet, const Predicate& target, int n, std::size_t max_length,
                             const SearchOptions& options) {
  std::size_t lift_until = static_cast<std::size_t>(n) - 1;
  while (lift_until < max_length && sn_count(alphabet, n, lift_until + 1) <= kLiftSliceLimit) ++lift_until;
  Theorem3Result out = theorem3_lifting(alphabet, target, n, lift_until, options);
  if (out.word || lift_until >= max_length) return out;
  // Remaining lengths by direct enumeration; earlier lengths are known empty.
  const auto xs = all_assignments(alphabet, n);
  auto s = first_in_sn(
      alphabet, n, max_length,
      [&](const Word& w) { return w.size() > lift_until && all_instances_in(alphabet, w, xs, target); }, options);
  out.words_checked = s.words_checked;
  out.word = std::move(s.word);
  if (out.word) out.instances = instance_table(alphabet, *out.word, n, target);
  return out;
}

// ---------------------------------------------------------------------------

FsConstrainedResult fs_constrained_find(const Alphabet& alphabet, const Predicate& target,
                                        std::span<const std::int64_t> generators, std::size_t max_length,
                                        const SearchOptions& options) {
  if (generators.empty()) throw DomainError("fs1: the sequence x is empty");
  for (auto x : generators)
    if (x < 1) throw DomainError("fs1: x must consist of positive integers");
  FsConstrainedResult out;
  out.padded.push_back(0);
  out.padded.insert(out.padded.end(), generators.begin(), generators.end());
  const auto fs = PsgTruncation::numeric(out.padded, PsgMode::kFiniteSums);
  const auto xs = all_assignments(alphabet, 1);

  auto s = first_in_sn(
      alphabet, 1, max_length,
      [&](const Word& w) {
        const auto tau = static_cast<std::int64_t>(var_count(w, 1));
        return fs.find_value(Value{tau}).has_value() && all_instances_in(alphabet, w, xs, target);
      },
      options);
  out.words_checked = s.words_checked;
  out.word = std::move(s.word);
  if (!out.word) return out;

  out.tau = var_count(*out.word, 1);
  const ElementId id = *fs.find_value(Value{static_cast<std::int64_t>(out.tau)});
  out.padded_indices = fs.element(id).indices;
  for (int i : out.padded_indices)
    if (i > 1) out.indices.push_back(i - 1);
  if (out.indices.empty()) throw std::logic_error("fs1: witness index set is empty after removing y_1");
  out.instances = instance_table(alphabet, *out.word, 1, target);
  return out;
}

Theorem16Result theorem16_find(const Alphabet& alphabet, const Predicate& target, int n, int k,
                               std::span<const Word> patterns, std::size_t max_length, const SearchOptions& options) {
  if (k < 1 || k >= n) throw DomainError("thm16: requires 1 <= k < n");
  if (patterns.empty()) throw DomainError("thm16: the pattern sequence is empty");
  for (const auto& y : patterns)
    if (!alphabet.in_sn(y, k) || std::any_of(y.begin(), y.end(), [&](Symbol s) { return alphabet.is_letter(s); }))
      throw DomainError("thm16: pattern '" + alphabet.format(y) + "' must use exactly the variables v_1..v_" +
                        std::to_string(k));
  const auto fp = PsgTruncation::word_products(alphabet, patterns);
  const auto xs = all_assignments(alphabet, n);

  auto s = first_in_sn(
      alphabet, n, max_length,
      [&](const Word& w) {
        return fp.find_value(Value{pattern_extract(alphabet, w, n, k)}).has_value() &&
               all_instances_in(alphabet, w, xs, target);
      },
      options);
  Theorem16Result out;
  out.words_checked = s.words_checked;
  out.word = std::move(s.word);
  if (!out.word) return out;
  out.pattern = pattern_extract(alphabet, *out.word, n, k);
  out.fp_indices = fp.element(*fp.find_value(Value{out.pattern})).indices;
  out.instances = instance_table(alphabet, *out.word, n, target);
  return out;
}

MatrixSpec MatrixSpec::identity(std::size_t n) {
  MatrixSpec m{n, n, std::vector<std::int64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = 1;
  return m;
}

std::vector<std::int64_t> matrix_vector_dense(const MatrixSpec& m, std::span<const std::int64_t> v) {
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
  if (v.size() != m.cols) throw DomainError("matrix has " + std::to_string(m.cols) + " columns, vector has " +
                                            std::to_string(v.size()) + " entries");
  const Eigen::Map<const Mat> mat(m.entries.data(), static_cast<Eigen::Index>(m.rows),
                                  static_cast<Eigen::Index>(m.cols));
  const Eigen::Map<const Vec> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  const Vec r = mat * vec;
  return {r.data(), r.data() + r.size()};
}

std::vector<std::int64_t> matrix_vector_rows(const MatrixSpec& m, std::span<const std::int64_t> v) {
  if (v.size() != m.cols) throw DomainError("matrix has " + std::to_string(m.cols) + " columns, vector has " +
                                            std::to_string(v.size()) + " entries");
  std::vector<std::int64_t> out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r] = checked_add(out[r], checked_mul(m.at(r, c), v[c]));
  return out;
}

Theorem17Result theorem17_find(const Alphabet& alphabet, const Predicate& target, std::span<const HomSpec> homs,
                               const MatrixSpec& matrix, std::span<const HomSpec> taus,
                               std::span<const std::vector<std::int64_t>> fs_prefixes, int n,
                               std::size_t max_length, const SearchOptions& options, std::size_t hom_check_bound) {
  if (n < 1) throw DomainError("thm17: n must be >= 1");
  if (homs.empty()) throw DomainError("thm17: the family F is empty");
  if (matrix.entries.size() != matrix.rows * matrix.cols || matrix.rows == 0 || matrix.cols == 0)
    throw DomainError("thm17: malformed matrix");
  for (auto e : matrix.entries)
    if (e < 0) throw DomainError("thm17: matrix entries must lie in omega");

  std::vector<HomSpec> tau_list(taus.begin(), taus.end());
  if (tau_list.empty())
    for (int i = 1; i <= n; ++i) tau_list.push_back(VariableCountHom{i});
  if (tau_list.size() != matrix.cols)
    throw DomainError("thm17: matrix has " + std::to_string(matrix.cols) + " columns but there are " +
                      std::to_string(tau_list.size()) + " maps tau");
  if (fs_prefixes.size() != matrix.rows)
    throw DomainError("thm17: matrix has " + std::to_string(matrix.rows) + " rows but there are " +
                      std::to_string(fs_prefixes.size()) + " sequences");
  for (const auto& b : fs_prefixes) {
    if (b.empty()) throw DomainError("thm17: empty FS prefix");
    if (b.size() > static_cast<std::size_t>(kMaxGenerators))
      throw BoundError("thm17: FS prefix longer than " + std::to_string(kMaxGenerators));
  }

  for (const auto& tau : tau_list) {
    if (is_word_valued(tau)) throw DomainError("thm17: tau '" + format_hom(alphabet, tau) + "' is not omega-valued");
    if (hom_check_bound == 0) continue;
    const HomReport r = check_hom_properties(alphabet.with_nvars(n), tau, hom_check_bound);
    if (!r.is_homomorphism || !r.s0_independent)
      throw DomainError("thm17: tau '" + format_hom(alphabet, tau) + "' is not an S_0-independent homomorphism");
  }
  for (const auto& h : homs) {
    if (!is_word_valued(h)) throw DomainError("thm17: '" + format_hom(alphabet, h) + "' is not word-valued");
    if (hom_check_bound == 0) continue;
    const HomReport r = check_hom_properties(alphabet.with_nvars(n), h, hom_check_bound);
    if (!r.is_homomorphism || !r.s0_preserving.value_or(false))
      throw DomainError("thm17: '" + format_hom(alphabet, h) + "' is not an S_0-preserving homomorphism");
  }

  auto psi_of = [&](const Word& w) {
    std::vector<std::int64_t> psi;
    psi.reserve(tau_list.size());
    for (const auto& tau : tau_list)
      psi.push_back(static_cast<std::int64_t>(std::get<std::uint64_t>(apply_hom(alphabet, tau, w))));
    return psi;
  };
  auto image_of = [&](const std::vector<std::int64_t>& psi) {
    auto dense = matrix_vector_dense(matrix, psi);
    auto rows = matrix_vector_rows(matrix, psi);
    if (dense != rows) throw std::logic_error("thm17: the two evaluations of M psi disagree");
    return rows;
  };
  // Precomputed FS(B_i) sets keep membership O(log) inside the search.
  std::vector<PsgTruncation> fs;
  for (const auto& b : fs_prefixes) fs.push_back(PsgTruncation::numeric(b, PsgMode::kFiniteSums));

  auto s = first_in_sn(
      alphabet, n, max_length,
      [&](const Word& w) {
        const auto image = image_of(psi_of(w));
        for (std::size_t i = 0; i < image.size(); ++i)
          if (!fs[i].find_value(Value{image[i]})) return false;
        return std::all_of(homs.begin(), homs.end(), [&](const HomSpec& h) {
          const Word u = apply_word_hom(alphabet, h, w);
          return alphabet.in_s0(u) && target(u);
        });
      },
      options);

  Theorem17Result out;
  out.words_checked = s.words_checked;
  out.word = std::move(s.word);
  if (!out.word) return out;
  out.psi = psi_of(*out.word);
  out.image = image_of(out.psi);
  for (std::size_t i = 0; i < out.image.size(); ++i) {
    auto h = fs_membership(fs_prefixes[i], out.image[i]);
    if (!h) throw std::logic_error("thm17: FS membership lost on re-check");
    out.fs_indices.push_back(std::move(*h));
  }
  for (const auto& h : homs) out.hom_images.push_back(apply_word_hom(alphabet, h, *out.word));
  return out;
}

// ---------------------------------------------------------------------------

std::optional<int> CSetStructure::shift(int level, const Word& x) const {
  if (auto it = shift_entries.find({level, x}); it != shift_entries.end()) return it->second;
  switch (default_shift) {
    case DefaultShift::kSame:
      return level;
    case DefaultShift::kConstant:
      return default_level;
    case DefaultShift::kNone:
      break;
  }
  return std::nullopt;
}

CSetResult cset_sequence(const Alphabet& alphabet, const CSetStructure& structure, std::span<const HomSpec> homs,
                         int n, std::size_t length, std::size_t max_length, std::size_t sample_length,
                         const SearchOptions& options, std::size_t hom_check_bound) {
  if (structure.depth() == 0) throw DomainError("cset: the structure has no levels");
  if (homs.empty()) throw DomainError("cset: the family F is empty");
  if (length == 0) throw DomainError("cset: length must be >= 1");
  for (const auto& h : homs) require_fixing_hom(alphabet.with_nvars(n), h, hom_check_bound, "cset");

  const auto samples = word_pool(alphabet, sample_length);
  for (std::size_t j = 1; j < structure.depth(); ++j)
    for (const auto& z : samples)
      if (structure.levels[j](z) && !structure.levels[j - 1](z))
        throw DomainError("cset: levels not nested: '" + alphabet.format(z) + "' is in D_" + std::to_string(j + 1) +
                          " but not in D_" + std::to_string(j));

  CSetResult out;
  std::vector<Word> products;  // all (H, phi) products over the prefix built so far
  for (std::size_t step = 1; step <= length; ++step) {
    int level = 1;
    for (const auto& y : products) {
      const auto m = structure.shift(1, y);
      if (!m) throw DomainError("cset: shift map undefined at (1, " + alphabet.format(y) + ")");
      if (*m < 1 || static_cast<std::size_t>(*m) > structure.depth())
        throw DomainError("cset: shift map sends (1, " + alphabet.format(y) + ") to level " + std::to_string(*m) +
                          " outside 1.." + std::to_string(structure.depth()));
      for (const auto& z : samples)
        if (structure.levels[*m - 1](z) && !structure.levels[0](concat(y, z)))
          throw DomainError("cset: shift fails at (1, " + alphabet.format(y) + "): '" + alphabet.format(z) +
                            "' is in D_" + std::to_string(*m) + " but the product is not in D_1");
      level = std::max(level, *m);
    }
    const Predicate& d = structure.levels[level - 1];
    auto s = first_in_sn(
        alphabet, n, max_length,
        [&](const Word& w) {
          return std::all_of(homs.begin(), homs.end(),
                             [&](const HomSpec& h) { return d(apply_word_hom(alphabet, h, w)); });
        },
        options);
    if (!s.word) {
      out.failure = "step " + std::to_string(step) + ": no word of S_" + std::to_string(n) + " up to length " +
                    std::to_string(max_length) + " has every image in D_" + std::to_string(level);
      break;
    }
    std::vector<Word> extended = products;
    for (const auto& h : homs) {
      const Word u = apply_word_hom(alphabet, h, *s.word);
      extended.push_back(u);
      for (const auto& y : products) extended.push_back(concat(y, u));
    }
    products = std::move(extended);
    out.sequence.push_back(std::move(*s.word));
    out.levels.push_back(level);
  }

  // Brute-force recheck: every nonempty H and every phi: H -> F.
  const std::size_t len = out.sequence.size();
  const std::uint64_t choices = homs.size() + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= choices;
  out.expected_products = total - 1;
  bool all_ok = true;
  for (std::uint64_t code = 1; code < total; ++code) {
    CSetRow row;
    std::uint64_t c = code;
    for (std::size_t t = 0; t < len; ++t, c /= choices) {
      const std::size_t digit = c % choices;
      if (digit == 0) continue;
      row.indices.push_back(static_cast<int>(t + 1));
      row.homs.push_back(digit - 1);
      row.product = concat(row.product, apply_word_hom(alphabet, homs[digit - 1], out.sequence[t]));
    }
    row.in_first_level = structure.levels[0](row.product);
    all_ok = all_ok && row.in_first_level;
    out.table.push_back(std::move(row));
  }
  out.verified = !out.failure && all_ok && out.table.size() == out.expected_products;
  return out;
}

}  // namespace wordramsey
