#include "hrs/kmer.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

namespace hrs {

HammingInstance::HammingInstance(int k_, int a_, std::optional<std::string> alpha)
    : k(k_), a(a_), alphabet(std::move(alpha)) {
  if (k < 1) throw Error("HammingInstance: k must be >= 1");
  if (a < 2) throw Error("HammingInstance: a must be >= 2");
  if (alphabet) {
    if (static_cast<int>(alphabet->size()) != a)
      throw Error("HammingInstance: alphabet length must equal a");
    std::set<char> distinct(alphabet->begin(), alphabet->end());
    if (static_cast<int>(distinct.size()) != a)
      throw Error("HammingInstance: alphabet characters must be distinct");
  }
}

std::uint64_t HammingInstance::vertex_count_capped(std::uint64_t cap) const {
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > cap / static_cast<std::uint64_t>(a)) return cap + 1;
    n *= static_cast<std::uint64_t>(a);
  }
  return n;
}

int HammingInstance::symbol_index(char c) const {
  if (alphabet) {
    auto pos = alphabet->find(c);
    if (pos == std::string::npos)
      throw UnknownSymbol(std::string("unknown symbol '") + c + "'");
    return static_cast<int>(pos);
  }
  if (c >= '0' && c <= '9' && (c - '0') < a) return c - '0';
  throw UnknownSymbol(std::string("unknown symbol '") + c + "'");
}

char HammingInstance::symbol_char(int s) const {
  if (s < 0 || s >= a) throw UnknownSymbol("symbol index out of range");
  if (alphabet) return (*alphabet)[static_cast<std::size_t>(s)];
  if (a <= 10) return static_cast<char>('0' + s);
  throw UnknownSymbol("no single-character rendering for a > 10 without an alphabet");
}

Kmer::Kmer(std::vector<int> syms, HammingInstance inst)
    : symbols(std::move(syms)), instance(std::move(inst)) {
  if (static_cast<int>(symbols.size()) != instance.k)
    throw LengthMismatch("Kmer: symbol count differs from k");
  for (int s : symbols)
    if (s < 0 || s >= instance.a) throw UnknownSymbol("Kmer: symbol out of range");
}

Kmer parse_kmer(const std::string& text, const HammingInstance& instance) {
  std::vector<int> syms;
  if (instance.has_char_rendering()) {
    if (static_cast<int>(text.size()) != instance.k)
      throw LengthMismatch("parse_kmer: expected " + std::to_string(instance.k) +
                           " characters, got " + std::to_string(text.size()));
    syms.reserve(text.size());
    for (char c : text) syms.push_back(instance.symbol_index(c));
  } else {
    // a > 10 and no alphabet: comma-separated integers.
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        syms.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UnknownSymbol("parse_kmer: bad integer token '" + tok + "'");
      }
    }
    if (static_cast<int>(syms.size()) != instance.k)
      throw LengthMismatch("parse_kmer: expected " + std::to_string(instance.k) +
                           " integers");
    for (int s : syms)
      if (s < 0 || s >= instance.a) throw UnknownSymbol("parse_kmer: symbol out of range");
  }
  return Kmer(std::move(syms), instance);
}

std::string render_kmer(const Kmer& v) {
  if (v.instance.has_char_rendering()) {
    std::string out;
    out.reserve(v.symbols.size());
    for (int s : v.symbols) out.push_back(v.instance.symbol_char(s));
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < v.symbols.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v.symbols[i]);
  }
  return out;
}

int hamming_distance(const Kmer& u, const Kmer& v) {
  if (!(u.instance == v.instance))
    throw InstanceMismatch("hamming_distance: instances differ");
  int d = 0;
  for (int i = 0; i < u.instance.k; ++i)
    if (u.symbols[static_cast<std::size_t>(i)] != v.symbols[static_cast<std::size_t>(i)]) ++d;
  return d;
}

std::vector<std::int8_t> one_hot_vec(const Kmer& v) {
  const int a = v.instance.a;
  std::vector<std::int8_t> out(static_cast<std::size_t>(a) * v.symbols.size(), 0);
  for (std::size_t j = 0; j < v.symbols.size(); ++j)
    out[j * static_cast<std::size_t>(a) + static_cast<std::size_t>(v.symbols[j])] = 1;
  return out;
}

std::vector<Kmer> dedupe(const std::vector<Kmer>& R, bool warn) {
  std::vector<Kmer> out;
  std::set<std::vector<int>> seen;
  for (const Kmer& v : R) {
    if (seen.insert(v.symbols).second) {
      out.push_back(v);
    } else if (warn) {
      std::cerr << "warning: duplicate vertex " << render_kmer(v) << " dropped\n";
    }
  }
  return out;
}

ModelMatrix build_A(const std::vector<Kmer>& R, bool warn) {
  if (R.empty()) throw EmptySet("build_A: empty vertex set");
  const HammingInstance inst = R.front().instance;
  for (const Kmer& v : R)
    if (!(v.instance == inst)) throw InstanceMismatch("build_A: mixed instances");
  ModelMatrix m;
  m.instance = inst;
  m.source_set = dedupe(R, warn);
  m.rows.reserve(m.source_set.size());
  for (const Kmer& v : m.source_set) m.rows.push_back(one_hot_vec(v));
  return m;
}

std::optional<std::pair<Kmer, Kmer>> difference_to_pair(const std::vector<int>& z,
                                                        const HammingInstance& instance) {
  const int k = instance.k, a = instance.a;
  if (static_cast<int>(z.size()) != a * k) return std::nullopt;
  std::vector<int> x(static_cast<std::size_t>(k)), y(static_cast<std::size_t>(k));
  bool any_nonzero = false;
  for (int b = 0; b < k; ++b) {
    int plus = -1, minus = -1;
    for (int j = 0; j < a; ++j) {
      int v = z[static_cast<std::size_t>(b * a + j)];
      if (v == 1) {
        if (plus >= 0) return std::nullopt;
        plus = j;
      } else if (v == -1) {
        if (minus >= 0) return std::nullopt;
        minus = j;
      } else if (v != 0) {
        return std::nullopt;
      }
    }
    if ((plus >= 0) != (minus >= 0)) return std::nullopt;
    if (plus >= 0) {
      x[static_cast<std::size_t>(b)] = plus;
      y[static_cast<std::size_t>(b)] = minus;
      any_nonzero = true;
    } else {
      x[static_cast<std::size_t>(b)] = 0;
      y[static_cast<std::size_t>(b)] = 0;
    }
  }
  if (!any_nonzero) return std::nullopt;
  return std::make_pair(Kmer(std::move(x), instance), Kmer(std::move(y), instance));
}

Kmer kmer_from_index(std::uint64_t index, const HammingInstance& instance) {
  std::vector<int> syms(static_cast<std::size_t>(instance.k));
  for (int j = instance.k - 1; j >= 0; --j) {
    syms[static_cast<std::size_t>(j)] =
        static_cast<int>(index % static_cast<std::uint64_t>(instance.a));
    index /= static_cast<std::uint64_t>(instance.a);
  }
  return Kmer(std::move(syms), instance);
}

std::uint64_t kmer_to_index(const Kmer& v) {
  std::uint64_t idx = 0;
  for (int s : v.symbols)
    idx = idx * static_cast<std::uint64_t>(v.instance.a) + static_cast<std::uint64_t>(s);
  return idx;
}

}  // namespace hrs
