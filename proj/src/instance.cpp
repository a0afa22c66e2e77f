#include "tua/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tua {
namespace {

// Line-oriented tokenizer; '#' starts a comment, blank lines are skipped.
struct LineReader {
  std::istringstream in;
  int line_no = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Returns the tokens of the next non-empty line.
  std::vector<std::string> next(const std::string& expectation) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    throw ParseError(line_no, "unexpected end of file, expected " + expectation);
  }

};

long long parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
}

int parse_positive_int(const std::string& tok, int line_no) {
  const long long v = parse_int(tok, line_no);
  if (v <= 0 || v > 1000000) throw ParseError(line_no, "value out of range: " + tok);
  return static_cast<int>(v);
}

// Fraction-free determinant (Bareiss). Entries of TU candidates are tiny, so
// long long never overflows at the supported orders.
long long determinant(std::vector<std::vector<long long>> mat) {
  const int r = static_cast<int>(mat.size());
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < r - 1; ++k) {
    if (mat[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < r; ++i)
        if (mat[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j)
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
    prev = mat[k][k];
  }
  return sign * mat[r - 1][r - 1];
}

// Enumerates r-subsets of {0..count-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int count) {
  const int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < count - (r - i)) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr int kTuDimensionCap = 20;

}  // namespace

void Instance::validate() const {
  if (m <= 0 || n <= 0) throw ValidationError("instance must have m >= 1 and n >= 1");
  if (static_cast<int>(a.size()) != m) throw ValidationError("A row count mismatch");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw ValidationError("A column count mismatch");
  if (static_cast<int>(b.size()) != m) throw ValidationError("b length mismatch");
  if (static_cast<int>(c.size()) != n) throw ValidationError("c length mismatch");
  if (static_cast<int>(labels.size()) != n) throw ValidationError("labels length mismatch");
  if (std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; }))
    throw ValidationError("b must be nonzero");
  for (const auto& v : c)
    if (v < 0) throw ValidationError("c must be nonnegative");
  for (int j = 0; j < n; ++j)
    if (labels[j].empty()) throw ValidationError("empty column label");
}

Rational Instance::cost_of(const std::vector<Rational>& x) const {
  Rational total(0);
  for (int j = 0; j < n; ++j)
    if (x[j] != 0) total += c[j] * x[j];
  return total;
}

std::vector<Rational> Instance::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> out(m, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] != 0 && x[j] != 0) out[i] += to_rational(a[i][j]) * x[j];
  return out;
}

void KFlowGraph::validate() const {
  if (node_count < 2) throw ValidationError("graph needs at least two nodes");
  if (source == sink) throw ValidationError("source and sink must differ");
  auto in_range = [&](int v) { return v >= 0 && v < node_count; };
  if (!in_range(source) || !in_range(sink)) throw ValidationError("s/t out of range");
  for (const auto& e : edges) {
    if (!in_range(e.tail) || !in_range(e.head))
      throw ValidationError("edge endpoint out of range");
    if (e.tail == e.head) throw ValidationError("self-loops are not allowed");
    if (e.cost < 0) throw ValidationError("edge cost must be nonnegative");
  }
}

Instance load_instance(const std::string& text) {
  LineReader reader(text);
  auto header = reader.next("TU-AUCTION v1 header");
  if (header.size() != 2 || header[0] != "TU-AUCTION" || header[1] != "v1")
    throw ParseError(reader.line_no, "expected 'TU-AUCTION v1' header");

  auto dims = reader.next("'m <int> n <int>'");
  if (dims.size() != 4 || dims[0] != "m" || dims[2] != "n")
    throw ParseError(reader.line_no, "expected 'm <int> n <int>'");
  Instance inst;
  inst.m = parse_positive_int(dims[1], reader.line_no);
  inst.n = parse_positive_int(dims[3], reader.line_no);

  auto tag = reader.next("'A'");
  if (tag.size() != 1 || tag[0] != "A") throw ParseError(reader.line_no, "expected 'A'");
  inst.a.resize(inst.m);
  for (int i = 0; i < inst.m; ++i) {
    auto row = reader.next("matrix row");
    if (static_cast<int>(row.size()) != inst.n)
      throw ParseError(reader.line_no, "expected " + std::to_string(inst.n) + " entries");
    for (const auto& tok : row) inst.a[i].push_back(parse_int(tok, reader.line_no));
  }

  tag = reader.next("'b'");
  if (tag.size() != 1 || tag[0] != "b") throw ParseError(reader.line_no, "expected 'b'");
  auto brow = reader.next("b row");
  if (static_cast<int>(brow.size()) != inst.m)
    throw ParseError(reader.line_no, "expected " + std::to_string(inst.m) + " entries");
  for (const auto& tok : brow) inst.b.push_back(parse_int(tok, reader.line_no));

  tag = reader.next("'c'");
  if (tag.size() != 1 || tag[0] != "c") throw ParseError(reader.line_no, "expected 'c'");
  auto crow = reader.next("c row");
  if (static_cast<int>(crow.size()) != inst.n)
    throw ParseError(reader.line_no, "expected " + std::to_string(inst.n) + " entries");
  for (const auto& tok : crow) {
    try {
      inst.c.push_back(parse_rational(tok));
    } catch (const ValidationError& e) {
      throw ParseError(reader.line_no, e.what());
    }
  }

  // Optional names line.
  bool have_names = false;
  {
    std::string line;
    while (std::getline(reader.in, line)) {
      ++reader.line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.empty()) continue;
      if (tokens.size() == 1 && tokens[0] == "names") {
        auto names = reader.next("names row");
        if (static_cast<int>(names.size()) != inst.n)
          throw ParseError(reader.line_no, "expected " + std::to_string(inst.n) + " names");
        inst.labels = names;
        have_names = true;
        break;
      }
      throw ParseError(reader.line_no, "unexpected content '" + tokens[0] + "'");
    }
  }
  if (!have_names)
    for (int j = 0; j < inst.n; ++j) inst.labels.push_back("x" + std::to_string(j + 1));

  inst.validate();
  return inst;
}

std::string save_instance(const Instance& inst) {
  inst.validate();
  std::ostringstream out;
  out << "TU-AUCTION v1\n";
  out << "m " << inst.m << " n " << inst.n << "\n";
  out << "A\n";
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.a[i][j];
    out << "\n";
  }
  out << "b\n";
  for (int i = 0; i < inst.m; ++i) out << (i ? " " : "") << inst.b[i];
  out << "\nc\n";
  for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << to_string(inst.c[j]);
  out << "\nnames\n";
  for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.labels[j];
  out << "\n";
  return out.str();
}

KFlowGraph load_kflow(const std::string& text) {
  LineReader reader(text);
  auto header = reader.next("KFLOW v1 header");
  if (header.size() != 2 || header[0] != "KFLOW" || header[1] != "v1")
    throw ParseError(reader.line_no, "expected 'KFLOW v1' header");

  auto decl = reader.next("'nodes <int> source <token> sink <token>'");
  if (decl.size() != 6 || decl[0] != "nodes" || decl[2] != "source" || decl[4] != "sink")
    throw ParseError(reader.line_no, "expected 'nodes <int> source <token> sink <token>'");
  KFlowGraph g;
  g.node_count = parse_positive_int(decl[1], reader.line_no);

  std::map<std::string, int> ids;
  auto node_id = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(ids.size());
    if (id >= g.node_count)
      throw ParseError(reader.line_no, "more node names than declared nodes");
    ids.emplace(name, id);
    g.node_names.push_back(name);
    return id;
  };
  g.source = node_id(decl[3]);
  g.sink = node_id(decl[5]);

  std::string line;
  while (std::getline(reader.in, line)) {
    ++reader.line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 4 || tokens[0] != "edge")
      throw ParseError(reader.line_no, "expected 'edge <tail> <head> <cost>'");
    KFlowGraph::Edge e;
    e.tail = node_id(tokens[1]);
    e.head = node_id(tokens[2]);
    try {
      e.cost = parse_rational(tokens[3]);
    } catch (const ValidationError& err) {
      throw ParseError(reader.line_no, err.what());
    }
    g.edges.push_back(std::move(e));
  }
  g.validate();
  return g;
}

Instance load_any(const std::string& text) {
  LineReader probe(text);
  auto header = probe.next("format header");
  if (!header.empty() && header[0] == "KFLOW") return kflow_instance(load_kflow(text));
  return load_instance(text);
}

Instance kflow_instance(const KFlowGraph& g) {
  g.validate();
  if (g.edges.empty()) throw ValidationError("graph has no edges");
  Instance inst;
  inst.m = g.node_count;
  inst.n = static_cast<int>(g.edges.size());
  inst.a.assign(inst.m, std::vector<long long>(inst.n, 0));
  inst.b.assign(inst.m, 0);
  for (int j = 0; j < inst.n; ++j) {
    inst.a[g.edges[j].tail][j] = 1;
    inst.a[g.edges[j].head][j] = -1;
    inst.c.push_back(g.edges[j].cost);
    inst.labels.push_back("e" + std::to_string(j + 1));
  }
  inst.b[g.source] = 1;
  inst.b[g.sink] = -1;
  inst.validate();
  return inst;
}

TuResult check_totally_unimodular(const Instance& inst, int size_limit) {
  inst.validate();
  TuResult result;
  if (inst.m > kTuDimensionCap || inst.n > kTuDimensionCap) {
    result.verdict = TuVerdict::Skipped;
    result.note = "instance too large for submatrix enumeration; "
                  "incidence-constructed instances are TU by construction";
    return result;
  }
  const int aug_cols = inst.n + 1;  // (A, b)
  auto entry = [&](int i, int j) {
    return j < inst.n ? inst.a[i][j] : inst.b[i];
  };
  const int max_order = std::min({size_limit, inst.m, aug_cols});
  for (int r = 1; r <= max_order; ++r) {
    std::vector<int> ri(r), ci(r);
    for (int i = 0; i < r; ++i) ri[i] = i;
    do {
      for (int i = 0; i < r; ++i) ci[i] = i;
      do {
        std::vector<std::vector<long long>> sub(r, std::vector<long long>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) sub[i][j] = entry(ri[i], ci[j]);
        const long long det = determinant(sub);
        if (det < -1 || det > 1) {
          result.verdict = TuVerdict::Refuted;
          result.witness_rows = ri;
          result.witness_cols = ci;
          result.witness_det = det;
          return result;
        }
      } while (next_combination(ci, aug_cols));
    } while (next_combination(ri, inst.m));
  }
  result.verdict = TuVerdict::Confirmed;
  if (max_order < std::min(inst.m, aug_cols))
    result.note = "checked submatrices up to order " + std::to_string(max_order);
  return result;
}

}  // namespace tua
