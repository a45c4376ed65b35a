#include "msop/formats.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace msop {

std::string_view kind_name(const TypedInstance& instance) {
  static constexpr std::string_view kNames[] = {"mssc", "orsched", "rof", "xsearch", "table"};
  return kNames[instance.index()];
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Record {
  int line = 0;
  std::vector<Token> tokens;
  std::string raw;  // the line with comments stripped

  [[noreturn]] void fail(std::size_t token, const std::string& message) const {
    const int column = token < tokens.size() ? tokens[token].column : static_cast<int>(raw.size()) + 1;
    throw ParseError(line, column, message);
  }

  void expect_arity(std::size_t count) const {
    if (tokens.size() < count) fail(tokens.size(), "'" + tokens[0].text + "' expects " + std::to_string(count - 1) + " values");
    if (tokens.size() > count) fail(count, "unexpected token '" + tokens[count].text + "'");
  }

  long integer(std::size_t i, long lo, long hi) const {
    if (i >= tokens.size()) fail(i, "missing integer");
    const std::string& s = tokens[i].text;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      fail(i, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) fail(i, "expected an integer, got '" + s + "'");
    if (v < lo || v > hi) fail(i, "value " + s + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return v;
  }

  Rational rational(std::size_t i) const {
    if (i >= tokens.size()) fail(i, "missing rational");
    try {
      return parse_rational(tokens[i].text);
    } catch (const std::invalid_argument& e) {
      fail(i, e.what());
    }
  }
};

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Record r;
    r.line = number;
    r.raw = line;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      r.tokens.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
    }
    if (!r.tokens.empty()) out.push_back(std::move(r));
  }
  return out;
}

constexpr long kMaxId = Subset::kCapacity - 1;

[[noreturn]] void invalid(const Record& r, const std::string& message) {
  throw Error(ErrorCode::kValidationError, "line " + std::to_string(r.line) + ": " + message);
}

MsscInstance parse_mssc(const std::vector<Record>& records) {
  MsscInstance out;
  std::optional<int> n;
  std::map<int, Rational> costs;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    const std::string& key = r.tokens[0].text;
    if (key == "elements") {
      r.expect_arity(2);
      if (n) invalid(r, "duplicate 'elements'");
      n = static_cast<int>(r.integer(1, 1, Subset::kCapacity));
    } else if (key == "cost") {
      r.expect_arity(3);
      const int v = static_cast<int>(r.integer(1, 0, kMaxId));
      if (!costs.emplace(v, r.rational(2)).second) invalid(r, "duplicate cost for element " + std::to_string(v));
    } else if (key == "edge") {
      if (r.tokens.size() < 3) r.fail(r.tokens.size(), "'edge' expects a weight and at least one element");
      Hyperedge e;
      e.weight = r.rational(1);
      for (std::size_t i = 2; i < r.tokens.size(); ++i) e.elements.push_back(static_cast<int>(r.integer(i, 0, kMaxId)));
      out.edges.push_back(std::move(e));
    } else if (key == "arc") {
      r.expect_arity(3);
      out.or_arcs.emplace_back(static_cast<int>(r.integer(1, 0, kMaxId)), static_cast<int>(r.integer(2, 0, kMaxId)));
    } else {
      r.fail(0, "unknown record '" + key + "'");
    }
  }
  if (!n) throw Error(ErrorCode::kValidationError, "missing 'elements' record");
  out.costs.assign(static_cast<std::size_t>(*n), Rational(1));
  for (const auto& [v, c] : costs) {
    if (v >= *n) throw Error(ErrorCode::kValidationError, "cost given for element " + std::to_string(v) + " >= n");
    out.costs[static_cast<std::size_t>(v)] = c;
  }
  validate(out);
  return out;
}

OrDag parse_orsched(const std::vector<Record>& records) {
  std::map<int, Job> jobs;
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    const std::string& key = r.tokens[0].text;
    if (key == "job") {
      r.expect_arity(4);
      const int id = static_cast<int>(r.integer(1, 0, kMaxId));
      if (!jobs.emplace(id, Job{r.rational(2), r.rational(3)}).second) invalid(r, "duplicate job " + std::to_string(id));
    } else if (key == "arc") {
      r.expect_arity(3);
      arcs.emplace_back(static_cast<int>(r.integer(1, 0, kMaxId)), static_cast<int>(r.integer(2, 0, kMaxId)));
    } else {
      r.fail(0, "unknown record '" + key + "'");
    }
  }
  if (jobs.empty()) throw Error(ErrorCode::kValidationError, "no jobs");
  std::vector<Job> list;
  for (const auto& [id, job] : jobs) {
    if (id != static_cast<int>(list.size())) {
      throw Error(ErrorCode::kValidationError, "job ids must be 0.." + std::to_string(jobs.size() - 1));
    }
    list.push_back(job);
  }
  return OrDag(std::move(list), std::move(arcs));
}

class FormulaParser {
 public:
  FormulaParser(const Record& r, int n) : record_(r), n_(n) {
    // Re-tokenise the part after "formula" so parentheses stand alone.
    const std::string& s = r.raw;
    std::size_t pos = static_cast<std::size_t>(r.tokens[0].column - 1) + r.tokens[0].text.size();
    while (pos < s.size()) {
      const char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '(' || c == ')') {
        tokens_.push_back({std::string(1, c), static_cast<int>(pos) + 1});
        ++pos;
      } else {
        const std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' && s[pos] != ')') ++pos;
        tokens_.push_back({s.substr(start, pos - start), static_cast<int>(start) + 1});
      }
    }
  }

  int parse_root() {
    const int root = parse();
    if (next_ < tokens_.size()) fail("trailing input '" + tokens_[next_].text + "'");
    return root;
  }

  std::vector<Gate> gates;

 private:
  [[noreturn]] void fail(const std::string& message) const {
    const int column =
        next_ < tokens_.size() ? tokens_[next_].column : static_cast<int>(record_.raw.size()) + 1;
    throw ParseError(record_.line, column, message);
  }

  int parse() {
    if (next_ >= tokens_.size()) fail("unexpected end of formula");
    const Token& t = tokens_[next_];
    if (t.text == "(") {
      ++next_;
      if (next_ >= tokens_.size()) fail("unexpected end of formula");
      const std::string op = tokens_[next_].text;
      if (op != "and" && op != "or") fail("expected 'and' or 'or', got '" + op + "'");
      const int op_line = record_.line;
      const int op_column = tokens_[next_].column;
      ++next_;
      std::vector<int> children;
      while (next_ < tokens_.size() && tokens_[next_].text != ")") children.push_back(parse());
      if (next_ >= tokens_.size()) fail("missing ')'");
      ++next_;
      if (children.size() < 2) {
        throw Error(ErrorCode::kValidationError,
                    "line " + std::to_string(op_line) + ", column " + std::to_string(op_column) + ": '" + op +
                        "' gate needs at least two inputs");
      }
      // Wider gates fold left into binary ones: (and a b c) = (and (and a b) c).
      const GateKind kind = op == "and" ? GateKind::kAnd : GateKind::kOr;
      int acc = children[0];
      for (std::size_t k = 1; k < children.size(); ++k) {
        gates.push_back({kind, -1, acc, children[k]});
        acc = static_cast<int>(gates.size()) - 1;
      }
      return static_cast<int>(gates.size()) - 1;
    }
    if (t.text == ")") fail("unexpected ')'");
    if (t.text.size() < 2 || t.text[0] != 'x') fail("expected a variable xN, got '" + t.text + "'");
    int var = 0;
    for (std::size_t i = 1; i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])) || var > 100000) fail("bad variable '" + t.text + "'");
      var = var * 10 + (t.text[i] - '0');
    }
    if (var < 1 || var > n_) fail("variable '" + t.text + "' is not declared");
    ++next_;
    gates.push_back({GateKind::kLeaf, var - 1, -1, -1});
    return static_cast<int>(gates.size()) - 1;
  }

  const Record& record_;
  int n_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

ReadOnceFormula parse_rof(const std::vector<Record>& records) {
  std::map<int, Test> vars;
  const Record* formula = nullptr;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    const std::string& key = r.tokens[0].text;
    if (key == "var") {
      r.expect_arity(4);
      const int i = static_cast<int>(r.integer(1, 1, Subset::kCapacity));
      const int cost = static_cast<int>(r.integer(3, 1, 1000000));
      if (!vars.emplace(i, Test{r.rational(2), cost}).second) invalid(r, "duplicate var x" + std::to_string(i));
    } else if (key == "formula") {
      if (formula != nullptr) invalid(r, "duplicate 'formula'");
      formula = &r;
    } else {
      r.fail(0, "unknown record '" + key + "'");
    }
  }
  if (vars.empty()) throw Error(ErrorCode::kValidationError, "no variables");
  if (formula == nullptr) throw Error(ErrorCode::kValidationError, "missing 'formula' record");
  std::vector<Test> tests;
  for (const auto& [i, t] : vars) {
    if (i != static_cast<int>(tests.size()) + 1) {
      throw Error(ErrorCode::kValidationError, "variables must be x1..x" + std::to_string(vars.size()));
    }
    tests.push_back(t);
  }
  FormulaParser parser(*formula, static_cast<int>(tests.size()));
  const int root = parser.parse_root();
  return ReadOnceFormula(std::move(tests), std::move(parser.gates), root);
}

SearchGraph parse_xsearch(const std::vector<Record>& records) {
  SearchGraph out;
  std::optional<int> root;
  std::map<int, Rational> probs;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    const std::string& key = r.tokens[0].text;
    if (key == "root") {
      r.expect_arity(2);
      if (root) invalid(r, "duplicate 'root'");
      root = static_cast<int>(r.integer(1, 0, 1 << 20));
    } else if (key == "vertex") {
      r.expect_arity(3);
      const int v = static_cast<int>(r.integer(1, 0, 1 << 20));
      if (!probs.emplace(v, r.rational(2)).second) invalid(r, "duplicate vertex " + std::to_string(v));
    } else if (key == "edge") {
      r.expect_arity(4);
      out.edges.push_back({static_cast<int>(r.integer(1, 0, 1 << 20)), static_cast<int>(r.integer(2, 0, 1 << 20)),
                           r.rational(3)});
    } else {
      r.fail(0, "unknown record '" + key + "'");
    }
  }
  if (!root) throw Error(ErrorCode::kValidationError, "missing 'root' record");
  out.root = *root;
  for (const auto& [v, p] : probs) {
    if (v != out.vertices()) {
      throw Error(ErrorCode::kValidationError, "vertex ids must be 0.." + std::to_string(probs.size() - 1));
    }
    out.prob.push_back(p);
  }
  validate(out);
  return out;
}

const std::map<std::string, bool StructureFlags::*>& flag_fields() {
  static const std::map<std::string, bool StructureFlags::*> fields = {
      {"free_family", &StructureFlags::free_family},
      {"union_closed", &StructureFlags::union_closed},
      {"intersection_closed", &StructureFlags::intersection_closed},
      {"f_subadditive", &StructureFlags::f_subadditive},
      {"f_modular", &StructureFlags::f_modular},
      {"f_supermodular", &StructureFlags::f_supermodular},
      {"g_submodular", &StructureFlags::g_submodular},
      {"g_modular", &StructureFlags::g_modular},
      {"g_supermodular", &StructureFlags::g_supermodular},
  };
  return fields;
}

TableInstance parse_table(const std::vector<Record>& records) {
  TableInstance out;
  std::optional<int> n;
  std::vector<std::pair<const Record*, long>> members;
  std::vector<const Record*> values;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    const std::string& key = r.tokens[0].text;
    if (key == "elements") {
      r.expect_arity(2);
      if (n) invalid(r, "duplicate 'elements'");
      n = static_cast<int>(r.integer(1, 1, TableInstance::kMaxElements));
    } else if (key == "flags") {
      for (std::size_t i = 1; i < r.tokens.size(); ++i) {
        const auto it = flag_fields().find(r.tokens[i].text);
        if (it == flag_fields().end()) r.fail(i, "unknown flag '" + r.tokens[i].text + "'");
        out.flags.*(it->second) = true;
      }
    } else if (key == "member") {
      r.expect_arity(2);
      members.emplace_back(&r, r.integer(1, 0, (1L << TableInstance::kMaxElements) - 1));
    } else if (key == "value") {
      r.expect_arity(4);
      values.push_back(&r);
    } else {
      r.fail(0, "unknown record '" + key + "'");
    }
  }
  if (!n) throw Error(ErrorCode::kValidationError, "missing 'elements' record");
  out.n = *n;
  const long count = 1L << out.n;
  out.f.resize(static_cast<std::size_t>(count));
  out.g.resize(static_cast<std::size_t>(count));
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (const Record* r : values) {
    const long m = r->integer(1, 0, count - 1);
    if (seen[static_cast<std::size_t>(m)]) invalid(*r, "duplicate value for set " + std::to_string(m));
    seen[static_cast<std::size_t>(m)] = 1;
    out.f[static_cast<std::size_t>(m)] = r->rational(2);
    out.g[static_cast<std::size_t>(m)] = r->rational(3);
  }
  for (long m = 0; m < count; ++m) {
    if (!seen[static_cast<std::size_t>(m)]) {
      throw Error(ErrorCode::kValidationError, "no value given for set " + std::to_string(m));
    }
  }
  if (!members.empty()) {
    out.member.assign(static_cast<std::size_t>(count), 0);
    for (const auto& [r, m] : members) {
      if (m >= count) invalid(*r, "member set out of range");
      out.member[static_cast<std::size_t>(m)] = 1;
    }
  }
  validate(out);
  return out;
}

std::string flags_line(const StructureFlags& flags) {
  std::string line = "flags";
  for (const auto& [name, field] : flag_fields()) {
    if (flags.*field) line += " " + name;
  }
  return line;
}

}  // namespace

TypedInstance parse_instance(std::istream& in) {
  const std::vector<Record> records = read_records(in);
  if (records.empty()) throw ParseError(1, 1, "empty input");
  const Record& head = records.front();
  if (head.tokens[0].text != "msop") head.fail(0, "expected header 'msop <kind> v1'");
  head.expect_arity(3);
  if (head.tokens[2].text != "v1") head.fail(2, "unsupported version '" + head.tokens[2].text + "'");
  const std::string& kind = head.tokens[1].text;
  if (kind == "mssc") return parse_mssc(records);
  if (kind == "orsched") return parse_orsched(records);
  if (kind == "rof") return parse_rof(records);
  if (kind == "xsearch") return parse_xsearch(records);
  if (kind == "table") return parse_table(records);
  head.fail(1, "unknown instance kind '" + kind + "'");
}

TypedInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

TypedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return parse_instance(in);
}

std::string serialize(const TypedInstance& instance) {
  std::ostringstream out;
  out << "msop " << kind_name(instance) << " v1\n";
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MsscInstance>) {
          out << "elements " << x.size() << "\n";
          for (int v = 0; v < x.size(); ++v) out << "cost " << v << " " << to_string(x.costs[static_cast<std::size_t>(v)]) << "\n";
          for (const auto& e : x.edges) {
            out << "edge " << to_string(e.weight);
            for (int v : e.elements) out << " " << v;
            out << "\n";
          }
          for (const auto& [i, j] : x.or_arcs) out << "arc " << i << " " << j << "\n";
        } else if constexpr (std::is_same_v<T, OrDag>) {
          for (int v = 0; v < x.size(); ++v) {
            out << "job " << v << " " << to_string(x.job(v).processing) << " " << to_string(x.job(v).weight) << "\n";
          }
          for (const auto& [i, j] : x.arcs()) out << "arc " << i << " " << j << "\n";
        } else if constexpr (std::is_same_v<T, ReadOnceFormula>) {
          for (int i = 0; i < x.size(); ++i) {
            out << "var " << i + 1 << " " << to_string(x.test(i).p) << " " << x.test(i).cost << "\n";
          }
          out << "formula " << x.str() << "\n";
        } else if constexpr (std::is_same_v<T, SearchGraph>) {
          out << "root " << x.root << "\n";
          for (int v = 0; v < x.vertices(); ++v) out << "vertex " << v << " " << to_string(x.prob[static_cast<std::size_t>(v)]) << "\n";
          for (const auto& e : x.edges) out << "edge " << e.u << " " << e.v << " " << to_string(e.cost) << "\n";
        } else {
          out << "elements " << x.n << "\n" << flags_line(x.flags) << "\n";
          for (std::size_t m = 0; m < x.member.size(); ++m) {
            if (x.member[m]) out << "member " << m << "\n";
          }
          for (std::size_t m = 0; m < x.f.size(); ++m) out << "value " << m << " " << to_string(x.f[m]) << " " << to_string(x.g[m]) << "\n";
        }
      },
      instance);
  return out.str();
}

}  // namespace msop
