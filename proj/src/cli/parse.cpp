#include "virmod/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "virmod/av/a_module.hpp"
#include "virmod/av/h_basis.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/f/f_module.hpp"

namespace virmod {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(const std::string& what, std::string_view text) {
  throw std::invalid_argument(what + ": '" + std::string(text) + "'");
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) bad("expected an integer", s);
  return v;
}

struct Call {
  std::string head;
  std::vector<std::string> args;
  bool has_parens = false;
};

// "name(a, b(c, d))" -> {name, [a, b(c, d)]}
Call parse_call(std::string_view text) {
  text = trim(text);
  Call c;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    c.head = std::string(text);
    return c;
  }
  if (text.back() != ')') bad("unbalanced parentheses", text);
  c.head = std::string(trim(text.substr(0, open)));
  c.has_parens = true;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) bad("unbalanced parentheses", text);
    if (ch == ',' && depth == 0) {
      c.args.emplace_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) bad("unbalanced parentheses", text);
  if (!trim(body).empty() || !c.args.empty()) c.args.emplace_back(trim(body.substr(start)));
  return c;
}

void arity(const Call& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi)
    throw std::invalid_argument(c.head + ": expected " + std::to_string(lo) +
                                (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
}

// Signed terms of a sum; '+'/'-' directly after '^' or '_' belong to an exponent.
std::vector<std::pair<int, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  char prev = 0;
  auto flush = [&](std::string_view at) {
    if (trim(cur).empty()) bad("missing term", at);
    out.emplace_back(sign, std::string(trim(cur)));
    cur.clear();
    sign = 1;
  };
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (depth < 0) bad("unbalanced parentheses", text);
    const bool sign_char = ch == '+' || ch == '-';
    if (depth == 0 && sign_char && prev != '^' && prev != '_') {
      if (!trim(cur).empty()) flush(text);
      if (ch == '-') sign = -sign;
    } else {
      cur += ch;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) prev = ch;
  }
  if (depth != 0) bad("unbalanced parentheses", text);
  flush(text);
  return out;
}

// Leading coefficient "p", "p/q" or "(p/q)", then an optional '*'.
Rational take_coefficient(std::string_view& body) {
  body = trim(body);
  Rational c = 1;
  if (!body.empty() && body.front() == '(') {
    const auto close = body.find(')');
    if (close == std::string_view::npos) bad("unbalanced parentheses", body);
    const std::string_view inner = body.substr(1, close - 1);
    if (inner.find_first_not_of("0123456789/+- ") == std::string_view::npos) {
      c = parse_rational(inner);
      body = trim(body.substr(close + 1));
    }
  } else {
    std::size_t n = 0;
    while (n < body.size() && (std::isdigit(static_cast<unsigned char>(body[n])) || body[n] == '/')) ++n;
    if (n > 0) {
      c = parse_rational(body.substr(0, n));
      body = trim(body.substr(n));
    }
  }
  if (!body.empty() && body.front() == '*') body = trim(body.substr(1));
  return c;
}

// Strips optional braces or parentheses: "{-1}" / "(-1)" / "-1".
int parse_index(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '{' && s.back() == '}') || (s.front() == '(' && s.back() == ')')))
    s = s.substr(1, s.size() - 2);
  return parse_int(s);
}

Poly poly_atom(std::string_view atom) {
  atom = trim(atom);
  if (atom.empty()) return Poly::constant(1);
  if (atom == "t") return Poly::var();
  if (atom.substr(0, 2) == "t^") {
    const int k = parse_index(atom.substr(2));
    if (k < 0) bad("negative power of t", atom);
    return Poly::monomial(1, k);
  }
  if (atom.substr(0, 2) == "h_") {
    const auto caret = atom.find('^');
    if (caret == std::string_view::npos) bad("expected h_m^n", atom);
    const int m = parse_index(atom.substr(2, caret - 2));
    const int n = parse_index(atom.substr(caret + 1));
    if (n < 0) bad("h_m^n needs n >= 0", atom);
    return h_poly(m, n);
  }
  bad("unrecognized polynomial term", atom);
}

long laurent_atom(std::string_view atom) {
  atom = trim(atom);
  if (atom.empty()) return 0;
  if (atom == "x") return 1;
  if (atom.substr(0, 2) == "x^") return parse_index(atom.substr(2));
  bad("unrecognized Laurent term", atom);
}

Rational rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a \"p/q\" string or an integer");
}

BrOperator op_of(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "zero") return BrOperator::zero();
    if (s == "identity") return BrOperator::identity();
    throw std::invalid_argument("unknown operator '" + s + "'");
  }
  if (!j.is_object()) throw std::invalid_argument("operator must be a string or an object");
  const int factor = j.value("factor", 0);
  if (j.contains("scalar")) return BrOperator::scalar(rational_of(j.at("scalar")));
  if (j.contains("poly")) {
    std::vector<Rational> c;
    for (const auto& e : j.at("poly")) c.push_back(rational_of(e));
    return BrOperator::poly_mult(Poly(std::move(c)), factor);
  }
  if (j.contains("shift")) return BrOperator::unit_shift(rational_of(j.at("shift")), factor);
  if (j.contains("matrix")) {
    RatMatrix m;
    for (const auto& row : j.at("matrix")) {
      std::vector<Rational> r;
      for (const auto& e : row) r.push_back(rational_of(e));
      m.append_row(r);
    }
    return BrOperator::matrix(std::move(m), factor);
  }
  if (j.contains("sum") || j.contains("compose")) {
    const bool sum = j.contains("sum");
    std::vector<BrOperator> parts;
    for (const auto& e : j.at(sum ? "sum" : "compose")) parts.push_back(op_of(e));
    return sum ? BrOperator::sum(std::move(parts)) : BrOperator::compose(std::move(parts));
  }
  throw std::invalid_argument("operator object needs one of scalar, poly, shift, matrix, sum, compose");
}

CarrierFactor factor_of(const json& j) {
  if (j.is_number_integer()) return CarrierFactor::finite(j.get<int>());
  if (j.is_string() && j.get<std::string>() == "polynomial") return CarrierFactor::polynomial();
  if (j.is_object()) {
    const auto kind = j.value("kind", std::string());
    if (kind == "polynomial") return CarrierFactor::polynomial();
    if (kind == "finite") return CarrierFactor::finite(j.at("dim").get<int>());
  }
  throw std::invalid_argument("carrier factor must be a dimension, \"polynomial\" or {\"kind\": ...}");
}

BrModuleDesc br_of(const json& j) {
  BrModuleDesc m;
  m.name = j.at("name").get<std::string>();
  m.rank = j.at("rank").get<int>();
  const json& carrier = j.at("carrier");
  if (carrier.is_array()) {
    for (const auto& f : carrier) m.carrier.factors.push_back(factor_of(f));
  } else {
    m.carrier.factors.push_back(factor_of(carrier));
  }
  for (const auto& op : j.at("ops")) m.ops.push_back(op_of(op));
  const int window = j.value("window", m.carrier.finite() ? 1 : kDefaultValidationWindow);
  return certified(std::move(m), window);
}

AVModulePtr module_expr(std::string_view text, const Workbench& wb, int depth) {
  if (depth > 32) throw std::invalid_argument("module definitions nest too deeply");
  const Call c = parse_call(text);
  if (c.head == "Omega" && c.has_parens) {
    arity(c, 2, 2);
    return std::make_shared<OmegaModule>(parse_rational(c.args[0]), parse_rational(c.args[1]));
  }
  if (c.head == "A" && c.has_parens) {
    arity(c, 2, 2);
    return std::make_shared<AModule>(parse_rational(c.args[0]), parse_rational(c.args[1]));
  }
  if (c.head == "F" && c.has_parens) {
    arity(c, 2, 2);
    return std::make_shared<FModule>(parse_br_expr(c.args[0], wb), module_expr(c.args[1], wb, depth + 1));
  }
  if (!c.has_parens) {
    auto it = wb.modules.find(c.head);
    if (it != wb.modules.end()) return module_expr(it->second, wb, depth + 1);
  }
  bad("unknown module", text);
}

}  // namespace

Workbench parse_workbench(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("module file: ") + e.what());
  }
  Workbench wb;
  try {
    if (j.contains("br_modules"))
      for (const auto& b : j.at("br_modules")) {
        BrModuleDesc m = br_of(b);
        wb.br[m.name] = std::move(m);
      }
    if (j.contains("modules"))
      for (const auto& m : j.at("modules"))
        wb.modules[m.at("name").get<std::string>()] = m.at("expr").get<std::string>();
    if (j.contains("defaults")) {
      const json& d = j.at("defaults");
      if (d.contains("window")) wb.window = d.at("window").get<int>();
      if (d.contains("dt_cap")) wb.dt_cap = d.at("dt_cap").get<int>();
      if (d.contains("dx_cap")) wb.dx_cap = d.at("dx_cap").get<int>();
      wb.json = d.value("format", std::string("text")) == "json";
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("module file: ") + e.what());
  }
  // every module expression must resolve
  for (const auto& [name, expr] : wb.modules) module_expr(expr, wb, 0);
  return wb;
}

Workbench load_workbench(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open module file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workbench(ss.str());
}

BrModuleDesc parse_br_expr(std::string_view text, const Workbench& wb) {
  const Call c = parse_call(text);
  if (c.head == "Mgamma" && c.has_parens) {
    arity(c, 1, 2);
    return make_Mgamma(parse_rational(c.args[0]), c.args.size() == 2 ? parse_int(c.args[1]) : 1);
  }
  if (c.head == "shift" && c.args.empty()) return make_shift_module_B1();
  if (c.head == "broken_fixture") {
    arity(c, 0, 1);
    return make_broken_fixture(c.args.empty() ? Rational(1) : parse_rational(c.args[0]));
  }
  if (c.head == "tensor" && c.has_parens) {
    arity(c, 2, 2);
    return tensor_br(parse_br_expr(c.args[0], wb), parse_br_expr(c.args[1], wb));
  }
  if (c.head == "density" && c.has_parens) {
    arity(c, 3, 3);
    return make_density_module(parse_int(c.args[0]), parse_int(c.args[1]), parse_rational(c.args[2]));
  }
  if (c.head == "random" && c.has_parens) {
    arity(c, 1, 2);
    const int seed = parse_int(c.args[0]);
    if (seed < 0) bad("random seed must be >= 0", text);
    return make_random_matrix_module(static_cast<std::uint32_t>(seed),
                                     c.args.size() == 2 ? parse_int(c.args[1]) : 3);
  }
  if (!c.has_parens) {
    auto it = wb.br.find(c.head);
    if (it != wb.br.end()) return it->second;
  }
  bad("unknown B_r module", text);
}

AVModulePtr parse_module_expr(std::string_view text, const Workbench& wb) { return module_expr(text, wb, 0); }

Poly parse_poly(std::string_view text) {
  Poly out;
  for (const auto& [sign, term] : split_terms(text)) {
    std::string_view body = term;
    const Rational c = take_coefficient(body);
    out += Rational(sign * c) * poly_atom(body);
  }
  return out;
}

LaurentVec parse_laurent(std::string_view text) {
  LaurentVec out;
  for (const auto& [sign, term] : split_terms(text)) {
    std::string_view body = term;
    const Rational c = take_coefficient(body);
    out.add(laurent_atom(body), sign * c);
  }
  return out;
}

Vec parse_element(const AVModule& module, std::string_view text) {
  if (dynamic_cast<const OmegaModule*>(&module)) return to_vec(parse_poly(text));
  if (dynamic_cast<const AModule*>(&module)) return to_vec(parse_laurent(text));
  const auto* f = dynamic_cast<const FModule*>(&module);
  if (!f) throw std::invalid_argument("parse_element: unsupported module");
  if (trim(text) == "0") return {};

  const Carrier& carrier = f->br().carrier;
  Vec out;
  for (const auto& [sign, term] : split_terms(text)) {
    std::string_view body = term;
    const Rational c = take_coefficient(body);
    if (body.empty() || body.front() != 'v') bad("expected v[...] (x) ...", term);
    body.remove_prefix(1);
    Key b;
    if (!body.empty() && body.front() == '[') {
      const auto close = body.find(']');
      if (close == std::string_view::npos) bad("unbalanced brackets", term);
      std::string_view idx = body.substr(1, close - 1);
      while (!trim(idx).empty()) {
        const auto comma = idx.find(',');
        b.push_back(parse_int(idx.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        idx.remove_prefix(comma + 1);
      }
      body.remove_prefix(close + 1);
    } else {
      for (std::size_t i = 0; i < carrier.arity(); ++i) b.push_back(0);
    }
    if (!carrier.contains(b, INT_MAX)) bad("index outside the carrier of " + f->br().name, term);
    body = trim(body);
    if (body.substr(0, 3) != "(x)") bad("expected '(x)' after v[...]", term);
    body = trim(body.substr(3));
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
      int depth = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == body.size() - 1) body = body.substr(1, body.size() - 2);
    }
    if (trim(body).empty()) bad("missing inner element", term);
    const Vec inner = parse_element(*f->inner(), body);
    out.axpy(sign * c, FModule::tensor(Vec::unit(b), inner));
  }
  return out;
}

}  // namespace virmod
