#include "sp2brst/theory_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sp2brst {

using nlohmann::json;

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::string> split_top_level(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : key) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_index(const std::string& s, const std::string& where) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
      s.size() > 6) {
    throw InputError(where + ": expected a positive index, got '" + s + "'");
  }
  return std::stoi(s);
}

void read_generators(const json& doc, const char* field,
                     std::vector<int>& parities,
                     std::vector<std::string>& names) {
  if (!doc.contains(field)) return;
  const json& list = doc.at(field);
  if (!list.is_array()) {
    throw InputError(std::string("'") + field + "' must be a list");
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& g = list[i];
    const std::string where =
        std::string(field) + "[" + std::to_string(i) + "]";
    if (!g.is_object()) throw InputError(where + " must be an object");
    int parity = 0;
    if (g.contains("parity")) {
      if (!g.at("parity").is_number_integer()) {
        throw InputError(where + ".parity must be 0 or 1");
      }
      parity = g.at("parity").get<int>();
      if (parity != 0 && parity != 1) {
        throw InputError(where + ".parity must be 0 or 1");
      }
    }
    std::string name;
    if (g.contains("name")) {
      if (!g.at("name").is_string()) {
        throw InputError(where + ".name must be a string");
      }
      name = g.at("name").get<std::string>();
    }
    parities.push_back(parity);
    names.push_back(name);
  }
}

GradedPoly parse_field_expression(const json& value, const std::string& where,
                                  const ExpressionContext& ctx) {
  if (!value.is_string()) {
    throw InputError(where + ": expression must be a string");
  }
  try {
    return parse_expression(value.get<std::string>(), ctx);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.message());
  }
}

}  // namespace

ExpressionContext TheoryFile::context() const {
  ExpressionContext ctx;
  ctx.spec = &spec;
  for (std::size_t i = 0; i < constraint_names.size(); ++i) {
    if (!constraint_names[i].empty()) {
      ctx.aliases.emplace(constraint_names[i],
                          spec.xi(static_cast<int>(i) + 1));
    }
  }
  for (std::size_t i = 0; i < physical_names.size(); ++i) {
    if (!physical_names[i].empty()) {
      ctx.aliases.emplace(physical_names[i],
                          spec.xip(static_cast<int>(i) + 1));
    }
  }
  return ctx;
}

const NamedExpression* TheoryFile::find_observable(
    const std::string& name) const {
  for (const auto& o : observables) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

TheoryFile parse_theory(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("JSON syntax error at " + std::to_string(line) + ":" +
                     std::to_string(col));
  }
  if (!doc.is_object()) throw InputError("theory must be a JSON object");
  if (doc.contains("format")) {
    if (!doc.at("format").is_number_integer() ||
        doc.at("format").get<int>() != 1) {
      throw InputError("unsupported theory format (expected 1)");
    }
  }
  static const std::set<std::string> known = {
      "format", "constraints", "physical", "U", "mixed",
      "structure_may_depend_on_physical", "observables", "order", "name",
      "description"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw InputError("unknown field '" + key + "'");
  }

  std::vector<int> cpar, ppar;
  TheoryFile out;
  read_generators(doc, "constraints", cpar, out.constraint_names);
  read_generators(doc, "physical", ppar, out.physical_names);
  std::set<std::string> seen;
  for (const auto* names : {&out.constraint_names, &out.physical_names}) {
    for (const auto& n : *names) {
      if (n.empty()) continue;
      static const std::set<std::string> reserved = {"xi", "xip", "P",
                                                     "C",  "lam", "pi"};
      if (reserved.contains(n)) {
        throw InputError("name '" + n + "' is reserved");
      }
      if (!seen.insert(n).second) {
        throw InputError("duplicate name '" + n + "'");
      }
    }
  }
  try {
    out.spec = TheorySpec(cpar, ppar);
  } catch (const SpecError& e) {
    throw InputError(e.what());
  }
  if (doc.contains("structure_may_depend_on_physical")) {
    const json& f = doc.at("structure_may_depend_on_physical");
    if (!f.is_boolean()) {
      throw InputError("structure_may_depend_on_physical must be a boolean");
    }
    out.spec.structure_may_depend_on_physical = f.get<bool>();
  }
  const ExpressionContext ctx = out.context();

  if (doc.contains("U")) {
    const json& u = doc.at("U");
    if (!u.is_object()) throw InputError("'U' must be an object");
    for (const auto& [key, value] : u.items()) {
      const std::string where = "U[" + key + "]";
      const auto parts = split_top_level(key);
      if (parts.size() != 3) {
        throw InputError(where + ": key must be 'alpha,beta,gamma'");
      }
      const int a = parse_index(parts[0], where);
      const int b = parse_index(parts[1], where);
      const int g = parse_index(parts[2], where);
      const GradedPoly poly = parse_field_expression(value, where, ctx);
      try {
        out.spec.set_structure(a, b, g, poly);
      } catch (const SpecError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }
  if (doc.contains("mixed")) {
    const json& mx = doc.at("mixed");
    if (!mx.is_object()) throw InputError("'mixed' must be an object");
    for (const auto& [key, value] : mx.items()) {
      const std::string where = "mixed[" + key + "]";
      const auto parts = split_top_level(key);
      if (parts.size() != 2) throw InputError(where + ": key must be 'i,j'");
      Variable vars[2];
      for (int i = 0; i < 2; ++i) {
        GradedPoly g;
        try {
          g = parse_expression(parts[static_cast<std::size_t>(i)], ctx);
        } catch (const ParseError& e) {
          throw InputError(where + ": " + e.message());
        }
        if (g.size() != 1 || g.terms().begin()->second != 1 ||
            g.terms().begin()->first.factors().size() != 1 ||
            g.terms().begin()->first.factors()[0].exp != 1) {
          throw InputError(where + ": key entries must be generators");
        }
        vars[i] = g.terms().begin()->first.factors()[0].var;
      }
      const GradedPoly poly = parse_field_expression(value, where, ctx);
      try {
        out.spec.set_mixed(vars[0], vars[1], poly);
      } catch (const SpecError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }
  if (doc.contains("observables")) {
    const json& obs = doc.at("observables");
    if (!obs.is_array()) throw InputError("'observables' must be a list");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const std::string where = "observables[" + std::to_string(i) + "]";
      NamedExpression ne;
      json expr;
      if (obs[i].is_string()) {
        ne.name = std::to_string(i + 1);
        expr = obs[i];
      } else if (obs[i].is_object() && obs[i].contains("expr")) {
        expr = obs[i].at("expr");
        ne.name = obs[i].contains("name") && obs[i].at("name").is_string()
                      ? obs[i].at("name").get<std::string>()
                      : std::to_string(i + 1);
      } else {
        throw InputError(where + ": expected a string or {name, expr}");
      }
      ne.value = parse_field_expression(expr, where, ctx);
      ne.text = expr.get<std::string>();
      if (out.find_observable(ne.name)) {
        throw InputError(where + ": duplicate observable name '" + ne.name +
                         "'");
      }
      out.observables.push_back(std::move(ne));
    }
  }
  if (doc.contains("order")) {
    const json& k = doc.at("order");
    if (!k.is_number_integer() || k.get<int>() < 2) {
      throw InputError("'order' must be an integer >= 2");
    }
    out.order = k.get<int>();
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TheoryFile read_theory_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_theory(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

GradedPoly truncate_xi_degree(const GradedPoly& p, int k) {
  GradedPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.xi_degree() <= k) out.add_term(m, c);
  }
  return out;
}

}  // namespace

JacobiReport validate_jacobi(const TheorySpec& spec, int k) {
  JacobiReport rep;
  const auto vars = spec.matter_variables();
  auto pb = [&](const GradedPoly& x, const GradedPoly& y) {
    return poisson_bracket(x, y, spec);
  };
  auto sign = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i; j < vars.size(); ++j) {
      for (std::size_t l = j; l < vars.size(); ++l) {
        const Variable& a = vars[i];
        const Variable& b = vars[j];
        const Variable& c = vars[l];
        const GradedPoly A(a), B(b), C(c);
        const int ea = a.parity(), eb = b.parity(), ec = c.parity();
        GradedPoly jac = pb(A, pb(B, C)) * sign(ea * ec);
        jac += pb(B, pb(C, A)) * sign(eb * ea);
        jac += pb(C, pb(A, B)) * sign(ec * eb);
        ++rep.triples_checked;
        jac = truncate_xi_degree(jac, k);
        if (!jac.is_zero()) rep.violations.push_back({a, b, c, jac});
      }
    }
  }
  return rep;
}

}  // namespace sp2brst
