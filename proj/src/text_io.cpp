#include "lie2u/text_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace lie2u {

Scalar parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("invalid rational literal \"" + s + "\""); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto integer_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!integer_ok(num, true) || !integer_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '+' || ch == '-' || ch == '*') {
      flush();
      out.emplace_back(1, ch);
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

bool is_number(const std::string& t) {
  return !t.empty() && std::isdigit(static_cast<unsigned char>(t[0]));
}

// Returns the letter and whether the token was an alias.
std::pair<Letter, bool> parse_letter(const std::string& t, int d) {
  if (t == "f" || t == "g" || t == "F" || t == "G") {
    const int index = (t == "f" || t == "F") ? 1 : 2;
    if (index > d) throw ParseError("letter \"" + t + "\" needs dimension >= 2");
    return {std::isupper(static_cast<unsigned char>(t[0])) ? big(index) : small(index), true};
  }
  if (t.size() >= 2 && (t[0] == 'f' || t[0] == 'F')) {
    std::string digits = t.substr(1);
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("unknown token \"" + t + "\"");
    const long index = std::stol(digits);
    if (index < 1 || index > d)
      throw ParseError("letter \"" + t + "\" outside dimension " + std::to_string(d));
    const int i = static_cast<int>(index);
    return {t[0] == 'F' ? big(i) : small(i), false};
  }
  throw ParseError("unknown token \"" + t + "\"");
}

}  // namespace

ParsedExpression parse_expression(std::string_view text, int d) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty expression");
  ParsedExpression out{NcPolynomial{}, false};

  std::size_t i = 0;
  while (i < tokens.size()) {
    Scalar sign = 1;
    bool have_sign = false;
    while (i < tokens.size() && (tokens[i] == "+" || tokens[i] == "-")) {
      if (tokens[i] == "-") sign = -sign;
      have_sign = true;
      ++i;
    }
    if (i >= tokens.size()) throw ParseError("expression ends with an operator");
    if (!have_sign && i != 0) throw ParseError("missing + or - before \"" + tokens[i] + "\"");

    Scalar coeff = 1;
    if (is_number(tokens[i])) {
      coeff = parse_rational(tokens[i]);
      ++i;
      if (i < tokens.size() && tokens[i] == "*") ++i;
    }
    Word w;
    while (i < tokens.size() && tokens[i] != "+" && tokens[i] != "-") {
      if (tokens[i] == "*") {
        ++i;
        continue;
      }
      if (is_number(tokens[i])) throw ParseError("coefficient \"" + tokens[i] + "\" inside a word");
      auto [letter, alias] = parse_letter(tokens[i], d);
      out.used_aliases = out.used_aliases || alias;
      w.push_back(letter);
      ++i;
    }
    out.polynomial.add_term(w, sign * coeff);
  }
  return out;
}

Word parse_word(std::string_view text, int d) {
  Word w;
  for (const auto& t : tokenize(text)) {
    if (t == "1") continue;
    w.push_back(parse_letter(t, d).first);
  }
  return w;
}

LiePair parse_lie_pair(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("Lie pair file needs an integer \"dim\"");
  const long dim = doc["dim"].get<long>();
  if (dim < 1 || dim > 64) throw ParseError("\"dim\" must be in 1..64");
  LiePair g(static_cast<int>(dim));

  auto read_bracket = [&](const char* key, bool first) {
    if (!doc.contains(key)) return;
    const json& entries = doc[key];
    if (!entries.is_array()) throw ParseError(std::string("\"") + key + "\" must be a list");
    std::set<std::tuple<long, long, long>> seen;
    for (const json& e : entries) {
      if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          !e[2].is_number_integer())
        throw ParseError(std::string("entries of \"") + key + "\" are [i, j, k, \"p/q\"]");
      const long i = e[0].get<long>(), j = e[1].get<long>(), k = e[2].get<long>();
      if (!(1 <= i && i < j && j <= dim)) throw ParseError("entry needs 1 <= i < j <= dim");
      if (k < 1 || k > dim) throw ParseError("entry needs 1 <= k <= dim");
      if (!seen.insert({i, j, k}).second) throw ParseError("duplicate entry in \"" + std::string(key) + "\"");
      Scalar v;
      if (e[3].is_string()) v = parse_rational(e[3].get<std::string>());
      else if (e[3].is_number_integer()) v = Scalar(e[3].get<long>());
      else throw ParseError("coefficient must be a \"p/q\" string or an integer");
      const int ii = static_cast<int>(i), jj = static_cast<int>(j), kk = static_cast<int>(k);
      if (first) g.set_bracket1(ii, jj, kk, v);
      else g.set_bracket2(ii, jj, kk, v);
    }
  };
  read_bracket("bracket1", true);
  read_bracket("bracket2", false);
  return g;
}

LiePair read_lie_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_lie_pair(os.str());
}

std::string to_json(const LiePair& g) {
  using nlohmann::json;
  json doc;
  doc["dim"] = g.dim();
  json b1 = json::array(), b2 = json::array();
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = i + 1; j <= g.dim(); ++j)
      for (int k = 1; k <= g.dim(); ++k) {
        if (g.bracket1(i, j, k) != 0) b1.push_back({i, j, k, g.bracket1(i, j, k).get_str()});
        if (g.bracket2(i, j, k) != 0) b2.push_back({i, j, k, g.bracket2(i, j, k).get_str()});
      }
  doc["bracket1"] = b1;
  doc["bracket2"] = b2;
  return doc.dump();
}

}  // namespace lie2u
