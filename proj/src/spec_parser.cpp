#include <cctype>
#include <charconv>
#include <numeric>

#include "tsq/error.hpp"
#include "tsq/families.hpp"

namespace tsq
{

namespace
{

[[noreturn]] void parse_error(std::string const &what)
{
  throw Error(ErrorKind::Parse, what);
}

std::size_t parse_size(std::string_view s)
{
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    parse_error("expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

/// Splits on `sep` at bracket depth zero.
std::vector<std::string> split_top(std::string_view s, char sep)
{
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    if (depth < 0)
      parse_error("unbalanced brackets in '" + std::string(s) + "'");
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0)
    parse_error("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(cur);
  return out;
}

class WordParser
{
public:
  WordParser(std::string_view text, std::size_t ngens)
  : _s(text), _ngens(ngens)
  {}

  Word parse()
  {
    Word w = word();
    if (_pos != _s.size())
      parse_error("unexpected '" + std::string(1, _s[_pos]) + "' in word '" +
                  std::string(_s) + "'");
    return w;
  }

private:
  bool at_end() const { return _pos >= _s.size(); }
  char peek() const { return _s[_pos]; }

  Word word()
  {
    Word w;
    for (;;) {
      if (at_end() || peek() == ')' || peek() == ']' || peek() == ',')
        break;
      if (peek() == '*') {
        ++_pos;
        continue;
      }
      w = w * factor();
    }
    return w;
  }

  Word factor()
  {
    Word a = atom();
    while (!at_end() && peek() == '^') {
      ++_pos;
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++_pos;
      }
      std::size_t start = _pos;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        ++_pos;
      if (start == _pos) {
        // conjugation a^b
        Word by = atom();
        a = a.conjugate(neg ? by.inverse() : by);
        continue;
      }
      int e = static_cast<int>(parse_size(_s.substr(start, _pos - start)));
      a = a.pow(neg ? -e : e);
    }
    return a;
  }

  Word atom()
  {
    if (at_end())
      parse_error("unexpected end of word '" + std::string(_s) + "'");
    char c = peek();
    if (c == '(') {
      ++_pos;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++_pos;
      Word x = word();
      expect(',');
      Word y = word();
      expect(']');
      return Word::commutator(x, y);
    }
    if (c == '1') {
      ++_pos;
      return Word{};
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t g = static_cast<std::size_t>(c - 'a');
      if (g >= _ngens)
        parse_error("generator '" + std::string(1, c) + "' out of range");
      ++_pos;
      return Word::generator(g);
    }
    parse_error("unexpected '" + std::string(1, c) + "' in word '" +
                std::string(_s) + "'");
  }

  void expect(char c)
  {
    if (at_end() || peek() != c)
      parse_error(std::string("expected '") + c + "' in word '" +
                  std::string(_s) + "'");
    ++_pos;
  }

  std::string_view _s;
  std::size_t _ngens;
  std::size_t _pos = 0;
};

FiniteGroup parse_permutations(std::string const &name, std::string_view args)
{
  auto colon = args.find(':');
  if (colon == std::string_view::npos)
    parse_error("perm spec needs perm:<degree>:<generators>");
  std::size_t degree = parse_size(args.substr(0, colon));
  if (degree == 0 || degree > 32)
    parse_error("perm degree must be 1..32");

  std::vector<std::vector<std::uint32_t>> gens;
  std::string_view body = args.substr(colon + 1);
  if (!body.empty()) {
    for (auto const &g : split_top(body, ',')) {
      std::vector<std::uint32_t> p(degree);
      std::iota(p.begin(), p.end(), 0u);
      std::size_t i = 0;
      while (i < g.size()) {
        if (g[i] != '(')
          parse_error("expected '(' in permutation '" + g + "'");
        auto close = g.find(')', i);
        if (close == std::string::npos)
          parse_error("unterminated cycle in '" + g + "'");
        std::vector<std::uint32_t> cyc;
        std::string inner = g.substr(i + 1, close - i - 1);
        std::size_t k = 0;
        while (k < inner.size()) {
          while (k < inner.size() && inner[k] == ' ')
            ++k;
          std::size_t start = k;
          while (k < inner.size() && inner[k] != ' ')
            ++k;
          if (k > start) {
            std::size_t pt = parse_size(std::string_view(inner).substr(start, k - start));
            if (pt == 0 || pt > degree)
              parse_error("cycle point out of range in '" + g + "'");
            cyc.push_back(static_cast<std::uint32_t>(pt - 1));
          }
        }
        // compose this cycle after the previous ones
        std::vector<std::uint32_t> c(degree);
        std::iota(c.begin(), c.end(), 0u);
        for (std::size_t j = 0; j < cyc.size(); ++j)
          c[cyc[j]] = cyc[(j + 1) % cyc.size()];
        for (auto &v : p)
          v = c[v];
        i = close + 1;
      }
      gens.push_back(std::move(p));
    }
  }
  // drop identity generators so the generating sequence stays irredundant
  std::erase_if(gens, [](auto const &p) {
    for (std::uint32_t i = 0; i < p.size(); ++i)
      if (p[i] != i)
        return false;
    return true;
  });
  return from_permutations(name, degree, gens);
}

FiniteGroup parse_normalized(std::string const &spec,
                             EnumerationLimits const &limits)
{
  if (spec == "trivial")
    return cyclic(1).renamed(spec);

  auto colon = spec.find(':');
  if (colon == std::string::npos)
    parse_error("group spec needs <family>:<arguments>, got '" + spec + "'");
  std::string family = spec.substr(0, colon);
  std::string_view args = std::string_view(spec).substr(colon + 1);

  FiniteGroup g = [&]() -> FiniteGroup {
    if (family == "cyclic")
      return cyclic(parse_size(args));
    if (family == "dihedral")
      return dihedral(parse_size(args));
    if (family == "quaternion")
      return quaternion(parse_size(args));
    if (family == "symmetric")
      return symmetric(parse_size(args));
    if (family == "alternating")
      return alternating(parse_size(args));
    if (family == "abelian") {
      std::vector<std::size_t> orders;
      for (auto const &a : split_top(args, ','))
        orders.push_back(parse_size(a));
      return abelian(orders);
    }
    if (family == "product") {
      auto parts = split_top(args, 'x');
      if (parts.size() < 2)
        parse_error("product needs at least two factors");
      std::optional<FiniteGroup> acc;
      for (auto const &p : parts) {
        if (p.size() < 2 || p.front() != '(' || p.back() != ')')
          parse_error("product factors must be parenthesized: '" + p + "'");
        FiniteGroup f = parse_normalized(p.substr(1, p.size() - 2), limits);
        acc = acc ? direct_product(*acc, f) : std::move(f);
      }
      return *acc;
    }
    if (family == "perm")
      return parse_permutations(spec, args);
    if (family == "fp") {
      auto c2 = args.find(':');
      if (c2 == std::string_view::npos)
        parse_error("fp spec needs fp:<ngens>:<relators>");
      std::size_t ngens = parse_size(args.substr(0, c2));
      if (ngens > 26)
        parse_error("fp supports at most 26 generators");
      auto rels = parse_relators(std::string(args.substr(c2 + 1)), ngens);
      return from_presentation(Presentation(ngens, std::move(rels)), spec, limits);
    }
    parse_error("unknown group family '" + family + "'");
  }();
  return g.renamed(spec);
}

} // anonymous namespace

std::string normalize_spec(std::string const &spec)
{
  std::string lower;
  for (char c : spec)
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  // drop whitespace, keeping one space between two digits (cycle points)
  std::string out;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(lower[i]))) {
      out += lower[i];
      continue;
    }
    std::size_t j = i;
    while (j < lower.size() && std::isspace(static_cast<unsigned char>(lower[j])))
      ++j;
    if (!out.empty() && std::isdigit(static_cast<unsigned char>(out.back())) &&
        j < lower.size() && std::isdigit(static_cast<unsigned char>(lower[j])))
      out += ' ';
    i = j - 1;
  }
  return out;
}

std::vector<Word> parse_relators(std::string const &text, std::size_t ngens)
{
  std::vector<Word> rels;
  std::string norm = normalize_spec(text);
  if (norm.empty())
    return rels;
  for (auto const &r : split_top(norm, ','))
    rels.push_back(WordParser(r, ngens).parse());
  return rels;
}

FiniteGroup parse_group(std::string const &spec, EnumerationLimits const &limits)
{
  return parse_normalized(normalize_spec(spec), limits);
}

} // namespace tsq
