#include "tsq/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "tsq/error.hpp"

namespace tsq
{

Word::Word(std::initializer_list<int> letters)
: _letters(letters)
{
  reduce();
}

Word::Word(std::vector<int> letters)
: _letters(std::move(letters))
{
  reduce();
}

Word Word::generator(std::size_t gen, bool inverse)
{
  int letter = static_cast<int>(gen) + 1;
  return Word{inverse ? -letter : letter};
}

void Word::reduce()
{
  std::vector<int> out;
  out.reserve(_letters.size());
  for (int l : _letters) {
    if (l == 0)
      throw Error(ErrorKind::InvalidArgument, "word letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  _letters = std::move(out);
}

Word Word::inverse() const
{
  std::vector<int> out(_letters.rbegin(), _letters.rend());
  for (int &l : out)
    l = -l;
  return Word(std::move(out));
}

Word Word::pow(int n) const
{
  Word base = n < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int i = 0; i < std::abs(n); ++i)
    out.insert(out.end(), base._letters.begin(), base._letters.end());
  return Word(std::move(out));
}

Word Word::operator*(Word const &other) const
{
  std::vector<int> out(_letters);
  out.insert(out.end(), other._letters.begin(), other._letters.end());
  return Word(std::move(out));
}

Word Word::conjugate(Word const &by) const
{
  return by.inverse() * *this * by;
}

Word Word::commutator(Word const &x, Word const &y)
{
  return x.inverse() * y.inverse() * x * y;
}

std::size_t Word::max_generator() const
{
  std::size_t m = 0;
  for (int l : _letters)
    m = std::max(m, static_cast<std::size_t>(std::abs(l)));
  return m;
}

std::string Word::str() const
{
  if (_letters.empty())
    return "1";

  auto name = [](int l) {
    int g = std::abs(l) - 1;
    return g < 26 ? std::string(1, static_cast<char>('a' + g))
                  : "g" + std::to_string(g);
  };

  std::string out;
  std::size_t i = 0;
  while (i < _letters.size()) {
    std::size_t j = i;
    while (j < _letters.size() && _letters[j] == _letters[i])
      ++j;
    if (!out.empty())
      out += '*';
    out += name(_letters[i]);
    int exp = static_cast<int>(j - i) * (_letters[i] < 0 ? -1 : 1);
    if (exp != 1)
      out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

Presentation::Presentation(std::size_t ngens, std::vector<Word> relators)
: _ngens(ngens)
{
  for (auto &r : relators) {
    if (r.max_generator() > ngens)
      throw Error(ErrorKind::InvalidArgument,
                  "relator " + r.str() + " uses a generator out of range");
    // Empty relators after free reduction carry no information.
    if (!r.empty())
      _relators.push_back(std::move(r));
  }
}

std::string Presentation::str() const
{
  std::string out = "<" + std::to_string(_ngens) + " | ";
  for (std::size_t i = 0; i < _relators.size(); ++i) {
    if (i)
      out += ", ";
    out += _relators[i].str();
  }
  return out + ">";
}

} // namespace tsq
