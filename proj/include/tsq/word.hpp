#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tsq
{

/// A freely reduced word over abstract generators.
///
/// Letters are signed and 1-based: letter `+k` is generator `k-1` and `-k`
/// is its inverse, so generator 0 is written `+1`. Construction reduces the
/// word, so no letter is ever followed by its inverse.
class Word
{
public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  /// Word for a single generator (0-based index), optionally inverted.
  static Word generator(std::size_t gen, bool inverse = false);

  std::vector<int> const &letters() const { return _letters; }
  std::size_t size() const { return _letters.size(); }
  bool empty() const { return _letters.empty(); }

  Word inverse() const;
  Word pow(int n) const;
  Word operator*(Word const &other) const;
  Word conjugate(Word const &by) const;       // by^-1 * this * by
  static Word commutator(Word const &x, Word const &y); // x^-1 y^-1 x y

  /// Largest generator index referenced plus one.
  std::size_t max_generator() const;

  /// Renders with generators named a, b, c, ... (or g<k> beyond z).
  std::string str() const;

  bool operator==(Word const &other) const = default;
  auto operator<=>(Word const &other) const = default;

private:
  void reduce();

  std::vector<int> _letters;
};

/// Column index of a letter in a coset table: generator k uses column 2k,
/// its inverse 2k+1.
inline std::size_t letter_column(int letter)
{
  return letter > 0 ? 2u * static_cast<std::size_t>(letter - 1)
                    : 2u * static_cast<std::size_t>(-letter - 1) + 1u;
}

class Presentation
{
public:
  Presentation() = default;
  Presentation(std::size_t ngens, std::vector<Word> relators);

  std::size_t ngens() const { return _ngens; }
  std::vector<Word> const &relators() const { return _relators; }

  std::string str() const;

private:
  std::size_t _ngens = 0;
  std::vector<Word> _relators;
};

} // namespace tsq
