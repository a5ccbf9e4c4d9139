#ifndef SLEECC_ATOM_HPP
#define SLEECC_ATOM_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sleecc {

// True iff `s` matches [a-z][A-Za-z0-9_]*.
inline bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// A propositional variable. Ground predicate atoms such as a(user,curtains)
// are one opaque variable: the arguments take part in identity only.
class Atom {
public:
  explicit Atom(std::string name, std::vector<std::string> args = {})
      : name_(std::move(name)), args_(std::move(args)) {
    if (!is_identifier(name_)) throw std::invalid_argument("invalid atom name '" + name_ + "'");
    for (const auto& a : args_)
      if (!is_identifier(a)) throw std::invalid_argument("invalid atom argument '" + a + "'");
  }

  // The atom q behind the tautology q or not q. It cannot be written in
  // source text and is never reported in models.
  static const Atom& reserved_true() {
    static const Atom atom{Reserved{}, "__true"};
    return atom;
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }
  bool is_reserved() const noexcept { return name_.front() == '_'; }

  std::string to_string() const {
    if (args_.empty()) return name_;
    std::string out = name_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i) out += ',';
      out += args_[i];
    }
    return out + ")";
  }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return a.args_ <=> b.args_;
  }

private:
  struct Reserved {};
  Atom(Reserved, std::string name) : name_(std::move(name)) {}

  std::string name_;
  std::vector<std::string> args_;
};

} // namespace sleecc

#endif // SLEECC_ATOM_HPP
