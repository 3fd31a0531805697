#include "jordan/descriptor.hpp"

#include <cctype>
#include <charconv>

#include "jordan/errors.hpp"

namespace jordan {

AlgebraDescriptor AlgebraDescriptor::spin(int n) {
  AlgebraDescriptor d;
  d.kind = Kind::Spin;
  d.n = n;
  validate(d);
  return d;
}

AlgebraDescriptor AlgebraDescriptor::matrix(int n, Field field) {
  AlgebraDescriptor d;
  d.kind = Kind::Matrix;
  d.n = n;
  d.field = field;
  validate(d);
  return d;
}

AlgebraDescriptor AlgebraDescriptor::sum(std::vector<AlgebraDescriptor> parts) {
  AlgebraDescriptor d;
  d.kind = Kind::Sum;
  d.summands = std::move(parts);
  validate(d);
  return d;
}

int AlgebraDescriptor::dimension() const {
  switch (kind) {
    case Kind::Spin: return n + 1;
    case Kind::Matrix: return n + static_cast<int>(field_dimension(field)) * n * (n - 1) / 2;
    case Kind::Sum: {
      int total = 0;
      for (const auto& s : summands) total += s.dimension();
      return total;
    }
  }
  return 0;
}

int AlgebraDescriptor::rank() const {
  switch (kind) {
    case Kind::Spin: return 2;
    case Kind::Matrix: return n;
    case Kind::Sum: {
      int total = 0;
      for (const auto& s : summands) total += s.rank();
      return total;
    }
  }
  return 0;
}

bool AlgebraDescriptor::is_simple() const {
  switch (kind) {
    case Kind::Spin: return n >= 2;
    case Kind::Matrix: return true;
    case Kind::Sum: return false;
  }
  return false;
}

bool AlgebraDescriptor::is_real_line() const { return kind == Kind::Matrix && n == 1; }

std::string AlgebraDescriptor::to_string() const {
  switch (kind) {
    case Kind::Spin: return "spin(" + std::to_string(n) + ")";
    case Kind::Matrix: return "H(" + std::to_string(n) + "," + field_tag(field) + ")";
    case Kind::Sum: {
      std::string out = "sum(";
      for (std::size_t k = 0; k < summands.size(); ++k) {
        if (k) out += ",";
        out += summands[k].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

void validate(const AlgebraDescriptor& d) {
  switch (d.kind) {
    case AlgebraDescriptor::Kind::Spin:
      if (d.n < 1) throw UnsupportedStructure("spin(n) requires n >= 1");
      return;
    case AlgebraDescriptor::Kind::Matrix:
      if (d.n < 1) throw UnsupportedStructure("H(n,K) requires n >= 1");
      if (d.field == Field::Octonion && d.n > 3) {
        throw UnsupportedStructure("H(" + std::to_string(d.n) +
                                   ",O) is not a Jordan algebra; octonionic matrices stop at n = 3");
      }
      return;
    case AlgebraDescriptor::Kind::Sum:
      if (d.summands.size() < 2) throw UnsupportedStructure("sum(...) needs at least two summands");
      for (const auto& s : d.summands) validate(s);
      return;
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  AlgebraDescriptor parse_all() {
    AlgebraDescriptor d = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return d;
  }

 private:
  AlgebraDescriptor parse() {
    if (consume("spin(")) {
      int n = parse_int();
      expect(')');
      return AlgebraDescriptor::spin(n);
    }
    if (consume("H(")) {
      int n = parse_int();
      expect(',');
      if (pos_ >= s_.size()) fail("missing division algebra tag");
      Field f = field_from_tag(s_[pos_++]);
      expect(')');
      return AlgebraDescriptor::matrix(n, f);
    }
    if (consume("sum(")) {
      std::vector<AlgebraDescriptor> parts;
      parts.push_back(parse());
      while (consume(",")) parts.push_back(parse());
      expect(')');
      return AlgebraDescriptor::sum(std::move(parts));
    }
    fail("expected spin(...), H(...) or sum(...)");
  }

  bool consume(std::string_view token) {
    if (s_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  int parse_int() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad algebra descriptor '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraDescriptor parse_descriptor(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace jordan
