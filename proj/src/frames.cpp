#include "lal/frames.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lal {

namespace {

void add_term(std::map<long, long>& m, long n, long e) {
  if (n <= 0) throw std::domain_error("nonpositive cycle length in shape");
  long v = (m[n] += e);
  if (v == 0) m.erase(n);
}

std::map<long, long> parse_side(const std::string& s) {
  std::map<long, long> m;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    long n, e = 1;
    auto caret = tok.find('^');
    try {
      n = std::stol(tok.substr(0, caret));
      if (caret != std::string::npos) e = std::stol(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::domain_error("bad shape token: " + tok);
    }
    add_term(m, n, e);
  }
  return m;
}

}  // namespace

FrameShape FrameShape::parse(const std::string& s) {
  auto slash = s.find('/');
  FrameShape f;
  f.m = parse_side(s.substr(0, slash));
  if (slash != std::string::npos)
    for (const auto& [n, e] : parse_side(s.substr(slash + 1)))
      add_term(f.m, n, -e);
  if (f.m.empty()) throw std::domain_error("empty frame shape");
  return f;
}

std::string FrameShape::str() const {
  std::string num, den;
  for (const auto& [n, e] : m) {
    std::string& side = e > 0 ? num : den;
    if (!side.empty()) side += " ";
    side += std::to_string(n) + "^" + std::to_string(e > 0 ? e : -e);
  }
  return den.empty() ? num : num + " / " + den;
}

long CycloMultiset::order() const {
  long o = 1;
  for (const auto& [d, mult] : a)
    if (mult > 0) o = std::lcm(o, d);
  return o;
}

CycloMultiset to_cyclotomic(const FrameShape& f) {
  long degree = 0;
  CycloMultiset c;
  for (const auto& [n, e] : f.m) {
    degree += n * e;
    for (long d : divisors(n)) c.a[d] += e;
  }
  if (degree != 24)
    throw std::domain_error("frame shape degree is not 24");
  for (auto it = c.a.begin(); it != c.a.end();) {
    if (it->second < 0)
      throw std::domain_error("shape is not a polynomial: negative multiplicity at " +
                              std::to_string(it->first));
    it = it->second == 0 ? c.a.erase(it) : std::next(it);
  }
  return c;
}

FrameShape from_cyclotomic(const CycloMultiset& c) {
  long degree = 0, top = 1;
  for (const auto& [d, mult] : c.a) {
    if (mult < 0) throw std::domain_error("negative cyclotomic multiplicity");
    degree += euler_phi(d) * mult;
    top = std::lcm(top, d);
  }
  if (degree != 24)
    throw std::domain_error("cyclotomic degree is not 24");
  FrameShape f;
  for (long n : divisors(top)) {
    long mn = 0;
    for (const auto& [d, mult] : c.a)
      if (d % n == 0) mn += moebius(d / n) * mult;
    if (mn != 0) f.m[n] = mn;
  }
  return f;
}

long fixed_dim(const FrameShape& f) {
  long s = 0;
  for (const auto& [n, e] : f.m) s += e;
  return s;
}

long trace(const FrameShape& f) {
  auto it = f.m.find(1);
  return it == f.m.end() ? 0 : it->second;
}

long eig_mult(const FrameShape& f, long r) {
  if (r <= 0) throw std::domain_error("eigenvalue order must be positive");
  long s = 0;
  for (const auto& [n, e] : f.m)
    if (n % r == 0) s += e;
  return s;
}

long shape_order(const FrameShape& f) { return to_cyclotomic(f).order(); }

FrameShape power(const FrameShape& f, long k) {
  if (k < 1) throw std::domain_error("power exponent must be >= 1");
  CycloMultiset c = to_cyclotomic(f), p;
  for (const auto& [d, mult] : c.a) {
    long dp = d / std::gcd(d, k);
    // Φ_d(x^?) splitting: each primitive d-th root maps to a primitive
    // dp-th root, φ(d)/φ(dp) to one
    p.a[dp] += mult * (euler_phi(d) / euler_phi(dp));
  }
  return from_cyclotomic(p);
}

namespace {

const char* const kTable[][3] = {
    {"1A", "1^24", "24"},
    {"2A", "1^8 2^8", "16"},
    {"-2A", "2^16 / 1^8", "8"},
    {"2C", "2^12", "12"},
    {"3B", "1^6 3^6", "12"},
    {"3C", "3^9 / 1^3", "6"},
    {"3D", "3^8", "8"},
    {"-4A", "1^8 4^8 / 2^8", "8"},
    {"4B", "4^8 / 2^4", "4"},
    {"4C", "1^4 2^2 4^4", "10"},
    {"-4C", "2^6 4^4 / 1^4", "6"},
    {"4D", "2^4 4^4", "8"},
    {"4F", "4^6", "6"},
    {"5B", "1^4 5^4", "8"},
    {"5C", "5^5 / 1^1", "4"},
    {"6C", "1^4 2^1 6^5 / 3^4", "6"},
    {"-6C", "2^5 3^4 6^1 / 1^4", "6"},
    {"-6D", "1^5 3^1 6^4 / 2^4", "6"},
    {"6E", "1^2 2^2 3^2 6^2", "8"},
    {"-6E", "2^4 6^4 / 1^2 3^2", "4"},
    {"6F", "3^3 6^3 / 1^1 2^1", "4"},
    {"-6F", "1^1 6^6 / 2^2 3^3", "2"},
    {"6G", "2^3 6^3", "6"},
    {"6I", "6^4", "4"},
    {"7B", "1^3 7^3", "6"},
    {"8B", "2^4 8^4 / 4^4", "4"},
    {"-8C", "1^4 8^4 / 2^2 4^2", "4"},
    {"8D", "8^4 / 4^2", "2"},
    {"8E", "1^2 2^1 4^1 8^2", "6"},
    {"-8E", "2^3 4^1 8^2 / 1^2", "4"},
    {"8F", "4^2 8^2", "4"},
    {"9B", "9^3 / 3^1", "2"},
    {"9C", "1^3 9^3 / 3^2", "4"},
    {"10D", "1^2 2^1 10^3 / 5^2", "4"},
    {"-10D", "2^3 5^2 10^1 / 1^2", "4"},
    {"-10E", "1^3 5^1 10^2 / 2^2", "4"},
    {"10F", "2^2 10^2", "4"},
    {"11A", "1^2 11^2", "4"},
    {"-12D", "2^1 3^3 12^3 / 1^1 4^1 6^3", "2"},
    {"-12E", "1^2 3^2 4^2 12^2 / 2^2 6^2", "4"},
    {"12G", "4^2 12^2 / 2^1 6^1", "2"},
    {"12H", "2^3 6^1 12^2 / 1^1 3^1 4^2", "2"},
    {"-12H", "1^1 2^2 3^1 12^2 / 4^2", "4"},
    {"12I", "1^2 4^1 6^2 12^1 / 3^2", "4"},
    {"-12I", "2^2 3^2 4^1 12^1 / 1^2", "4"},
    {"12J", "2^1 4^1 6^1 12^1", "4"},
    {"-12K", "1^3 12^3 / 2^1 3^1 4^1 6^1", "2"},
    {"12M", "12^2", "2"},
    {"14B", "1^1 2^1 7^1 14^1", "4"},
    {"-14B", "2^2 14^2 / 1^1 7^1", "2"},
    {"15D", "1^1 3^1 5^1 15^1", "4"},
    {"15E", "1^2 15^2 / 3^1 5^1", "2"},
    {"16A", "2^2 16^2 / 4^1 8^1", "2"},
    {"-16B", "1^2 16^2 / 2^1 8^1", "2"},
    {"-18B", "1^2 9^1 18^1 / 2^1 3^1", "2"},
    {"18C", "1^1 2^1 18^2 / 6^1 9^1", "2"},
    {"-18C", "2^2 9^1 18^1 / 1^1 6^1", "2"},
    {"20B", "4^1 20^1", "2"},
    {"20C", "1^1 2^1 10^1 20^1 / 4^1 5^1", "2"},
    {"-20C", "2^2 5^1 20^1 / 1^1 4^1", "2"},
    {"21C", "3^1 21^1", "2"},
    {"22A", "2^1 22^1", "2"},
    {"23A", "1^1 23^1", "2"},
    {"23B", "1^1 23^1", "2"},
    {"24E", "2^1 6^1 8^1 24^1 / 4^1 12^1", "2"},
    {"24F", "1^1 4^1 6^1 24^1 / 3^1 8^1", "2"},
    {"-24F", "2^1 3^1 4^1 24^1 / 1^1 8^1", "2"},
    {"-28A", "1^1 4^1 7^1 28^1 / 2^1 14^1", "2"},
    {"30D", "1^1 6^1 10^1 15^1 / 3^1 5^1", "2"},
    {"-30E", "2^1 3^1 5^1 30^1 / 6^1 10^1", "2"},
    {"-30D", "2^1 3^1 5^1 30^1 / 1^1 15^1", "2"},
};

long name_order(const std::string& name) {
  std::size_t i = name[0] == '-' ? 1 : 0, j = i;
  while (j < name.size() && std::isdigit(name[j])) ++j;
  return std::stol(name.substr(i, j - i));
}

std::vector<ClassRow> load_table() {
  std::vector<ClassRow> rows;
  for (const auto& [name, shape, fixed] : kTable) {
    ClassRow row{name, FrameShape::parse(shape), std::stol(fixed)};
    CycloMultiset c = to_cyclotomic(row.shape);  // degree + positivity checks
    if (fixed_dim(row.shape) != row.fixed)
      throw std::logic_error("fixed-dim column mismatch at " + row.name);
    long o = name_order(row.name);
    if (c.order() != o)
      throw std::logic_error("order mismatch at " + row.name);
    // the cycle type contains the full order as a cycle, one known exception
    auto it = row.shape.m.find(o);
    if (row.name != "30D" && (it == row.shape.m.end() || it->second <= 0))
      throw std::logic_error("missing top cycle at " + row.name);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const std::vector<ClassRow>& class_table() {
  static const std::vector<ClassRow> rows = load_table();
  return rows;
}

const ClassRow& class_by_name(const std::string& name) {
  for (const auto& row : class_table())
    if (row.name == name) return row;
  throw std::domain_error("unknown class: " + name);
}

std::vector<std::string> classify_shape(const FrameShape& f) {
  std::vector<std::string> out;
  for (const auto& row : class_table())
    if (row.shape == f) out.push_back(row.name);
  if (out.empty()) throw std::domain_error("shape not in the class table: " + f.str());
  return out;
}

}  // namespace lal
