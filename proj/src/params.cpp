#include "qpade/params.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qpade/error.hpp"
#include "qpade/qspecial.hpp"

namespace qpade {

std::string_view surface_name(Surface s) {
  switch (s) {
    case Surface::E6: return "e6";
    case Surface::D5: return "d5";
    case Surface::A4: return "a4";
    case Surface::A21: return "a21";
  }
  return "?";
}

Surface parse_surface(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Surface s : kAllSurfaces) {
    if (surface_name(s) == lower) return s;
  }
  throw Error(ErrorKind::InvalidInput, "unknown surface '" + std::string(name) + "' (expected e6|d5|a4|a21)");
}

Arity arity(Surface s) {
  switch (s) {
    case Surface::E6: return {3, 3};
    case Surface::D5: return {2, 2};
    case Surface::A4: return {2, 1};
    case Surface::A21: return {2, 0};
  }
  return {0, 0};
}

GeneratingParams GeneratingParams::with_a_scaled(std::size_t i, const Rational& c) const {
  GeneratingParams g = *this;
  g.a.at(i) *= c;
  return g;
}

GeneratingParams GeneratingParams::with_b_scaled(std::size_t i, const Rational& c) const {
  GeneratingParams g = *this;
  g.b.at(i) *= c;
  return g;
}

GeneratingParams GeneratingParams::shifted() const {
  GeneratingParams g = with_a_scaled(0, q);
  if (!g.b.empty()) g.b[0] *= q;
  return g;
}

GeneratingParams GeneratingParams::unshifted() const {
  const Rational qi = q.inverse();
  GeneratingParams g = with_a_scaled(0, qi);
  if (!g.b.empty()) g.b[0] *= qi;
  return g;
}

namespace {

Rational product(const std::vector<Rational>& v) {
  Rational p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

void complete_e6(Surface s, const Rational& a0, const Rational& b0, const std::vector<Rational>& a,
                 std::vector<Rational>& b) {
  if (s != Surface::E6 || b.size() != 2 || a.size() != 3) return;
  // a0 a1 a2 a3 = b0 b1 b2 b3
  b.push_back(a0 * product(a) / (b0 * b[0] * b[1]));
}

}  // namespace

void ParamSet::check_shape() const {
  const auto ar = arity(gen_.surface);
  if (static_cast<int>(gen_.a.size()) != ar.a || static_cast<int>(gen_.b.size()) != ar.b) {
    std::ostringstream os;
    os << "surface " << surface_name(gen_.surface) << " needs " << ar.a << " a-parameters and " << ar.b
       << " b-parameters, got " << gen_.a.size() << " and " << gen_.b.size();
    throw Error(ErrorKind::InvalidInput, os.str());
  }
  if (m_ && (*m_ < 0 || *n_ < 0)) throw Error(ErrorKind::InvalidInput, "m and n must be non-negative");
  if (gen_.surface == Surface::E6 && a0_ * product(gen_.a) != b0_ * product(gen_.b)) {
    throw Error(ErrorKind::InvalidInput, "E6 constraint a0*a1*a2*a3 = b0*b1*b2*b3 violated");
  }
}

ParamSet ParamSet::with_degrees(Surface s, Rational q, std::vector<Rational> a, std::vector<Rational> b, int m,
                                int n) {
  ParamSet p;
  if (m < 0 || n < 0) throw Error(ErrorKind::InvalidInput, "m and n must be non-negative");
  p.a0_ = q.pow(m);
  p.b0_ = q.pow(n);
  complete_e6(s, p.a0_, p.b0_, a, b);
  p.gen_ = GeneratingParams{s, std::move(q), std::move(a), std::move(b)};
  p.m_ = m;
  p.n_ = n;
  p.check_shape();
  return p;
}

ParamSet ParamSet::with_free_a0b0(Surface s, Rational q, Rational a0, Rational b0, std::vector<Rational> a,
                                  std::vector<Rational> b) {
  ParamSet p;
  p.a0_ = std::move(a0);
  p.b0_ = std::move(b0);
  complete_e6(s, p.a0_, p.b0_, a, b);
  p.gen_ = GeneratingParams{s, std::move(q), std::move(a), std::move(b)};
  p.check_shape();
  return p;
}

ParamSet ParamSet::shifted() const {
  ParamSet p = *this;
  p.gen_ = gen_.shifted();
  return p;
}

ParamSet ParamSet::unshifted() const {
  ParamSet p = *this;
  p.gen_ = gen_.unshifted();
  return p;
}

ParamSet ParamSet::as_free() const {
  ParamSet p = *this;
  p.m_.reset();
  p.n_.reset();
  return p;
}

std::optional<std::string> ParamSet::genericity_violation(int depth) const {
  const Rational& q = gen_.q;
  if (q.is_zero() || q == Rational(1) || q == Rational(-1)) return "q must not be 0, 1 or -1 (q = " + q.str() + ")";
  if (a0_.is_zero() || b0_.is_zero()) return std::string("a0 and b0 must be nonzero");
  std::vector<std::pair<std::string, Rational>> named;
  for (std::size_t i = 0; i < gen_.a.size(); ++i) named.emplace_back("a" + std::to_string(i + 1), gen_.a[i]);
  for (std::size_t i = 0; i < gen_.b.size(); ++i) named.emplace_back("b" + std::to_string(i + 1), gen_.b[i]);
  for (const auto& [name, v] : named) {
    if (v.is_zero()) return name + " must be nonzero";
  }
  for (int s = 1; s <= depth; ++s) {
    if (qpoch(q, q, s).is_zero()) return "(q;q)_" + std::to_string(s) + " vanishes";
  }
  std::vector<Rational> powers;
  for (int t = -depth; t <= depth; ++t) powers.push_back(q.pow(t));
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      const Rational r = named[i].second / named[j].second;
      for (int t = -depth; t <= depth; ++t) {
        if (r == powers[t + depth]) {
          return named[i].first + "/" + named[j].first + " = q^" + std::to_string(t) + " (non-generic)";
        }
      }
    }
  }
  if (m_ && (a0_ != q.pow(*m_) || b0_ != q.pow(*n_))) return std::string("a0, b0 must equal q^m, q^n");
  if (gen_.surface == Surface::E6 && a0_ * product(gen_.a) != b0_ * product(gen_.b)) {
    return std::string("E6 constraint a0*a1*a2*a3 = b0*b1*b2*b3 violated");
  }
  return std::nullopt;
}

void ParamSet::validate(int depth) const {
  if (auto why = genericity_violation(depth)) throw Error(ErrorKind::DegenerateParameters, *why);
}

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s;
}

std::vector<Rational> split_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  if (blank) return out;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ParamSet from_fields(const std::map<std::string, std::string>& kv) {
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::InvalidInput, "missing parameter field '" + key + "'");
    return it->second;
  };
  const Surface s = parse_surface(get("surface"));
  const Rational q = Rational::parse(get("q"));
  auto a = split_list(get("a"));
  auto b = kv.count("b") ? split_list(kv.at("b")) : std::vector<Rational>{};
  const bool has_m = kv.count("m") > 0;
  if (has_m != (kv.count("n") > 0)) throw Error(ErrorKind::InvalidInput, "m and n must be given together");
  if (has_m) {
    const int m = std::stoi(kv.at("m"));
    const int n = std::stoi(kv.at("n"));
    ParamSet p = ParamSet::with_degrees(s, q, std::move(a), std::move(b), m, n);
    if (kv.count("a0") && Rational::parse(kv.at("a0")) != p.a0()) {
      throw Error(ErrorKind::InvalidInput, "a0 inconsistent with q^m");
    }
    if (kv.count("b0") && Rational::parse(kv.at("b0")) != p.b0()) {
      throw Error(ErrorKind::InvalidInput, "b0 inconsistent with q^n");
    }
    return p;
  }
  return ParamSet::with_free_a0b0(s, q, Rational::parse(get("a0")), Rational::parse(get("b0")), std::move(a),
                                  std::move(b));
}

}  // namespace

std::string ParamSet::serialize() const {
  std::ostringstream os;
  os << "surface = " << surface_name(gen_.surface) << "\n";
  os << "q = " << gen_.q << "\n";
  os << "a = " << join(gen_.a) << "\n";
  os << "b = " << join(gen_.b) << "\n";
  if (m_) os << "m = " << *m_ << "\n" << "n = " << *n_ << "\n";
  os << "a0 = " << a0_ << "\n";
  os << "b0 = " << b0_ << "\n";
  return os.str();
}

ParamSet ParamSet::parse(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidInput, "expected 'key = value', got '" + std::string(line) + "'");
    }
    kv[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return from_fields(kv);
}

std::string ParamSet::inline_str() const {
  auto list = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
  };
  std::ostringstream os;
  os << "surface=" << surface_name(gen_.surface) << ";q=" << gen_.q << ";a=" << list(gen_.a)
     << ";b=" << list(gen_.b);
  if (m_) os << ";m=" << *m_ << ";n=" << *n_;
  os << ";a0=" << a0_ << ";b0=" << b0_;
  return os.str();
}

ParamSet ParamSet::parse_inline(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    auto field = trim(text.substr(start, semi - start));
    start = semi + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidInput, "malformed field '" + std::string(field) + "'");
    kv[std::string(trim(field.substr(0, eq)))] = std::string(trim(field.substr(eq + 1)));
  }
  return from_fields(kv);
}

// ---- sampling ---------------------------------------------------------------

std::uint64_t ParamSampler::next_in(std::uint64_t lo, std::uint64_t hi) {
  // Modulo mapping of mt19937_64 output: identical on every standard library.
  return lo + rng_() % (hi - lo + 1);
}

Rational ParamSampler::draw() {
  while (true) {
    const auto p = static_cast<long>(next_in(2, 97));
    const auto r = static_cast<long>(next_in(2, 97));
    if (std::gcd(p, r) == 1) return Rational(p, r);
  }
}

ParamSet ParamSampler::draw_params(Surface s, int m, int n, int depth) {
  const auto ar = arity(s);
  while (true) {
    Rational q = draw();
    std::vector<Rational> a, b;
    for (int i = 0; i < ar.a; ++i) a.push_back(draw());
    for (int i = 0; i < (s == Surface::E6 ? 2 : ar.b); ++i) b.push_back(draw());
    auto p = ParamSet::with_degrees(s, q, std::move(a), std::move(b), m, n);
    if (!p.genericity_violation(depth)) return p;
  }
}

ParamSet ParamSampler::draw_free_params(Surface s, int depth) {
  const auto ar = arity(s);
  while (true) {
    Rational q = draw();
    Rational a0 = draw();
    Rational b0 = draw();
    std::vector<Rational> a, b;
    for (int i = 0; i < ar.a; ++i) a.push_back(draw());
    for (int i = 0; i < (s == Surface::E6 ? 2 : ar.b); ++i) b.push_back(draw());
    auto p = ParamSet::with_free_a0b0(s, q, a0, b0, std::move(a), std::move(b));
    if (!p.genericity_violation(depth)) return p;
  }
}

}  // namespace qpade
