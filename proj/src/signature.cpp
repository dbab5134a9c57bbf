#include "genus_atlas/signature.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "genus_atlas/errors.hpp"

namespace atlas {

Signature::Signature(int g0, std::vector<int> ms) : orbit_genus(g0), periods(std::move(ms)) {
  if (g0 < 0)
    throw std::invalid_argument("signature: negative orbit genus");
  for (int m : periods)
    if (m < 2)
      throw std::invalid_argument("signature: period below 2");
  std::sort(periods.begin(), periods.end());
}

Rational Signature::area() const {
  Rational a(2 * orbit_genus - 2);
  for (int m : periods)
    a += Rational(m - 1, m);
  return a;
}

std::string Signature::to_string() const {
  std::string s = "(" + std::to_string(orbit_genus) + "; ";
  if (periods.empty())
    return s + "-)";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(periods[i]);
  }
  return s + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer in signature \"" + std::string(whole) + "\"");
  return value;
}

} // namespace

Signature Signature::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 4 || s.front() != '(' || s.back() != ')')
    throw ParseError("signature must look like (g0; m1,...,mr): \"" + std::string(text) + "\"");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("signature lacks ';': \"" + std::string(text) + "\"");
  int g0 = parse_int(s.substr(0, semi), text);
  std::string_view rest = trim(s.substr(semi + 1));
  std::vector<int> periods;
  if (rest != "-") {
    while (true) {
      auto comma = rest.find(',');
      periods.push_back(parse_int(rest.substr(0, comma), text));
      if (comma == std::string_view::npos)
        break;
      rest = rest.substr(comma + 1);
    }
  }
  try {
    return Signature(g0, std::move(periods));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": \"" + std::string(text) + "\"");
  }
}

Rational rh_genus(const Signature& sig, std::uint64_t n) {
  const auto order = static_cast<std::int64_t>(n);
  Rational sum(0);
  for (int m : sig.periods)
    sum += Rational(m - 1, m);
  return Rational(1) + Rational(order) * Rational(sig.orbit_genus - 1) +
         Rational(order, 2) * sum;
}

std::optional<std::uint64_t> order_for(const Signature& sig, int g) {
  Rational area = sig.area();
  if (area <= Rational(0))
    throw std::invalid_argument("order_for: signature " + sig.to_string() + " is not hyperbolic");
  Rational n = Rational(2 * (g - 1)) / area;
  if (!n.is_integer() || n.num() <= 0)
    return std::nullopt;
  return static_cast<std::uint64_t>(n.num());
}

std::vector<LargeOrderRow> large_order_signatures(int /*g*/) {
  return {
      {Signature(0, {2, 3, 7}), Rational(84)},      {Signature(0, {2, 3, 8}), Rational(48)},
      {Signature(0, {2, 4, 5}), Rational(40)},      {Signature(0, {2, 3, 9}), Rational(36)},
      {Signature(0, {2, 3, 10}), Rational(30)},     {Signature(0, {2, 3, 11}), Rational(132, 5)},
      {Signature(0, {2, 3, 12}), Rational(24)},     {Signature(0, {2, 4, 6}), Rational(24)},
      {Signature(0, {3, 3, 4}), Rational(24)},
  };
}

namespace {

// Appends every non-decreasing period tuple drawn from `divisors[start..]`
// whose terms (1 - 1/m) sum to exactly `remaining`.
void extend_periods(const std::vector<int>& divisors, std::size_t start, Rational remaining,
                    std::size_t max_len, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == Rational(0)) {
    out.push_back(current);
    return;
  }
  if (current.size() == max_len)
    return;
  // Every term is below 1.
  if (remaining >= Rational(static_cast<std::int64_t>(max_len - current.size())))
    return;
  for (std::size_t i = start; i < divisors.size(); ++i) {
    const int m = divisors[i];
    Rational term(m - 1, m);
    if (term > remaining)
      break;
    current.push_back(m);
    extend_periods(divisors, i, remaining - term, max_len, current, out);
    current.pop_back();
  }
}

bool is_large_order_signature(const Signature& sig) {
  for (const auto& row : large_order_signatures(2))
    if (row.signature == sig)
      return true;
  return false;
}

} // namespace

std::vector<CandidatePair> candidate_pairs(int g) {
  if (g < 2)
    throw std::invalid_argument("candidate_pairs: genus must be at least 2");
  const std::uint64_t gm1 = static_cast<std::uint64_t>(g - 1);
  std::vector<CandidatePair> pairs;
  for (std::uint64_t n = 2; n <= 84 * gm1; ++n) {
    std::vector<int> divisors;
    for (std::uint64_t d = 2; d <= n; ++d)
      if (n % d == 0)
        divisors.push_back(static_cast<int>(d));
    const auto order = static_cast<std::int64_t>(n);
    const std::uint64_t max_g0 = gm1 / n + 1;
    for (std::uint64_t g0 = 0; g0 <= max_g0; ++g0) {
      if (g0 > 0 && n > 4 * gm1)
        break;
      // sum (1 - 1/m_i) must equal 2(g-1)/n + 2 - 2 g0.
      Rational target = Rational(2 * static_cast<std::int64_t>(gm1), order) + Rational(2) -
                        Rational(2 * static_cast<std::int64_t>(g0));
      if (target < Rational(0))
        continue;
      // Each term is at least 1/2, so r <= 4(g-1)/n + 4 - 4 g0.
      Rational r_bound = Rational(2) * target;
      const auto max_r = static_cast<std::size_t>(r_bound.num() / r_bound.den());
      std::vector<std::vector<int>> tuples;
      std::vector<int> current;
      extend_periods(divisors, 0, target, max_r, current, tuples);
      for (auto& periods : tuples) {
        const std::size_t r = periods.size();
        if (r >= 5 && n > 4 * gm1)
          continue;
        if (r == 4 && n > 12 * gm1)
          continue;
        Signature sig(static_cast<int>(g0), std::move(periods));
        if (n >= 24 * gm1 && !(sig.orbit_genus == 0 && is_large_order_signature(sig)))
          continue;
        pairs.push_back({n, std::move(sig), g});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const CandidatePair& a, const CandidatePair& b) {
    if (a.order != b.order)
      return a.order < b.order;
    if (a.signature.orbit_genus != b.signature.orbit_genus)
      return a.signature.orbit_genus < b.signature.orbit_genus;
    if (a.signature.r() != b.signature.r())
      return a.signature.r() < b.signature.r();
    return a.signature.periods < b.signature.periods;
  });
  return pairs;
}

std::vector<Signature> euclidean_signatures() {
  return {Signature(1, {}), Signature(0, {2, 2, 2, 2}), Signature(0, {3, 3, 3}),
          Signature(0, {2, 4, 4}), Signature(0, {2, 3, 6})};
}

} // namespace atlas
