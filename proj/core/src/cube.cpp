#include "cubeprop/cube.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "cubeprop/error.hpp"

namespace cubeprop {

CubeMor::CubeMor(std::size_t dom, std::vector<Term> coords)
    : dom_(dom), coords_(std::move(coords)) {
  for (const Term& t : coords_) {
    if (t.is_var() && t.var_index() >= dom_) {
      throw CompositionError("variable v" + std::to_string(t.var_index()) +
                             " out of range for domain [" + std::to_string(dom_) + "]");
    }
  }
}

CubeMor CubeMor::identity(std::size_t n) {
  std::vector<Term> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(Term::var(static_cast<std::uint32_t>(i)));
  return CubeMor(n, std::move(coords));
}

CubeMor CubeMor::bang(std::size_t m) { return CubeMor(m, {}); }

CubeMor CubeMor::point(const std::vector<bool>& coords) {
  std::vector<Term> terms;
  terms.reserve(coords.size());
  for (bool b : coords) terms.push_back(Term::constant(b));
  return CubeMor(0, std::move(terms));
}

bool CubeMor::is_identity() const {
  if (dom_ != coords_.size()) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != Term::var(static_cast<std::uint32_t>(i))) return false;
  }
  return true;
}

std::string CubeMor::to_string() const {
  std::string out = std::to_string(dom_) + "->" + std::to_string(cod()) + ":[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    const Term& t = coords_[i];
    if (t.is_const()) {
      out += t.const_value() ? "c1" : "c0";
    } else {
      out += 'v';
      out += std::to_string(t.var_index());
    }
  }
  out += ']';
  return out;
}

namespace {

std::size_t parse_natural(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad number '" + std::string(text) + "' in morphism '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

CubeMor CubeMor::parse(std::string_view text) {
  const auto arrow = text.find("->");
  const auto colon = text.find(':');
  if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow ||
      text.size() < colon + 3 || text[colon + 1] != '[' || text.back() != ']') {
    throw ParseError("malformed morphism '" + std::string(text) + "', expected m->n:[...]");
  }
  const std::size_t dom = parse_natural(text.substr(0, arrow), text);
  const std::size_t cod = parse_natural(text.substr(arrow + 2, colon - arrow - 2), text);
  std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
  std::vector<Term> coords;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    if (item == "c0") {
      coords.push_back(Term::zero());
    } else if (item == "c1") {
      coords.push_back(Term::one());
    } else if (item.size() >= 2 && item[0] == 'v') {
      coords.push_back(Term::var(static_cast<std::uint32_t>(parse_natural(item.substr(1), text))));
    } else {
      throw ParseError("bad term '" + std::string(item) + "' in morphism '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in morphism '" + std::string(text) + "'");
  }
  if (coords.size() != cod) {
    throw ParseError("morphism '" + std::string(text) + "' declares codomain " + std::to_string(cod) +
                     " but has " + std::to_string(coords.size()) + " coordinates");
  }
  try {
    return CubeMor(dom, std::move(coords));
  } catch (const CompositionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

CubeMor compose(const CubeMor& g, const CubeMor& f) {
  if (f.cod() != g.dom()) {
    throw CompositionError("cannot compose " + g.to_string() + " after " + f.to_string());
  }
  std::vector<Term> coords;
  coords.reserve(g.cod());
  for (const Term& t : g.coords()) {
    coords.push_back(t.is_const() ? t : f.coord(t.var_index()));
  }
  return CubeMor(f.dom(), std::move(coords));
}

std::size_t hom_count(std::size_t m, std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= m + 2;
  return count;
}

std::size_t hom_rank(const CubeMor& s) {
  const std::size_t base = s.dom() + 2;
  std::size_t rank = 0;
  for (const Term& t : s.coords()) rank = rank * base + t.code();
  return rank;
}

CubeMor hom_unrank(std::size_t m, std::size_t n, std::size_t rank) {
  const std::size_t base = m + 2;
  std::vector<Term> coords(n, Term::zero());
  for (std::size_t i = n; i-- > 0;) {
    coords[i] = Term::from_code(static_cast<std::uint32_t>(rank % base));
    rank /= base;
  }
  return CubeMor(m, std::move(coords));
}

std::vector<CubeMor> enum_homs(std::size_t m, std::size_t n) {
  const std::size_t count = hom_count(m, n);
  std::vector<CubeMor> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back(hom_unrank(m, n, r));
  return out;
}

std::vector<CubeMor> points(std::size_t n) { return enum_homs(0, n); }

CubeMor times_interval(const CubeMor& s) {
  std::vector<Term> coords = s.coords();
  coords.push_back(Term::var(static_cast<std::uint32_t>(s.dom())));
  return CubeMor(s.dom() + 1, std::move(coords));
}

CubeMor end_face(std::size_t n, bool end) {
  std::vector<Term> coords = CubeMor::identity(n).coords();
  coords.push_back(Term::constant(end));
  return CubeMor(n, std::move(coords));
}

CubeMor drop_last(std::size_t n) {
  return CubeMor(n + 1, CubeMor::identity(n).coords());
}

SiteIndex::SiteIndex(std::size_t trunc)
    : trunc_(trunc),
      offset_((trunc + 1) * (trunc + 1)),
      into_(trunc + 1),
      between_((trunc + 1) * (trunc + 1)) {
  for (std::size_t m = 0; m <= trunc; ++m) {
    for (std::size_t n = 0; n <= trunc; ++n) {
      offset_[m * (trunc + 1) + n] = total_;
      for (CubeMor& s : enum_homs(m, n)) {
        into_[n].push_back(total_);
        between_[m * (trunc + 1) + n].push_back(total_);
        mors_.push_back(std::move(s));
        ++total_;
      }
    }
  }
}

std::size_t SiteIndex::id(const CubeMor& s) const {
  if (s.dom() > trunc_ || s.cod() > trunc_) {
    throw CompositionError("morphism " + s.to_string() + " outside truncation " + std::to_string(trunc_));
  }
  return id(s.dom(), s.cod(), hom_rank(s));
}

const SiteIndex& site(std::size_t trunc) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<SiteIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[trunc];
  if (!slot) slot = std::make_unique<SiteIndex>(trunc);
  return *slot;
}

}  // namespace cubeprop
