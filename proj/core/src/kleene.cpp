#include "cubeprop/kleene.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <sstream>

#include "cubeprop/error.hpp"

namespace cubeprop {

namespace {

using Bits = std::vector<unsigned char>;

void put_gamma(Bits& out, std::uint64_t w) {
  int width = 0;
  for (std::uint64_t v = w; v > 1; v >>= 1) ++width;
  out.insert(out.end(), static_cast<std::size_t>(width), 0);
  for (int i = width; i >= 0; --i) out.push_back(static_cast<unsigned char>((w >> i) & 1U));
}

class BitReader {
 public:
  explicit BitReader(const Bits& bits) : bits_(bits) {}

  std::optional<std::uint64_t> gamma() {
    int width = 0;
    while (pos_ < bits_.size() && bits_[pos_] == 0) {
      ++width;
      ++pos_;
    }
    if (width > 63 || pos_ + static_cast<std::size_t>(width) >= bits_.size()) {
      return std::nullopt;
    }
    std::uint64_t w = 0;
    for (int i = 0; i <= width; ++i) w = (w << 1) | bits_[pos_++];
    return w;
  }

  std::size_t remaining() const { return bits_.size() - pos_; }

 private:
  const Bits& bits_;
  std::size_t pos_ = 1;  // skip the leading sentinel
};

Natural from_bits(const Bits& bits) {
  Natural n;
  boost::multiprecision::import_bits(n, bits.begin(), bits.end(), 1, true);
  return n;
}

std::optional<Bits> to_bits(const Natural& n) {
  if (n <= 0) return std::nullopt;
  Bits bits;
  boost::multiprecision::export_bits(n, std::back_inserter(bits), 1, true);
  return bits;
}

std::uint64_t cantor(std::uint64_t r, std::uint64_t j) { return (r + j) * (r + j + 1) / 2 + j; }

std::pair<std::uint64_t, std::uint64_t> uncantor(std::uint64_t z) {
  std::uint64_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const std::uint64_t j = z - w * (w + 1) / 2;
  return {w - j, j};
}

std::uint64_t word(const Instr& in) {
  switch (in.op) {
    case Instr::Op::Inc: return 3 * in.reg;
    case Instr::Op::Halt: return 2;
    case Instr::Op::Dec: return 3 * cantor(in.reg, in.target) + 1;
  }
  return 2;
}

// Words past this bound would need registers or jump targets far beyond any
// program we can run, so they are treated as invalid.
constexpr std::uint64_t kMaxWord = std::uint64_t{1} << 40;

std::optional<Snapshot> step(const Program& p, const Snapshot& s) {
  if (s.pc >= p.size()) return std::nullopt;
  const Instr& in = p[s.pc];
  Snapshot next = s;
  switch (in.op) {
    case Instr::Op::Halt: return std::nullopt;
    case Instr::Op::Inc:
      next.regs[in.reg] += 1;
      next.pc += 1;
      break;
    case Instr::Op::Dec:
      if (next.regs[in.reg] == 0) {
        next.pc = in.target;
      } else {
        next.regs[in.reg] -= 1;
        next.pc += 1;
      }
      break;
  }
  return next;
}

Snapshot initial(const Program& p, std::uint64_t x) {
  Snapshot s{0, std::vector<std::uint64_t>(register_count(p), 0)};
  s.regs[0] = x;
  return s;
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "' in " + what);
  }
  return v;
}

}  // namespace

Program parse_assembly(std::string_view text) {
  Program out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(words), std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (tok[0] == "inc" && tok.size() == 2) {
      out.push_back(Instr::inc(parse_u64(tok[1], where)));
    } else if (tok[0] == "dec" && tok.size() == 3) {
      out.push_back(Instr::dec(parse_u64(tok[1], where), parse_u64(tok[2], where)));
    } else if (tok[0] == "halt" && tok.size() == 1) {
      out.push_back(Instr::halt());
    } else {
      throw ParseError("unrecognised instruction at " + where + ": '" + line + "'");
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].op == Instr::Op::Dec && out[i].target > out.size()) {
      throw ParseError("jump target " + std::to_string(out[i].target) + " past the end at instruction " +
                       std::to_string(i));
    }
  }
  return out;
}

std::string to_assembly(const Program& p) {
  std::string out;
  for (const Instr& in : p) {
    switch (in.op) {
      case Instr::Op::Inc: out += "inc " + std::to_string(in.reg) + "\n"; break;
      case Instr::Op::Dec: out += "dec " + std::to_string(in.reg) + " " + std::to_string(in.target) + "\n"; break;
      case Instr::Op::Halt: out += "halt\n"; break;
    }
  }
  return out;
}

Program diverging_program() { return {Instr::dec(1, 0)}; }

std::size_t register_count(const Program& p) {
  std::size_t count = 1;
  for (const Instr& in : p) {
    if (in.op != Instr::Op::Halt) count = std::max(count, in.reg + 1);
  }
  return count;
}

Natural encode(const Program& p) {
  Bits bits{1};
  for (const Instr& in : p) {
    if (in.op == Instr::Op::Dec && in.target > p.size()) throw PreconditionError("jump target past the end");
    put_gamma(bits, word(in) + 1);
  }
  return from_bits(bits);
}

std::optional<Program> try_decode(const Natural& e) {
  auto bits = to_bits(e);
  if (!bits) return std::nullopt;
  BitReader reader(*bits);
  Program out;
  while (reader.remaining() > 0) {
    auto w1 = reader.gamma();
    if (!w1) return std::nullopt;
    const std::uint64_t w = *w1 - 1;
    if (w > kMaxWord) return std::nullopt;
    if (w % 3 == 0) {
      out.push_back(Instr::inc(w / 3));
    } else if (w % 3 == 1) {
      auto [r, j] = uncantor(w / 3);
      out.push_back(Instr::dec(r, j));
    } else if (w == 2) {
      out.push_back(Instr::halt());
    } else {
      return std::nullopt;
    }
  }
  for (const Instr& in : out) {
    if (in.op == Instr::Op::Dec && in.target > out.size()) return std::nullopt;
  }
  return out;
}

Program decode(const Natural& e) {
  auto p = try_decode(e);
  return p ? *p : diverging_program();
}

RunResult run(const Program& p, std::uint64_t x, std::uint64_t fuel) {
  Snapshot s = initial(p, x);
  std::uint64_t steps = 0;
  while (true) {
    if (s.pc >= p.size() || p[s.pc].op == Instr::Op::Halt) return {true, s.regs[0], steps};
    if (steps == fuel) return {false, 0, steps};
    s = *step(p, s);
    ++steps;
  }
}

RunResult run(const Natural& e, std::uint64_t x, std::uint64_t fuel) { return run(decode(e), x, fuel); }

std::optional<Trace> execute(const Program& p, std::uint64_t x, std::uint64_t fuel) {
  Trace t{x, 0, register_count(p), {initial(p, x)}, 0};
  while (auto next = step(p, t.snapshots.back())) {
    if (t.steps == fuel) return std::nullopt;
    t.snapshots.push_back(std::move(*next));
    ++t.steps;
  }
  t.output = t.snapshots.back().regs[0];
  return t;
}

Natural encode_trace(const Trace& t) {
  Bits bits{1};
  put_gamma(bits, t.input + 1);
  put_gamma(bits, t.steps + 1);
  put_gamma(bits, t.registers + 1);
  for (const Snapshot& s : t.snapshots) {
    put_gamma(bits, s.pc + 1);
    for (std::uint64_t v : s.regs) put_gamma(bits, v + 1);
  }
  put_gamma(bits, t.output + 1);
  return from_bits(bits);
}

std::optional<Trace> decode_trace(const Natural& z) {
  auto bits = to_bits(z);
  if (!bits) return std::nullopt;
  BitReader reader(*bits);
  auto x = reader.gamma();
  auto steps = reader.gamma();
  auto regs = reader.gamma();
  if (!x || !steps || !regs || *regs < 2) return std::nullopt;
  Trace t{*x - 1, *steps - 1, static_cast<std::size_t>(*regs - 1), {}, 0};
  // Every snapshot takes at least registers + 1 bits.
  if (t.steps >= reader.remaining() || (t.steps + 1) > reader.remaining() / (t.registers + 1)) return std::nullopt;
  for (std::uint64_t i = 0; i <= t.steps; ++i) {
    Snapshot s;
    auto pc = reader.gamma();
    if (!pc) return std::nullopt;
    s.pc = static_cast<std::size_t>(*pc - 1);
    for (std::size_t r = 0; r < t.registers; ++r) {
      auto v = reader.gamma();
      if (!v) return std::nullopt;
      s.regs.push_back(*v - 1);
    }
    t.snapshots.push_back(std::move(s));
  }
  auto u = reader.gamma();
  if (!u || reader.remaining() != 0) return std::nullopt;
  t.output = *u - 1;
  return t;
}

std::optional<Natural> emit_trace(const Natural& e, std::uint64_t x, std::uint64_t fuel) {
  auto t = execute(decode(e), x, fuel);
  if (!t) return std::nullopt;
  return encode_trace(*t);
}

bool kleene_T(const Natural& e, std::uint64_t x, const Natural& z) {
  auto t = decode_trace(z);
  if (!t || t->input != x) return false;
  const Program p = decode(e);
  if (t->registers != register_count(p) || t->snapshots.size() != t->steps + 1) return false;
  if (!(t->snapshots.front() == initial(p, x))) return false;
  for (std::uint64_t i = 0; i < t->steps; ++i) {
    if (t->snapshots[i].pc > p.size()) return false;
    auto next = step(p, t->snapshots[i]);
    if (!next || !(*next == t->snapshots[i + 1])) return false;
  }
  const Snapshot& last = t->snapshots.back();
  if (last.pc > p.size() || step(p, last)) return false;
  return t->output == last.regs[0];
}

std::uint64_t kleene_U(const Natural& z) {
  auto t = decode_trace(z);
  return t ? t->output : 0;
}

PartialFn parse_fn_spec(std::string_view spec) {
  const std::string text(spec);
  const auto at = text.find('@');
  const std::string value = text.substr(0, at);
  const std::string domain = at == std::string::npos ? "all" : text.substr(at + 1);
  auto arg = [&](const std::string& s, const std::string& prefix) -> std::optional<std::uint64_t> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    return parse_u64(std::string_view(s).substr(prefix.size()), "function spec '" + text + "'");
  };

  PartialFn f;
  f.description = value + "@" + domain;
  if (value == "id") {
    f.value = [](std::uint64_t x) { return x; };
  } else if (value == "succ") {
    f.value = [](std::uint64_t x) { return x + 1; };
  } else if (value == "zero") {
    f.value = [](std::uint64_t) { return std::uint64_t{0}; };
  } else if (value == "pred") {
    f.value = [](std::uint64_t x) { return x == 0 ? 0 : x - 1; };
  } else if (value == "double") {
    f.value = [](std::uint64_t x) { return 2 * x; };
  } else if (value == "half") {
    f.value = [](std::uint64_t x) { return x / 2; };
  } else if (auto k = arg(value, "const:")) {
    f.value = [k = *k](std::uint64_t) { return k; };
  } else if (auto k2 = arg(value, "add:")) {
    f.value = [k = *k2](std::uint64_t x) { return x + k; };
  } else {
    throw ParseError("unknown function '" + value + "' in spec '" + text + "'");
  }
  if (domain == "all") {
    f.domain = [](std::uint64_t) { return true; };
  } else if (domain == "even") {
    f.domain = [](std::uint64_t x) { return x % 2 == 0; };
  } else if (domain == "odd") {
    f.domain = [](std::uint64_t x) { return x % 2 == 1; };
  } else if (auto k = arg(domain, "lt:")) {
    f.domain = [k = *k](std::uint64_t x) { return x < k; };
  } else if (auto k2 = arg(domain, "ge:")) {
    f.domain = [k = *k2](std::uint64_t x) { return x >= k; };
  } else {
    throw ParseError("unknown domain '" + domain + "' in spec '" + text + "'");
  }
  return f;
}

std::string to_string(EctPoint::Status s) {
  switch (s) {
    case EctPoint::Status::Pass: return "PASS";
    case EctPoint::Status::Fail: return "FAIL";
    case EctPoint::Status::Inconclusive: return "INCONCLUSIVE";
    case EctPoint::Status::Unconstrained: return "UNCONSTRAINED";
  }
  return "?";
}

std::string to_string(EctReport::Status s) {
  switch (s) {
    case EctReport::Status::Pass: return "PASS";
    case EctReport::Status::Fail: return "FAIL";
    case EctReport::Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

EctReport ect_check(const PartialFn& f, const Natural& e, std::uint64_t range, std::uint64_t fuel) {
  EctReport report;
  bool fail = false;
  bool timeout = false;
  for (std::uint64_t x = 0; x < range; ++x) {
    EctPoint point{x, EctPoint::Status::Unconstrained, 0, std::nullopt};
    if (f.domain(x)) {
      point.expected = f.value(x);
      auto z = emit_trace(e, x, fuel);
      if (!z) {
        point.status = EctPoint::Status::Inconclusive;
        timeout = true;
      } else {
        point.got = kleene_U(*z);
        const bool ok = kleene_T(e, x, *z) && *point.got == point.expected;
        point.status = ok ? EctPoint::Status::Pass : EctPoint::Status::Fail;
        fail = fail || !ok;
      }
    }
    report.points.push_back(point);
  }
  report.status = fail ? EctReport::Status::Fail : timeout ? EctReport::Status::Inconclusive : EctReport::Status::Pass;
  return report;
}

std::vector<NamedProgram> standard_programs() {
  using I = Instr;
  using R = std::optional<std::uint64_t>;
  auto total = [](auto fn) { return [fn](std::uint64_t x) -> R { return fn(x); }; };
  return {
      {"identity", {}, total([](std::uint64_t x) { return x; })},
      {"succ", {I::inc(0)}, total([](std::uint64_t x) { return x + 1; })},
      {"zero", {I::dec(0, 2), I::dec(1, 0), I::halt()}, total([](std::uint64_t) { return std::uint64_t{0}; })},
      {"const3", {I::dec(0, 2), I::dec(1, 0), I::inc(0), I::inc(0), I::inc(0)},
       total([](std::uint64_t) { return std::uint64_t{3}; })},
      {"add2", {I::inc(0), I::inc(0)}, total([](std::uint64_t x) { return x + 2; })},
      {"double",
       {I::dec(0, 4), I::inc(1), I::inc(1), I::dec(2, 0), I::dec(1, 7), I::inc(0), I::dec(2, 4)},
       total([](std::uint64_t x) { return 2 * x; })},
      {"pred", {I::dec(0, 1)}, total([](std::uint64_t x) { return x == 0 ? 0 : x - 1; })},
      {"parity",
       {I::dec(0, 5), I::dec(1, 3), I::dec(2, 0), I::inc(1), I::dec(2, 0), I::dec(1, 8), I::inc(0), I::dec(2, 5)},
       total([](std::uint64_t x) { return x % 2; })},
      {"diverge", diverging_program(), [](std::uint64_t) -> R { return std::nullopt; }},
      {"zero-on-even", {I::dec(0, 4), I::dec(0, 3), I::dec(1, 0), I::dec(1, 3)},
       [](std::uint64_t x) -> R { return x % 2 == 0 ? R(0) : std::nullopt; }},
      {"pred-positive", {I::dec(0, 2), I::halt(), I::dec(1, 2)},
       [](std::uint64_t x) -> R { return x > 0 ? R(x - 1) : std::nullopt; }},
      {"half",
       {I::dec(0, 4), I::dec(0, 4), I::inc(1), I::dec(2, 0), I::dec(1, 7), I::inc(0), I::dec(2, 4)},
       total([](std::uint64_t x) { return x / 2; })},
      {"triple",
       {I::dec(0, 5), I::inc(1), I::inc(1), I::inc(1), I::dec(2, 0), I::dec(1, 8), I::inc(0), I::dec(2, 5)},
       total([](std::uint64_t x) { return 3 * x; })},
      {"is-zero", {I::dec(0, 5), I::dec(0, 3), I::dec(1, 1), I::halt(), I::halt(), I::inc(0)},
       total([](std::uint64_t x) { return x == 0 ? 1 : 0; })},
      {"add5", {I::inc(0), I::inc(0), I::inc(0), I::inc(0), I::inc(0)},
       total([](std::uint64_t x) { return x + 5; })},
      {"add2-pred", {I::inc(0), I::inc(0), I::dec(0, 3)}, total([](std::uint64_t x) { return x + 1; })},
      {"halt-early", {I::halt(), I::inc(0)}, total([](std::uint64_t x) { return x; })},
      {"sub2", {I::dec(0, 2), I::dec(0, 2)}, total([](std::uint64_t x) { return x < 2 ? 0 : x - 2; })},
      {"min1", {I::dec(0, 4), I::dec(0, 3), I::dec(1, 1), I::inc(0)},
       total([](std::uint64_t x) { return std::min<std::uint64_t>(x, 1); })},
      {"zero-below5",
       {I::dec(0, 7), I::dec(0, 7), I::dec(0, 7), I::dec(0, 7), I::dec(0, 7), I::dec(1, 5), I::halt()},
       [](std::uint64_t x) -> R { return x < 5 ? R(0) : std::nullopt; }},
  };
}

const NamedProgram& standard_program(const std::string& name) {
  static const std::vector<NamedProgram> programs = standard_programs();
  for (const NamedProgram& p : programs) {
    if (p.name == name) return p;
  }
  throw PreconditionError("no standard program named '" + name + "'");
}

}  // namespace cubeprop
