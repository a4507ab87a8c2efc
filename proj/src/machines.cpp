#include "rsw/machines.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rsw {

bool OracleValue::is_bit_valued() const {
  for (uint64_t v : head_)
    if (v > 1) return false;
  if (tail_is_constant()) return tail_constant() <= 1;
  return true;
}

EvalResult eval_steps(const FunctionalCatalog& cat, uint64_t e, const OracleValue& oracle,
                      uint64_t x, uint64_t steps) {
  if (e >= cat.programs.size()) throw std::out_of_range("program index beyond catalog");
  const auto& code = cat.programs[e].code;
  std::vector<uint64_t> reg(16, 0);
  auto r = [&](uint64_t i) -> uint64_t& { return reg.at(i); };
  uint64_t pc = 0;
  for (uint64_t step = 1; step <= steps; ++step) {
    if (pc >= code.size()) return {false, 0, steps};  // ran off the end: diverges
    const Instr& in = code[pc];
    switch (in.op) {
      case Op::LoadImm: r(in.a) = in.b; ++pc; break;
      case Op::Move: r(in.a) = r(in.b); ++pc; break;
      case Op::Add: r(in.a) = r(in.b) + r(in.c); ++pc; break;
      case Op::Sub: r(in.a) = r(in.b) >= r(in.c) ? r(in.b) - r(in.c) : 0; ++pc; break;
      case Op::Input: r(in.a) = x; ++pc; break;
      case Op::Query: r(in.a) = oracle.at(r(in.b)); ++pc; break;
      case Op::Jmp: pc = in.a; break;
      case Op::Jz: pc = (r(in.a) == 0) ? in.b : pc + 1; break;
      case Op::Halt: return {true, r(in.a), step};
    }
  }
  return {false, 0, steps};
}

std::string jump_string(const FunctionalCatalog& cat, const OracleValue& oracle, uint64_t stage) {
  std::string out(stage, '0');
  for (uint64_t e = 0; e < stage && e < cat.programs.size(); ++e) {
    if (eval_steps(cat, e, oracle, e, stage).halted) out[e] = '1';
  }
  return out;
}

OracleValue true_jump(const FunctionalCatalog& cat, const OracleValue& oracle) {
  std::vector<uint64_t> head;
  head.reserve(cat.programs.size());
  for (uint64_t e = 0; e < cat.programs.size(); ++e) {
    const auto& cert = cat.programs[e].cert;
    if (!cert) throw std::invalid_argument("true_jump: program lacks a halting certificate");
    if (cert->halts) {
      head.push_back(eval_steps(cat, e, oracle, e, cert->steps).halted ? 1 : 0);
    } else {
      head.push_back(0);
    }
  }
  return OracleValue(std::move(head), uint64_t{0});
}

uint64_t pair_code(uint64_t m, uint64_t n) { return (m + n) * (m + n + 1) / 2 + n; }

std::pair<uint64_t, uint64_t> unpair_code(uint64_t z) {
  uint64_t w = static_cast<uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  uint64_t t = w * (w + 1) / 2;
  uint64_t n = z - t;
  return {w - n, n};
}

uint64_t string_code(std::string_view sigma) {
  uint64_t v = 1;
  for (char c : sigma) v = 2 * v + (c == '1' ? 1 : 0);
  return v - 1;
}

std::string string_decode(uint64_t n) {
  uint64_t v = n + 1;
  std::string out;
  while (v > 1) {
    out.push_back((v & 1) ? '1' : '0');
    v >>= 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

FunctionalCatalog seed_catalog() {
  FunctionalCatalog cat;
  cat.programs.push_back({"e_div", {{Op::Jmp, 0}}, HaltCert{false, 0, true}});
  cat.programs.push_back({"e_zero", {{Op::Halt, 0}}, HaltCert{true, 1, true}});
  return cat;
}

FunctionalCatalog seed_catalog_with_constant(uint64_t value) {
  FunctionalCatalog cat = seed_catalog();
  cat.programs.push_back(
      {"e_const", {{Op::LoadImm, 0, value}, {Op::Halt, 0}}, HaltCert{true, 2, true}});
  return cat;
}

Instr parse_instr(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string mnemonic;
  in >> mnemonic;
  auto arg = [&]() {
    uint64_t v;
    if (!(in >> v)) throw std::invalid_argument("instruction missing operand: " + std::string(text));
    return v;
  };
  if (mnemonic == "loadi") { uint64_t a = arg(), b = arg(); return {Op::LoadImm, a, b}; }
  if (mnemonic == "move") { uint64_t a = arg(), b = arg(); return {Op::Move, a, b}; }
  if (mnemonic == "add") { uint64_t a = arg(), b = arg(), c = arg(); return {Op::Add, a, b, c}; }
  if (mnemonic == "sub") { uint64_t a = arg(), b = arg(), c = arg(); return {Op::Sub, a, b, c}; }
  if (mnemonic == "input") { uint64_t a = arg(); return {Op::Input, a}; }
  if (mnemonic == "query") { uint64_t a = arg(), b = arg(); return {Op::Query, a, b}; }
  if (mnemonic == "jmp") { uint64_t a = arg(); return {Op::Jmp, a}; }
  if (mnemonic == "jz") { uint64_t a = arg(), b = arg(); return {Op::Jz, a, b}; }
  if (mnemonic == "halt") { uint64_t a = arg(); return {Op::Halt, a}; }
  throw std::invalid_argument("unknown mnemonic: " + mnemonic);
}

std::string instr_to_string(const Instr& in) {
  std::ostringstream out;
  switch (in.op) {
    case Op::LoadImm: out << "loadi " << in.a << ' ' << in.b; break;
    case Op::Move: out << "move " << in.a << ' ' << in.b; break;
    case Op::Add: out << "add " << in.a << ' ' << in.b << ' ' << in.c; break;
    case Op::Sub: out << "sub " << in.a << ' ' << in.b << ' ' << in.c; break;
    case Op::Input: out << "input " << in.a; break;
    case Op::Query: out << "query " << in.a << ' ' << in.b; break;
    case Op::Jmp: out << "jmp " << in.a; break;
    case Op::Jz: out << "jz " << in.a << ' ' << in.b; break;
    case Op::Halt: out << "halt " << in.a; break;
  }
  return out.str();
}

}  // namespace rsw
