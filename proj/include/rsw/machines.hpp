#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rsw/upset.hpp"

namespace rsw {

// A total function omega -> omega given as a finite list of values
// followed by either a constant tail or the characteristic function of an
// UpSet.  Queries at any position are answerable exactly.
class OracleValue {
 public:
  OracleValue() : tail_(uint64_t{0}) {}
  static OracleValue constant(uint64_t v) { return OracleValue({}, v); }
  static OracleValue characteristic(UpSet s) { return OracleValue({}, std::move(s)); }
  OracleValue(std::vector<uint64_t> head, uint64_t tail_value)
      : head_(std::move(head)), tail_(tail_value) {}
  OracleValue(std::vector<uint64_t> head, UpSet tail_set)
      : head_(std::move(head)), tail_(std::move(tail_set)) {}

  uint64_t at(uint64_t n) const {
    if (n < head_.size()) return head_[n];
    if (std::holds_alternative<uint64_t>(tail_)) return std::get<uint64_t>(tail_);
    return std::get<UpSet>(tail_).contains(n) ? 1 : 0;
  }
  const std::vector<uint64_t>& head() const { return head_; }
  bool tail_is_constant() const { return std::holds_alternative<uint64_t>(tail_); }
  uint64_t tail_constant() const { return std::get<uint64_t>(tail_); }
  const UpSet& tail_set() const { return std::get<UpSet>(tail_); }
  // True when the function is 0/1 valued everywhere.
  bool is_bit_valued() const;

 private:
  std::vector<uint64_t> head_;
  std::variant<uint64_t, UpSet> tail_;
};

// Minimal oracle-program instruction set.  Registers hold naturals and
// are zero-initialized; execution starts at instruction 0 and one
// instruction costs one step (an oracle query is a single instruction).
// Falling off the end of the program diverges.
enum class Op : uint8_t {
  LoadImm,  // r[a] = b
  Move,     // r[a] = r[b]
  Add,      // r[a] = r[b] + r[c]
  Sub,      // r[a] = r[b] monus r[c]
  Input,    // r[a] = x
  Query,    // r[a] = oracle(r[b])
  Jmp,      // goto a
  Jz,       // if r[a] == 0 goto b
  Halt,     // output r[a]
};

struct Instr {
  Op op;
  uint64_t a = 0, b = 0, c = 0;
};

// Trusted per-program metadata making halting questions decidable.
struct HaltCert {
  bool halts;              // within `steps`, for every oracle and input
  uint64_t steps = 0;      // meaningful when halts
  bool oracle_independent = true;
};

struct Program {
  std::string name;
  std::vector<Instr> code;
  std::optional<HaltCert> cert;
};

struct FunctionalCatalog {
  std::vector<Program> programs;
  size_t size() const { return programs.size(); }
};

struct EvalResult {
  bool halted;
  uint64_t value;  // meaningful when halted
  uint64_t steps_used;
};

// Deterministic step-bounded evaluation of program e on the given oracle
// and input.  Monotone: once halted within s steps, the same value is
// produced for every larger budget.  Throws std::out_of_range for e
// beyond the catalog.
EvalResult eval_steps(const FunctionalCatalog& cat, uint64_t e, const OracleValue& oracle,
                      uint64_t x, uint64_t steps);

// Bit word of length `stage`; bit e is 1 iff program e halts on input e
// with the given oracle within `stage` steps (0 for e beyond the
// catalog).  Bits only flip 0 -> 1 as the stage grows.
std::string jump_string(const FunctionalCatalog& cat, const OracleValue& oracle, uint64_t stage);

// The catalog-relative jump of `oracle` as a total 0/1 function: bit e is
// 1 iff program e halts on input e with this oracle.  Requires a halting
// certificate on every program; throws std::invalid_argument otherwise.
OracleValue true_jump(const FunctionalCatalog& cat, const OracleValue& oracle);

// Cantor pairing: pair(m, n) = (m+n)(m+n+1)/2 + n, a bijection
// omega^2 -> omega.
uint64_t pair_code(uint64_t m, uint64_t n);
std::pair<uint64_t, uint64_t> unpair_code(uint64_t z);

// Bijection between bit words and naturals: code(sigma) is the binary
// value of 1^sigma minus 1, so "" -> 0, "0" -> 1, "1" -> 2, "00" -> 3, ...
uint64_t string_code(std::string_view sigma);
std::string string_decode(uint64_t n);

// The two-program seed catalog: index 0 always diverges, index 1 halts
// with output 0 in one step.
FunctionalCatalog seed_catalog();
// Seed catalog extended with a third program that halts with the given
// output.
FunctionalCatalog seed_catalog_with_constant(uint64_t value);

// Parses instruction mnemonics ("loadi r k", "move r r", "add r r r",
// "sub r r r", "input r", "query r r", "jmp l", "jz r l", "halt r").
Instr parse_instr(std::string_view text);
std::string instr_to_string(const Instr& instr);

}  // namespace rsw
