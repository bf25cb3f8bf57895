#ifndef MAPCHECK_LITMUS_HPP
#define MAPCHECK_LITMUS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mapcheck {

enum class MemoryOrder { Relaxed, Acquire, Release, SeqCst };

enum class FenceKind { Sync, Lwsync, DmbIsh, CtrlIsync, CtrlIsb };

enum class Arch { Power, Armv7 };

std::string_view toString(MemoryOrder order);
std::string_view toString(FenceKind fence);
std::string_view toString(Arch arch);

bool isAcquireLike(MemoryOrder order);  // acquire or seq_cst
bool isReleaseLike(MemoryOrder order);  // release or seq_cst

/// A language-level atomic access. Loads never carry release; stores never
/// carry acquire (enforced by validation, not by the type).
struct C11Op {
  enum class Kind { Load, Store };
  Kind kind;
  std::string loc;
  int value = 0;     // stores only
  MemoryOrder order = MemoryOrder::Relaxed;
  std::string dest;  // loads only, globally unique per test

  bool operator==(const C11Op&) const = default;
};

/// An ISA-level operation. ctrlisync/ctrlisb is represented as a pseudo-fence
/// bound to the immediately preceding load (it stands for the cmp;bc;isync /
/// teq;beq;isb idiom, whose only modeled effect is an ordering from that load
/// to everything after it on the same thread).
struct IsaOp {
  enum class Kind { Load, Store, Fence };
  Kind kind;
  std::string loc;
  int value = 0;
  FenceKind fence = FenceKind::Sync;  // Fence only
  std::string dest;

  bool operator==(const IsaOp&) const = default;
};

/// One conjunct of an outcome predicate: a register or a final-memory
/// equality. Which one is resolved against the test during validation.
struct OutcomeTerm {
  enum class Kind { Register, Memory };
  Kind kind;
  std::string name;
  int value = 0;

  bool operator==(const OutcomeTerm&) const = default;
};

/// Outcome predicate plus the test author's expectation for it: `forbidden`
/// means the model under test is expected to rule the outcome out.
struct Outcome {
  std::vector<OutcomeTerm> terms;
  bool expectForbidden = true;

  bool operator==(const Outcome&) const = default;
};

using InitList = std::vector<std::pair<std::string, int>>;

struct C11Test {
  std::string name;
  InitList init;
  std::vector<std::vector<C11Op>> threads;
  Outcome outcome;

  bool operator==(const C11Test&) const = default;
};

struct IsaTest {
  std::string name;
  Arch arch = Arch::Power;
  InitList init;
  std::vector<std::vector<IsaOp>> threads;
  Outcome outcome;

  bool operator==(const IsaTest&) const = default;
};

using LitmusTest = std::variant<C11Test, IsaTest>;

int initValue(const InitList& init, const std::string& loc);
bool hasInit(const InitList& init, const std::string& loc);

/// Structural checks shared by the parser and programmatic construction:
/// distinct store values per location, unique registers, resolvable outcome
/// terms, initialized locations, order gating, ctrlisync placement.
/// Resolves each outcome term's Kind in place. Throws ValidationError.
void validate(C11Test& test);
void validate(IsaTest& test);

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mapcheck

#endif  // MAPCHECK_LITMUS_HPP
