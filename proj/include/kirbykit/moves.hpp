#pragma once

// Kirby moves on the algebraic layer of a diagram, move scripts, and the
// composite delta move / cork twist.
//
// Every move is a pure function Diagram -> Diagram. A move that changes a
// component carrying planar data drops that data and sets the stale bit.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kirbykit/diagram.hpp"
#include "kirbykit/error.hpp"

namespace kirbykit {

/// Signed strand counts through a twist region or circle, by component id.
/// Order is preserved so that scripts round-trip textually.
using Multiplicity = std::vector<std::pair<std::string, Integer>>;

/// Full ε-twist of the strands m: f_i += ε m_i², lk_ij += ε m_i m_j.
Diagram twist_region(const Diagram& d, int eps, const Multiplicity& m);

/// Adds an ε-framed certified unknot around the strands m and absorbs its twist,
/// so that blow_down of the new curve undoes it exactly. The new component is
/// appended with id `id` (or the first free "e<k>") and lk(new, i) = m_i.
Diagram blow_up(const Diagram& d, int eps, const Multiplicity& m, const std::string& id = {});
/// Removes a certified ±1-framed unknot e, applying twist_region(-ε, lk(e, ·)).
Diagram blow_down(const Diagram& d, std::string_view e);

/// Slides handle i over the 2-handle j: L' = Eᵀ L E with E adding s·(column j) to column i.
Diagram handle_slide(const Diagram& d, std::string_view i, std::string_view j, int s);

/// Cancels dotted u against framed h; requires |lk(u,h)| = 1 and u unlinked from the rest.
Diagram cancel_12(const Diagram& d, std::string_view u, std::string_view h);
/// Inverse of cancel_12: a dotted circle u and a framed h (framing f) with lk(u,h) = l = ±1
/// and lk(h, ·) = m.
Diagram add_12_pair(const Diagram& d, const std::string& u, const std::string& h, const Integer& f, int l,
                    const Multiplicity& m, bool u_unknot = true, bool h_unknot = false);

/// Attaches a 0-framed 2-handle along a certified unknot δ (with linking vector m)
/// together with a cancelling 3-handle.
Diagram add_23_pair(const Diagram& d, const std::string& delta, const Multiplicity& m = {});
/// Cancels a 0-framed certified unknot e, unlinked from everything, against a 3-handle.
Diagram cancel_23(const Diagram& d, std::string_view e);

enum class MoveKind { twist, blowup, blowdown, slide, cancel12, add12, add23, cancel23 };

/// One line of a move script. Unused fields keep their defaults.
struct Move {
  MoveKind kind = MoveKind::twist;
  int eps = 1;            // twist, blowup: ±1; add12: lk(u,h); slide: s
  Multiplicity m;         // twist, blowup, add12, add23
  std::string a;          // new or target component (blowdown, cancel23, add23, slide i, u)
  std::string b;          // slide j, h
  Integer framing = 0;    // add12
  std::vector<std::size_t> at;         // optional insertion positions for added components
  std::vector<std::string> certified;  // add12: which of u, h carry the unknot flag

  friend bool operator==(const Move&, const Move&) = default;
};

/// Canonical one-line form, e.g. "slide c2 over c3 s=+1".
std::string to_string(const Move& m);
/// Throws ParseError.
Move parse_move(std::string_view line);

struct MoveScript {
  std::vector<Move> moves;
  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

/// One move per line; blank lines and '#' comments are skipped.
MoveScript parse_script(std::string_view text);
std::string to_string(const MoveScript& s);

/// A move could not be applied; `index` is the 0-based position in the script.
class MoveError : public PreconditionError {
 public:
  MoveError(std::size_t index, const std::string& what)
      : PreconditionError("move " + std::to_string(index + 1) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

Diagram apply_move(const Diagram& d, const Move& m);
/// Applies every move or none: throws MoveError and leaves the input untouched.
Diagram replay(const Diagram& d, const MoveScript& s);

struct Trace {
  std::vector<Diagram> states;  // input followed by the result of each applied move
  std::optional<MoveError> error;
};
/// Like replay, but keeps intermediate diagrams and stops at the first failure.
Trace replay_trace(const Diagram& d, const MoveScript& s);

/// Script undoing `s` when replayed from replay(d, s). Throws MoveError when s does not apply.
MoveScript inverse(const Diagram& d, const MoveScript& s);

/// δ = C₊ # C₋: signed strand counts of every component through each circle.
struct DeltaData {
  std::string id = "delta";
  Multiplicity c_plus;
  Multiplicity c_minus;
  std::string band;  // free-form note on how the band joins C₊ to C₋
  bool unknot = false;
};

struct DeltaMoveResult {
  Diagram diagram;
  MoveScript script;
};

/// Performs the δ-move n times: add23, blowup +1 at C₊, slide over δ, blowdown at
/// C₋, cancel23. With C₊ and C₋ meeting the same strands the result equals the input.
/// Atomic: throws MoveError (or PreconditionError) without partial results.
DeltaMoveResult delta_move(const Diagram& d, const DeltaData& delta, int n);
/// The 5n-line script delta_move would replay on d.
MoveScript delta_script(const Diagram& d, const DeltaData& delta, int n);

struct CorkTwistResult {
  Diagram diagram;
  std::vector<std::string> warnings;
};

/// Reglues the H side by f_δⁿ: L_HH += n (m₊ m₊ᵀ - m₋ m₋ᵀ) over H-side rows and
/// columns. W-side data is untouched; δ must cross each W-side component equally
/// often through C₊ and C₋.
CorkTwistResult cork_twist(const Diagram& d, const std::vector<std::string>& h_side, const DeltaData& delta, int n);

}  // namespace kirbykit
