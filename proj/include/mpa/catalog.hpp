#pragma once

#include <cstddef>
#include <set>

#include "mpa/automaton.hpp"
#include "mpa/refinement.hpp"

namespace mpa::catalog {

/// Two states tracking the parity of the L's seen so far; '?' reports it as 0 or L.
Automaton parity();

/// FIFO buffer over @p data holding at most @p capacity elements.
///
/// States are the buffer contents, written "[]", "[a]", "[a,b]", ... Reading
/// '?' emits and removes the oldest element. '?' on the empty buffer and data
/// on a full buffer have no transition and are therefore chaotic.
Automaton bounded_buffer(const std::set<Character>& data, std::size_t capacity);

/// Start automaton of the Figure development: select moves Deselected to
/// Selected, both states are initial, nothing else is specified.
Automaton figure_start();

/// Development of the Figure class: add an Error state, add deselect
/// transitions, drop the one into Error, drop Error, make Selected the only
/// initial state.
Transcript figure_transcript();

/// Development of 2D-Figure from the final Figure automaton: extend the
/// alphabet with fill and empty, let them loop on Selected, split Selected
/// into SelFilled and SelEmpty, then prune.
Transcript figure2d_transcript();

} // namespace mpa::catalog
