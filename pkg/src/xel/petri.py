"""Petri net structure produced by discovery and consumed by replay.

Transitions are meta-level labels. Places are identified by the label sets
they connect: the source place is ``i`` (no incoming arcs), the sink place
is ``o`` (no outgoing arcs), and an internal place connecting label sets A
and B is ``p({a1,..},{b1,..})``. The net is bipartite by construction; arcs
run only between places and transitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

SOURCE_ID = "i"
SINK_ID = "o"


@dataclass(frozen=True, order=True)
class Place:
    """A place, identified by its input and output transition label sets.

    The source place has no inputs; the sink place has no outputs; internal
    places always have both.
    """

    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(sorted(self.inputs)))
        object.__setattr__(self, "outputs", tuple(sorted(self.outputs)))

    @property
    def pid(self) -> str:
        if not self.inputs:
            return SOURCE_ID
        if not self.outputs:
            return SINK_ID
        return f"p({{{','.join(self.inputs)}}},{{{','.join(self.outputs)}}})"


@dataclass(frozen=True)
class PetriNet:
    """An immutable net with one source place ``i`` and one sink place ``o``.

    ``places`` is ordered: source first, internal places in sorted order,
    sink last. ``arcs`` are (node id, node id) pairs in sorted order, where
    transition node ids are the labels themselves and place node ids come
    from :attr:`Place.pid`. The initial marking is one token on ``i``.
    """

    transitions: tuple[str, ...]
    places: tuple[Place, ...]
    arcs: tuple[tuple[str, str], ...]

    @cached_property
    def transition_set(self) -> frozenset[str]:
        return frozenset(self.transitions)

    @cached_property
    def place_ids(self) -> tuple[str, ...]:
        return tuple(place.pid for place in self.places)

    @cached_property
    def preset(self) -> dict[str, tuple[str, ...]]:
        """Transition label -> sorted ids of places feeding it."""
        index: dict[str, list[str]] = {label: [] for label in self.transitions}
        place_ids = set(self.place_ids)
        for source, target in self.arcs:
            if source in place_ids and target in index:
                index[target].append(source)
        return {label: tuple(sorted(ids)) for label, ids in index.items()}

    @cached_property
    def postset(self) -> dict[str, tuple[str, ...]]:
        """Transition label -> sorted ids of places it feeds."""
        index: dict[str, list[str]] = {label: [] for label in self.transitions}
        place_ids = set(self.place_ids)
        for source, target in self.arcs:
            if source in index and target in place_ids:
                index[source].append(target)
        return {label: tuple(sorted(ids)) for label, ids in index.items()}

    def initial_marking(self) -> dict[str, int]:
        marking = {pid: 0 for pid in self.place_ids}
        marking[SOURCE_ID] = 1
        return marking
