"""Legendrian front diagrams encoded as Morse event words.

A word is read left to right.  Strand positions are counted from the top
starting at 1.  ``L<i>`` starts a left cusp whose two new strands occupy
positions i and i+1, ``R<i>`` closes the strands at i and i+1 in a right
cusp, and ``X<i>`` crosses the strands at i and i+1.  At a crossing the
strand moving from i to i+1 has the smaller slope and is therefore the over
strand; fronts carry no other crossing information.

Trailing directives ``o<k>=u`` / ``o<k>=d`` orient the component through the
k-th left cusp so that traversal leaves that cusp along its upper (u) or
lower (d) strand.  A component with no directive leaves its first left cusp
along the upper strand.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DiagramError, DiagramSyntaxError

LEFT, RIGHT, CROSS = "L", "R", "X"
LR, RL = 1, -1  # horizontal traversal direction of an arc

_EVENT_RE = re.compile(r"([LRX])(\d+)$")
_ORIENT_RE = re.compile(r"o(\d+)=([ud])$")


@dataclass(frozen=True)
class Event:
    kind: str
    level: int

    def __str__(self) -> str:
        return f"{self.kind}{self.level}"


@dataclass(frozen=True)
class MorseWord:
    events: tuple[Event, ...]
    orientations: tuple[tuple[int, str], ...] = ()

    def __str__(self) -> str:
        return format_word(self)

    @property
    def left_cusp_count(self) -> int:
        return sum(1 for e in self.events if e.kind == LEFT)


def parse(text: str) -> MorseWord:
    """Tokenize the DSL.  Level bookkeeping is left to :func:`validate`."""
    events = []
    orientations: dict[int, str] = {}
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        for m in re.finditer(r"\S+", body):
            tok, pos = m.group(), offset + m.start()
            em = _EVENT_RE.match(tok)
            om = _ORIENT_RE.match(tok)
            if em:
                if orientations:
                    raise DiagramSyntaxError(f"event {tok!r} after orientation directives", pos)
                level = int(em.group(2))
                if level < 1:
                    raise DiagramSyntaxError(f"level in {tok!r} must be at least 1", pos)
                events.append(Event(em.group(1), level))
            elif om:
                k = int(om.group(1))
                if k < 1:
                    raise DiagramSyntaxError(f"left cusp index in {tok!r} must be at least 1", pos)
                if k in orientations:
                    raise DiagramSyntaxError(f"duplicate orientation for left cusp {k}", pos)
                orientations[k] = om.group(2)
            else:
                raise DiagramSyntaxError(f"unrecognized token {tok!r}", pos)
        offset += len(line)
    return MorseWord(tuple(events), tuple(sorted(orientations.items())))


def format_word(word: MorseWord) -> str:
    tokens = [str(e) for e in word.events]
    tokens += [f"o{k}={v}" for k, v in word.orientations]
    return " ".join(tokens)


@dataclass(frozen=True)
class Arc:
    id: int
    component: int
    direction: int      # LR or RL
    start_event: int    # event that created the arc
    start_level: int    # its position right after that event
    end_event: int      # event that ends it


@dataclass(frozen=True)
class Cusp:
    id: int
    kind: str           # LEFT or RIGHT
    event: int
    upper: int
    lower: int
    incoming: int       # arc entered from, along the orientation
    outgoing: int

    @property
    def down(self) -> bool:
        """Traversal passes from the upper strand to the lower one."""
        return self.incoming == self.upper


@dataclass(frozen=True)
class Crossing:
    id: int
    event: int
    over: int
    under_in: int
    under_out: int
    sign: int           # +1 when both strands run the same horizontal way


@dataclass(frozen=True)
class FrontDiagram:
    word: MorseWord
    arcs: tuple[Arc, ...]
    cusps: tuple[Cusp, ...]
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]   # arc ids in traversal order
    name: str | None = field(default=None, compare=False)

    @property
    def is_empty(self) -> bool:
        return not self.arcs

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "word": format_word(self.word),
            "arcs": [{"id": a.id, "component": a.component,
                      "direction": "LR" if a.direction == LR else "RL"} for a in self.arcs],
            "cusps": [{"id": c.id, "kind": c.kind, "event": c.event, "upper": c.upper,
                       "lower": c.lower, "in": c.incoming, "out": c.outgoing,
                       "down": c.down} for c in self.cusps],
            "crossings": [{"id": x.id, "event": x.event, "over": x.over,
                           "under_in": x.under_in, "under_out": x.under_out,
                           "sign": x.sign} for x in self.crossings],
            "components": [list(c) for c in self.components],
        }


class _Piece:
    __slots__ = ("start_event", "start_level", "end_event", "left", "right")

    def __init__(self, start_event, start_level):
        self.start_event = start_event
        self.start_level = start_level
        self.end_event = None
        self.left = None    # ("cusp", id) or ("cross", id)
        self.right = None


def validate(word: MorseWord, name: str | None = None) -> FrontDiagram:
    """Run the strand bookkeeping and build arcs, cusps, crossings and orientations."""
    pieces: list[_Piece] = []
    raw_cusps = []      # (kind, event, upper, lower)
    raw_crossings = []  # (event, over, under_left, under_right)
    strands: list[int] = []
    for idx, ev in enumerate(word.events):
        i = ev.level
        count = len(strands)
        if ev.kind == LEFT:
            if not 1 <= i <= count + 1:
                raise DiagramError(f"left cusp at level {i} with {count} strands", idx)
            p, q = len(pieces), len(pieces) + 1
            pieces.append(_Piece(idx, i))
            pieces.append(_Piece(idx, i + 1))
            cid = len(raw_cusps)
            raw_cusps.append((LEFT, idx, p, q))
            pieces[p].left = pieces[q].left = ("cusp", cid)
            strands[i - 1:i - 1] = [p, q]
        else:
            if not 1 <= i <= count - 1:
                what = "right cusp" if ev.kind == RIGHT else "crossing"
                raise DiagramError(f"{what} at level {i} with {count} strands", idx)
            a, b = strands[i - 1], strands[i]
            if ev.kind == RIGHT:
                cid = len(raw_cusps)
                raw_cusps.append((RIGHT, idx, a, b))
                pieces[a].right = pieces[b].right = ("cusp", cid)
                pieces[a].end_event = pieces[b].end_event = idx
                del strands[i - 1:i + 1]
            else:
                xid = len(raw_crossings)
                b2 = len(pieces)
                pieces.append(_Piece(idx, i))
                pieces[b].right = ("cross", xid)
                pieces[b].end_event = idx
                pieces[b2].left = ("cross", xid)
                raw_crossings.append((idx, a, b, b2))
                strands[i - 1], strands[i] = b2, a
    if strands:
        raise DiagramError(f"{len(strands)} strands left open at the end of the word")

    n_left = sum(1 for c in raw_cusps if c[0] == LEFT)
    for k, _ in word.orientations:
        if k > n_left:
            raise DiagramError(f"orientation directive for left cusp {k}, "
                               f"but the word has {n_left}")
    directive = dict(word.orientations)
    left_ordinal = {}
    for c in raw_cusps:
        if c[0] == LEFT:
            left_ordinal[c[2]] = len(left_ordinal) + 1   # keyed by upper piece

    def step(piece, direction):
        """Next (piece, direction) after leaving ``piece`` moving ``direction``."""
        end = pieces[piece].right if direction == LR else pieces[piece].left
        kind, jid = end
        if kind == "cusp":
            _, _, up, lo = raw_cusps[jid]
            return (lo if piece == up else up), -direction
        _, _, ul, ur = raw_crossings[jid]
        return (ur if direction == LR else ul), direction

    direction = [0] * len(pieces)
    component = [-1] * len(pieces)
    components = []
    for kind, _, up, lo in raw_cusps:
        if kind != LEFT or component[up] >= 0:
            continue
        cycle = [(up, LR)]
        cur = step(up, LR)
        while cur != (up, LR):
            if len(cycle) > len(pieces):
                raise DiagramError("traversal does not close up")
            cycle.append(cur)
            cur = step(*cur)
        dirs = dict(cycle)
        votes = set()
        for p, _ in cycle:
            k = left_ordinal.get(p)
            if k is not None and k in directive:
                votes.add((dirs[p] == LR) == (directive[k] == "u"))
        if len(votes) > 1:
            raise DiagramError(f"conflicting orientation directives on component {len(components)}")
        if votes == {False}:
            cycle = [(p, -d) for p, d in cycle]
            cycle = [cycle[0]] + cycle[1:][::-1]
            # start from the arc that leaves the first left cusp
            lo_pos = next(i for i, (p, _) in enumerate(cycle) if p == lo)
            cycle = cycle[lo_pos:] + cycle[:lo_pos]
        cid = len(components)
        for p, d in cycle:
            direction[p] = d
            component[p] = cid
        components.append(tuple(p for p, _ in cycle))

    arcs = tuple(Arc(i, component[i], direction[i], pc.start_event, pc.start_level, pc.end_event)
                 for i, pc in enumerate(pieces))
    cusps = []
    for cid, (kind, idx, up, lo) in enumerate(raw_cusps):
        if kind == LEFT:
            inc, out = (lo, up) if direction[up] == LR else (up, lo)
        else:
            inc, out = (up, lo) if direction[up] == LR else (lo, up)
        cusps.append(Cusp(cid, kind, idx, up, lo, inc, out))
    crossings = []
    for xid, (idx, over, ul, ur) in enumerate(raw_crossings):
        u_in, u_out = (ul, ur) if direction[ul] == LR else (ur, ul)
        sign = 1 if direction[over] == direction[ul] else -1
        crossings.append(Crossing(xid, idx, over, u_in, u_out, sign))
    return FrontDiagram(word, arcs, tuple(cusps), tuple(crossings), tuple(components), name)


def load(text: str, name: str | None = None) -> FrontDiagram:
    return validate(parse(text), name)


@dataclass(frozen=True)
class DiagramInvariants:
    writhe: int
    left_cusps: int
    right_cusps: int
    up_cusps: int
    down_cusps: int
    tb: int
    rot: int | Fraction | None   # None for links

    def to_dict(self) -> dict:
        rot = self.rot
        if isinstance(rot, Fraction):
            rot = str(rot)
        return {"writhe": self.writhe, "left_cusps": self.left_cusps,
                "right_cusps": self.right_cusps, "up_cusps": self.up_cusps,
                "down_cusps": self.down_cusps, "tb": self.tb, "rot": rot}


def rotation_number(d: FrontDiagram) -> int | Fraction:
    """Half the number of downward cusps minus upward cusps (knots only)."""
    if d.is_empty:
        raise DiagramError("empty diagram has no rotation number")
    if len(d.components) != 1:
        raise DiagramError(f"rotation number requested for a {len(d.components)}-component link")
    down = sum(1 for c in d.cusps if c.down)
    r = Fraction(down - (len(d.cusps) - down), 2)
    return int(r) if r.denominator == 1 else r


def classical_invariants(d: FrontDiagram) -> DiagramInvariants:
    """Writhe, cusp counts, tb = writhe - cusps/2 and rot = (down - up)/2."""
    if d.is_empty:
        raise DiagramError("empty diagram has no classical invariants")
    writhe = sum(x.sign for x in d.crossings)
    left = sum(1 for c in d.cusps if c.kind == LEFT)
    down = sum(1 for c in d.cusps if c.down)
    rot = rotation_number(d) if len(d.components) == 1 else None
    return DiagramInvariants(writhe, left, len(d.cusps) - left, len(d.cusps) - down, down,
                             writhe - len(d.cusps) // 2, rot)


def stabilize(d: FrontDiagram, sign: str, arc: int) -> FrontDiagram:
    """Replace a piece of ``arc`` by a zigzag (two new cusps).

    A positive stabilization adds two downward cusps (rot + 1), a negative one
    two upward cusps (rot - 1); either way tb drops by one.
    """
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if not 0 <= arc < len(d.arcs):
        raise DiagramError(f"no arc with id {arc}")
    a = d.arcs[arc]
    k = a.start_level
    # A zigzag shifting the strand down passes its cusps downward when read
    # left to right.
    shift_down = (sign == "+") == (a.direction == LR)
    zig = [Event(LEFT, k + 1), Event(RIGHT, k)] if shift_down else [Event(LEFT, k), Event(RIGHT, k + 1)]
    pos = a.start_event + 1
    events = list(d.word.events)
    new_ordinal = sum(1 for e in events[:pos] if e.kind == LEFT) + 1
    events[pos:pos] = zig
    orientations = tuple((kk + 1 if kk >= new_ordinal else kk, v) for kk, v in d.word.orientations)
    suffix = "+" if sign == "+" else "-"
    name = f"S{suffix}({d.name})" if d.name else None
    return validate(MorseWord(tuple(events), orientations), name)


def reverse_orientation(word: MorseWord) -> MorseWord:
    """Same front, every component traversed the other way."""
    d = validate(word)
    ordinals = {}
    for c in d.cusps:
        if c.kind == LEFT:
            ordinals[c.id] = len(ordinals) + 1
    directives = []
    seen = set()
    for c in d.cusps:
        if c.kind != LEFT:
            continue
        comp = d.arcs[c.upper].component
        if comp in seen:
            continue
        seen.add(comp)
        exits_upper = d.arcs[c.upper].direction == LR
        directives.append((ordinals[c.id], "d" if exits_upper else "u"))
    return MorseWord(word.events, tuple(sorted(directives)))
