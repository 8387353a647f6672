"""Correctness conditions, the conjugation/contact link graph, and
connectivity-component extraction for CRIPT words.

A word is correct when it satisfies:

  boundary  the first string holds only B letters, the last only D;
  evenness  a B (or D) opening a pair — even count of its kind before it,
            reading the whole word — is immediately followed by another
            letter of the same kind in the same string;
  balance   B(w[k]) + C(w[k]) = D(w[k+1]) + C(w[k+1]) for consecutive
            strings (the two sides count the same level crossings).

Conjugation pairs the (2r-1)-th and (2r)-th occurrence of B (likewise D);
contact matches the rank-r lower end of one string with the rank-r upper
end of the next.  Both edge families together form a 2-regular graph whose
cycles are the boundary curves of any realizing domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import InvalidCodeError

__all__ = [
    "LetterRef",
    "Violation",
    "ValidationReport",
    "LinkGraph",
    "validate",
    "conjugate_pairs",
    "contact_pairs",
    "link_graph",
    "boundary_curves",
    "domain_components",
]


class LetterRef(NamedTuple):
    string_index: int
    position: int


@dataclass(frozen=True)
class Violation:
    rule: str  # boundary-first | boundary-last | evenness-B | evenness-D | balance | alphabet
    string_index: int | None
    position: int | None
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule, string_index, position, message):
        self.violations.append(Violation(rule, string_index, position, message))

    def as_dict(self):
        return {
            "valid": self.ok,
            "violations": [
                {
                    "rule": v.rule,
                    "string": v.string_index,
                    "position": v.position,
                    "message": v.message,
                }
                for v in self.violations
            ],
        }


def validate(code: Sequence[str]) -> ValidationReport:
    """Check every correctness condition; reports all violations, never raises.

    The empty code (zero strings) is valid by convention: it encodes the
    empty domain.
    """
    report = ValidationReport()
    for s, string in enumerate(code):
        for p, ch in enumerate(string):
            if ch not in "BCD":
                report.add("alphabet", s, p, f"string {s} position {p}: invalid letter {ch!r}")
    if not report.ok or not code:
        return report

    first = code[0]
    if first.count("B") == 0:
        report.add("boundary-first", 0, None, "first string must contain at least one B")
    for p, ch in enumerate(first):
        if ch != "B":
            report.add("boundary-first", 0, p, f"first string holds {ch!r} at position {p}; only B allowed")
    last = code[-1]
    last_index = len(code) - 1
    if last.count("D") == 0:
        report.add("boundary-last", last_index, None, "last string must contain at least one D")
    for p, ch in enumerate(last):
        if ch != "D":
            report.add("boundary-last", last_index, p,
                       f"last string holds {ch!r} at position {p}; only D allowed")

    _check_evenness(code, report)

    for k in range(len(code) - 1):
        lower_ends = code[k].count("B") + code[k].count("C")
        upper_ends = code[k + 1].count("D") + code[k + 1].count("C")
        if lower_ends != upper_ends:
            report.add("balance", k, None,
                       f"strings {k}/{k + 1} unbalanced: B+C = {lower_ends} vs D+C = {upper_ends}")
    return report


def _check_evenness(code, report):
    seen = {"B": 0, "D": 0}
    for s, string in enumerate(code):
        for p, ch in enumerate(string):
            if ch not in ("B", "D"):
                continue
            if seen[ch] % 2 == 0:
                # Pair opener: the very next symbol of the word must close it;
                # a string boundary (';') in between is a violation too.
                if p + 1 >= len(string):
                    report.add(f"evenness-{ch}", s, p,
                               f"{ch} pair opened at string {s} position {p} is not closed in its string")
                elif string[p + 1] != ch:
                    report.add(f"evenness-{ch}", s, p,
                               f"{ch} pair opened at string {s} position {p} is followed by {string[p + 1]!r}")
            seen[ch] += 1


def _require_valid(code, caller):
    report = validate(code)
    if not report.ok:
        raise InvalidCodeError(f"{caller}: code word is not correct", report)


def conjugate_pairs(code: Sequence[str], strict: bool = True) -> list[tuple[LetterRef, LetterRef]]:
    """Conjugated B pairs then D pairs, in occurrence order over the word.

    With strict=True (default) the evenness conditions are checked first,
    which guarantees every pair is adjacent within one string.
    """
    if strict:
        report = ValidationReport()
        _check_evenness(code, report)
        for kind in ("B", "D"):
            total = sum(string.count(kind) for string in code)
            if total % 2:
                report.add(f"evenness-{kind}", None, None, f"odd global count of {kind}: {total}")
        if not report.ok:
            raise InvalidCodeError("conjugation undefined", report)
    pairs = []
    for kind in ("B", "D"):
        opener = None
        for s, string in enumerate(code):
            for p, ch in enumerate(string):
                if ch != kind:
                    continue
                if opener is None:
                    opener = LetterRef(s, p)
                else:
                    pairs.append((opener, LetterRef(s, p)))
                    opener = None
    return pairs


def seam_contacts(v: str, w: str, seam: int = 0) -> list[tuple[LetterRef, LetterRef]]:
    """Contact matching across one seam: v is the upper string, w the lower.

    Rank-r among the {B, C} letters of v meets rank-r among the {C, D}
    letters of w; the balance equality makes this a perfect matching.
    """
    lower_ends = [LetterRef(seam, p) for p, ch in enumerate(v) if ch in ("B", "C")]
    upper_ends = [LetterRef(seam + 1, p) for p, ch in enumerate(w) if ch in ("C", "D")]
    if len(lower_ends) != len(upper_ends):
        report = ValidationReport()
        report.add("balance", seam, None,
                   f"strings {seam}/{seam + 1} unbalanced: B+C = {len(lower_ends)} vs D+C = {len(upper_ends)}")
        raise InvalidCodeError("contact matching impossible", report)
    return list(zip(lower_ends, upper_ends))


def contact_pairs(code: Sequence[str]) -> list[tuple[LetterRef, LetterRef]]:
    """All contact edges, seam by seam; raises on any balance failure."""
    pairs = []
    for k in range(len(code) - 1):
        pairs.extend(seam_contacts(code[k], code[k + 1], seam=k))
    return pairs


@dataclass(frozen=True)
class LinkGraph:
    """Conjugation and contact edges over the letters of a correct word.

    Every letter has degree exactly 2 (a conjugate edge iff its kind is B
    or D), so the graph decomposes into disjoint simple cycles.
    """

    conjugate_edges: tuple[tuple[LetterRef, LetterRef], ...]
    contact_edges: tuple[tuple[LetterRef, LetterRef], ...]

    def adjacency(self) -> dict[LetterRef, list[LetterRef]]:
        adj: dict[LetterRef, list[LetterRef]] = {}
        for a, b in (*self.conjugate_edges, *self.contact_edges):
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        return adj


def link_graph(code: Sequence[str]) -> LinkGraph:
    _require_valid(code, "link_graph")
    return LinkGraph(
        conjugate_edges=tuple(conjugate_pairs(code, strict=False)),
        contact_edges=tuple(contact_pairs(code)),
    )


def boundary_curves(code: Sequence[str]) -> list[list[LetterRef]]:
    """Cycles of the link graph; they partition the letters of the word.

    Each cycle starts at its smallest letter reference and proceeds toward
    the smaller neighbor, making the output deterministic.
    """
    graph = link_graph(code)
    adj = graph.adjacency()
    all_letters = [LetterRef(s, p) for s, string in enumerate(code) for p in range(len(string))]
    for ref in all_letters:
        degree = len(adj.get(ref, ()))
        if degree != 2:
            report = ValidationReport()
            report.add("structure", ref.string_index, ref.position,
                       f"letter {ref} has link degree {degree}, expected 2")
            raise InvalidCodeError("link graph is not 2-regular", report)
    cycles = []
    visited: set[LetterRef] = set()
    for start in all_letters:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cycle.append(cur)
            visited.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(cycle)
    return cycles


def domain_components(code: Sequence[str]) -> list[tuple[str, ...]]:
    """Codes of the connectivity components of any domain realizing the word.

    Boundary cycles are grouped into components with a parity rule: letters
    along a band string alternate between the outside and the inside of the
    black region, so when a conjugate B pair opens a not-yet-seen cycle, an
    odd count of letters to its left puts the new curve inside the component
    owning the nearest such letter (a hole), an even count starts a new
    component.  A blob born inside a hole is correctly a new component.
    """
    cycles = boundary_curves(code)
    cycle_of: dict[LetterRef, int] = {}
    for index, cycle in enumerate(cycles):
        for ref in cycle:
            cycle_of[ref] = index

    component_of_cycle: dict[int, int] = {}
    component_cycles: list[list[int]] = []
    b_openers = [
        opener for opener, _ in conjugate_pairs(code, strict=False)
        if code[opener.string_index][opener.position] == "B"
    ]
    for opener in b_openers:
        cid = cycle_of[opener]
        if cid in component_of_cycle:
            continue
        if opener.position % 2 == 0:
            component_of_cycle[cid] = len(component_cycles)
            component_cycles.append([cid])
        else:
            neighbor = LetterRef(opener.string_index, opener.position - 1)
            owner = component_of_cycle[cycle_of[neighbor]]
            component_of_cycle[cid] = owner
            component_cycles[owner].append(cid)

    components = []
    for cycle_ids in component_cycles:
        members = set(cycle_ids)
        strings = []
        for s, string in enumerate(code):
            kept = "".join(
                ch for p, ch in enumerate(string) if cycle_of[LetterRef(s, p)] in members
            )
            if kept:
                strings.append(kept)
        components.append(tuple(strings))
    return components
