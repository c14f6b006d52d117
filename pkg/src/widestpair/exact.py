"""Ground truth for small instances: exhaustive pair search and ILP export.

The brute-force search enumerates every simple path and scans disjoint
pairings, so it is exact but only usable at desk scale (a path cap
guards against blowups). The ILP builder emits the equivalent
mixed-integer model in LP text format for external solvers; a constraint
evaluator lets tests walk known pairs through the emitted model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph, PathPair, bottleneck

DEFAULT_PATH_CAP = 100_000


class EnumerationCapError(RuntimeError):
    """The number of simple paths exceeds the configured cap."""


def delta(x: int, s: int, t: int) -> int:
    """Flow-conservation right-hand side: 1 at the source, -1 at the
    destination, 0 elsewhere."""
    if x == s:
        return 1
    if x == t:
        return -1
    return 0


def enumerate_simple_paths(
    g: Graph, s: int, t: int, cap: int = DEFAULT_PATH_CAP
) -> list[tuple[int, ...]]:
    """All simple s-t paths in depth-first order, neighbors ascending.

    Raises EnumerationCapError when more than cap paths exist, which
    signals the instance is too large for brute force.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError("endpoint out of range")
    if s == t:
        raise ValueError("source and destination must differ")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []
    path = [s]

    def walk(x: int, on_path: int) -> None:
        for v, _ in adj[x]:
            if v == t:
                out.append(tuple(path) + (t,))
                if len(out) > cap:
                    raise EnumerationCapError(f"more than {cap} simple paths from {s} to {t}")
            elif not on_path >> v & 1:
                path.append(v)
                walk(v, on_path | 1 << v)
                path.pop()

    walk(s, 1 << s)
    return out


def optimal_pair_bruteforce(
    g: Graph, s: int, t: int, cap: int = DEFAULT_PATH_CAP
) -> tuple[PathPair, int] | None:
    """Exact optimum over internally node-disjoint s-t path pairs.

    Returns (pair, combined bottleneck sum) or None when no pair exists.
    Ties resolve to the larger minimum bottleneck, then to the
    lexicographically smallest node sequences, so output is
    deterministic.
    """
    paths = enumerate_simple_paths(g, s, t, cap)
    entries = []
    for p in paths:
        mask = 0
        for v in p:
            mask |= 1 << v
        entries.append((bottleneck(g, p), mask, p))
    entries.sort(key=lambda e: (-e[0], e[2]))
    shared = 1 << s | 1 << t
    best: tuple[int, int, tuple[int, ...], tuple[int, ...]] | None = None
    count = len(entries)
    for i in range(count):
        bw_i, mask_i, p_i = entries[i]
        if best is not None and 2 * bw_i < best[0]:
            break
        for j in range(i + 1, count):
            bw_j, mask_j, p_j = entries[j]
            comb = bw_i + bw_j
            if best is not None and comb < best[0]:
                break
            if mask_i & mask_j != shared:
                continue
            red, blue = (p_i, p_j) if p_i <= p_j else (p_j, p_i)
            if (
                best is None
                or (comb, min(bw_i, bw_j)) > (best[0], best[1])
                or ((comb, min(bw_i, bw_j)) == (best[0], best[1]) and (red, blue) < (best[2], best[3]))
            ):
                best = (comb, min(bw_i, bw_j), red, blue)
    if best is None:
        return None
    pair = PathPair(best[2], best[3], bottleneck(g, best[2]), bottleneck(g, best[3]))
    return pair, best[0]


@dataclass(frozen=True)
class LinearConstraint:
    """One linear row: sum of coeff * var compared against rhs."""

    name: str
    group: str
    coeffs: tuple[tuple[str, int], ...]
    sense: str  # "=" or "<="
    rhs: int

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        return sum(c * assignment.get(v, 0) for v, c in self.coeffs)

    def satisfied(self, assignment: Mapping[str, int]) -> bool:
        lhs = self.evaluate(assignment)
        return lhs == self.rhs if self.sense == "=" else lhs <= self.rhs


@dataclass(frozen=True)
class IlpModel:
    """Mixed-integer model maximizing the summed pair bandwidth yr + yb.

    Per link {u, v} there are four binary arc variables r_u_v, r_v_u,
    b_u_v, b_v_u; yr and yb are the continuous path bottlenecks. big_m
    is one above the largest link bandwidth, which deactivates the
    bottleneck rows of unused links.
    """

    source: int
    dest: int
    big_m: int
    binaries: tuple[str, ...]
    continuous: tuple[str, ...]
    constraints: tuple[LinearConstraint, ...]

    def group_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for c in self.constraints:
            counts[c.group] = counts.get(c.group, 0) + 1
        return counts

    def violations(self, assignment: Mapping[str, int]) -> list[str]:
        """Names of constraints (and variable domains) the assignment breaks."""
        bad = [c.name for c in self.constraints if not c.satisfied(assignment)]
        bad.extend(f"binary {v}" for v in self.binaries if assignment.get(v, 0) not in (0, 1))
        bad.extend(f"bound {v}" for v in self.continuous if assignment.get(v, 0) < 0)
        return bad


def build_ilp(g: Graph, s: int, t: int) -> IlpModel:
    """Instantiate the node-disjoint pair model for one s-t query.

    Rows per group: directed flow conservation for each color at every
    node; the destination receives exactly two incoming colored arcs and
    the source none; every other node receives at most one; per link, one
    bottleneck row per color covering both arc directions; per link, at
    most one colored arc in total.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError("endpoint out of range")
    if s == t:
        raise ValueError("source and destination must differ")
    links = g.links()
    if not links:
        raise ValueError("graph has no links")
    big_m = 1 + max(bw for _, _, bw in links)
    binaries: list[str] = []
    for u, v, _ in links:
        binaries.extend((f"r_{u}_{v}", f"r_{v}_{u}", f"b_{u}_{v}", f"b_{v}_{u}"))
    cons: list[LinearConstraint] = []
    for color, label in (("r", "red_flow"), ("b", "blue_flow")):
        for x in range(g.n):
            coeffs = [(f"{color}_{x}_{v}", 1) for v in g.neighbors(x)]
            coeffs += [(f"{color}_{v}_{x}", -1) for v in g.neighbors(x)]
            cons.append(LinearConstraint(f"{label}_{x}", label, tuple(coeffs), "=", delta(x, s, t)))
    in_t = [(f"r_{v}_{t}", 1) for v in g.neighbors(t)] + [(f"b_{v}_{t}", 1) for v in g.neighbors(t)]
    cons.append(LinearConstraint("enter_dest", "enter_dest", tuple(in_t), "=", 2))
    in_s = [(f"r_{v}_{s}", 1) for v in g.neighbors(s)] + [(f"b_{v}_{s}", 1) for v in g.neighbors(s)]
    cons.append(LinearConstraint("enter_source", "enter_source", tuple(in_s), "=", 0))
    for x in range(g.n):
        if x in (s, t):
            continue
        coeffs = [(f"r_{v}_{x}", 1) for v in g.neighbors(x)]
        coeffs += [(f"b_{v}_{x}", 1) for v in g.neighbors(x)]
        cons.append(LinearConstraint(f"node_once_{x}", "node_once", tuple(coeffs), "<=", 1))
    for color, label, y in (("r", "red_bw", "yr"), ("b", "blue_bw", "yb")):
        for u, v, bw in links:
            slack = big_m - bw
            coeffs = ((y, 1), (f"{color}_{u}_{v}", slack), (f"{color}_{v}_{u}", slack))
            cons.append(LinearConstraint(f"{label}_{u}_{v}", label, coeffs, "<=", big_m))
    for u, v, _ in links:
        coeffs = tuple((f"{c}_{a}_{b}", 1) for c in "rb" for a, b in ((u, v), (v, u)))
        cons.append(LinearConstraint(f"link_once_{u}_{v}", "link_once", coeffs, "<=", 1))
    return IlpModel(s, t, big_m, tuple(binaries), ("yr", "yb"), tuple(cons))


def _lp_expr(coeffs: tuple[tuple[str, int], ...]) -> str:
    parts: list[str] = []
    for var, coef in coeffs:
        mag = abs(coef)
        txt = var if mag == 1 else f"{mag} {var}"
        if not parts:
            parts.append(txt if coef > 0 else f"- {txt}")
        else:
            parts.append(f"{'+' if coef > 0 else '-'} {txt}")
    return " ".join(parts)


def render_lp(model: IlpModel) -> str:
    """LP text format: Maximize, Subject To, Bounds, Binaries, End."""
    lines = [
        f"\\ node-disjoint pair model: source {model.source} dest {model.dest} big_m {model.big_m}",
        "Maximize",
        " obj: yr + yb",
        "Subject To",
    ]
    for c in model.constraints:
        lines.append(f" {c.name}: {_lp_expr(c.coeffs)} {c.sense} {c.rhs}")
    lines.append("Bounds")
    lines.extend(f" {v} >= 0" for v in model.continuous)
    lines.append("Binaries")
    for i in range(0, len(model.binaries), 8):
        lines.append(" " + " ".join(model.binaries[i : i + 8]))
    lines.append("End")
    return "\n".join(lines) + "\n"


def export_ilp(g: Graph, s: int, t: int) -> str:
    """Build and render the model in one step."""
    return render_lp(build_ilp(g, s, t))


def pair_to_assignment(pair: PathPair) -> dict[str, int]:
    """Encode a concrete pair as 0/1 arc variables plus yr/yb.

    Variables not present are implicitly 0 for the evaluator.
    """
    out = {"yr": pair.red_bw, "yb": pair.blue_bw}
    for a, b in zip(pair.red, pair.red[1:]):
        out[f"r_{a}_{b}"] = 1
    for a, b in zip(pair.blue, pair.blue[1:]):
        out[f"b_{a}_{b}"] = 1
    return out
