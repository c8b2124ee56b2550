"""Exact toughness with verifiable certificates.

The exhaustive engine enumerates cut-sets as bitmasks in (popcount, mask)
order and keeps the best candidate under the total order

    (ratio, |S|, mask)   (lexicographic, exact rational comparison)

so the reported witness is always the minimizer with the fewest vertices and,
among those, the numerically smallest bit-vector.  All prunes are admissible:
they only discard subsets that provably cannot beat the current incumbent
under that order, so enabling them, sharding the space, or reordering shards
never changes the result.

Prunes used:
  (a) levels below the vertex connectivity (no cut-set that small exists);
  (b) a per-level subset bound |S| / min(alpha, n - |S|) measured against the
      incumbent (omega can never exceed either term);
  (c) twin closure: a subset splitting a class of non-adjacent vertices with
      identical neighborhoods is strictly dominated, so only class-closed
      subsets are evaluated.

Parallel mode shards the space by fixing the membership pattern of the first
p vertices; each shard's answer is independent of the incumbent it was seeded
with, so the min-merge of shard results is schedule independent.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace

from .graph import (
    Graph,
    bits_of,
    component_count,
    components_excluding,
    delete_edge,
    is_connected,
    mask_of,
)
from .graph6 import parse_graph6, write_graph6
from .invariants import edge_orbits, independence_number, vertex_connectivity
from .ratio import INFINITE, Ratio, parse_ratio


class LimitExceeded(RuntimeError):
    """Graph too large for the requested exhaustive computation."""


@dataclass(frozen=True)
class EngineConfig:
    """Knobs for the toughness engines.

    ``budget_steps`` is the deterministic move budget of the heuristic
    search; wall-clock budgets would break byte-for-byte reproducibility, so
    seconds are converted to steps at a fixed rate by the CLI.
    """

    exhaustive_limit: int = 26
    workers: int = 1
    seed: int = 0
    budget_steps: int = 200_000
    restarts: int = 20
    use_edge_orbits: bool = False
    minimality_heuristic_steps: int = 4_000
    # with this off, edges that hints and the heuristic cannot resolve are
    # reported inconclusive instead of falling back to exhaustive scans
    allow_exhaustive_edges: bool = True

    def with_options(self, **kw) -> "EngineConfig":
        return replace(self, **kw)


DEFAULT_CONFIG = EngineConfig()

# deterministic substitute for wall-clock budgets: moves per nominal second
STEPS_PER_BUDGET_SECOND = 25_000


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CutCertificate:
    """A cut-set claim: removing ``cut`` leaves ``omega`` components.

    The ratio must equal |cut|/omega in lowest terms.  Certificates are
    upper-bound evidence: a verified certificate proves t(g) <= ratio.
    """

    cut: int
    omega: int
    ratio: Ratio

    @classmethod
    def from_cut(cls, g: Graph, cut: int) -> "CutCertificate":
        count, _ = components_excluding(g, cut)
        return cls(cut, count, Ratio(cut.bit_count(), count) if count else Ratio(0))

    def vertices(self) -> list[int]:
        return list(bits_of(self.cut))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(g: Graph, cert: CutCertificate) -> VerifyResult:
    """Recompute the certificate's claims against g."""
    if cert.cut & ~g.full_mask:
        return VerifyResult(False, "cut contains out-of-range vertices")
    count, _ = components_excluding(g, cert.cut)
    if count != cert.omega:
        return VerifyResult(
            False, f"component mismatch: claimed {cert.omega}, recomputed {count}"
        )
    if cert.omega < 2:
        return VerifyResult(False, f"omega must be >= 2, got {cert.omega}")
    if Ratio(cert.cut.bit_count(), cert.omega) != cert.ratio:
        return VerifyResult(
            False,
            f"ratio mismatch: claimed {cert.ratio}, "
            f"actual {cert.cut.bit_count()}/{cert.omega}",
        )
    return VerifyResult(True)


def write_certificate(g: Graph, cert: CutCertificate) -> str:
    """Serialize in the 'cert v1' text format (LF endings, single spaces)."""
    lines = [
        "cert v1",
        f"graph: {write_graph6(g)}",
        "cut: " + " ".join(str(v) for v in cert.vertices()),
        f"omega: {cert.omega}",
        f"ratio: {cert.ratio.p}/{cert.ratio.q}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[Graph, CutCertificate]:
    """Parse a 'cert v1' block into (graph, certificate)."""
    lines = text.splitlines()
    if len(lines) < 5 or lines[0].strip() != "cert v1":
        raise ValueError("not a cert v1 block")
    fields = {}
    for line in lines[1:5]:
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    for key in ("graph", "cut", "omega", "ratio"):
        if key not in fields:
            raise ValueError(f"cert v1 block missing '{key}' line")
    g = parse_graph6(fields["graph"])
    cut = mask_of(int(tok) for tok in fields["cut"].split()) if fields["cut"] else 0
    return g, CutCertificate(cut, int(fields["omega"]), parse_ratio(fields["ratio"]))


@dataclass(frozen=True)
class ToughnessResult:
    value: object  # Ratio or INFINITE
    witness: CutCertificate | None
    method: str

    def __str__(self) -> str:
        return f"t = {self.value} ({self.method})"


# ---------------------------------------------------------------------------
# twin classes


def twin_classes(g: Graph) -> list[int]:
    """Masks of maximal classes of non-adjacent vertices with identical
    neighborhoods (identical adjacency rows force non-adjacency)."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    return sorted(groups.values())


# ---------------------------------------------------------------------------
# the exhaustive engine

_NO_INCUMBENT = (0, 0, 0, 0)  # p=0 encodes "none"


def _better(p: int, q: int, k: int, mask: int, inc) -> bool:
    """(p/q, k, mask) < incumbent in the engine's total order."""
    ip, iq, ik, imask = inc
    if ip == 0:
        return True
    lhs = p * iq
    rhs = ip * q
    if lhs != rhs:
        return lhs < rhs
    if k != ik:
        return k < ik
    return mask < imask


def _scan_levels(
    adj: tuple[int, ...],
    n: int,
    full: int,
    prefix: int,
    pbits: int,
    kappa: int,
    alpha: int,
    twin_masks: tuple[int, ...],
    inc: tuple[int, int, int, int],
) -> tuple[int, int, int, int]:
    """Scan every subset extending ``prefix`` on the low ``pbits`` vertices.

    Suffix patterns run over the remaining n - pbits vertices by ascending
    popcount and, within a level, ascending numeric value (Gosper).  Returns
    the best (p, q, |S|, mask) found, which is independent of the incumbent
    handed in (the incumbent only prunes candidates that cannot beat it).
    """
    adj_by_bit = {1 << v: adj[v] for v in range(n)}
    ns = n - pbits
    cpre = prefix.bit_count()
    top = 1 << ns
    best = inc
    check_twins = bool(twin_masks)
    for ks in range(0, ns + 1):
        k = cpre + ks
        if k < kappa or k > n - 2:
            continue
        cap = min(alpha, n - k)
        if cap < 2:
            break
        bp, bq, bk, bm = best
        if bp:
            # level bound: every subset here has ratio >= k / cap
            lhs = k * bq
            rhs = bp * cap
            if lhs > rhs:
                break
            if lhs == rhs and k > bk:
                break

        # level constants for the needed-omega threshold; recomputed whenever
        # the incumbent improves
        def level_thresholds():
            if bp == 0:
                return 2, 0, 0
            div, rem = divmod(k * bq, bp)
            if rem == 0 and k < bk:
                return max(div, 2), 0, 0
            if rem == 0 and k == bk:
                # ties beat the incumbent only on a smaller mask
                return max(div + 1, 2), max(div, 2), bm
            return max(div + 1, 2), 0, 0

        needed0, needed_tie, tie_below = level_thresholds()
        sub = (1 << ks) - 1
        while True:
            s = (sub << pbits) | prefix if ks else prefix
            ok = True
            if check_twins:
                for c in twin_masks:
                    x = s & c
                    if x and x != c:
                        ok = False
                        break
            if ok:
                needed = needed_tie if (tie_below and s < tie_below) else needed0
                # component count with an early abort once the remaining
                # vertices cannot reach the needed component count
                alive = full & ~s
                count = 0
                while alive:
                    comp = alive & -alive
                    frontier = comp
                    while frontier:
                        nxt = 0
                        f = frontier
                        while f:
                            b = f & -f
                            nxt |= adj_by_bit[b]
                            f ^= b
                        frontier = nxt & alive & ~comp
                        comp |= frontier
                    count += 1
                    alive &= ~comp
                    if count + alive.bit_count() < needed:
                        count = 0
                        break
                if count >= needed:
                    best = (k, count, k, s)
                    bp, bq, bk, bm = best
                    needed0, needed_tie, tie_below = level_thresholds()
            if ks == 0:
                break
            # Gosper: next suffix with the same popcount
            c = sub & -sub
            r = sub + c
            sub = r | (((sub ^ r) >> 2) // c)
            if sub >= top:
                break
    return best


def _shard_worker(args):
    return _scan_levels(*args)


def _certificate_from_triple(
    g: Graph, triple: tuple[int, int, int, int]
) -> CutCertificate:
    # recompute omega honestly rather than trusting engine bookkeeping
    mask = triple[3]
    count, _ = components_excluding(g, mask)
    return CutCertificate(mask, count, Ratio(mask.bit_count(), count))


def toughness_exact(g: Graph, cfg: EngineConfig = DEFAULT_CONFIG) -> ToughnessResult:
    """Exact toughness with a verified minimizing certificate.

    Complete graphs give the infinite value with no witness; disconnected
    graphs give 0/1 witnessed by the empty cut.
    """
    n = g.n
    if n > cfg.exhaustive_limit:
        raise LimitExceeded(
            f"n={n} exceeds exhaustive limit {cfg.exhaustive_limit}; "
            "use the heuristic upper-bound search or a solid reduction"
        )
    if n == 0:
        raise ValueError("toughness of the empty graph is undefined")
    if g.is_complete():
        return ToughnessResult(INFINITE, None, "exact")
    if not is_connected(g):
        count, _ = components_excluding(g, 0)
        return ToughnessResult(Ratio(0), CutCertificate(0, count, Ratio(0)), "exact")

    alpha, alpha_set = independence_number(g)
    kappa = vertex_connectivity(g)
    twins = tuple(c for c in twin_classes(g) if c.bit_count() > 1)

    # seed: the complement of a maximum independent set is always a valid cut
    seed_cut = g.full_mask & ~alpha_set
    seed_omega = component_count(g.adj, alpha_set)
    inc = (seed_cut.bit_count(), seed_omega, seed_cut.bit_count(), seed_cut)

    pbits = 0
    if cfg.workers > 1 and n >= 19:
        pbits = min(6, n - 16)
    if pbits == 0:
        best = _scan_levels(g.adj, n, g.full_mask, 0, 0, kappa, alpha, twins, inc)
    else:
        shard_args = [
            (g.adj, n, g.full_mask, prefix, pbits, kappa, alpha, twins)
            for prefix in range(1 << pbits)
        ]
        best = inc
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            wave = 4 * cfg.workers
            pending = []
            i = 0
            while i < len(shard_args) or pending:
                while i < len(shard_args) and len(pending) < wave:
                    pending.append(pool.submit(_shard_worker, shard_args[i] + (best,)))
                    i += 1
                done = next(as_completed(pending))
                pending.remove(done)
                cand = done.result()
                if cand[0] and _better(*cand, best):
                    best = cand
    cert = _certificate_from_triple(g, best)
    check = verify_certificate(g, cert)
    if not check:
        raise AssertionError(f"engine produced an invalid certificate: {check.reason}")
    return ToughnessResult(cert.ratio, cert, "exact")


def _find_below_target(
    g: Graph, target: Ratio, kappa: int, alpha: int
) -> CutCertificate | None:
    """First cut of g (by popcount, then mask) with ratio strictly below
    target; None if an exhaustive scan proves no such cut exists."""
    adj = g.adj
    full = g.full_mask
    n = g.n
    adj_by_bit = {1 << v: adj[v] for v in range(n)}
    p, q = target.p, target.q
    for k in range(max(kappa, 0), n - 1):
        cap = min(alpha, n - k)
        if cap < 2:
            break
        if k * q >= p * cap:
            break
        needed = max((k * q) // p + 1, 2)
        if k == 0:
            count, _ = components_excluding(g, 0)
            if count >= needed:
                return CutCertificate(0, count, Ratio(0))
            continue
        sub = (1 << k) - 1
        top = 1 << n
        while sub < top:
            alive = full & ~sub
            count = 0
            while alive:
                comp = alive & -alive
                frontier = comp
                while frontier:
                    nxt = 0
                    f = frontier
                    while f:
                        b = f & -f
                        nxt |= adj_by_bit[b]
                        f ^= b
                    frontier = nxt & alive & ~comp
                    comp |= frontier
                count += 1
                alive &= ~comp
                if count + alive.bit_count() < needed:
                    count = 0
                    break
            if count >= needed:
                return CutCertificate(sub, count, Ratio(k, count))
            c = sub & -sub
            r = sub + c
            sub = r | (((sub ^ r) >> 2) // c)
    return None


# ---------------------------------------------------------------------------
# heuristic upper-bound search


def _quotient(g: Graph) -> tuple[list[int], list[int], list[int]]:
    """Collapse twin classes: returns (class masks, class sizes, class adjacency
    masks over class indices).  Classes of size 1 are ordinary vertices."""
    classes = twin_classes(g)
    index_of = {}
    for i, c in enumerate(classes):
        for v in bits_of(c):
            index_of[v] = i
    sizes = [c.bit_count() for c in classes]
    qadj = [0] * len(classes)
    for i, c in enumerate(classes):
        rep = (c & -c).bit_length() - 1
        for u in bits_of(g.adj[rep]):
            j = index_of[u]
            if j != i:
                qadj[i] |= 1 << j
    return classes, sizes, qadj


def _quotient_omega(qadj: list[int], sizes: list[int], alive: int) -> int:
    """Expanded component count when the alive classes survive: a component
    made of a single class contributes one piece per copy, anything larger is
    connected."""
    total = 0
    while alive:
        comp = alive & -alive
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= qadj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & alive & ~comp
            comp |= frontier
        if comp.bit_count() == 1:
            total += sizes[(comp & -comp).bit_length() - 1]
        else:
            total += 1
        alive &= ~comp
    return total


def _shrink(
    chosen: int, nq: int, sizes: list[int], qadj: list[int], full: int
) -> tuple[int, int, int]:
    """Greedy removal pass: drop classes while the exact ratio improves.
    Returns (chosen, weight, omega)."""
    weight = sum(sizes[i] for i in bits_of(chosen))
    omega = _quotient_omega(qadj, sizes, full & ~chosen)
    improved = True
    while improved:
        improved = False
        for i in bits_of(chosen):
            cand = chosen & ~(1 << i)
            w = weight - sizes[i]
            om = _quotient_omega(qadj, sizes, full & ~cand)
            if om >= 2 and w * omega < weight * om:
                chosen, weight, omega = cand, w, om
                improved = True
                break
    return chosen, weight, omega


def toughness_upper_search(
    g: Graph,
    budget_steps: int = DEFAULT_CONFIG.budget_steps,
    seed: int = 0,
    restarts: int = DEFAULT_CONFIG.restarts,
) -> CutCertificate:
    """Seeded annealing over cut-sets; returns the best verified certificate.

    Never claimed optimal.  The state space collapses twin classes (all
    copies of a blown-up vertex enter or leave the cut together), which is
    lossless for the optimum and shrinks solid graphs dramatically.  Restarts
    are seeded from complements and neighborhoods of greedy independent sets
    followed by a greedy shrink pass, so structured optima are reachable even
    when annealing alone would wander.
    """
    if not is_connected(g):
        raise ValueError("upper search needs a connected graph")
    if g.is_complete():
        raise ValueError("complete graphs have no cut-set")
    classes, sizes, qadj = _quotient(g)
    nq = len(classes)
    full = (1 << nq) - 1
    rng = random.Random(seed)

    def greedy_independent(order: list[int]) -> int:
        chosen = 0
        blocked = 0
        for i in order:
            if not blocked >> i & 1:
                chosen |= 1 << i
                blocked |= (1 << i) | qadj[i]
        return chosen

    def greedy_clique_packing(order: list[int], cap: int) -> int:
        """Pairwise non-adjacent cliques, greedily grown; the complement of
        their union is a cut whose residue components are exactly the packed
        cliques, which matches the structure of many optimal cuts."""
        packed = 0
        blocked = 0
        for i in order:
            if blocked >> i & 1:
                continue
            clique = 1 << i
            common = qadj[i] & ~blocked
            size = 1
            while common and size < cap:
                j = next(x for x in order if common >> x & 1)
                clique |= 1 << j
                size += 1
                common &= qadj[j]
            packed |= clique
            nbhd = 0
            for j in bits_of(clique):
                nbhd |= qadj[j]
            blocked |= clique | nbhd
        return packed

    def neighborhood(mask: int) -> int:
        out = 0
        for i in bits_of(mask):
            out |= qadj[i]
        return out & ~mask

    best: tuple[int, int, int] | None = None  # (weight, omega, chosen)

    def consider(chosen: int, weight: int, omega: int) -> None:
        nonlocal best
        if omega < 2:
            return
        if best is None or weight * best[1] < best[0] * omega or (
            weight * best[1] == best[0] * omega
            and (weight, chosen) < (best[0], best[2])
        ):
            best = (weight, omega, chosen)

    steps_per_restart = max(1, budget_steps // max(1, restarts))
    base_order = list(range(nq))
    for r in range(max(1, restarts)):
        order = base_order[:]
        rng.shuffle(order)
        kind = r % 6
        if kind == 0:
            state = full & ~greedy_independent(order)
        elif kind == 1:
            state = full & ~greedy_clique_packing(order, cap=3)
        elif kind == 2:
            state = full & ~greedy_clique_packing(order, cap=nq)
        elif kind == 3:
            state = neighborhood(greedy_independent(order))
        elif kind == 4:
            lo = min(range(nq), key=lambda i: (qadj[i].bit_count(), i))
            state = qadj[lo]
        else:
            state = 0
            for i in range(nq):
                if rng.random() < 0.5:
                    state |= 1 << i
        state, w, om = _shrink(state, nq, sizes, qadj, full)
        consider(state, w, om)
        energy = w / om if om >= 2 else float(g.n * 2)
        # one long geometric cooling arc per restart: 0.95 per sweep of moves
        temp = 0.5
        best_ratio_seen = energy
        for step in range(steps_per_restart):
            cand = state ^ (1 << rng.randrange(nq))
            if rng.random() < 0.25:
                cand ^= 1 << rng.randrange(nq)
            if cand in (0, full):
                continue
            cw = sum(sizes[j] for j in bits_of(cand))
            com = _quotient_omega(qadj, sizes, full & ~cand)
            ce = cw / com if com >= 2 else float(g.n * 2)
            if ce <= energy or rng.random() < 2.718281828 ** ((energy - ce) / temp):
                state, energy = cand, ce
                if com >= 2:
                    consider(cand, cw, com)
                    if ce < best_ratio_seen - 1e-12:
                        best_ratio_seen = ce
                        state, cw, com = _shrink(cand, nq, sizes, qadj, full)
                        energy = cw / com if com >= 2 else energy
                        consider(state, cw, com)
            if step % nq == nq - 1:
                temp *= 0.95
                if temp < 1e-4:
                    temp = 1e-4
        state, w, om = _shrink(state, nq, sizes, qadj, full)
        consider(state, w, om)

    if best is None:
        # deterministic fallback: isolate one end of some non-adjacent pair
        for v in range(g.n):
            if g.adj[v] != g.full_mask & ~(1 << v):
                cut = g.adj[v]
                count, _ = components_excluding(g, cut)
                if count >= 2:
                    return CutCertificate(cut, count, Ratio(cut.bit_count(), count))
        raise RuntimeError("no cut-set found within budget")

    cut = 0
    for i in bits_of(best[2]):
        cut |= classes[i]
    count, _ = components_excluding(g, cut)
    cert = CutCertificate(cut, count, Ratio(cut.bit_count(), count))
    check = verify_certificate(g, cert)
    if not check:
        raise AssertionError(f"upper search produced invalid certificate: {check.reason}")
    return cert


# ---------------------------------------------------------------------------
# solid reduction


def solid_reduced_toughness(spec, cfg: EngineConfig = DEFAULT_CONFIG) -> ToughnessResult:
    """Toughness of a blow-up, minimized over all-copies-or-none cut-sets.

    Enumerates subsets of base vertices; for each, the cut takes every copy.
    This is exact for blow-ups: a minimizer never splits a class of
    non-adjacent copies (dropping the split copy strictly improves the
    ratio), so the restricted minimum equals the true minimum.
    """
    from .operators import solid_expand  # local import to avoid a cycle

    base = spec.base
    if base.n > cfg.exhaustive_limit:
        raise LimitExceeded(
            f"base order {base.n} exceeds exhaustive limit {cfg.exhaustive_limit}"
        )
    expanded, index_map = solid_expand(spec)
    if expanded.is_complete():
        return ToughnessResult(INFINITE, None, "reduced-solid")
    if not is_connected(expanded):
        count, _ = components_excluding(expanded, 0)
        return ToughnessResult(
            Ratio(0), CutCertificate(0, count, Ratio(0)), "reduced-solid"
        )
    offsets = []
    total = 0
    for v in range(base.n):
        offsets.append(total)
        total += spec.multiplicity[v]
    class_masks = [
        (((1 << spec.multiplicity[v]) - 1) << offsets[v]) for v in range(base.n)
    ]

    best = None  # (p, q, k, mask)
    for t_mask in range(1 << base.n):
        cut = 0
        for v in bits_of(t_mask):
            cut |= class_masks[v]
        k = cut.bit_count()
        if k > expanded.n - 2:
            continue
        if best is not None:
            # weight bound against the incumbent ratio
            cap = expanded.n - k
            if k * best[1] > best[0] * cap:
                continue
        count = component_count(expanded.adj, expanded.full_mask & ~cut)
        if count < 2:
            continue
        if best is None or _better(k, count, k, cut, best):
            best = (k, count, k, cut)
    if best is None:
        raise AssertionError("connected non-complete blow-up must have a cut")
    cert = _certificate_from_triple(expanded, best)
    if not verify_certificate(expanded, cert):
        raise AssertionError("reduced search produced an invalid certificate")
    return ToughnessResult(cert.ratio, cert, "reduced-solid")


# ---------------------------------------------------------------------------
# minimal toughness


@dataclass(frozen=True)
class EdgeWitness:
    edge: tuple[int, int]
    certificate: CutCertificate | None
    source: str  # template | heuristic | exhaustive
    ok: bool


@dataclass
class MinimalityReport:
    toughness: object  # Ratio
    entries: list[EdgeWitness] = field(default_factory=list)
    verdict: bool | None = None  # None means inconclusive
    failing_edges: list[tuple[int, int]] = field(default_factory=list)
    inconclusive_edges: list[tuple[int, int]] = field(default_factory=list)


def _witness_for_edge(
    g: Graph,
    edge: tuple[int, int],
    target: Ratio,
    cfg: EngineConfig,
    hint: CutCertificate | None,
    edge_index: int,
) -> EdgeWitness:
    """Find a cut of g-e with ratio strictly below target.

    Tries the supplied hint, then a short deterministic heuristic run, then
    an exhaustive scan with early exit.  ok=False means the exhaustive scan
    completed and proved no such cut exists.
    """
    ge = delete_edge(g, edge)
    if hint is not None:
        if verify_certificate(ge, hint) and hint.ratio < target:
            return EdgeWitness(edge, hint, "template", True)
    if not is_connected(ge):
        count, _ = components_excluding(ge, 0)
        return EdgeWitness(edge, CutCertificate(0, count, Ratio(0)), "exhaustive", True)
    if not ge.is_complete():
        steps = min(cfg.minimality_heuristic_steps, 60 * g.n)
        cert = toughness_upper_search(ge, steps, seed=cfg.seed * 7919 + edge_index, restarts=3)
        if cert.ratio < target:
            return EdgeWitness(edge, cert, "heuristic", True)
    if g.n > cfg.exhaustive_limit or not cfg.allow_exhaustive_edges:
        return EdgeWitness(edge, None, "inconclusive", False)
    alpha, _ = independence_number(ge)
    kappa = vertex_connectivity(ge)
    cert = _find_below_target(ge, target, kappa, alpha)
    if cert is None:
        return EdgeWitness(edge, None, "exhaustive", False)
    return EdgeWitness(edge, cert, "exhaustive", True)


def is_minimally_tough(
    g: Graph,
    cfg: EngineConfig = DEFAULT_CONFIG,
    hints: dict[tuple[int, int], CutCertificate] | None = None,
) -> MinimalityReport:
    """Decide whether deleting any single edge strictly lowers the toughness.

    verdict True requires a verified below-t certificate for every edge;
    False requires at least one edge whose exhaustive scan proves the
    toughness survives; None (inconclusive) means some edge could be resolved
    neither way within the configured limits.
    """
    if not is_connected(g):
        raise ValueError("minimality is defined for connected graphs")
    if g.is_complete():
        raise ValueError("complete graphs are never minimally tough")
    result = toughness_exact(g, cfg)
    t = result.value
    hints = hints or {}
    report = MinimalityReport(toughness=t)

    rep_map = None
    if cfg.use_edge_orbits and g.n <= 48:
        try:
            _, rep_map = edge_orbits(g)
        except RuntimeError:
            rep_map = None

    solved: dict[tuple[int, int], EdgeWitness] = {}
    for idx, edge in enumerate(g.edges()):
        if rep_map is not None:
            rep, sigma = rep_map[edge]
            if rep != edge and rep in solved and solved[rep].ok and solved[rep].certificate:
                mapped = mask_of(sigma[v] for v in bits_of(solved[rep].certificate.cut))
                cand = CutCertificate.from_cut(delete_edge(g, edge), mapped)
                if cand.omega >= 2 and cand.ratio < t:
                    witness = EdgeWitness(edge, cand, solved[rep].source, True)
                    solved[edge] = witness
                    report.entries.append(witness)
                    continue
        witness = _witness_for_edge(g, edge, t, cfg, hints.get(edge), idx)
        solved[edge] = witness
        report.entries.append(witness)

    fail = [w.edge for w in report.entries if not w.ok and w.source == "exhaustive"]
    stuck = [w.edge for w in report.entries if not w.ok and w.source == "inconclusive"]
    report.failing_edges = fail
    report.inconclusive_edges = stuck
    if stuck:
        report.verdict = None
    elif fail:
        report.verdict = False
    else:
        report.verdict = True
    return report


# ---------------------------------------------------------------------------
# degree-excess filter (minimum degree above the 2t ceiling)


@dataclass(frozen=True)
class DegreeExcessReport:
    """Outcome of screening one graph for the minimum-degree excess property:
    connected, non-complete, minimally tough, and delta > ceil(2t)."""

    is_hit: bool
    inconclusive: bool = False
    toughness: object = None
    delta: int = 0
    ceil_2t: int = 0
    delta_over_t: Ratio | None = None
    regular: bool = False
    reason: str = ""


def degree_excess_filter(
    g: Graph, cfg: EngineConfig = DEFAULT_CONFIG, min_delta: int | None = None
) -> DegreeExcessReport:
    """Flag g iff it is connected, non-complete, minimally t-tough, and its
    minimum degree strictly exceeds ceil(2t).  Cheap screens run first."""
    if not is_connected(g):
        return DegreeExcessReport(False, reason="disconnected")
    if g.is_complete():
        return DegreeExcessReport(False, reason="complete")
    delta = min(g.degree(v) for v in range(g.n))
    if min_delta is not None and delta < min_delta:
        return DegreeExcessReport(False, delta=delta, reason="degree screen")
    if g.n > cfg.exhaustive_limit:
        return DegreeExcessReport(False, inconclusive=True, reason="over exhaustive limit")
    result = toughness_exact(g, cfg)
    t = result.value
    ceil_2t = t.ceil_of_double()
    regular = delta == max(g.degree(v) for v in range(g.n))
    if delta <= ceil_2t:
        return DegreeExcessReport(
            False, toughness=t, delta=delta, ceil_2t=ceil_2t, regular=regular,
            reason="degree within ceiling",
        )
    minimality = is_minimally_tough(g, cfg)
    if minimality.verdict is None:
        return DegreeExcessReport(
            False, inconclusive=True, toughness=t, delta=delta, ceil_2t=ceil_2t,
            regular=regular, reason="minimality inconclusive",
        )
    if not minimality.verdict:
        return DegreeExcessReport(
            False, toughness=t, delta=delta, ceil_2t=ceil_2t, regular=regular,
            reason="not minimally tough",
        )
    return DegreeExcessReport(
        True,
        toughness=t,
        delta=delta,
        ceil_2t=ceil_2t,
        delta_over_t=Ratio(delta * t.q, t.p),
        regular=regular,
    )
