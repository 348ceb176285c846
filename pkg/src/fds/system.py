"""Tuples of coordinate-local update functions and their compositions.

A system is an n-tuple (f^1,...,f^n) where f^i rewrites only coordinate i,
via a GF(2) polynomial in all n variables.  Composing the locals along a
word of indices yields a map on the full state set, represented
extensionally as a tuple of 2^n successor states.
"""

from __future__ import annotations

from dataclasses import dataclass

from .anf import Anf, check_dimension, parse_anf
from .errors import BudgetExceededError, DimensionMismatchError, ParseError

# One n-bit successor per state, indexed by state; the extensional form of
# a map K^n -> K^n.
TruthTableMap = tuple

ORACLE_DEFAULT_CAP = 6


@dataclass(frozen=True)
class LocalFunction:
    """Update rule for one coordinate; the identity elsewhere."""

    index: int
    update: Anf

    def __post_init__(self):
        if not 1 <= self.index <= self.update.n:
            raise DimensionMismatchError(
                f"coordinate {self.index} out of range 1..{self.update.n}"
            )


@dataclass(frozen=True)
class System:
    """An n-tuple of local functions, one per coordinate 1..n."""

    n: int
    locals: tuple[LocalFunction, ...]

    def __post_init__(self):
        check_dimension(self.n)
        indices = [lf.index for lf in self.locals]
        if sorted(indices) != list(range(1, self.n + 1)):
            raise DimensionMismatchError(
                f"need each coordinate 1..{self.n} exactly once, got {indices}"
            )
        for lf in self.locals:
            if lf.update.n != self.n:
                raise DimensionMismatchError(
                    f"local {lf.index} has {lf.update.n} variables, system has {self.n}"
                )

    @staticmethod
    def from_updates(updates) -> "System":
        """Build from the list of coordinate polynomials f^1_1,...,f^n_n."""
        updates = tuple(updates)
        n = len(updates)
        return System(n, tuple(LocalFunction(i + 1, u) for i, u in enumerate(updates)))

    @staticmethod
    def from_strings(*polys: str) -> "System":
        n = len(polys)
        return System.from_updates(parse_anf(p, n) for p in polys)

    def update(self, i: int) -> Anf:
        return self.locals[i - 1].update


def parse_word(text: str, n: int) -> tuple[int, ...]:
    """Comma-separated coordinate indices, e.g. `1,2,1,3`."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ParseError("empty word")
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad word {text!r}")
    for letter in word:
        if not 1 <= letter <= n:
            raise ParseError(f"letter {letter} out of range 1..{n}")
    return word


def parse_system(text: str) -> System:
    """Parse the `.fds` format: `vars: <n>` then `f<i> = <polynomial>` lines;
    `#` starts a comment."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].lower().startswith("vars:"):
        raise ParseError("system file must start with a `vars: <n>` line")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ParseError(f"bad vars line: {lines[0]!r}")
    check_dimension(n)
    updates: dict[int, Anf] = {}
    for ln in lines[1:]:
        if "=" not in ln:
            raise ParseError(f"bad system line: {ln!r}")
        lhs, rhs = ln.split("=", 1)
        lhs = lhs.strip()
        if not lhs.startswith("f"):
            raise ParseError(f"bad system line: {ln!r}")
        try:
            i = int(lhs[1:])
        except ValueError:
            raise ParseError(f"bad coordinate name {lhs!r}")
        if not 1 <= i <= n:
            raise ParseError(f"coordinate f{i} out of range 1..{n}")
        if i in updates:
            raise ParseError(f"coordinate f{i} defined twice")
        updates[i] = parse_anf(rhs, n)
    if sorted(updates) != list(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(updates))
        raise ParseError(f"missing coordinates: {missing}")
    return System.from_updates(updates[i] for i in range(1, n + 1))


def format_system(f: System) -> str:
    lines = [f"vars: {f.n}"]
    lines += [f"f{i} = {f.update(i)}" for i in range(1, f.n + 1)]
    return "\n".join(lines) + "\n"


def apply_local(f: System, i: int, state: int) -> int:
    """Apply f^i: rewrite coordinate i, leave the rest."""
    if not 1 <= i <= f.n:
        raise DimensionMismatchError(f"coordinate {i} out of range 1..{f.n}")
    bit = f.update(i).evaluate(state)
    mask = 1 << (i - 1)
    return (state & ~mask) | (bit << (i - 1))


def local_map(f: System, i: int) -> TruthTableMap:
    """f^i as a full map on the 2^n states."""
    return tuple(apply_local(f, i, s) for s in range(1 << f.n))


def identity_map(n: int) -> TruthTableMap:
    return tuple(range(1 << n))


def compose_word(f: System, word) -> TruthTableMap:
    """The composed system f^{i_t} o ... o f^{i_1}; the first letter acts first."""
    word = tuple(word)
    if not word:
        raise ParseError("word must be nonempty")
    states = list(range(1 << f.n))
    for letter in word:
        states = [apply_local(f, letter, s) for s in states]
    return tuple(states)


def phi(f: System):
    """Dependency graph by the polynomial criterion: edge (i,j) iff neither
    coordinate's variable occurs in the other's update."""
    from .graphs import DepGraph

    supports = {i: f.update(i).support() for i in range(1, f.n + 1)}
    edges = set()
    for i in range(1, f.n + 1):
        for j in range(i + 1, f.n + 1):
            if i not in supports[j] and j not in supports[i]:
                edges.add((i, j))
    return DepGraph(f.n, frozenset(edges))


def _zero_local_updates(n: int, k: int) -> tuple[Anf, ...]:
    # The four maps of coordinate k's own value: identity, 0, 1, negation.
    xk = Anf.var(n, k)
    return (xk, Anf.zero(n), Anf.one(n), Anf.one(n) + xk)


def _perturbations(f: System):
    """The closure of {f} under replacing one coordinate's update by a
    function of that coordinate's own value."""
    yield f
    for k in range(1, f.n + 1):
        for repl in _zero_local_updates(f.n, k):
            updates = [f.update(i) for i in range(1, f.n + 1)]
            updates[k - 1] = repl
            yield System.from_updates(updates)


def phi_oracle(f: System, cap: int = ORACLE_DEFAULT_CAP):
    """Dependency graph straight from the commutation definition.

    Edge (i,j) iff g^i and g^j commute as maps on all states for every
    tuple g obtained from f by at most one single-coordinate perturbation.
    Exponential; refuses above the cap.
    """
    from .graphs import DepGraph

    if f.n > cap:
        raise BudgetExceededError(
            f"phi_oracle refuses n={f.n} > cap {cap}", required=1 << f.n
        )
    tuples = list(_perturbations(f))
    states = range(1 << f.n)
    edges = set()
    for i in range(1, f.n + 1):
        for j in range(i + 1, f.n + 1):
            ok = True
            for g in tuples:
                for s in states:
                    ij = apply_local(g, j, apply_local(g, i, s))
                    ji = apply_local(g, i, apply_local(g, j, s))
                    if ij != ji:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                edges.add((i, j))
    return DepGraph(f.n, frozenset(edges))


def random_system(n: int, rng) -> System:
    """Uniformly random updates: each coordinate an arbitrary Boolean function."""
    from .anf import TruthTable, tt_to_anf

    size = 1 << n
    updates = []
    for _ in range(n):
        bits = tuple(rng.randrange(2) for _ in range(size))
        updates.append(tt_to_anf(TruthTable(n, bits)))
    return System.from_updates(updates)
