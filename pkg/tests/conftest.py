import itertools
import random

from stalmarck.cnf import CnfFormula


def brute_force_sat(cnf):
    """Truth-table oracle; returns a satisfying {var: bool} or None."""
    for bits in itertools.product([False, True], repeat=cnf.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in cnf.clauses):
            return {i + 1: b for i, b in enumerate(bits)}
    return None


def lit_value(code, values):
    """Value of an encoded literal; values[v] is variable v's value."""
    if code == 0:
        return True
    if code == 1:
        return False
    v = values[code // 2]
    return (not v) if code % 2 else v


def eval_triplet_formula(formula, original):
    """Root value with bridges computed in definition order.

    ``original`` is a list of bools for variables 1..num_original.
    """
    values = [None] + list(original) + [None] * formula.num_bridge_vars
    for t in formula.triplets:
        y, z = lit_value(t.y, values), lit_value(t.z, values)
        assert t.x % 2 == 0 and values[t.x // 2] is None
        values[t.x // 2] = (not y) or z
    return lit_value(formula.root, values), values


def random_cnf(rng, n, m, k_max=3, k_min=1):
    clauses = []
    for _ in range(m):
        k = rng.randint(k_min, min(k_max, n))
        vs = rng.sample(range(1, n + 1), k)
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return CnfFormula(n, clauses)


def random_cnf_corpus(seed, count, n_range=(3, 12), ratio_range=(1.0, 6.0)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        ratio = rng.uniform(*ratio_range)
        out.append(random_cnf(rng, n, max(1, round(n * ratio))))
    return out


class ClosureOracle:
    """Reachability over literal pairs, closed under complement."""

    def __init__(self, num_vars):
        self.size = 2 * (num_vars + 1)
        self.edges = {l: set() for l in range(self.size)}
        self.contradiction = False

    def add(self, a, b):
        trial = {l: set(s) for l, s in self.edges.items()}
        for p, q in ((a, b), (a ^ 1, b ^ 1)):
            trial[p].add(q)
            trial[q].add(p)
        comp = self._components(trial)
        if any(comp[l] == comp[l ^ 1] for l in range(self.size)):
            self.contradiction = True
            return False
        self.edges = trial
        return True

    @staticmethod
    def _components(edges):
        comp = {}
        for start in edges:
            if start in comp:
                continue
            stack = [start]
            comp[start] = start
            while stack:
                u = stack.pop()
                for w in edges[u]:
                    if w not in comp:
                        comp[w] = start
                        stack.append(w)
        return comp

    def components(self):
        return self._components(self.edges)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
