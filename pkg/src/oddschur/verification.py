"""Verification suites behind ``oddschur verify``.

Each suite is a list of tasks; a task is a module-level function returning a
list of :class:`Case`. Tasks may run in a process pool, and the report keeps
the task order so output is deterministic.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .diagrams import (
    box_count,
    eps,
    enumerate_partitions,
    format_partition,
    sign_of,
    transpose,
    weight,
)
from .lr import (
    LRDisagreement,
    direct_table,
    lr_even,
    lr_table,
    lr_yamanouchi_detail,
    swap_sign,
    transpose_sign,
)
from .oddsym import SymFunction, pair_expansion, psi, schur_K
from .opol import (
    SkewPolynomial,
    complete_cached,
    elementary_cached,
    is_odd_symmetric,
)
from .plactic import (
    PlacticElement,
    knuth_normalize,
    plactic_multiply,
    to_opol,
)
from .polytopes import (
    boundary_partitions,
    enumerate_hives,
    enumerate_triangles,
    lr_hive,
    lr_triangle,
    phi,
    phi_inverse,
    q_hive,
    q_triangle,
    rhombus_terms,
    triangle_from_skew_tableau,
)
from .schur import (
    pieri_horizontal,
    pieri_product,
    pieri_vertical,
    schur_combinatorial,
    schur_plactic,
    schur_symmetrized,
)
from .tableaux import (
    Tableau,
    decorated_count,
    enumerate_ssyt,
    n_less,
    parse_tableau,
    tableau_sign,
)

SUITES = ("coincidence", "pieri", "lr", "polytopes", "ring")
SOURCES = ("reference", "trivial", "derived")


@dataclass
class Case:
    name: str
    inputs: dict
    source: str
    expected: Any
    got: Any
    passed: bool = field(default=False)

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown provenance {self.source!r}")


def case(name: str, inputs: dict, source: str, expected, got) -> Case:
    return Case(name, inputs, source, expected, got, expected == got)


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case]
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        by_source = {s: sum(1 for c in self.cases if c.source == s) for s in SOURCES}
        return {
            "total": len(self.cases),
            "passed": self.passed,
            "failed": self.failed,
            "by_source": by_source,
            "wall_time": round(self.wall_time, 3),
        }

    def to_dict(self, timing: bool = True) -> dict:
        summary = self.summary()
        if not timing:
            del summary["wall_time"]
        cases = [_jsonable(asdict(c)) for c in self.cases]
        return {"suite": self.suite, "cases": cases, "summary": summary}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def format_text(self, verbose: bool = False) -> str:
        lines = []
        for c in self.cases:
            if verbose or not c.passed:
                status = "PASS" if c.passed else "FAIL"
                line = f"{status} [{c.source}] {c.name} {_inputs_text(c.inputs)}".rstrip()
                lines.append(line + ("" if c.passed else f" expected={c.expected!r} got={c.got!r}"))
        s = self.summary()
        src = ", ".join(f"{k}={v}" for k, v in s["by_source"].items())
        lines.append(f"suite {self.suite}: {s['passed']}/{s['total']} passed ({src}) "
                     f"in {s['wall_time']:.2f}s")
        return "\n".join(lines)


def _jsonable(x):
    """Partitions become ``[3,2,1]`` strings when used as keys; other objects print as text."""
    if isinstance(x, dict):
        return {(_p(k) if isinstance(k, tuple) else str(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def _inputs_text(inputs: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in inputs.items())


def _p(lam) -> str:
    return format_partition(tuple(lam))


# ---------------------------------------------------------------------------
# ring


def task_ring_examples() -> list[Case]:
    n = 2
    x1, x2 = SkewPolynomial.variable(1, n), SkewPolynomial.variable(2, n)
    t = Tableau(((1, 1, 2), (2, 3)))
    big = parse_tableau("1,1,2,2/2,3,3,4/3,4,4/5,6")
    s = parse_tableau(".,.,1/.,1,2/.,2/3")
    return [
        case("(x1+x2)x1 = x1(x1-x2)", {}, "reference", True, (x1 + x2) * x1 == x1 * (x1 - x2)),
        case("(x1-x2)^2 = x1^2+x2^2", {}, "reference", True, (x1 - x2) ** 2 == x1 ** 2 + x2 ** 2),
        case("(x1-x2)^2 = (x1+x2)^2", {}, "reference", True, (x1 - x2) ** 2 == (x1 + x2) ** 2),
        case("sign(T)", {"T": "1,1,2/2,3"}, "reference", -1, tableau_sign(t)),
        case("sign(T_(21))", {}, "reference", 1, tableau_sign(Tableau(((1, 1), (2,))))),
        case("sign(T_(311))", {}, "reference", -1, tableau_sign(Tableau(((1, 1, 1), (2,), (3,))))),
        case("dN", {"T": str(big)}, "reference", 16, decorated_count(big, "dN")),
        case("E>", {"T": str(big)}, "reference", 28, decorated_count(big, "E>")),
        case("sW", {"T": str(big)}, "reference", 47, decorated_count(big, "sW")),
        case("N<(S^)", {"S": str(s)}, "reference", 18, n_less(s)),
        case("row word normalizes with sign +1", {"w": "23112"}, "trivial", (1, t), knuth_normalize((2, 3, 1, 1, 2))),
        case("e_0 = h_0 = 1", {}, "trivial", True,
             elementary_cached(0, n) == complete_cached(0, n) == SkewPolynomial.one(n)),
    ]


def task_eh_relation(ell: int, n: int) -> list[Case]:
    total = SkewPolynomial.zero(n)
    for k in range(ell + 1):
        total = total + elementary_cached(k, n) * complete_cached(ell - k, n) * sign_of(k * (k + 1) // 2)
    return [case("sum (-1)^(k(k+1)/2) e_k h_(l-k) = 0", {"l": ell, "n": n}, "reference", True, not total)]


def task_odr(a: int, b: int, n: int) -> list[Case]:
    out = []
    for name, gen in (("e", elementary_cached), ("h", complete_cached)):
        g = lambda k: gen(k, n) if k >= 0 else SkewPolynomial.zero(n)  # noqa: E731
        if (a + b) % 2 == 0:
            lhs, rhs = g(a) * g(b), g(b) * g(a)
        else:
            sa = sign_of(a)
            lhs = g(a) * g(b) + g(b) * g(a) * sa
            rhs = g(a + 1) * g(b - 1) * sa + g(b - 1) * g(a + 1)
        out.append(case(f"odd defining relation ({name})", {"a": a, "b": b, "n": n}, "reference", True, lhs == rhs))
        if name == "h" and a < b and (a + b) % 2:
            # the straightening rule used by the abstract ring
            expansion = SkewPolynomial.zero(n)
            for (p, q), c in pair_expansion(a, b):
                expansion = expansion + g(p) * g(q) * c
            out.append(case("straightening rule", {"a": a, "b": b, "n": n}, "derived", True,
                            expansion == g(a) * g(b)))
    return out


def task_odd_symmetric(k: int, n: int) -> list[Case]:
    return [
        case("e_k odd symmetric", {"k": k, "n": n}, "reference", True, is_odd_symmetric(elementary_cached(k, n))),
        case("h_k odd symmetric", {"k": k, "n": n}, "reference", True, is_odd_symmetric(complete_cached(k, n))),
    ]


def task_psi(k: int) -> list[Case]:
    out = []
    for lam in enumerate_partitions(k):
        e = SymFunction.basis_element("e", lam)
        h = SymFunction.basis_element("h", lam)
        c = sign_of(k) * eps(transpose(lam))
        out.append(case("psi1psi2(e_lam)", {"lam": _p(lam)}, "reference", True,
                        psi("psi1psi2", e) == SymFunction.basis_element("h", lam, c)))
        out.append(case("psi1psi2(h_lam)", {"lam": _p(lam)}, "reference", True,
                        psi("psi1psi2", h) == SymFunction.basis_element("e", lam, c)))
        s = schur_K(lam)
        t_lam = Tableau(tuple((i,) * p for i, p in enumerate(lam, start=1)))
        out.append(case("psi1psi2(s_lam)", {"lam": _p(lam)}, "reference", True,
                        psi("psi1psi2", s) == schur_K(transpose(lam)) * sign_of(box_count(lam, "NE") + k)))
        out.append(case("psi3(s_lam)", {"lam": _p(lam)}, "reference", True,
                        psi("psi3", s) == s * (eps(lam) * tableau_sign(t_lam))))
    return out


def task_plactic_strategies(length: int, alphabet: int) -> list[Case]:
    bad = []
    for w in itertools.product(range(1, alphabet + 1), repeat=length):
        a = knuth_normalize(w, "insertion")
        if a != knuth_normalize(w, "search") or a != knuth_normalize(w, "bumping"):
            bad.append("".join(map(str, w)))
    return [case("normalization strategies agree", {"length": length, "alphabet": alphabet},
                 "derived", [], bad[:10])]


def task_to_opol_multiplicative(seed: int, pairs: int, n: int = 3, max_size: int = 4) -> list[Case]:
    rng = random.Random(seed)
    pool = [t for k in range(max_size + 1) for lam in enumerate_partitions(k, max_height=n)
            for t in enumerate_ssyt(lam, alphabet_max=n)]
    bad = 0
    for _ in range(pairs):
        t, u = rng.choice(pool), rng.choice(pool)
        p, q = PlacticElement.tableau(t, n), PlacticElement.tableau(u, n)
        if to_opol(plactic_multiply(p, q)) != to_opol(p) * to_opol(q):
            bad += 1
    return [case("to_opol multiplicative", {"seed": seed, "pairs": pairs, "n": n}, "derived", 0, bad)]


def task_antipode(k: int) -> list[Case]:
    total = SymFunction("h")
    for i in range(k + 1):
        total = total + psi("antipode", SymFunction.basis_element("h", (i,) if i else ())) \
            * SymFunction.basis_element("h", (k - i,) if k - i else ())
    return [case("m(S x id)Delta(h_k) = 0", {"k": k}, "derived", True, not total)]


def ring_tasks(max_degree: int, deep: bool) -> list[tuple[Callable, tuple]]:
    d = max_degree
    tasks: list[tuple[Callable, tuple]] = [(task_ring_examples, ())]
    tasks += [(task_eh_relation, (ell, d)) for ell in range(1, d + 1)]
    tasks += [(task_odr, (a, b, d)) for a in range(0, d + 1) for b in range(1, d + 1 - a)]
    tasks += [(task_odd_symmetric, (k, d)) for k in range(1, d + 1)]
    tasks += [(task_psi, (k,)) for k in range(1, d + 1)]
    tasks += [(task_antipode, (k,)) for k in range(1, d + 1)]
    tasks += [(task_plactic_strategies, (length, 3)) for length in range(0, min(d, 8) + 1)]
    tasks += [(task_to_opol_multiplicative, (7, 200))]
    return tasks


# ---------------------------------------------------------------------------
# coincidence


def task_coincidence(lam: tuple, n: int) -> list[Case]:
    p = schur_plactic(lam, n)
    return [
        case("plactic = kostka", {"lam": _p(lam), "n": n}, "reference", True, p == schur_combinatorial(lam, n)),
        case("plactic = symmetrized", {"lam": _p(lam), "n": n}, "reference", True, p == schur_symmetrized(lam, n)),
    ]


def coincidence_tasks(max_degree: int, deep: bool):
    top = max(max_degree, 6) if deep else max_degree
    return [(task_coincidence, (lam, k)) for k in range(1, top + 1) for lam in enumerate_partitions(k)]


# ---------------------------------------------------------------------------
# pieri


def task_pieri(lam: tuple, k: int) -> list[Case]:
    inputs = {"lam": _p(lam), "k": k}
    vert = pieri_vertical(lam, k)
    return [
        case("e-right rule, odd-symmetrized", inputs, "reference", vert,
             pieri_product(lam, k, "vertical", "symmetrized")),
        case("h-right rule, plactic", inputs, "reference", pieri_horizontal(lam, k),
             pieri_product(lam, k, "horizontal", "plactic")),
        case("e-right rule, plactic", inputs, "reference", vert,
             pieri_product(lam, k, "vertical", "plactic")),
    ]


def pieri_tasks(max_degree: int, deep: bool):
    return [(task_pieri, (lam, k)) for w in range(0, max_degree + 1)
            for lam in enumerate_partitions(w) for k in range(1, 4)]


# ---------------------------------------------------------------------------
# lr


def task_lr_examples() -> list[Case]:
    prefactor, items = lr_yamanouchi_detail((2, 1), (2, 1), (3, 2, 1))
    even = {lam: lr_even((2, 1), (2, 1), lam) for lam in enumerate_partitions(6)}
    even = {_p(lam): c for lam, c in even.items() if c}
    expected_even = {"[2,2,1,1]": 1, "[2,2,2]": 1, "[3,1,1,1]": 1, "[3,2,1]": 2,
                     "[3,3]": 1, "[4,1,1]": 1, "[4,2]": 1}
    return [
        case("c_(21)(21)^(321) = 0", {}, "reference", 0, direct_table((2, 1), (2, 1)).get((3, 2, 1), 0)),
        case("LR tableaux N< values", {}, "reference", [7, 6], [e for _, e in items]),
        case("even c_(21)(21)^(321)", {}, "reference", 2, lr_even((2, 1), (2, 1), (3, 2, 1))),
        case("even s21 s21", {}, "reference", expected_even, even),
        case("c_(21)()^(21) = 1", {}, "trivial", {(2, 1): 1}, direct_table((2, 1), ())),
        case("c_()()^() = 1", {}, "trivial", {(): 1}, direct_table((), ())),
    ]


def task_lr_pair(mu: tuple, nu: tuple, symmetries: bool) -> list[Case]:
    inputs = {"mu": _p(mu), "nu": _p(nu)}
    out = []
    try:
        table = lr_table(mu, nu, "all")
        out.append(case("methods agree", inputs, "derived", True, True))
    except LRDisagreement as err:
        out.append(case("methods agree", inputs, "derived", {}, {_p(k): v for k, v in err.divergent.items()}))
        return out
    k = weight(mu) + weight(nu)
    parity = [_p(lam) for lam in enumerate_partitions(k)
              if (table.get(lam, 0) - lr_even(mu, nu, lam)) % 2]
    out.append(case("odd = even mod 2", inputs, "derived", [], parity))
    if symmetries:
        swapped = direct_table(nu, mu)
        bad_swap = [_p(lam) for lam in enumerate_partitions(k)
                    if table.get(lam, 0) != swap_sign(mu, nu, lam) * swapped.get(lam, 0)]
        out.append(case("swap symmetry", inputs, "reference", [], bad_swap))
        tr = direct_table(transpose(mu), transpose(nu))
        bad_tr = [_p(lam) for lam in enumerate_partitions(k)
                  if table.get(lam, 0) != transpose_sign(mu, nu, lam) * tr.get(transpose(lam), 0)]
        out.append(case("transpose symmetry", inputs, "reference", [], bad_tr))
        if mu == nu:
            bad = [_p(lam) for lam, c in table.items()
                   if c and sign_of(box_count(lam, "dN") + box_count(lam, "N")) != 1]
            out.append(case("c_mu,mu nonzero forces sign +1", inputs, "derived", [], bad))
    return out


def lr_tasks(max_degree: int, deep: bool):
    tasks = [(task_lr_examples, ())]
    for total in range(0, max_degree + 1):
        for a in range(0, total + 1):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    tasks.append((task_lr_pair, (mu, nu, total <= 6)))
    return tasks


# ---------------------------------------------------------------------------
# polytopes


def task_polytope_examples() -> list[Case]:
    s = parse_tableau(".,.,1/.,2/1")
    a = triangle_from_skew_tableau(s)
    h = phi(a)
    return [
        case("A_S", {"S": str(s)}, "reference", [[0], [2, 1], [1, 0, 1], [0, 1, 0, 0]], [list(r) for r in a.rows]),
        case("Q_triangle(A_S)", {}, "reference", 6, q_triangle(a)),
        case("Phi(A_S)", {}, "reference", [[0], [2, 3], [3, 4, 5], [3, 5, 6, 6]], [list(r) for r in h.rows]),
        case("Q_hive(Phi(A_S))", {}, "reference", 6, q_hive(h)),
        case("marginals", {}, "derived", [[3, 2, 1], [2, 1], [2, 1]], [list(p) for p in boundary_partitions(h)]),
        case("lattice points", {}, "reference", [2, 2],
             [len(enumerate_triangles((3, 2, 1), (2, 1), (2, 1))), len(enumerate_hives((3, 2, 1), (2, 1), (2, 1)))]),
    ]


def task_polytope_lambda(lam: tuple) -> list[Case]:
    from .lr import lr_direct, lr_tableaux

    k = weight(lam)
    issues: dict[str, list] = {"bijection": [], "Q": [], "phi": [], "R": [], "lr": []}
    for a in range(0, k + 1):
        for mu in enumerate_partitions(a):
            for nu in enumerate_partitions(k - a):
                key = f"{_p(mu)}{_p(nu)}"
                tabs = lr_tableaux(mu, nu, lam)
                tris = enumerate_triangles(lam, mu, nu)
                hives = enumerate_hives(lam, mu, nu)
                if sorted(triangle_from_skew_tableau(t) for t in tabs) != tris:
                    issues["bijection"].append(key)
                if any(n_less(t) != q_triangle(triangle_from_skew_tableau(t)) for t in tabs):
                    issues["Q"].append(key)
                if sorted(phi(t) for t in tris) != hives or any(phi_inverse(h) not in tris for h in hives) \
                        or any(q_hive(phi(t)) != q_triangle(t) for t in tris):
                    issues["phi"].append(key)
                if any(term < 0 for h in hives for _, _, term in rhombus_terms(h)):
                    issues["R"].append(key)
                c = lr_direct(mu, nu, lam)
                if not (c == lr_triangle(mu, nu, lam) == lr_hive(mu, nu, lam)):
                    issues["lr"].append(key)
    inputs = {"lam": _p(lam)}
    return [
        case("tableaux <-> triangles", inputs, "reference", [], issues["bijection"]),
        case("Q_triangle(A_S) = N<(S)", inputs, "reference", [], issues["Q"]),
        case("Phi bijection preserving Q", inputs, "reference", [], issues["phi"]),
        case("rhombus terms non-negative", inputs, "reference", [], issues["R"]),
        case("lattice sums = direct", inputs, "derived", [], issues["lr"]),
    ]


def polytope_tasks(max_degree: int, deep: bool):
    return [(task_polytope_examples, ())] + [
        (task_polytope_lambda, (lam,)) for k in range(0, max_degree + 1) for lam in enumerate_partitions(k)
    ]


# ---------------------------------------------------------------------------
# driver

_TASKS = {
    "coincidence": coincidence_tasks,
    "pieri": pieri_tasks,
    "lr": lr_tasks,
    "polytopes": polytope_tasks,
    "ring": ring_tasks,
}


def _run_task(task):
    fn, args = task
    return fn(*args)


def run_suite(suite: str, max_degree: int = 5, deep: bool = False, jobs: int = 1) -> VerificationReport:
    """Run one suite (or ``all``) and collect its cases in a fixed order."""
    if suite != "all" and suite not in _TASKS:
        raise ValueError(f"unknown suite {suite!r}")
    if max_degree < 0:
        raise ValueError("max-degree must be non-negative")
    names = SUITES if suite == "all" else (suite,)
    tasks = []
    for name in names:
        tasks += [(name, t) for t in _TASKS[name](max_degree, deep)]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, [t for _, t in tasks]))
    else:
        results = [_run_task(t) for _, t in tasks]
    cases = []
    for (name, _), got in zip(tasks, results):
        for c in got:
            if suite == "all":
                c.name = f"{name}: {c.name}"
            cases.append(c)
    return VerificationReport(suite, cases, time.perf_counter() - start)
