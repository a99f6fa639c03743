"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import contextlib
import io
import json
import resource
import subprocess
import sys
import time

from conftest import ACCEPTANCE_LINES
from markoff_fib.bounds import quotient_bounds
from markoff_fib.classify import PositivityClass, Trichotomy, positivity_class, trichotomy
from markoff_fib.cli import run
from markoff_fib.fib import fib, vajda_sides
from markoff_fib.karamata import karamata_sandwich_check
from markoff_fib.markoff import FibTriple, Triple, fib_m, generate_tree, m_of, vieta_children, vieta_parent
from printed_tables import LOWER, UPPER
from test_markoff import BOLD, TREE_113_DEPTH4


@contextlib.contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        line = f"criterion {number} {status}: {title} ({time.perf_counter() - start:.2f} s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def cli_output(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(list(argv))
    return code, buf.getvalue()


def test_criterion_1_tables():
    with criterion(1, "bound tables reproduced cell for cell"):
        start = time.perf_counter()
        for direction, printed in (("down", LOWER), ("up", UPPER)):
            code, out = cli_output("bounds", "--nmax", "10", "--amax", "9", "--sigfigs", "4",
                                   "--direction", direction, "--format", "csv")
            assert code == 0
            got = [tuple(r.split(",")) for r in out.splitlines()[1:]]
            want = [(str(N), *cells) for N, cells in printed.items()]
            # 9 rows of (N label + 9 values): the 90 entries of each printed table
            assert sum(len(r) for r in want) == 90
            assert got == want
        assert time.perf_counter() - start < 1.0


def test_criterion_2_tree_from_113():
    with criterion(2, "tree from (1,1,3) to depth 4, parent links and bold branch"):
        start = time.perf_counter()
        code, out = cli_output("tree", "--root", "1,1,3", "--depth", "4", "--format", "json")
        assert code == 0

        got, bold = {}, set()

        def walk(node, parent):
            t = tuple(int(v) for v in node["triple"])
            got[t] = parent
            if node["fibonacci"]:
                bold.add(t)
            for child in node["children"]:
                walk(child, t)

        walk(json.loads(out)["results"]["root"], None)
        assert got == TREE_113_DEPTH4
        assert bold == BOLD
        assert time.perf_counter() - start < 1.0


def _collision_classes(res):
    return {c["m"]: [tuple(t) for t in c["indices"]] for c in res["collisions"]}


def test_criterion_3_classification_at_desk_scale():
    with criterion(3, "verify at c_max 20 and 500: only m=2 and m=21 repeat"):
        code, out = cli_output("verify", "--cmax", "20", "--format", "json")
        assert code == 0
        classes = _collision_classes(json.loads(out)["results"])
        assert classes == {"2": [(2, b, b + 2) for b in range(2, 19, 2)], "21": [(2, 3, 6), (3, 3, 7)]}

        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "markoff_fib", "verify", "--cmax", "500", "--threads", "1", "--format", "json"],
            capture_output=True, text=True,
        )
        elapsed = time.perf_counter() - start
        peak_kb = resource.getrusage(resource.RUSAGE_CHILDREN).ru_maxrss
        assert proc.returncode == 0, proc.stderr
        classes = _collision_classes(json.loads(proc.stdout)["results"])
        assert classes == {"2": [(2, b, b + 2) for b in range(2, 499, 2)], "21": [(2, 3, 6), (3, 3, 7)]}
        print(f"c_max 500: {elapsed:.1f} s, peak {peak_kb / 2**20:.2f} GB")
        assert elapsed < 60
        assert peak_kb < 4 * 2**20


def test_criterion_4_family():
    with criterion(4, "m(2, b, b+2) = 1 + (-1)^b for b in [2, 120]"):
        for b in range(2, 121):
            assert fib_m(FibTriple(2, b, b + 2)) == 1 + (-1) ** b


def test_criterion_5_sandwich():
    with criterion(5, "exact sandwich for four parameter sets, c <= 40"):
        start = time.perf_counter()
        for p in ((2, 1, 7), (2, 2, 7), (3, 1, 9), (4, 1, 9)):
            report = karamata_sandwich_check(p, 40)
            assert report.passed, [c.name for c in report.failures()]
            assert all(c.points > 0 for c in report.checks)
        assert time.perf_counter() - start < 10


def test_criterion_6_audit():
    with criterion(6, "audit --cmax 200 passes every named check"):
        code, out = cli_output("audit", "--cmax", "200", "--format", "json")
        res = json.loads(out)["results"]
        failed = [c for c in res["checks"] if c["gating"] and not c["passed"]]
        for c in failed:
            print(f"  {c['name']}: claim {c['claim']} on {c['domain']}, worst {c['worst_approx']} at c={c['worst_at']}")
        named = {c["name"]: c for c in res["checks"]}
        for name in ("karamata.L319", "karamata.U218", "karamata.0.14_gt_0.139",
                     "final.a2.lower", "final.a2.upper", "final.a2.upper_bound",
                     "a2a2.left", "a2a2.right", "a2a2.middle_upper", "a2a2.middle_lower"):
            assert named[name]["passed"], name
        assert code == 0 and res["passed"] and not failed


def test_criterion_7_property_suites():
    with criterion(7, "oracle-equivalence property suites"):
        start = time.perf_counter()
        F = [0, 1]
        while len(F) < 200:
            F.append(F[-1] + F[-2])

        for c in range(2, 41):
            for a in range(2, c + 1):
                for b in range(a, c + 1):
                    x, y, z = F[a], F[b], F[c]
                    m = x * x + y * y + z * z - 3 * x * y * z
                    cls = positivity_class(FibTriple(a, b, c))
                    if m > 0:
                        want = PositivityClass.POSITIVE_MINIMAL if z >= 3 * x * y else PositivityClass.POSITIVE_NON_MINIMAL
                    else:
                        want = PositivityClass.ZERO if m == 0 else PositivityClass.NEGATIVE
                    assert cls is want

        eq = []
        for c in range(2, 41):
            for a in range(2, 41):
                for b in range(a, 41):
                    lhs, rhs = F[c], 3 * F[a] * F[b]
                    want = Trichotomy.EQ if lhs == rhs else (Trichotomy.GT if lhs > rhs else Trichotomy.LE)
                    assert trichotomy(a, b, c) is want
                    if want is Trichotomy.EQ:
                        eq.append((a, b, c))
        assert eq == [(2, 2, 4)]

        for n in range(1, 51):
            for i in range(1, 51):
                for j in range(1, 51):
                    left, right = vajda_sides(n, i, j)
                    assert left == right == (-1) ** n * F[i] * F[j]

        for root in ((1, 1, 3), (1, 2, 8), (2, 2, 13)):
            tree = generate_tree(Triple(*root), 6)
            m = m_of(Triple(*root))
            for parent, child in tree.edges():
                assert m_of(child) == m and child in vieta_children(parent)
                assert vieta_parent(child) == parent

        for N in range(1, 31):
            for a in range(1, 13):
                k, K = quotient_bounds(N, a)
                for n in range(N, N + 151):
                    assert k * fib(n + a) <= fib(n) <= K * fib(n + a)
        assert time.perf_counter() - start < 60
