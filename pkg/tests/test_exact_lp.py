import random
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from kohlberg.exact_lp import (INFEASIBLE, OPTIMAL, UNBOUNDED, EchelonBasis, LPProblem,
                               StepCounter, in_span, rank, solve, verify_outcome)


def checked(problem):
    out = solve(problem)
    assert verify_outcome(problem, out), out
    assert out.pivots <= comb(out.cols, out.rows)
    return out


def test_rank_examples():
    assert rank([(1, 1, 0), (1, 0, 1), (0, 1, 1)]) == 3
    assert rank([]) == 0
    assert rank([(1, 1, 1), (1, 1, 1)]) == 1


def test_in_span_examples():
    pairs = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    assert in_span((1, 1, 1), pairs)
    assert in_span((0, 1, 1), pairs)
    assert not in_span((1, 0, 0), [(0, 1, 1)])


def test_echelon_basis_counts_work():
    c = StepCounter()
    b = EchelonBasis(3, c)
    assert b.add((1, 1, 0)) and b.add((0, 1, 1))
    assert not b.add((1, 2, 1))
    assert b.rank == 2
    assert c.row_ops > 0


def test_lp_symmetric_optimum():
    # max t  s.t.  w1 + w2 = 1,  w1 - s1 = t,  w2 - s2 = t  written with w = t + u
    p = LPProblem([0, 0, 1], [[1, 1, 2]], [1], lower=[0, 0, 0])
    out = checked(p)
    assert out.status == OPTIMAL
    t = out.x[2]
    assert t == F(1, 2)
    assert (out.x[0] + t, out.x[1] + t) == (F(1, 2), F(1, 2))


def test_lp_infeasible_certificate():
    p = LPProblem([0, 0], [[1, 1]], [-1])
    out = checked(p)
    assert out.status == INFEASIBLE
    assert out.y[0] * -1 > 0


def test_lp_unbounded_ray():
    p = LPProblem([1], [], [])
    out = checked(p)
    assert out.status == UNBOUNDED
    assert out.ray[0] > 0


def test_lp_free_and_upper_bounds():
    # max x - y  s.t.  x + y = 3, x <= 2, y free
    p = LPProblem([1, -1], [[1, 1]], [3], lower=[None, None], upper=[2, None])
    out = checked(p)
    assert out.status == OPTIMAL and out.x == [2, 1] and out.objective == 1


def test_lp_malformed():
    with pytest.raises(ValueError):
        LPProblem([1, 2], [[1]], [0])
    with pytest.raises(ValueError):
        LPProblem([1], [[1]], [0, 1])
    with pytest.raises(ValueError):
        LPProblem([1], [[1]], [0], lower=[2], upper=[1])


def test_degenerate_problem_terminates():
    # heavily degenerate: many equal ratios at zero rhs
    A = [[1, 1, 1, 0, 0], [1, -1, 0, 1, 0], [1, 0, -1, 0, 1]]
    p = LPProblem([1, 1, 1, 0, 0], A, [0, 0, 0])
    out = checked(p)
    assert out.status == OPTIMAL and out.objective == 0


# --- properties ---------------------------------------------------------------

small = st.integers(-3, 3)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(lambda m: st.integers(1, 4).flatmap(lambda k: st.tuples(
    st.lists(st.lists(small, min_size=k, max_size=k), min_size=m, max_size=m),
    st.lists(small, min_size=m, max_size=m),
    st.lists(small, min_size=k, max_size=k),
    st.lists(st.sampled_from(["nonneg", "free", "box", "upper"]), min_size=k, max_size=k)))))
def test_random_lps_have_verifying_certificates(data):
    A, b, c, kinds = data
    lower = [0 if t in ("nonneg", "box") else None for t in kinds]
    upper = [2 if t in ("box", "upper") else None for t in kinds]
    out = checked(LPProblem(c, A, b, lower, upper))
    assert out.status in (OPTIMAL, INFEASIBLE, UNBOUNDED)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 1), min_size=n, max_size=n), max_size=7)).filter(lambda v: v))
def test_full_rank_iff_every_unit_vector_in_span(vectors):
    n = len(vectors[0])
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    assert (rank(vectors) == n) == all(in_span(e, vectors) for e in units)


def test_rank_matches_fraction_elimination():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 6)
        vecs = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(rng.randint(0, 7))]
        assert rank(vecs) == _fraction_rank(vecs)


def _fraction_rank(vecs):
    rows = [[F(a) for a in v] for v in vecs]
    r = 0
    if not rows:
        return 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
