"""Hypothesis strategies for piecewise-linear objects on dyadic grids."""

from hypothesis import strategies as st

from src.piecewise import CadlagFunction, Homeomorphism, TimeChange
from src.turbo import Turbofunction

GRID = 32
VALUES = [k / 8.0 for k in range(-8, 9)]


def interior_times(max_size, grid=GRID, min_size=0):
    return st.lists(
        st.integers(min_value=1, max_value=grid - 1), min_size=min_size, max_size=max_size, unique=True
    ).map(lambda ks: [k / grid for k in sorted(ks)])


@st.composite
def step_functions(draw, max_jumps=3, values=(0.0, 0.25, 0.5, 1.0), grid=20):
    jumps = draw(interior_times(max_jumps, grid=grid))
    levels = draw(st.lists(st.sampled_from(values), min_size=len(jumps) + 1, max_size=len(jumps) + 1))
    return CadlagFunction.step(jumps, levels)


@st.composite
def continuous_functions(draw, max_nodes=4):
    times = [0.0] + draw(interior_times(max_nodes)) + [1.0]
    values = draw(st.lists(st.sampled_from(VALUES), min_size=len(times), max_size=len(times)))
    return CadlagFunction.from_points(times, values)


@st.composite
def cadlag_functions(draw, max_nodes=4):
    times = [0.0] + draw(interior_times(max_nodes)) + [1.0]
    lefts = draw(st.lists(st.sampled_from(VALUES), min_size=len(times), max_size=len(times)))
    rights = [
        draw(st.sampled_from(VALUES)) if draw(st.booleans()) else left for left in lefts
    ]
    return CadlagFunction(zip(times, lefts, rights))


@st.composite
def homeomorphisms(draw, max_nodes=3):
    size = draw(st.integers(min_value=0, max_value=max_nodes))
    times = draw(interior_times(size, min_size=size))
    values = draw(interior_times(size, min_size=size))
    return Homeomorphism([0.0] + times + [1.0], [0.0] + values + [1.0])


@st.composite
def time_changes(draw, max_nodes=4):
    size = draw(st.integers(min_value=0, max_value=max_nodes))
    times = draw(interior_times(size, min_size=size))
    levels = draw(st.lists(st.integers(min_value=0, max_value=GRID), min_size=size, max_size=size))
    return TimeChange([0.0] + times + [1.0], [0.0] + [k / GRID for k in sorted(levels)] + [1.0])


@st.composite
def turbofunctions(draw, continuous=False):
    F = draw(continuous_functions() if continuous else cadlag_functions())
    return Turbofunction(F, draw(time_changes()))
